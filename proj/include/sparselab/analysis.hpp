#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace sparselab {

/// Residual x^b - x^(b-1) - 1, evaluated as x^(b-1)(x-1) - 1 in long double.
long double characteristic_residual(int b, long double x);

/// Growth base of the branching vector (1, b): the unique root in (1, 2) of
/// X^b - X^(b-1) - 1. Bisection (200 steps max) in long double, so the
/// residual stays below 1e-12 for b up to 10^4. Strictly decreasing in b.
/// Throws std::invalid_argument for b < 2.
long double branching_root(int b);

/// Smallest integer p >= 1 such that the root of X^(p+1) - X^p - 1, i.e.
/// branching_root(p + 1), is strictly below lambda. A root within 1e-12 of
/// lambda does not count as smaller. Throws std::invalid_argument unless
/// 1 < lambda < 2.
int g_of_lambda(double lambda);

/// lambda^(1 / (alpha + floor(g(lambda)/2) * beta)).
double mu_lower_bound(double lambda, double alpha, double beta);

/// floor(g(lambda)/2) * n_leaf: edge bound for a leaf of the sparsifier run
/// with the stopping degree g(lambda).
long leaf_edge_bound(long n_leaf, double lambda);

struct MuRow {
    double lambda = 0;
    int g = 0;
    double mu = 0;
};

struct ExcavationRow {
    int max_degree = 0;
    int branching_base = 0;   // (Delta + 1)^alpha for plain branching
    int excavation_base = 0;  // 2^((Delta - 2) alpha) after excavation
};

struct ReferenceTables {
    std::vector<MuRow> mu_rows;
    std::vector<ExcavationRow> excavation_rows;

    /// Aligned text; this is the byte-exact golden format.
    std::string text() const;
    nlohmann::json json() const;
};

/// lambda -> mu for lambda in {1.1, 1.18, 1.21} with alpha = beta = 1, and
/// the branching-vs-excavation bases for Delta in {3, 4}.
ReferenceTables reference_tables();

}  // namespace sparselab
