#include "sparselab/analysis.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace sparselab {

namespace {

constexpr long double kBoundaryGuard = 1e-12L;

// Root for degree b >= 1; b = 1 gives X - 2 = 0.
long double root_of_degree(int b) {
    if (b == 1) return 2.0L;
    long double lo = 1.0L, hi = 2.0L;
    for (int i = 0; i < 200; ++i) {
        long double mid = lo + (hi - lo) / 2;
        if (mid <= lo || mid >= hi) break;
        if (characteristic_residual(b, mid) > 0) hi = mid;
        else lo = mid;
    }
    return std::fabs(characteristic_residual(b, lo)) <= std::fabs(characteristic_residual(b, hi)) ? lo : hi;
}

bool root_below(int p, long double lambda) { return root_of_degree(p + 1) < lambda - kBoundaryGuard; }

void check_lambda(double lambda) {
    if (!(lambda > 1.0 && lambda < 2.0))
        throw std::invalid_argument("lambda must lie in (1, 2), got " + std::to_string(lambda));
}

}  // namespace

long double characteristic_residual(int b, long double x) { return std::pow(x, static_cast<long double>(b - 1)) * (x - 1) - 1; }

long double branching_root(int b) {
    if (b < 2) throw std::invalid_argument("branching vector (1, b) needs b >= 2");
    return root_of_degree(b);
}

int g_of_lambda(double lambda) {
    check_lambda(lambda);
    auto target = static_cast<long double>(lambda);
    if (root_below(1, target)) return 1;
    // Roots decrease in p: double until bracketed, then binary search for the first success.
    int fail = 1, ok = 2;
    while (!root_below(ok, target)) {
        fail = ok;
        if (ok > (1 << 29)) throw std::invalid_argument("lambda too close to 1");
        ok *= 2;
    }
    while (ok - fail > 1) {
        int mid = fail + (ok - fail) / 2;
        if (root_below(mid, target)) ok = mid;
        else fail = mid;
    }
    return ok;
}

double mu_lower_bound(double lambda, double alpha, double beta) {
    check_lambda(lambda);
    if (!(alpha > 0) || !(beta > 0)) throw std::invalid_argument("alpha and beta must be positive");
    int half = g_of_lambda(lambda) / 2;
    return std::pow(lambda, 1.0 / (alpha + half * beta));
}

long leaf_edge_bound(long n_leaf, double lambda) {
    if (n_leaf < 0) throw std::invalid_argument("negative leaf order");
    return static_cast<long>(g_of_lambda(lambda) / 2) * n_leaf;
}

ReferenceTables reference_tables() {
    ReferenceTables t;
    for (double lambda : {1.1, 1.18, 1.21}) t.mu_rows.push_back({lambda, g_of_lambda(lambda), mu_lower_bound(lambda, 1, 1)});
    for (int delta : {3, 4}) t.excavation_rows.push_back({delta, delta + 1, 1 << (delta - 2)});
    return t;
}

std::string ReferenceTables::text() const {
    std::string out;
    char line[128];
    out += "lambda    g(lambda)  infeasible mu (alpha = beta = 1)\n";
    for (const auto& r : mu_rows) {
        std::snprintf(line, sizeof line, "%-9.2f %-10d %.5f\n", r.lambda, r.g, r.mu);
        out += line;
    }
    out += "\n";
    out += "Delta  exhaustive branching  excavation\n";
    for (const auto& r : excavation_rows) {
        std::snprintf(line, sizeof line, "%-6d %d^alpha%14s%d^alpha\n", r.max_degree, r.branching_base, "",
                      r.excavation_base);
        out += line;
    }
    return out;
}

nlohmann::json ReferenceTables::json() const {
    nlohmann::json j;
    j["mu"] = nlohmann::json::array();
    for (const auto& r : mu_rows) j["mu"].push_back({{"lambda", r.lambda}, {"g", r.g}, {"mu", r.mu}});
    j["excavation"] = nlohmann::json::array();
    for (const auto& r : excavation_rows)
        j["excavation"].push_back(
            {{"max_degree", r.max_degree}, {"branching_base", r.branching_base}, {"excavation_base", r.excavation_base}});
    return j;
}

}  // namespace sparselab
