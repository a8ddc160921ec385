#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sparselab/problem.hpp"

namespace sparselab {

struct Verdict {
    bool feasible = false;
    long value = 0;
    std::string reason;  // empty when feasible
};

/// Checks `candidate` against the definition of `problem` on `instance` and
/// recomputes its objective value (cardinality, or satisfied clauses for the
/// SAT variants).
///
/// Throws std::invalid_argument when the payload type does not fit the tag,
/// the instance type does not fit the tag, or `params.colors` is missing for
/// LCOL-SUBGRAPH. Throws std::length_error when the exact colorability check
/// would exceed its size guard (l <= 4, n <= 20).
Verdict validate(Problem problem, const Instance& instance, const Candidate& candidate,
                 const ProblemParams& params = {});

// Predicates shared by the validator, the oracles and the reductions. Vertex
// lists must be in range (std::out_of_range otherwise); repeats are ignored.
bool is_independent(const Graph& g, std::span<const Vertex> set);
bool is_vertex_cover(const Graph& g, std::span<const Vertex> set);
bool is_minimal_vertex_cover(const Graph& g, std::span<const Vertex> set);
bool is_dominating(const Graph& g, std::span<const Vertex> set);
bool is_independent_dominating(const Graph& g, std::span<const Vertex> set);
bool is_feedback_vertex_set(const Graph& g, std::span<const Vertex> set);
bool is_acyclic(const Graph& digraph);
/// True if removing `arcs` from the digraph leaves it acyclic. Arcs not in the graph are ignored.
bool breaks_all_cycles(const Graph& digraph, std::span<const Edge> arcs);
bool is_planar(const Graph& g);

struct ColoringGuard {
    int max_colors = 4;
    int max_vertices = 20;
};

/// Exact l-coloring by backtracking; color[v] in [0, colors). Returns nullopt
/// if none exists. Throws std::length_error outside the guard.
std::optional<std::vector<int>> exact_coloring(const Graph& g, int colors, ColoringGuard guard = {});

/// Complement of a vertex list within 0..n-1, sorted.
std::vector<Vertex> complement(int n, std::span<const Vertex> set);

}  // namespace sparselab
