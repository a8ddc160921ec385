#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "sparselab/problem.hpp"

namespace sparselab {

/// Resource caps for the exact solvers. A solver that hits a cap throws
/// BudgetExceeded; it never returns a non-optimal answer.
struct OracleBudget {
    /// Enumeration-based solvers (MAX-SAT variables, FAS subset DP, LCOL and
    /// PLANAR search, pure enumeration).
    int max_vertices = 22;
    /// Branch-and-bound solvers (IS, VC, DS, IDS, FVS, MMVC, set problems).
    int max_search_vertices = 512;
    std::uint64_t max_nodes = 200'000'000;
    /// Wall-clock cap in seconds; 0 disables it.
    double timeout_seconds = 0;
};

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Optimal candidate for `problem` on `instance`.
///
/// IS/VC use branch and bound on a maximum-degree vertex; DS, set cover and
/// hitting set run a set-cover branch and bound; IDS branches on the closed
/// neighborhood of an undominated vertex; MMVC is the complement of a minimum
/// IDS; FVS branches on the vertices of a shortest cycle; FAS is a DP over
/// vertex subsets (fewest backward arcs over all linear orders) up to 16
/// vertices and branches on shortest cycles above that; MAX-SAT
/// enumerates assignments. Throws BudgetExceeded, or std::invalid_argument
/// when the instance type does not fit the problem.
Candidate solve_exact(Problem problem, const Instance& instance, const OracleBudget& budget = {},
                      const ProblemParams& params = {});

/// The two FAS engines behind solve_exact (subset DP up to 16 vertices,
/// cycle branching above), exposed for cross-checking.
Candidate solve_fas_by_ordering(const Graph& digraph, const OracleBudget& budget = {});
Candidate solve_fas_by_cycles(const Graph& digraph, const OracleBudget& budget = {});

/// Pure enumeration over every subset of the payload universe (vertices,
/// sets, elements, arcs) or every assignment, using only the validator.
/// Independent of solve_exact; throws BudgetExceeded beyond `max_universe`.
Candidate solve_by_enumeration(Problem problem, const Instance& instance, const ProblemParams& params = {},
                               int max_universe = 20);

/// Maximum independent set of a bipartite graph via maximum matching and the
/// alternating-reachability vertex cover. Throws std::invalid_argument if
/// the graph is not bipartite.
Candidate max_is_bipartite(const Graph& g);

/// mate[v] is the matched partner of v, or -1. Input must be bipartite.
std::vector<Vertex> maximum_bipartite_matching(const Graph& g);

/// Maximum independent set when every degree is at most 2 (paths and cycles).
/// Throws std::invalid_argument otherwise.
Candidate max_is_degree2(const Graph& g);

enum class TieRule { LowestId, HighestId };

/// Greedy maximal independent set scanning vertices in id order (or reverse).
std::vector<Vertex> maximal_is_greedy(const Graph& g, TieRule rule = TieRule::LowestId);

}  // namespace sparselab
