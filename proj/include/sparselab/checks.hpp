#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sparselab/oracles.hpp"
#include "sparselab/rng.hpp"
#include "sparselab/sparsify.hpp"

namespace sparselab::checks {

/// Counts assertions and records the failing ones.
struct CheckLog {
    std::uint64_t checks = 0;
    std::vector<std::string> failures;

    void expect(bool ok, std::string_view what);
    bool ok() const { return failures.empty(); }
};

/// G restricted to its non-isolated vertices.
Graph without_isolated(const Graph& g);

// instance-core
/// Validator accepts oracle optima for IS, VC, DS, IDS, FVS, MMVC and rejects
/// them after one violating change; DIMACS and JSON round trips; closed
/// neighborhood set systems have frequency Delta + 1.
void validator_soundness(const Graph& g, const OracleBudget& budget, CheckLog& log);
/// C is a minimal vertex cover iff V \ C is an independent dominating set,
/// over every vertex subset (n <= 12).
void complement_duality(const Graph& g, CheckLog& log);

// oracles
/// solve_exact agrees with pure enumeration (n <= 14), alpha + tau = n,
/// MMVC = n - IDS, and the matching-based bipartite solver agrees on a
/// random bipartite graph drawn from rng.
void oracle_agreement(const Graph& g, Rng& rng, const OracleBudget& budget, CheckLog& log);

// sparsify
/// Leaf invariants, leaf-count bound, leaf edge bound (of-lambda) and
/// optimum preservation of the lifted leaf optima.
void sparsifier_preservation(const Graph& g, SolutionMode mode, const ThresholdPolicy& policy,
                             const OracleBudget& budget, CheckLog& log);
/// IS mode: lifting a ratio-r solution of the leaf consistent with an optimum
/// gives value >= alpha / r.
void sparsifier_ratio(const Graph& g, const ThresholdPolicy& policy, double ratio, const OracleBudget& budget,
                      CheckLog& log);
/// Residual degree of every k-step excavation, approx_is_kstep / lcol /
/// planar contracts with exact and degraded subsolvers.
void kstep_chain(const Graph& g, const OracleBudget& budget, CheckLog& log);
/// param_is_excavation equals alpha; subset counter <= 2^((Delta-2) alpha).
void param_excavation(const Graph& g, const OracleBudget& budget, CheckLog& log);

// reductions
/// Exact optimum identity of every reduction, composition included.
void reduction_optima(const Graph& g, const OracleBudget& budget, CheckLog& log);
/// Gadget sizes: n + 2m vertices, n + m clauses, frequency Delta + 1.
void reduction_sizes(const Graph& g, CheckLog& log);
/// Back-mapping target candidates within ratio r of the target optimum gives
/// source candidates within the declared transfer of r.
void reduction_ratio_transfer(const Graph& g, double ratio, Rng& rng, const OracleBudget& budget, CheckLog& log);
/// Backward maps send feasible target candidates (all of them when the
/// target universe is at most 16, otherwise `samples` random ones) to
/// feasible source candidates.
void reduction_feasibility(const Graph& g, Rng& rng, int samples, const OracleBudget& budget, CheckLog& log);
/// |S|/alpha >= rho' - (1 - rho') n / (r alpha) for minimal covers C of
/// H = is_to_mmvc(G, r + 1), rho' = |C| / opt(H).
void mmvc_ratio_inequality(const Graph& g, int r, Rng& rng, int samples, const OracleBudget& budget, CheckLog& log);

// analysis
/// Root residual and identity, monotonicity, g minimality and mu
/// monotonicity at values drawn from rng.
void analysis_identities(Rng& rng, CheckLog& log);

}  // namespace sparselab::checks
