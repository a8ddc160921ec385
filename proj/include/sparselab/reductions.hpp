#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "sparselab/oracles.hpp"
#include "sparselab/problem.hpp"

namespace sparselab {

/// Where a gadget vertex comes from.
struct GadgetVertex {
    enum class Role { Original, EdgeDummy, Pendant, Split };
    Role role = Role::Original;
    Vertex anchor = -1;   // source vertex; lower endpoint for an edge dummy
    Vertex partner = -1;  // upper endpoint for an edge dummy
    int layer = 0;        // 0 / 1 for split vertices (v,0) and (v,1)

    friend bool operator==(const GadgetVertex&, const GadgetVertex&) = default;
};

/// Correspondence between target vertices and the source instance. Dummies
/// and pendants are numbered after the copies of the source vertices, in
/// edge (resp. vertex) order.
struct GadgetMap {
    int source_order = 0;
    std::vector<GadgetVertex> vertices;

    bool is_original(Vertex v) const { return vertices[v].role == GadgetVertex::Role::Original; }
    nlohmann::json json() const;
};

struct GadgetGraph {
    Graph graph;
    GadgetMap map;
};

// Vertex cover to dominating set / feedback vertex set: G plus two dummies
// y_e, z_e per edge e = (u, v), each joined to u and v; n + 2m vertices.
// The backward maps swap every dummy for the lower endpoint of its edge and
// keep the original part, a vertex cover no larger than the input.
// Both throw std::invalid_argument if G has an isolated vertex (vc_to_ds) or is directed.
GadgetGraph vc_to_ds(const Graph& g);
Candidate vc_from_ds(const Graph& source, const GadgetMap& map, const Candidate& dominating);
GadgetGraph vc_to_fvs(const Graph& g);
Candidate vc_from_fvs(const Graph& source, const GadgetMap& map, const Candidate& feedback);

/// Independent copy of V plus the two edge dummies per edge; min IDS = tau(G).
/// Throws std::invalid_argument if G has an isolated vertex.
GadgetGraph vc_to_ids(const Graph& g);
Candidate vc_from_ids(const Graph& source, const GadgetMap& map, const Candidate& ids);

/// Digraph on V x {0,1}: (v,0) = 2v, (v,1) = 2v+1, arcs (v,0)->(v,1) for every
/// v and (u,1)->(v,0), (v,1)->(u,0) for every edge.
GadgetGraph vc_to_fas(const Graph& g);
/// Replaces every arc (u,1)->(v,0) by (v,0)->(v,1); the result has only split arcs.
ArcList normalize_feedback_arcs(const GadgetMap& map, const ArcList& arcs);
Candidate vc_from_fas(const Graph& source, const GadgetMap& map, const Candidate& fas);

/// Closed neighborhoods: set i = N[v_i] over ground set V.
SetSystem ds_to_setcover(const Graph& g);
Candidate ds_from_setcover(const Graph& source, const Candidate& cover);

/// Dual system; a hitting set of the dual is the index set of a cover.
SetSystem setcover_to_hittingset(const SetSystem& s);
Candidate setcover_from_hittingset(const SetSystem& source, const Candidate& hitting);
Candidate hittingset_from_setcover(const SetSystem& source, const Candidate& cover);

/// Unit clause X_i per vertex (first n clauses), then (!X_u | !X_v) per edge.
/// target = k + m when k is given.
CnfInstance is_to_max2sat(const Graph& g, std::optional<long> k = std::nullopt);
/// Flips the lower endpoint of every violated edge clause to false and
/// returns the true variables; never loses satisfied clauses.
Candidate is_from_max2sat(const Graph& source, const Candidate& assignment);

/// Set i = edges incident to v_i over ground set E (edge index in Graph::edges order).
SetSystem is_to_setpacking(const Graph& g);
Candidate is_from_setpacking(const Graph& source, const Candidate& packing);

/// Attaches `pendants` fresh degree-1 vertices to every vertex; n(1 + t)
/// vertices. Throws std::invalid_argument for t < 2 (the size relation
/// |C| = n + (t - 1)|S| degenerates at t = 1).
GadgetGraph is_to_mmvc(const Graph& g, int pendants);
/// (V \ S) plus the pendants of S: a minimal cover of size n + (t - 1)|S|.
Candidate mmvc_from_is(const GadgetGraph& gadget, const Selection& independent);
/// S = V(G) \ C.
Candidate is_from_mmvc(const Graph& source, const GadgetMap& map, const Candidate& cover);
/// An IDS of the pendant gadget restricted to V(G).
Candidate is_from_pendant_ids(const Graph& source, const GadgetMap& map, const Candidate& ids);

/// n + (t - 1) alpha: MMVC optimum of the t-pendant gadget.
long mmvc_pendant_value(int n, long alpha, int pendants);
/// alpha + (n - alpha)(r + 1): minimum IDS of the (r+1)-pendant gadget.
long ids_pendant_value(int n, long alpha, int r);
/// Same, with alpha computed by the exact oracle.
long ids_pendant_value(const Graph& g, int r, const OracleBudget& budget = {});

/// Largest color class of an exact l-coloring of G[V'] (size >= |V'| / l).
/// Throws std::invalid_argument if G[V'] is not l-colorable.
Candidate lcol_backward(const Graph& g, const Selection& subset, int colors);
/// Largest class of a greedy coloring in degeneracy order (<= 6 colors for a
/// 5-degenerate, in particular planar, G[V']). Throws std::invalid_argument if
/// G[V'] is not 5-degenerate.
Candidate planar_backward(const Graph& g, const Selection& subset);

// ---------------------------------------------------------------------------
// Type-erased reductions for chaining and the CLI.

struct ReductionParams {
    std::optional<int> pendants;  // t for is -> mmvc (default n + 1); r + 1 for is -> ids
    int colors = 2;               // l for is -> lcol
    std::optional<long> target;   // k for is -> max2sat
};

struct ReductionResult {
    Instance target;
    GadgetMap gadget;
    std::vector<ReductionResult> stages;  // per-stage results of a composition
    ProblemParams target_params;
};

/// Maps a ratio r' achieved on the target to the ratio guaranteed on the
/// source. Empty `apply` means the transfer is not multiplicative (see description).
struct RatioTransfer {
    std::string description;
    std::function<double(double)> apply;
};

struct Reduction {
    std::string name;
    Problem source;
    Problem target;
    std::function<ReductionResult(const Instance&)> forward;
    std::function<Candidate(const Instance&, const ReductionResult&, const Candidate&)> backward;
    RatioTransfer transfer;
    std::string size_bound;
};

/// Throws std::invalid_argument for an unsupported pair.
Reduction make_reduction(Problem from, Problem to, const ReductionParams& params = {});
std::vector<std::pair<Problem, Problem>> available_reductions();
Reduction identity_reduction(Problem p);
/// first then second. Throws std::invalid_argument unless first.target == second.source.
Reduction compose(const Reduction& first, const Reduction& second);
/// "vc:ds,ds:setcover" -> composed reduction.
Reduction parse_chain(std::string_view chain, const ReductionParams& params = {});

}  // namespace sparselab
