#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sparselab/graph.hpp"
#include "sparselab/oracles.hpp"
#include "sparselab/problem.hpp"

namespace sparselab {

enum class SolutionMode { IndependentSet, VertexCover };

std::string_view mode_name(SolutionMode mode);
SolutionMode parse_mode(std::string_view text);

/// When the branching sparsifier stops.
class ThresholdPolicy {
public:
    enum class Kind { Power, Constant, OfLambda };

    /// Leaves have degree <= floor(n^eta), n the root order; 0 < eta < 1.
    static ThresholdPolicy power(double eta);
    /// Leaves have degree <= bound; bound >= 1.
    static ThresholdPolicy constant(int bound);
    /// Branching stops once the degree is strictly below g(lambda).
    static ThresholdPolicy of_lambda(double lambda);
    /// "power:0.5", "const:4" or "lambda:1.18".
    static ThresholdPolicy parse(std::string_view text);

    Kind kind() const { return kind_; }
    double value() const { return value_; }
    std::string to_string() const;

    /// Largest degree a leaf may keep, for a root of the given order.
    int leaf_degree(int root_order) const;

private:
    ThresholdPolicy(Kind kind, double value) : kind_(kind), value_(value) {}
    Kind kind_;
    double value_;
};

/// One residual instance of the sparsification tree together with the
/// decisions that lead to it. committed, deleted and to_root are root
/// vertex ids; vertex i of `residual` is root vertex to_root[i].
struct SparsificationLeaf {
    Graph residual;
    std::vector<Vertex> to_root;
    std::vector<Vertex> committed;
    std::vector<Vertex> deleted;
    int depth = 0;
    std::string path;  // '1' = commit branch, '0' = discard branch
};

/// Lazy depth-first stream of the leaves produced by branching on a maximum
/// degree vertex (lowest id among ties), commit branch first.
///
/// IS mode: commit v and drop N(v), or drop v. VC mode: commit v, or commit
/// N(v) and drop v; vertices left without neighbors by a VC step are
/// dropped immediately. Emission stops at nodes whose degree is at most the
/// policy's leaf degree.
class LeafStream {
public:
    LeafStream(Graph root, SolutionMode mode, ThresholdPolicy policy);

    std::optional<SparsificationLeaf> next();

    const Graph& root() const { return root_; }
    SolutionMode mode() const { return mode_; }
    int threshold() const { return threshold_; }
    std::uint64_t emitted() const { return emitted_; }

private:
    struct Node {
        std::vector<char> alive;
        std::vector<Vertex> committed, deleted;
        std::string path;
    };

    void drop_isolated(Node& node, Vertex removed) const;

    Graph root_;
    SolutionMode mode_;
    int threshold_;
    std::vector<Node> stack_;
    std::uint64_t emitted_ = 0;
};

LeafStream superlinear_sparsify(const Graph& g, SolutionMode mode, const ThresholdPolicy& policy);

/// ceil(branching_root(t + 1)^n), the leaf-count bound for leaf degree t
/// (2^n when t = 0).
double leaf_count_bound(int leaf_degree, int n);

/// Checks the partition invariant, independence of the commitment (IS) or its
/// covering of every root edge outside the residual (VC), and the degree
/// threshold. Returns a description of the first violation, if any.
std::optional<std::string> check_leaf(const Graph& root, const SparsificationLeaf& leaf, SolutionMode mode,
                                      int threshold);

/// committed plus the leaf solution mapped to root ids. Throws
/// std::invalid_argument if the leaf candidate is infeasible on the residual.
Candidate lift_solution(const Graph& root, const SparsificationLeaf& leaf, const Candidate& leaf_candidate,
                        SolutionMode mode);

/// Result of excavating maximal independent sets one after another.
struct Excavation {
    std::vector<std::vector<Vertex>> layers;  // S_1..S_k in root ids
    Graph residual;
    std::vector<Vertex> to_root;
};

/// Excavates k greedy maximal independent sets (lowest id first); the residual
/// has maximum degree at most Delta - k. Requires 1 <= k < Delta, otherwise
/// std::invalid_argument.
Excavation kstep_sparsify(const Graph& g, int k);

/// Solver for the residual instance; returns residual vertex ids.
using Subsolver = std::function<std::vector<Vertex>(const Graph&)>;

/// Exact residual solver for IS, LCOL-SUBGRAPH or PLANAR-SUBGRAPH.
Subsolver exact_subsolver(Problem problem, ProblemParams params = {}, OracleBudget budget = {});
/// Exact solution truncated to its ceil(opt / ratio) lowest ids; feasible for
/// hereditary problems and exactly a ratio-approximation.
Subsolver degraded_subsolver(Problem problem, double ratio, ProblemParams params = {}, OracleBudget budget = {});

/// Best of a maximum independent set of G[S_1 u S_2] and the subsolver's
/// answer on G - (S_1 u S_2). An r'-approximate subsolver gives r'+1 overall.
Candidate approx_is_kstep(const Graph& g, const Subsolver& subsolver);
/// Best of S_1 u ... u S_l (l-colorable by construction) and the subsolver's answer on the rest.
Candidate approx_lcol_kstep(const Graph& g, int colors, const Subsolver& subsolver);
/// Best of S_1 (planar, being independent) and the subsolver's answer on the rest.
Candidate approx_planar_kstep(const Graph& g, const Subsolver& subsolver);

struct ParamExcavationResult {
    Candidate solution;
    std::uint64_t enumerated_subsets = 0;
    std::size_t union_size = 0;
};

/// Exact maximum independent set: excavate Delta - 2 maximal independent sets,
/// enumerate the independent subsets T of their union U, and complete each on
/// the degree <= 2 remainder G - (U u N(T)). Graphs with Delta < 3 are solved
/// directly.
ParamExcavationResult param_is_excavation(const Graph& g);

}  // namespace sparselab
