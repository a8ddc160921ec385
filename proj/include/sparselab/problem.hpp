#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sparselab/cnf.hpp"
#include "sparselab/graph.hpp"
#include "sparselab/set_system.hpp"

namespace sparselab {

enum class Problem {
    IndependentSet,
    VertexCover,
    DominatingSet,
    IndependentDominatingSet,
    FeedbackVertexSet,
    MaxMinimalVertexCover,
    SetCover,
    HittingSet,
    SetPacking,
    Max2Sat,
    Max3Sat,
    FeedbackArcSet,
    ColorableSubgraph,
    PlanarSubgraph,
};

inline constexpr Problem kAllProblems[] = {
    Problem::IndependentSet, Problem::VertexCover,     Problem::DominatingSet,  Problem::IndependentDominatingSet,
    Problem::FeedbackVertexSet, Problem::MaxMinimalVertexCover, Problem::SetCover, Problem::HittingSet,
    Problem::SetPacking,     Problem::Max2Sat,         Problem::Max3Sat,        Problem::FeedbackArcSet,
    Problem::ColorableSubgraph, Problem::PlanarSubgraph,
};

/// Canonical tag ("IS", "VC", ..., "LCOL-SUBGRAPH").
std::string_view tag_name(Problem p);
/// Short CLI name ("is", "vc", "setcover", "max2sat", "lcol", ...).
std::string_view short_name(Problem p);
/// Accepts canonical tags and short names, case-insensitively. Throws
/// std::invalid_argument("unknown problem tag ...").
Problem parse_problem(std::string_view text);

bool is_maximization(Problem p);

using Instance = std::variant<Graph, SetSystem, CnfInstance>;

/// Vertex ids, set indices (set cover / packing) or ground elements (hitting set).
using Selection = std::vector<int>;
using ArcList = std::vector<Edge>;
using Payload = std::variant<Selection, ArcList, Assignment>;

enum class PayloadKind { Vertices, SetIndices, Elements, Arcs, Assignment };
PayloadKind payload_kind(Problem p);

/// Uniform solution carrier.
struct Candidate {
    Problem problem = Problem::IndependentSet;
    Payload payload;
    long value = 0;

    const Selection& selection() const { return std::get<Selection>(payload); }
    const ArcList& arcs() const { return std::get<ArcList>(payload); }
    const Assignment& assignment() const { return std::get<Assignment>(payload); }
};

/// Candidate with value = |items|; items are sorted.
Candidate make_selection(Problem p, Selection items);
Candidate make_arcs(Problem p, ArcList arcs);

/// Extra problem parameters; `colors` is the l of l-colorable subgraph.
struct ProblemParams {
    std::optional<int> colors;
};

}  // namespace sparselab
