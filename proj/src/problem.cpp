#include "sparselab/problem.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace sparselab {

namespace {

struct TagInfo {
    Problem problem;
    std::string_view tag;
    std::string_view short_name;
    bool maximization;
    PayloadKind kind;
};

constexpr TagInfo kTags[] = {
    {Problem::IndependentSet, "IS", "is", true, PayloadKind::Vertices},
    {Problem::VertexCover, "VC", "vc", false, PayloadKind::Vertices},
    {Problem::DominatingSet, "DS", "ds", false, PayloadKind::Vertices},
    {Problem::IndependentDominatingSet, "IDS", "ids", false, PayloadKind::Vertices},
    {Problem::FeedbackVertexSet, "FVS", "fvs", false, PayloadKind::Vertices},
    {Problem::MaxMinimalVertexCover, "MMVC", "mmvc", true, PayloadKind::Vertices},
    {Problem::SetCover, "SET-COVER", "setcover", false, PayloadKind::SetIndices},
    {Problem::HittingSet, "HITTING-SET", "hittingset", false, PayloadKind::Elements},
    {Problem::SetPacking, "SET-PACKING", "setpacking", true, PayloadKind::SetIndices},
    {Problem::Max2Sat, "MAX-2-SAT", "max2sat", true, PayloadKind::Assignment},
    {Problem::Max3Sat, "MAX-3-SAT", "max3sat", true, PayloadKind::Assignment},
    {Problem::FeedbackArcSet, "FAS", "fas", false, PayloadKind::Arcs},
    {Problem::ColorableSubgraph, "LCOL-SUBGRAPH", "lcol", true, PayloadKind::Vertices},
    {Problem::PlanarSubgraph, "PLANAR-SUBGRAPH", "planar", true, PayloadKind::Vertices},
};

const TagInfo& info(Problem p) {
    for (const auto& t : kTags)
        if (t.problem == p) return t;
    throw std::logic_error("problem without tag");
}

std::string normalized(std::string_view s) {
    std::string out;
    for (char c : s)
        if (c != '-' && c != '_') out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    return out;
}

}  // namespace

std::string_view tag_name(Problem p) { return info(p).tag; }
std::string_view short_name(Problem p) { return info(p).short_name; }
bool is_maximization(Problem p) { return info(p).maximization; }
PayloadKind payload_kind(Problem p) { return info(p).kind; }

Problem parse_problem(std::string_view text) {
    auto key = normalized(text);
    for (const auto& t : kTags)
        if (key == normalized(t.tag) || key == t.short_name) return t.problem;
    if (key == "lcolsubgraph" || key == "lcol") return Problem::ColorableSubgraph;
    throw std::invalid_argument("unknown problem tag '" + std::string(text) + "'");
}

Candidate make_selection(Problem p, Selection items) {
    std::sort(items.begin(), items.end());
    auto value = static_cast<long>(items.size());
    return Candidate{p, std::move(items), value};
}

Candidate make_arcs(Problem p, ArcList arcs) {
    std::sort(arcs.begin(), arcs.end());
    auto value = static_cast<long>(arcs.size());
    return Candidate{p, std::move(arcs), value};
}

}  // namespace sparselab
