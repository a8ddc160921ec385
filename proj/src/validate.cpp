#include "sparselab/validate.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace sparselab {

namespace {

Verdict infeasible(std::string reason, long value) { return {false, value, std::move(reason)}; }

bool in_range(std::span<const int> items, int bound) {
    return std::all_of(items.begin(), items.end(), [&](int x) { return x >= 0 && x < bound; });
}

bool has_repeats(std::vector<int> items) {
    std::sort(items.begin(), items.end());
    return std::adjacent_find(items.begin(), items.end()) != items.end();
}

const Graph& expect_graph(const Instance& instance, Problem p, bool directed) {
    const auto* g = std::get_if<Graph>(&instance);
    if (!g || g->is_directed() != directed)
        throw std::invalid_argument(std::string(tag_name(p)) + " expects " +
                                    (directed ? "a directed" : "an undirected") + " graph instance");
    return *g;
}

const SetSystem& expect_sets(const Instance& instance, Problem p) {
    const auto* s = std::get_if<SetSystem>(&instance);
    if (!s) throw std::invalid_argument(std::string(tag_name(p)) + " expects a set-system instance");
    return *s;
}

const CnfInstance& expect_cnf(const Instance& instance, Problem p) {
    const auto* f = std::get_if<CnfInstance>(&instance);
    if (!f) throw std::invalid_argument(std::string(tag_name(p)) + " expects a CNF instance");
    return *f;
}

bool colorable_from(const Graph& g, int colors, std::vector<int>& color, std::span<const Vertex> order,
                    std::size_t at, int used) {
    if (at == order.size()) return true;
    Vertex v = order[at];
    // New colors are opened in increasing order only.
    int limit = std::min(colors, used + 1);
    for (int c = 0; c < limit; ++c) {
        bool clash = false;
        for (Vertex w : g.neighbors(v))
            if (color[w] == c) {
                clash = true;
                break;
            }
        if (clash) continue;
        color[v] = c;
        if (colorable_from(g, colors, color, order, at + 1, std::max(used, c + 1))) return true;
        color[v] = -1;
    }
    return false;
}

Verdict check_vertices(Problem p, const Graph& g, const Selection& items, const ProblemParams& params) {
    auto value = static_cast<long>(items.size());
    if (!in_range(items, g.order())) return infeasible("vertex id out of range", value);
    if (has_repeats(items)) return infeasible("vertex listed twice", value);
    switch (p) {
    case Problem::IndependentSet:
        return is_independent(g, items) ? Verdict{true, value, {}} : infeasible("two chosen vertices are adjacent", value);
    case Problem::VertexCover:
        return is_vertex_cover(g, items) ? Verdict{true, value, {}} : infeasible("an edge is uncovered", value);
    case Problem::DominatingSet:
        return is_dominating(g, items) ? Verdict{true, value, {}} : infeasible("a vertex is not dominated", value);
    case Problem::IndependentDominatingSet:
        if (!is_independent(g, items)) return infeasible("two chosen vertices are adjacent", value);
        return is_dominating(g, items) ? Verdict{true, value, {}} : infeasible("a vertex is not dominated", value);
    case Problem::FeedbackVertexSet:
        return is_feedback_vertex_set(g, items) ? Verdict{true, value, {}}
                                                : infeasible("a cycle avoids the chosen vertices", value);
    case Problem::MaxMinimalVertexCover:
        if (!is_vertex_cover(g, items)) return infeasible("an edge is uncovered", value);
        return is_minimal_vertex_cover(g, items) ? Verdict{true, value, {}}
                                                 : infeasible("cover is not minimal", value);
    case Problem::ColorableSubgraph: {
        if (!params.colors) throw std::invalid_argument("LCOL-SUBGRAPH needs the number of colors");
        auto sub = induced_subgraph(g, items);
        return exact_coloring(sub, *params.colors) ? Verdict{true, value, {}}
                                                   : infeasible("induced subgraph is not colorable", value);
    }
    case Problem::PlanarSubgraph:
        return is_planar(induced_subgraph(g, items)) ? Verdict{true, value, {}}
                                                     : infeasible("induced subgraph is not planar", value);
    default:
        throw std::logic_error("not a vertex-selection problem");
    }
}

Verdict check_sets(Problem p, const SetSystem& s, const Selection& items) {
    auto value = static_cast<long>(items.size());
    int bound = p == Problem::HittingSet ? s.ground() : static_cast<int>(s.count());
    if (!in_range(items, bound)) return infeasible("index out of range", value);
    if (has_repeats(items)) return infeasible("index listed twice", value);
    switch (p) {
    case Problem::SetCover: {
        std::vector<char> covered(s.ground(), 0);
        for (int i : items)
            for (int e : s.set(i)) covered[e] = 1;
        bool all = std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
        return all ? Verdict{true, value, {}} : infeasible("an element is uncovered", value);
    }
    case Problem::HittingSet: {
        std::vector<char> chosen(s.ground(), 0);
        for (int e : items) chosen[e] = 1;
        for (const auto& set : s.sets())
            if (std::none_of(set.begin(), set.end(), [&](int e) { return chosen[e] != 0; }))
                return infeasible("a set is not hit", value);
        return {true, value, {}};
    }
    case Problem::SetPacking: {
        std::vector<char> used(s.ground(), 0);
        for (int i : items)
            for (int e : s.set(i)) {
                if (used[e]) return infeasible("chosen sets intersect", value);
                used[e] = 1;
            }
        return {true, value, {}};
    }
    default:
        throw std::logic_error("not a set-system problem");
    }
}

}  // namespace

Verdict validate(Problem problem, const Instance& instance, const Candidate& candidate, const ProblemParams& params) {
    if (candidate.problem != problem)
        throw std::invalid_argument("candidate is tagged " + std::string(tag_name(candidate.problem)) + ", expected " +
                                    std::string(tag_name(problem)));
    auto kind = payload_kind(problem);
    bool payload_ok = (kind == PayloadKind::Arcs && std::holds_alternative<ArcList>(candidate.payload)) ||
                      (kind == PayloadKind::Assignment && std::holds_alternative<Assignment>(candidate.payload)) ||
                      ((kind == PayloadKind::Vertices || kind == PayloadKind::SetIndices ||
                        kind == PayloadKind::Elements) &&
                       std::holds_alternative<Selection>(candidate.payload));
    if (!payload_ok) throw std::invalid_argument("payload type does not match " + std::string(tag_name(problem)));

    Verdict verdict;
    switch (kind) {
    case PayloadKind::Vertices:
        verdict = check_vertices(problem, expect_graph(instance, problem, false), candidate.selection(), params);
        break;
    case PayloadKind::SetIndices:
    case PayloadKind::Elements:
        verdict = check_sets(problem, expect_sets(instance, problem), candidate.selection());
        break;
    case PayloadKind::Arcs: {
        const auto& g = expect_graph(instance, problem, true);
        const auto& arcs = candidate.arcs();
        verdict.value = static_cast<long>(arcs.size());
        auto sorted = arcs;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            verdict = infeasible("arc listed twice", verdict.value);
        } else if (!std::all_of(arcs.begin(), arcs.end(), [&](const Edge& a) {
                       return a.first >= 0 && a.first < g.order() && a.second >= 0 && a.second < g.order() &&
                              g.adjacent(a.first, a.second);
                   })) {
            verdict = infeasible("arc not in the graph", verdict.value);
        } else if (!breaks_all_cycles(g, arcs)) {
            verdict = infeasible("a cycle survives", verdict.value);
        } else {
            verdict.feasible = true;
        }
        break;
    }
    case PayloadKind::Assignment: {
        const auto& f = expect_cnf(instance, problem);
        std::size_t width = problem == Problem::Max2Sat ? 2 : 3;
        if (f.max_width() > width)
            throw std::invalid_argument(std::string(tag_name(problem)) + " instance has a clause of width " +
                                        std::to_string(f.max_width()));
        const auto& a = candidate.assignment();
        if (a.size() != static_cast<std::size_t>(f.num_vars())) {
            verdict = infeasible("assignment length differs from variable count", 0);
        } else {
            verdict = {true, f.satisfied_count(a), {}};
        }
        break;
    }
    }
    if (verdict.feasible && verdict.value != candidate.value)
        verdict = infeasible("stated value " + std::to_string(candidate.value) + " differs from recomputed " +
                                 std::to_string(verdict.value),
                             verdict.value);
    return verdict;
}

bool is_independent(const Graph& g, std::span<const Vertex> set) {
    auto in = membership(g, set);
    for (Vertex v : set)
        for (Vertex w : g.neighbors(v))
            if (in[w]) return false;
    return true;
}

bool is_vertex_cover(const Graph& g, std::span<const Vertex> set) {
    auto in = membership(g, set);
    for (auto [u, v] : g.edges())
        if (!in[u] && !in[v]) return false;
    return true;
}

bool is_minimal_vertex_cover(const Graph& g, std::span<const Vertex> set) {
    if (!is_vertex_cover(g, set)) return false;
    auto in = membership(g, set);
    // v is removable iff all its neighbors are in the cover.
    for (Vertex v = 0; v < g.order(); ++v) {
        if (!in[v]) continue;
        auto nb = g.neighbors(v);
        if (std::all_of(nb.begin(), nb.end(), [&](Vertex w) { return in[w] != 0; })) return false;
    }
    return true;
}

bool is_dominating(const Graph& g, std::span<const Vertex> set) {
    auto in = membership(g, set);
    for (Vertex v = 0; v < g.order(); ++v) {
        if (in[v]) continue;
        auto nb = g.neighbors(v);
        if (std::none_of(nb.begin(), nb.end(), [&](Vertex w) { return in[w] != 0; })) return false;
    }
    return true;
}

bool is_independent_dominating(const Graph& g, std::span<const Vertex> set) {
    return is_independent(g, set) && is_dominating(g, set);
}

bool is_feedback_vertex_set(const Graph& g, std::span<const Vertex> set) {
    auto removed = membership(g, set);
    std::vector<int> parent(g.order());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [u, v] : g.edges()) {
        if (removed[u] || removed[v]) continue;
        int a = find(u), b = find(v);
        if (a == b) return false;
        parent[a] = b;
    }
    return true;
}

bool breaks_all_cycles(const Graph& digraph, std::span<const Edge> arcs) {
    std::vector<Edge> removed(arcs.begin(), arcs.end());
    std::sort(removed.begin(), removed.end());
    auto gone = [&](Vertex u, Vertex v) { return std::binary_search(removed.begin(), removed.end(), Edge{u, v}); };
    // Kahn's algorithm on the surviving arcs.
    std::vector<int> indegree(digraph.order(), 0);
    for (Vertex u = 0; u < digraph.order(); ++u)
        for (Vertex v : digraph.neighbors(u))
            if (!gone(u, v)) ++indegree[v];
    std::vector<Vertex> ready;
    for (Vertex v = 0; v < digraph.order(); ++v)
        if (indegree[v] == 0) ready.push_back(v);
    int seen = 0;
    while (!ready.empty()) {
        Vertex u = ready.back();
        ready.pop_back();
        ++seen;
        for (Vertex v : digraph.neighbors(u))
            if (!gone(u, v) && --indegree[v] == 0) ready.push_back(v);
    }
    return seen == digraph.order();
}

bool is_acyclic(const Graph& digraph) { return breaks_all_cycles(digraph, {}); }

bool is_planar(const Graph& g) {
    using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
    BoostGraph bg(static_cast<std::size_t>(g.order()));
    for (auto [u, v] : g.edges()) boost::add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v), bg);
    return boost::boyer_myrvold_planarity_test(bg);
}

std::optional<std::vector<int>> exact_coloring(const Graph& g, int colors, ColoringGuard guard) {
    if (colors < 1) throw std::invalid_argument("number of colors must be positive");
    if (colors > guard.max_colors || g.order() > guard.max_vertices)
        throw std::length_error("exact coloring limited to " + std::to_string(guard.max_colors) + " colors and " +
                                std::to_string(guard.max_vertices) + " vertices");
    // Highest degree first keeps the backtracking shallow on dense parts.
    std::vector<Vertex> order(g.order());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    std::vector<int> color(g.order(), -1);
    if (!colorable_from(g, colors, color, order, 0, 0)) return std::nullopt;
    return color;
}

std::vector<Vertex> complement(int n, std::span<const Vertex> set) {
    std::vector<char> in(n, 0);
    for (Vertex v : set) {
        if (v < 0 || v >= n) throw std::out_of_range("unknown vertex id " + std::to_string(v));
        in[v] = 1;
    }
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n; ++v)
        if (!in[v]) out.push_back(v);
    return out;
}

}  // namespace sparselab
