#include "sparselab/reductions.hpp"

#include <algorithm>
#include <stdexcept>

#include "sparselab/validate.hpp"

namespace sparselab {

namespace {

using Role = GadgetVertex::Role;

void require_undirected(const Graph& g) {
    if (g.is_directed()) throw std::invalid_argument("reduction expects an undirected graph");
}

void require_no_isolated(const Graph& g) {
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0)
            throw std::invalid_argument("isolated vertex " + std::to_string(v) + " in the source graph");
}

GadgetGraph edge_dummy_gadget(const Graph& g, bool keep_edges) {
    require_undirected(g);
    int n = g.order();
    auto source_edges = g.edges();
    GadgetMap map{n, {}};
    std::vector<Label> labels = g.labels();
    std::vector<Edge> edges;
    if (keep_edges) edges = source_edges;
    for (Vertex v = 0; v < n; ++v) map.vertices.push_back({Role::Original, v, -1, 0});
    for (auto [u, v] : source_edges) {
        for (int copy = 0; copy < 2; ++copy) {
            Vertex dummy = static_cast<Vertex>(map.vertices.size());
            map.vertices.push_back({Role::EdgeDummy, u, v, copy});
            labels.push_back(dummy);
            edges.emplace_back(u, dummy);
            edges.emplace_back(v, dummy);
        }
    }
    return {Graph::undirected(static_cast<int>(map.vertices.size()), edges, std::move(labels)), std::move(map)};
}

// Dummies become the lower endpoint of their edge; originals stay.
Candidate swap_dummies(const Graph& source, const GadgetMap& map, const Selection& chosen) {
    if (map.source_order != source.order()) throw std::invalid_argument("gadget map does not belong to this source");
    Selection cover;
    for (Vertex v : chosen) {
        if (v < 0 || v >= static_cast<Vertex>(map.vertices.size()))
            throw std::invalid_argument("target vertex " + std::to_string(v) + " not in the gadget");
        cover.push_back(map.vertices[v].anchor);
    }
    std::sort(cover.begin(), cover.end());
    cover.erase(std::unique(cover.begin(), cover.end()), cover.end());
    return make_selection(Problem::VertexCover, std::move(cover));
}

void require_feasible(Problem p, const Instance& instance, const Candidate& c, const ProblemParams& params = {}) {
    auto verdict = validate(p, instance, c, params);
    if (!verdict.feasible)
        throw std::invalid_argument(std::string(tag_name(p)) + " candidate is infeasible: " + verdict.reason);
}

const Graph& as_graph(const Instance& i) {
    const auto* g = std::get_if<Graph>(&i);
    if (!g) throw std::invalid_argument("reduction expects a graph instance");
    return *g;
}

const SetSystem& as_sets(const Instance& i) {
    const auto* s = std::get_if<SetSystem>(&i);
    if (!s) throw std::invalid_argument("reduction expects a set-system instance");
    return *s;
}

}  // namespace

nlohmann::json GadgetMap::json() const {
    nlohmann::json j;
    j["source_order"] = source_order;
    auto& list = j["vertices"] = nlohmann::json::array();
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const auto& gv = vertices[i];
        nlohmann::json item{{"id", i}};
        switch (gv.role) {
        case Role::Original: item["role"] = "original"; item["source"] = gv.anchor; break;
        case Role::EdgeDummy: item["role"] = "edge-dummy"; item["edge"] = {gv.anchor, gv.partner}; break;
        case Role::Pendant: item["role"] = "pendant"; item["source"] = gv.anchor; break;
        case Role::Split: item["role"] = "split"; item["source"] = gv.anchor; item["layer"] = gv.layer; break;
        }
        list.push_back(std::move(item));
    }
    return j;
}

GadgetGraph vc_to_ds(const Graph& g) {
    require_undirected(g);
    require_no_isolated(g);
    return edge_dummy_gadget(g, true);
}

Candidate vc_from_ds(const Graph& source, const GadgetMap& map, const Candidate& dominating) {
    return swap_dummies(source, map, dominating.selection());
}

GadgetGraph vc_to_fvs(const Graph& g) { return edge_dummy_gadget(g, true); }

Candidate vc_from_fvs(const Graph& source, const GadgetMap& map, const Candidate& feedback) {
    return swap_dummies(source, map, feedback.selection());
}

GadgetGraph vc_to_ids(const Graph& g) {
    require_undirected(g);
    require_no_isolated(g);
    return edge_dummy_gadget(g, false);
}

Candidate vc_from_ids(const Graph& source, const GadgetMap& map, const Candidate& ids) {
    return swap_dummies(source, map, ids.selection());
}

GadgetGraph vc_to_fas(const Graph& g) {
    require_undirected(g);
    int n = g.order();
    GadgetMap map{n, {}};
    std::vector<Label> labels;
    for (Vertex v = 0; v < n; ++v) {
        map.vertices.push_back({Role::Split, v, -1, 0});
        map.vertices.push_back({Role::Split, v, -1, 1});
        labels.push_back(2 * static_cast<Label>(v));
        labels.push_back(2 * static_cast<Label>(v) + 1);
    }
    std::vector<Edge> arcs;
    for (Vertex v = 0; v < n; ++v) arcs.emplace_back(2 * v, 2 * v + 1);
    for (auto [u, v] : g.edges()) {
        arcs.emplace_back(2 * u + 1, 2 * v);
        arcs.emplace_back(2 * v + 1, 2 * u);
    }
    return {Graph::directed(2 * n, arcs, std::move(labels)), std::move(map)};
}

ArcList normalize_feedback_arcs(const GadgetMap& map, const ArcList& arcs) {
    ArcList out;
    for (auto [from, to] : arcs) {
        if (from < 0 || to < 0 || from >= static_cast<Vertex>(map.vertices.size()) ||
            to >= static_cast<Vertex>(map.vertices.size()))
            throw std::invalid_argument("arc outside the gadget");
        const auto& head = map.vertices[to];
        if (map.vertices[from].layer == 1 && head.layer == 0) {
            // (u,1) -> (v,0): (v,0) has out-degree 1, so every cycle through it uses (v,0) -> (v,1).
            out.emplace_back(to, to + 1);
        } else {
            out.emplace_back(from, to);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Candidate vc_from_fas(const Graph& source, const GadgetMap& map, const Candidate& fas) {
    if (map.source_order != source.order()) throw std::invalid_argument("gadget map does not belong to this source");
    Selection cover;
    for (auto [from, to] : normalize_feedback_arcs(map, fas.arcs())) cover.push_back(map.vertices[from].anchor);
    return make_selection(Problem::VertexCover, std::move(cover));
}

SetSystem ds_to_setcover(const Graph& g) {
    require_undirected(g);
    std::vector<std::vector<int>> sets(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
        sets[v].push_back(v);
        for (Vertex w : g.neighbors(v)) sets[v].push_back(w);
    }
    return SetSystem(g.order(), std::move(sets));
}

Candidate ds_from_setcover(const Graph& source, const Candidate& cover) {
    Selection chosen = cover.selection();
    for (int i : chosen)
        if (i < 0 || i >= source.order()) throw std::invalid_argument("set index outside the source graph");
    return make_selection(Problem::DominatingSet, std::move(chosen));
}

SetSystem setcover_to_hittingset(const SetSystem& s) { return s.dual(); }

Candidate setcover_from_hittingset(const SetSystem& source, const Candidate& hitting) {
    Selection chosen = hitting.selection();
    for (int i : chosen)
        if (i < 0 || i >= static_cast<int>(source.count())) throw std::invalid_argument("element outside the dual");
    return make_selection(Problem::SetCover, std::move(chosen));
}

Candidate hittingset_from_setcover(const SetSystem& source, const Candidate& cover) {
    Selection chosen = cover.selection();
    for (int i : chosen)
        if (i < 0 || i >= source.ground()) throw std::invalid_argument("set index outside the dual");
    return make_selection(Problem::HittingSet, std::move(chosen));
}

CnfInstance is_to_max2sat(const Graph& g, std::optional<long> k) {
    require_undirected(g);
    std::vector<Clause> clauses;
    for (Vertex v = 0; v < g.order(); ++v) clauses.push_back({Literal{v, false}});
    auto edges = g.edges();
    for (auto [u, v] : edges) clauses.push_back({Literal{u, true}, Literal{v, true}});
    std::optional<long> target;
    if (k) target = *k + static_cast<long>(edges.size());
    return CnfInstance(g.order(), std::move(clauses), target);
}

Candidate is_from_max2sat(const Graph& source, const Candidate& assignment) {
    Assignment a = assignment.assignment();
    if (a.size() != static_cast<std::size_t>(source.order()))
        throw std::invalid_argument("assignment length differs from the source order");
    for (auto [u, v] : source.edges())
        if (a[u] && a[v]) a[u] = false;
    Selection chosen;
    for (Vertex v = 0; v < source.order(); ++v)
        if (a[v]) chosen.push_back(v);
    return make_selection(Problem::IndependentSet, std::move(chosen));
}

SetSystem is_to_setpacking(const Graph& g) {
    require_undirected(g);
    auto edges = g.edges();
    std::vector<std::vector<int>> sets(g.order());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        sets[edges[i].first].push_back(static_cast<int>(i));
        sets[edges[i].second].push_back(static_cast<int>(i));
    }
    return SetSystem(static_cast<int>(edges.size()), std::move(sets));
}

Candidate is_from_setpacking(const Graph& source, const Candidate& packing) {
    Selection chosen = packing.selection();
    for (int i : chosen)
        if (i < 0 || i >= source.order()) throw std::invalid_argument("set index outside the source graph");
    return make_selection(Problem::IndependentSet, std::move(chosen));
}

GadgetGraph is_to_mmvc(const Graph& g, int pendants) {
    require_undirected(g);
    if (pendants < 2)
        throw std::invalid_argument("pendant gadget needs t >= 2 (t = 1 makes |S| = (|C| - n)/(t - 1) undefined)");
    int n = g.order();
    GadgetMap map{n, {}};
    std::vector<Label> labels = g.labels();
    std::vector<Edge> edges = g.edges();
    for (Vertex v = 0; v < n; ++v) map.vertices.push_back({Role::Original, v, -1, 0});
    for (Vertex v = 0; v < n; ++v)
        for (int k = 0; k < pendants; ++k) {
            Vertex p = static_cast<Vertex>(map.vertices.size());
            map.vertices.push_back({Role::Pendant, v, -1, k});
            labels.push_back(p);
            edges.emplace_back(v, p);
        }
    return {Graph::undirected(static_cast<int>(map.vertices.size()), edges, std::move(labels)), std::move(map)};
}

Candidate mmvc_from_is(const GadgetGraph& gadget, const Selection& independent) {
    const auto& map = gadget.map;
    std::vector<char> in(map.source_order, 0);
    for (Vertex v : independent) {
        if (v < 0 || v >= map.source_order) throw std::invalid_argument("vertex outside the source graph");
        in[v] = 1;
    }
    Selection cover;
    for (Vertex x = 0; x < static_cast<Vertex>(map.vertices.size()); ++x) {
        const auto& gv = map.vertices[x];
        bool original = gv.role == Role::Original;
        if (original != (in[gv.anchor] != 0)) cover.push_back(x);
    }
    return make_selection(Problem::MaxMinimalVertexCover, std::move(cover));
}

Candidate is_from_mmvc(const Graph& source, const GadgetMap& map, const Candidate& cover) {
    if (map.source_order != source.order()) throw std::invalid_argument("gadget map does not belong to this source");
    std::vector<char> in(source.order(), 0);
    for (Vertex x : cover.selection()) {
        if (x < 0 || x >= static_cast<Vertex>(map.vertices.size())) throw std::invalid_argument("vertex outside the gadget");
        if (map.is_original(x)) in[x] = 1;
    }
    Selection chosen;
    for (Vertex v = 0; v < source.order(); ++v)
        if (!in[v]) chosen.push_back(v);
    return make_selection(Problem::IndependentSet, std::move(chosen));
}

Candidate is_from_pendant_ids(const Graph& source, const GadgetMap& map, const Candidate& ids) {
    if (map.source_order != source.order()) throw std::invalid_argument("gadget map does not belong to this source");
    Selection chosen;
    for (Vertex x : ids.selection()) {
        if (x < 0 || x >= static_cast<Vertex>(map.vertices.size())) throw std::invalid_argument("vertex outside the gadget");
        if (map.is_original(x)) chosen.push_back(x);
    }
    return make_selection(Problem::IndependentSet, std::move(chosen));
}

long mmvc_pendant_value(int n, long alpha, int pendants) { return n + static_cast<long>(pendants - 1) * alpha; }

long ids_pendant_value(int n, long alpha, int r) {
    if (r < 1) throw std::invalid_argument("r must be at least 1");
    return alpha + (n - alpha) * static_cast<long>(r + 1);
}

long ids_pendant_value(const Graph& g, int r, const OracleBudget& budget) {
    return ids_pendant_value(g.order(), solve_exact(Problem::IndependentSet, g, budget).value, r);
}

namespace {

Candidate largest_class(const Selection& subset, const std::vector<int>& color, int colors) {
    std::vector<Selection> classes(colors);
    for (std::size_t i = 0; i < subset.size(); ++i) classes[color[i]].push_back(subset[i]);
    std::size_t pick = 0;
    for (std::size_t c = 1; c < classes.size(); ++c)
        if (classes[c].size() > classes[pick].size()) pick = c;
    return make_selection(Problem::IndependentSet, std::move(classes[pick]));
}

}  // namespace

Candidate lcol_backward(const Graph& g, const Selection& subset, int colors) {
    if (colors < 1) throw std::invalid_argument("number of colors must be positive");
    auto sub = induced_subgraph(g, subset);
    auto coloring = exact_coloring(sub, colors, {std::max(4, colors), 40});
    if (!coloring) throw std::invalid_argument("candidate does not induce an " + std::to_string(colors) + "-colorable subgraph");
    if (subset.empty()) return make_selection(Problem::IndependentSet, {});
    return largest_class(subset, *coloring, colors);
}

Candidate planar_backward(const Graph& g, const Selection& subset) {
    auto sub = induced_subgraph(g, subset);
    int n = sub.order();
    if (n == 0) return make_selection(Problem::IndependentSet, {});
    // Degeneracy order: repeatedly remove a minimum-degree vertex (lowest id).
    std::vector<int> degree(n);
    std::vector<char> removed(n, 0);
    for (Vertex v = 0; v < n; ++v) degree[v] = sub.degree(v);
    std::vector<Vertex> order;
    for (int step = 0; step < n; ++step) {
        Vertex pick = -1;
        for (Vertex v = 0; v < n; ++v)
            if (!removed[v] && (pick < 0 || degree[v] < degree[pick])) pick = v;
        if (degree[pick] > 5) throw std::invalid_argument("candidate does not induce a 5-degenerate subgraph");
        removed[pick] = 1;
        order.push_back(pick);
        for (Vertex w : sub.neighbors(pick))
            if (!removed[w]) --degree[w];
    }
    // Color in reverse removal order; each vertex sees at most 5 colored neighbors.
    std::vector<int> color(n, -1);
    int used = 0;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        std::vector<char> taken(7, 0);
        for (Vertex w : sub.neighbors(*it))
            if (color[w] >= 0) taken[color[w]] = 1;
        int c = 0;
        while (taken[c]) ++c;
        color[*it] = c;
        used = std::max(used, c + 1);
    }
    return largest_class(subset, color, used);
}

// ---------------------------------------------------------------------------

namespace {

RatioTransfer identity_transfer() { return {"r -> r", [](double r) { return r; }}; }

Reduction gadget_reduction(std::string name, Problem from, Problem to, GadgetGraph (*build)(const Graph&),
                           Candidate (*back)(const Graph&, const GadgetMap&, const Candidate&), std::string size) {
    Reduction r;
    r.name = std::move(name);
    r.source = from;
    r.target = to;
    r.forward = [build](const Instance& i) {
        auto gadget = build(as_graph(i));
        return ReductionResult{std::move(gadget.graph), std::move(gadget.map), {}, {}};
    };
    r.backward = [back, to](const Instance& i, const ReductionResult& res, const Candidate& c) {
        require_feasible(to, res.target, c);
        return back(as_graph(i), res.gadget, c);
    };
    r.transfer = identity_transfer();
    r.size_bound = std::move(size);
    return r;
}

}  // namespace

std::vector<std::pair<Problem, Problem>> available_reductions() {
    return {
        {Problem::VertexCover, Problem::DominatingSet},
        {Problem::DominatingSet, Problem::SetCover},
        {Problem::SetCover, Problem::HittingSet},
        {Problem::HittingSet, Problem::SetCover},
        {Problem::VertexCover, Problem::FeedbackVertexSet},
        {Problem::VertexCover, Problem::IndependentDominatingSet},
        {Problem::VertexCover, Problem::FeedbackArcSet},
        {Problem::IndependentSet, Problem::Max2Sat},
        {Problem::IndependentSet, Problem::SetPacking},
        {Problem::IndependentSet, Problem::MaxMinimalVertexCover},
        {Problem::IndependentSet, Problem::IndependentDominatingSet},
        {Problem::IndependentSet, Problem::ColorableSubgraph},
        {Problem::IndependentSet, Problem::PlanarSubgraph},
    };
}

Reduction make_reduction(Problem from, Problem to, const ReductionParams& params) {
    using P = Problem;
    auto key = std::pair{from, to};
    if (key == std::pair{P::VertexCover, P::DominatingSet})
        return gadget_reduction("vc->ds", from, to, vc_to_ds, vc_from_ds, "n + 2m vertices");
    if (key == std::pair{P::VertexCover, P::FeedbackVertexSet})
        return gadget_reduction("vc->fvs", from, to, vc_to_fvs, vc_from_fvs, "n + 2m vertices");
    if (key == std::pair{P::VertexCover, P::IndependentDominatingSet})
        return gadget_reduction("vc->ids", from, to, vc_to_ids, vc_from_ids, "n + 2m vertices");
    if (key == std::pair{P::VertexCover, P::FeedbackArcSet})
        return gadget_reduction("vc->fas", from, to, vc_to_fas, vc_from_fas, "2n vertices, n + 2m arcs");

    Reduction r;
    r.source = from;
    r.target = to;
    r.transfer = identity_transfer();
    if (key == std::pair{P::DominatingSet, P::SetCover}) {
        r.name = "ds->setcover";
        r.size_bound = "n sets over n elements";
        r.forward = [](const Instance& i) { return ReductionResult{ds_to_setcover(as_graph(i)), {}, {}, {}}; };
        r.backward = [](const Instance& i, const ReductionResult& res, const Candidate& c) {
            require_feasible(P::SetCover, res.target, c);
            return ds_from_setcover(as_graph(i), c);
        };
        return r;
    }
    if (key == std::pair{P::SetCover, P::HittingSet} || key == std::pair{P::HittingSet, P::SetCover}) {
        bool to_hitting = to == P::HittingSet;
        r.name = to_hitting ? "setcover->hittingset" : "hittingset->setcover";
        r.size_bound = "|C| sets over |S| elements";
        r.forward = [](const Instance& i) { return ReductionResult{as_sets(i).dual(), {}, {}, {}}; };
        r.backward = [to, to_hitting](const Instance& i, const ReductionResult& res, const Candidate& c) {
            require_feasible(to, res.target, c);
            return to_hitting ? setcover_from_hittingset(as_sets(i), c) : hittingset_from_setcover(as_sets(i), c);
        };
        return r;
    }
    if (key == std::pair{P::IndependentSet, P::Max2Sat}) {
        r.name = "is->max2sat";
        r.size_bound = "n + m clauses";
        r.transfer = {"additive: |S| >= satisfied - m", {}};
        auto k = params.target;
        r.forward = [k](const Instance& i) { return ReductionResult{is_to_max2sat(as_graph(i), k), {}, {}, {}}; };
        r.backward = [](const Instance& i, const ReductionResult& res, const Candidate& c) {
            require_feasible(P::Max2Sat, res.target, c);
            return is_from_max2sat(as_graph(i), c);
        };
        return r;
    }
    if (key == std::pair{P::IndependentSet, P::SetPacking}) {
        r.name = "is->setpacking";
        r.size_bound = "n sets over m elements";
        r.forward = [](const Instance& i) { return ReductionResult{is_to_setpacking(as_graph(i)), {}, {}, {}}; };
        r.backward = [](const Instance& i, const ReductionResult& res, const Candidate& c) {
            require_feasible(P::SetPacking, res.target, c);
            return is_from_setpacking(as_graph(i), c);
        };
        return r;
    }
    if (key == std::pair{P::IndependentSet, P::MaxMinimalVertexCover} ||
        key == std::pair{P::IndependentSet, P::IndependentDominatingSet}) {
        bool mmvc = to == P::MaxMinimalVertexCover;
        r.name = mmvc ? "is->mmvc" : "is->ids";
        r.size_bound = "n(1 + t) vertices";
        r.transfer = {mmvc ? "exact: opt(H) = n + (t-1) alpha, |S| = (|C| - n)/(t-1)"
                           : "exact: opt(H) = alpha + (n - alpha) t",
                      {}};
        auto pendants = params.pendants;
        r.forward = [pendants](const Instance& i) {
            const auto& g = as_graph(i);
            auto gadget = is_to_mmvc(g, pendants.value_or(g.order() + 1));
            return ReductionResult{std::move(gadget.graph), std::move(gadget.map), {}, {}};
        };
        r.backward = [to, mmvc](const Instance& i, const ReductionResult& res, const Candidate& c) {
            require_feasible(to, res.target, c);
            return mmvc ? is_from_mmvc(as_graph(i), res.gadget, c) : is_from_pendant_ids(as_graph(i), res.gadget, c);
        };
        return r;
    }
    if (key == std::pair{P::IndependentSet, P::ColorableSubgraph}) {
        int colors = params.colors;
        if (colors < 1) throw std::invalid_argument("number of colors must be positive");
        r.name = "is->lcol";
        r.size_bound = "n vertices (identity)";
        r.transfer = {"r -> l r", [colors](double x) { return colors * x; }};
        r.forward = [colors](const Instance& i) {
            return ReductionResult{as_graph(i), {}, {}, ProblemParams{colors}};
        };
        r.backward = [colors](const Instance& i, const ReductionResult&, const Candidate& c) {
            return lcol_backward(as_graph(i), c.selection(), colors);
        };
        return r;
    }
    if (key == std::pair{P::IndependentSet, P::PlanarSubgraph}) {
        r.name = "is->planar";
        r.size_bound = "n vertices (identity)";
        r.transfer = {"r -> 6 r (degeneracy coloring)", [](double x) { return 6 * x; }};
        r.forward = [](const Instance& i) { return ReductionResult{as_graph(i), {}, {}, {}}; };
        r.backward = [](const Instance& i, const ReductionResult& res, const Candidate& c) {
            require_feasible(P::PlanarSubgraph, res.target, c);
            return planar_backward(as_graph(i), c.selection());
        };
        return r;
    }
    throw std::invalid_argument("no reduction from " + std::string(tag_name(from)) + " to " +
                                std::string(tag_name(to)));
}

Reduction identity_reduction(Problem p) {
    Reduction r;
    r.name = "identity(" + std::string(short_name(p)) + ")";
    r.source = p;
    r.target = p;
    r.forward = [](const Instance& i) { return ReductionResult{i, {}, {}, {}}; };
    r.backward = [](const Instance&, const ReductionResult&, const Candidate& c) { return c; };
    r.transfer = identity_transfer();
    r.size_bound = "unchanged";
    return r;
}

Reduction compose(const Reduction& first, const Reduction& second) {
    if (first.target != second.source)
        throw std::invalid_argument("cannot chain " + first.name + " into " + second.name);
    Reduction r;
    r.name = first.name + " then " + second.name;
    r.source = first.source;
    r.target = second.target;
    r.forward = [first, second](const Instance& i) {
        auto a = first.forward(i);
        auto b = second.forward(a.target);
        ReductionResult out{b.target, b.gadget, {}, b.target_params};
        out.stages.push_back(std::move(a));
        out.stages.push_back(std::move(b));
        return out;
    };
    r.backward = [first, second](const Instance& i, const ReductionResult& res, const Candidate& c) {
        const auto& a = res.stages.at(0);
        const auto& b = res.stages.at(1);
        return first.backward(i, a, second.backward(a.target, b, c));
    };
    r.transfer.description = "(" + first.transfer.description + ") after (" + second.transfer.description + ")";
    if (first.transfer.apply && second.transfer.apply) {
        auto outer = first.transfer.apply, inner = second.transfer.apply;
        r.transfer.apply = [outer, inner](double x) { return outer(inner(x)); };
    }
    r.size_bound = second.size_bound + ", applied to an instance of " + first.size_bound;
    return r;
}

Reduction parse_chain(std::string_view chain, const ReductionParams& params) {
    std::optional<Reduction> out;
    while (!chain.empty()) {
        auto comma = chain.find(',');
        auto step = chain.substr(0, comma);
        chain = comma == std::string_view::npos ? std::string_view{} : chain.substr(comma + 1);
        auto colon = step.find(':');
        if (colon == std::string_view::npos) throw std::invalid_argument("chain step must look like from:to");
        auto next = make_reduction(parse_problem(step.substr(0, colon)), parse_problem(step.substr(colon + 1)), params);
        out = out ? compose(*out, next) : next;
    }
    if (!out) throw std::invalid_argument("empty reduction chain");
    return *out;
}

}  // namespace sparselab
