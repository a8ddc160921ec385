#include "sparselab/sparsify.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "sparselab/analysis.hpp"
#include "sparselab/validate.hpp"

namespace sparselab {

std::string_view mode_name(SolutionMode mode) { return mode == SolutionMode::IndependentSet ? "is" : "vc"; }

SolutionMode parse_mode(std::string_view text) {
    if (text == "is" || text == "IS") return SolutionMode::IndependentSet;
    if (text == "vc" || text == "VC") return SolutionMode::VertexCover;
    throw std::invalid_argument("mode must be 'is' or 'vc', got '" + std::string(text) + "'");
}

ThresholdPolicy ThresholdPolicy::power(double eta) {
    if (!(eta > 0 && eta < 1)) throw std::invalid_argument("power policy needs 0 < eta < 1");
    return {Kind::Power, eta};
}

ThresholdPolicy ThresholdPolicy::constant(int bound) {
    if (bound < 1) throw std::invalid_argument("constant policy needs a bound >= 1");
    return {Kind::Constant, static_cast<double>(bound)};
}

ThresholdPolicy ThresholdPolicy::of_lambda(double lambda) {
    g_of_lambda(lambda);  // validates the range
    return {Kind::OfLambda, lambda};
}

ThresholdPolicy ThresholdPolicy::parse(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos) throw std::invalid_argument("policy must look like kind:value");
    auto kind = text.substr(0, colon);
    std::string value(text.substr(colon + 1));
    std::size_t used = 0;
    double number = 0;
    try {
        number = std::stod(value, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != value.size()) throw std::invalid_argument("bad policy value '" + value + "'");
    if (kind == "power") return power(number);
    if (kind == "const" || kind == "constant") {
        if (number != std::floor(number)) throw std::invalid_argument("constant policy needs an integer");
        return constant(static_cast<int>(number));
    }
    if (kind == "lambda") return of_lambda(number);
    throw std::invalid_argument("unknown policy kind '" + std::string(kind) + "'");
}

namespace {

std::string compact(double x) {
    std::string out;
    for (int digits = 1; digits <= 17; ++digits) {
        std::ostringstream s;
        s << std::setprecision(digits) << x;
        out = s.str();
        if (std::stod(out) == x) break;
    }
    return out;
}

}  // namespace

std::string ThresholdPolicy::to_string() const {
    switch (kind_) {
    case Kind::Power: return "power:" + compact(value_);
    case Kind::Constant: return "const:" + std::to_string(static_cast<int>(value_));
    case Kind::OfLambda: return "lambda:" + compact(value_);
    }
    return {};
}

int ThresholdPolicy::leaf_degree(int root_order) const {
    switch (kind_) {
    case Kind::Power: return static_cast<int>(std::floor(std::pow(static_cast<double>(root_order), value_)));
    case Kind::Constant: return static_cast<int>(value_);
    case Kind::OfLambda: return g_of_lambda(value_) - 1;
    }
    return 0;
}

LeafStream::LeafStream(Graph root, SolutionMode mode, ThresholdPolicy policy)
    : root_(std::move(root)), mode_(mode), threshold_(policy.leaf_degree(root_.order())) {
    if (root_.is_directed()) throw std::invalid_argument("sparsification needs an undirected graph");
    stack_.push_back(Node{std::vector<char>(root_.order(), 1), {}, {}, {}});
}

void LeafStream::drop_isolated(Node& node, Vertex removed) const {
    for (Vertex w : root_.neighbors(removed)) {
        if (!node.alive[w]) continue;
        auto nb = root_.neighbors(w);
        if (std::none_of(nb.begin(), nb.end(), [&](Vertex x) { return node.alive[x] != 0; })) {
            node.alive[w] = 0;
            node.deleted.push_back(w);
        }
    }
}

std::optional<SparsificationLeaf> LeafStream::next() {
    while (!stack_.empty()) {
        Node node = std::move(stack_.back());
        stack_.pop_back();

        Vertex pivot = -1;
        int max_degree = -1;
        for (Vertex v = 0; v < root_.order(); ++v) {
            if (!node.alive[v]) continue;
            int d = 0;
            for (Vertex w : root_.neighbors(v)) d += node.alive[w];
            if (d > max_degree) {
                max_degree = d;
                pivot = v;
            }
        }

        if (max_degree <= threshold_) {
            SparsificationLeaf leaf;
            for (Vertex v = 0; v < root_.order(); ++v)
                if (node.alive[v]) leaf.to_root.push_back(v);
            leaf.residual = induced_subgraph(root_, leaf.to_root);
            std::sort(node.committed.begin(), node.committed.end());
            std::sort(node.deleted.begin(), node.deleted.end());
            leaf.committed = std::move(node.committed);
            leaf.deleted = std::move(node.deleted);
            leaf.depth = static_cast<int>(node.path.size());
            leaf.path = std::move(node.path);
            ++emitted_;
            return leaf;
        }

        std::vector<Vertex> around;
        for (Vertex w : root_.neighbors(pivot))
            if (node.alive[w]) around.push_back(w);

        Node take = node, skip = std::move(node);
        take.path += '1';
        skip.path += '0';
        if (mode_ == SolutionMode::IndependentSet) {
            take.committed.push_back(pivot);
            take.alive[pivot] = 0;
            for (Vertex w : around) {
                take.alive[w] = 0;
                take.deleted.push_back(w);
            }
            skip.alive[pivot] = 0;
            skip.deleted.push_back(pivot);
        } else {
            take.committed.push_back(pivot);
            take.alive[pivot] = 0;
            drop_isolated(take, pivot);
            skip.alive[pivot] = 0;
            skip.deleted.push_back(pivot);
            for (Vertex w : around) {
                skip.alive[w] = 0;
                skip.committed.push_back(w);
            }
            for (Vertex w : around) drop_isolated(skip, w);
        }
        stack_.push_back(std::move(skip));
        stack_.push_back(std::move(take));
    }
    return std::nullopt;
}

LeafStream superlinear_sparsify(const Graph& g, SolutionMode mode, const ThresholdPolicy& policy) {
    return LeafStream(g, mode, policy);
}

double leaf_count_bound(int leaf_degree, int n) {
    if (leaf_degree < 0) throw std::invalid_argument("negative leaf degree");
    long double base = leaf_degree == 0 ? 2.0L : branching_root(leaf_degree + 1);
    return static_cast<double>(std::ceil(std::pow(base, static_cast<long double>(n))));
}

std::optional<std::string> check_leaf(const Graph& root, const SparsificationLeaf& leaf, SolutionMode mode,
                                      int threshold) {
    std::vector<int> seen(root.order(), 0);
    for (Vertex v : leaf.committed) ++seen[v];
    for (Vertex v : leaf.deleted) ++seen[v];
    for (Vertex v : leaf.to_root) ++seen[v];
    for (Vertex v = 0; v < root.order(); ++v)
        if (seen[v] != 1) return "vertex " + std::to_string(v) + " is not in exactly one part";
    if (leaf.residual.max_degree() > threshold)
        return "residual degree " + std::to_string(leaf.residual.max_degree()) + " exceeds " + std::to_string(threshold);
    if (static_cast<int>(leaf.path.size()) != leaf.depth) return "depth does not match the branch path";
    if (mode == SolutionMode::IndependentSet) {
        if (!is_independent(root, leaf.committed)) return "committed vertices are not independent";
        auto in = membership(root, leaf.committed);
        for (Vertex v : leaf.to_root)
            for (Vertex w : root.neighbors(v))
                if (in[w]) return "residual vertex " + std::to_string(v) + " is adjacent to the commitment";
    } else {
        auto inside = membership(root, leaf.to_root);
        auto in = membership(root, leaf.committed);
        for (auto [u, v] : root.edges())
            if (!(inside[u] && inside[v]) && !in[u] && !in[v])
                return "edge (" + std::to_string(u) + "," + std::to_string(v) + ") is left uncovered";
    }
    return std::nullopt;
}

Candidate lift_solution(const Graph& root, const SparsificationLeaf& leaf, const Candidate& leaf_candidate,
                        SolutionMode mode) {
    Problem problem = mode == SolutionMode::IndependentSet ? Problem::IndependentSet : Problem::VertexCover;
    auto verdict = validate(problem, leaf.residual, leaf_candidate);
    if (!verdict.feasible) throw std::invalid_argument("leaf candidate is infeasible: " + verdict.reason);
    Selection lifted = leaf.committed;
    for (Vertex v : leaf_candidate.selection()) lifted.push_back(leaf.to_root[v]);
    auto out = make_selection(problem, std::move(lifted));
    if (!validate(problem, root, out).feasible) throw std::logic_error("lifted solution is infeasible on the root");
    return out;
}

namespace {

// Greedy excavation without the 1 <= k < Delta precondition; stops early once
// nothing is left.
Excavation excavate(const Graph& g, int k) {
    Excavation ex;
    std::vector<Vertex> remaining(g.order());
    for (Vertex v = 0; v < g.order(); ++v) remaining[v] = v;
    for (int i = 0; i < k && !remaining.empty(); ++i) {
        auto sub = induced_subgraph(g, remaining);
        std::vector<Vertex> layer;
        std::vector<char> taken(remaining.size(), 0);
        for (Vertex v : maximal_is_greedy(sub)) {
            layer.push_back(remaining[v]);
            taken[v] = 1;
        }
        std::vector<Vertex> rest;
        for (std::size_t j = 0; j < remaining.size(); ++j)
            if (!taken[j]) rest.push_back(remaining[j]);
        remaining = std::move(rest);
        ex.layers.push_back(std::move(layer));
    }
    ex.residual = induced_subgraph(g, remaining);
    ex.to_root = std::move(remaining);
    return ex;
}

std::vector<Vertex> union_of(const std::vector<std::vector<Vertex>>& layers) {
    std::vector<Vertex> out;
    for (const auto& l : layers) out.insert(out.end(), l.begin(), l.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Vertex> residual_answer(const Excavation& ex, const Subsolver& subsolver, Problem problem,
                                    const ProblemParams& params) {
    auto local = subsolver(ex.residual);
    auto candidate = make_selection(problem, local);
    Verdict verdict;
    if (problem == Problem::ColorableSubgraph) {
        // Exact coloring with a guard wider than the validator's default.
        if (local.size() > 40) throw std::length_error("residual answer too large to verify");
        try {
            auto sub = induced_subgraph(ex.residual, local);
            verdict.feasible = exact_coloring(sub, *params.colors, {std::max(4, *params.colors), 40}).has_value();
        } catch (const std::out_of_range&) {
            verdict.feasible = false;
        } catch (const std::invalid_argument&) {
            verdict.feasible = false;
        }
    } else {
        verdict = validate(problem, ex.residual, candidate, params);
    }
    if (!verdict.feasible) throw std::invalid_argument("subsolver returned infeasible set");
    std::vector<Vertex> mapped;
    for (Vertex v : candidate.selection()) mapped.push_back(ex.to_root[v]);
    std::sort(mapped.begin(), mapped.end());
    return mapped;
}

Candidate better_of(Problem problem, std::vector<Vertex> excavated, std::vector<Vertex> residual) {
    return residual.size() > excavated.size() ? make_selection(problem, std::move(residual))
                                              : make_selection(problem, std::move(excavated));
}

}  // namespace

Excavation kstep_sparsify(const Graph& g, int k) {
    if (k < 1 || k >= g.max_degree())
        throw std::invalid_argument("k must satisfy 1 <= k < Delta = " + std::to_string(g.max_degree()));
    return excavate(g, k);
}

Subsolver exact_subsolver(Problem problem, ProblemParams params, OracleBudget budget) {
    return [=](const Graph& g) { return solve_exact(problem, g, budget, params).selection(); };
}

Subsolver degraded_subsolver(Problem problem, double ratio, ProblemParams params, OracleBudget budget) {
    if (!(ratio >= 1)) throw std::invalid_argument("ratio must be at least 1");
    return [=](const Graph& g) {
        auto best = solve_exact(problem, g, budget, params).selection();
        auto keep = static_cast<std::size_t>(std::ceil(static_cast<double>(best.size()) / ratio));
        best.resize(std::min(keep, best.size()));
        return best;
    };
}

Candidate approx_is_kstep(const Graph& g, const Subsolver& subsolver) {
    auto ex = excavate(g, 2);
    auto both = union_of(ex.layers);
    auto bipartite = max_is_bipartite(induced_subgraph(g, both));
    std::vector<Vertex> from_bipartite;
    for (Vertex v : bipartite.selection()) from_bipartite.push_back(both[v]);
    auto rest = residual_answer(ex, subsolver, Problem::IndependentSet, {});
    return better_of(Problem::IndependentSet, std::move(from_bipartite), std::move(rest));
}

Candidate approx_lcol_kstep(const Graph& g, int colors, const Subsolver& subsolver) {
    if (colors < 2) throw std::invalid_argument("l-colorable subgraph needs l >= 2");
    auto ex = excavate(g, colors);
    auto rest = residual_answer(ex, subsolver, Problem::ColorableSubgraph, ProblemParams{colors});
    return better_of(Problem::ColorableSubgraph, union_of(ex.layers), std::move(rest));
}

Candidate approx_planar_kstep(const Graph& g, const Subsolver& subsolver) {
    auto ex = excavate(g, 1);
    auto rest = residual_answer(ex, subsolver, Problem::PlanarSubgraph, {});
    return better_of(Problem::PlanarSubgraph, union_of(ex.layers), std::move(rest));
}

ParamExcavationResult param_is_excavation(const Graph& g) {
    ParamExcavationResult out;
    if (g.max_degree() < 3) {
        out.solution = max_is_degree2(g);
        out.enumerated_subsets = 1;
        return out;
    }
    auto ex = excavate(g, g.max_degree() - 2);
    auto pool = union_of(ex.layers);
    out.union_size = pool.size();

    std::vector<char> in_residual(g.order(), 0);
    for (Vertex v : ex.to_root) in_residual[v] = 1;
    std::vector<int> blocked(g.order(), 0);  // chosen neighbors per vertex
    std::vector<Vertex> chosen;
    std::vector<Vertex> best;
    bool have_best = false;

    auto complete = [&] {
        ++out.enumerated_subsets;
        std::vector<Vertex> rest;
        for (Vertex v : ex.to_root)
            if (!blocked[v]) rest.push_back(v);
        auto part = max_is_degree2(induced_subgraph(g, rest));
        if (!have_best || chosen.size() + part.selection().size() > best.size()) {
            best = chosen;
            for (Vertex v : part.selection()) best.push_back(rest[v]);
            have_best = true;
        }
    };
    auto walk = [&](auto&& self, std::size_t at) -> void {
        if (at == pool.size()) {
            complete();
            return;
        }
        Vertex u = pool[at];
        if (!blocked[u]) {
            chosen.push_back(u);
            for (Vertex w : g.neighbors(u)) ++blocked[w];
            self(self, at + 1);
            for (Vertex w : g.neighbors(u)) --blocked[w];
            chosen.pop_back();
        }
        self(self, at + 1);
    };
    walk(walk, 0);
    out.solution = make_selection(Problem::IndependentSet, std::move(best));
    return out;
}

}  // namespace sparselab
