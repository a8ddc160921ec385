#include "sparselab/checks.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "sparselab/analysis.hpp"
#include "sparselab/generators.hpp"
#include "sparselab/io.hpp"
#include "sparselab/reductions.hpp"
#include "sparselab/validate.hpp"

namespace sparselab::checks {

void CheckLog::expect(bool ok, std::string_view what) {
    ++checks;
    if (!ok) failures.emplace_back(what);
}

namespace {

constexpr double kEps = 1e-9;

std::string str(long v) { return std::to_string(v); }

template <class F>
void expect_that(CheckLog& log, bool ok, F&& describe) {
    ++log.checks;
    if (!ok) log.failures.push_back(describe());
}

bool feasible(Problem p, const Instance& inst, const Candidate& c, const ProblemParams& params = {}) {
    return validate(p, inst, c, params).feasible;
}

std::vector<Vertex> random_maximal_is(const Graph& g, Rng& rng) {
    std::vector<Vertex> order(g.order());
    for (Vertex v = 0; v < g.order(); ++v) order[v] = v;
    rng.shuffle(order);
    std::vector<char> blocked(g.order(), 0);
    std::vector<Vertex> out;
    for (Vertex v : order) {
        if (blocked[v]) continue;
        out.push_back(v);
        blocked[v] = 1;
        for (Vertex w : g.neighbors(v)) blocked[w] = 1;
    }
    std::sort(out.begin(), out.end());
    return out;
}

int universe_size(Problem p, const Instance& inst) {
    switch (payload_kind(p)) {
    case PayloadKind::Vertices: return std::get<Graph>(inst).order();
    case PayloadKind::SetIndices: return static_cast<int>(std::get<SetSystem>(inst).count());
    case PayloadKind::Elements: return std::get<SetSystem>(inst).ground();
    case PayloadKind::Arcs: return static_cast<int>(std::get<Graph>(inst).size());
    case PayloadKind::Assignment: return std::get<CnfInstance>(inst).num_vars();
    }
    return 0;
}

/// Candidate whose payload is the given universe indices (arcs by position in
/// edges(), assignment variables set to true).
Candidate from_indices(Problem p, const Instance& inst, std::vector<int> idx) {
    std::sort(idx.begin(), idx.end());
    switch (payload_kind(p)) {
    case PayloadKind::Arcs: {
        auto arcs = std::get<Graph>(inst).edges();
        ArcList chosen;
        for (int i : idx) chosen.push_back(arcs[i]);
        return make_arcs(p, std::move(chosen));
    }
    case PayloadKind::Assignment: {
        const auto& f = std::get<CnfInstance>(inst);
        Assignment a(f.num_vars(), false);
        for (int i : idx) a[i] = true;
        Candidate c{p, a, f.satisfied_count(a)};
        return c;
    }
    default: return make_selection(p, std::move(idx));
    }
}

std::vector<int> indices_of(const Instance& inst, const Candidate& c) {
    if (std::holds_alternative<Selection>(c.payload)) return c.selection();
    std::vector<int> out;
    if (std::holds_alternative<ArcList>(c.payload)) {
        auto arcs = std::get<Graph>(inst).edges();
        for (const auto& a : c.arcs()) out.push_back(static_cast<int>(std::lower_bound(arcs.begin(), arcs.end(), a) - arcs.begin()));
        return out;
    }
    const auto& a = c.assignment();
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i]) out.push_back(static_cast<int>(i));
    return out;
}

bool monotone_minimization(Problem p) {
    switch (p) {
    case Problem::VertexCover:
    case Problem::DominatingSet:
    case Problem::FeedbackVertexSet:
    case Problem::SetCover:
    case Problem::HittingSet:
    case Problem::FeedbackArcSet: return true;
    default: return false;
    }
}

bool hereditary(Problem p) {
    return p == Problem::IndependentSet || p == Problem::SetPacking || p == Problem::ColorableSubgraph ||
           p == Problem::PlanarSubgraph;
}

/// A random feasible candidate: minimal-ish for covering problems, maximal
/// for hereditary ones, a maximal independent set (or its complement) for
/// IDS / MMVC, a uniform assignment for MAX-SAT.
std::optional<Candidate> random_feasible(Problem p, const Instance& inst, const ProblemParams& params, Rng& rng) {
    int universe = universe_size(p, inst);
    std::vector<int> order(universe);
    for (int i = 0; i < universe; ++i) order[i] = i;
    rng.shuffle(order);
    if (p == Problem::Max2Sat || p == Problem::Max3Sat) {
        std::vector<int> on;
        for (int i = 0; i < universe; ++i)
            if (rng.bernoulli(0.5)) on.push_back(i);
        return from_indices(p, inst, on);
    }
    if (p == Problem::IndependentDominatingSet || p == Problem::MaxMinimalVertexCover) {
        const auto& g = std::get<Graph>(inst);
        auto is = random_maximal_is(g, rng);
        return make_selection(p, p == Problem::IndependentDominatingSet ? is : complement(g.order(), is));
    }
    if (monotone_minimization(p)) {
        std::vector<int> all(universe);
        for (int i = 0; i < universe; ++i) all[i] = i;
        if (!feasible(p, inst, from_indices(p, inst, all), params)) return std::nullopt;
        std::vector<char> in(universe, 1);
        std::size_t stop = rng.below(order.size() + 1);
        for (std::size_t k = 0; k < stop; ++k) {
            in[order[k]] = 0;
            std::vector<int> now;
            for (int i = 0; i < universe; ++i)
                if (in[i]) now.push_back(i);
            if (!feasible(p, inst, from_indices(p, inst, now), params)) in[order[k]] = 1;
        }
        std::vector<int> now;
        for (int i = 0; i < universe; ++i)
            if (in[i]) now.push_back(i);
        return from_indices(p, inst, now);
    }
    std::vector<int> chosen;
    for (int i : order) {
        chosen.push_back(i);
        if (!feasible(p, inst, from_indices(p, inst, chosen), params)) chosen.pop_back();
    }
    return from_indices(p, inst, chosen);
}

/// Ratio >= 1 of a value against the optimum (1 when both are 0).
double ratio_of(Problem p, long value, long opt) {
    if (value == opt) return 1.0;
    if (is_maximization(p)) return value == 0 ? INFINITY : static_cast<double>(opt) / static_cast<double>(value);
    return opt == 0 ? INFINITY : static_cast<double>(value) / static_cast<double>(opt);
}

struct Case {
    Reduction reduction;
    Instance source;
    int pendants = 0;  // for the pendant gadgets
};

std::vector<Case> reduction_cases(const Graph& g) {
    using P = Problem;
    std::vector<Case> cases;
    Graph gs = without_isolated(g);
    if (gs.order() > 0) {
        cases.push_back({make_reduction(P::VertexCover, P::DominatingSet), gs});
        cases.push_back({make_reduction(P::VertexCover, P::IndependentDominatingSet), gs});
        cases.push_back({parse_chain("vc:ds,ds:setcover"), gs});
    }
    cases.push_back({make_reduction(P::VertexCover, P::FeedbackVertexSet), g});
    cases.push_back({make_reduction(P::VertexCover, P::FeedbackArcSet), g});
    cases.push_back({make_reduction(P::DominatingSet, P::SetCover), g});
    auto closed = ds_to_setcover(g);
    cases.push_back({make_reduction(P::SetCover, P::HittingSet), closed});
    cases.push_back({make_reduction(P::HittingSet, P::SetCover), closed.dual()});
    cases.push_back({make_reduction(P::IndependentSet, P::Max2Sat), g});
    cases.push_back({make_reduction(P::IndependentSet, P::SetPacking), g});
    for (int t : {2, 3}) {
        ReductionParams params;
        params.pendants = t;
        cases.push_back({make_reduction(P::IndependentSet, P::MaxMinimalVertexCover, params), g, t});
        cases.push_back({make_reduction(P::IndependentSet, P::IndependentDominatingSet, params), g, t});
    }
    for (int colors : {2, 3}) {
        ReductionParams params;
        params.colors = colors;
        cases.push_back({make_reduction(P::IndependentSet, P::ColorableSubgraph, params), g});
    }
    cases.push_back({make_reduction(P::IndependentSet, P::PlanarSubgraph), g});
    return cases;
}

int order_of(const Instance& inst) { return std::get<Graph>(inst).order(); }

}  // namespace

Graph without_isolated(const Graph& g) {
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) > 0) keep.push_back(v);
    return induced_subgraph(g, keep);
}

// ---------------------------------------------------------------------------
// instance-core

void validator_soundness(const Graph& g, const OracleBudget& budget, CheckLog& log) {
    using P = Problem;
    int n = g.order();
    auto add_first_outside = [&](const Candidate& c) -> std::optional<Candidate> {
        auto members = membership(g, c.selection());
        for (Vertex v = 0; v < n; ++v)
            if (!members[v]) {
                auto sel = c.selection();
                sel.push_back(v);
                return make_selection(c.problem, sel);
            }
        return std::nullopt;
    };
    auto drop_first = [&](const Candidate& c) -> std::optional<Candidate> {
        if (c.selection().empty()) return std::nullopt;
        auto sel = c.selection();
        sel.erase(sel.begin());
        return make_selection(c.problem, sel);
    };
    struct Spec {
        P problem;
        bool grow;  // violating change adds a vertex (otherwise drops one)
    };
    for (Spec spec : {Spec{P::IndependentSet, true}, Spec{P::VertexCover, false}, Spec{P::DominatingSet, false},
                      Spec{P::IndependentDominatingSet, true}, Spec{P::FeedbackVertexSet, false},
                      Spec{P::MaxMinimalVertexCover, true}}) {
        auto best = solve_exact(spec.problem, g, budget);
        auto verdict = validate(spec.problem, g, best);
        auto name = std::string(tag_name(spec.problem));
        log.expect(verdict.feasible && verdict.value == best.value, name + ": oracle optimum accepted");
        auto wrong = best;
        ++wrong.value;
        log.expect(!feasible(spec.problem, g, wrong), name + ": misstated value rejected");
        auto broken = spec.grow ? add_first_outside(best) : drop_first(best);
        // An IS or VC with nothing to add or remove has no violating change.
        if (!broken) continue;
        if (spec.problem == P::VertexCover && g.size() == 0) continue;
        if (spec.problem == P::FeedbackVertexSet && best.selection().empty()) continue;
        expect_that(log, !feasible(spec.problem, g, *broken), [&] {
            return name + ": violating change accepted on " + to_json(g).dump();
        });
    }

    auto dimacs = parse_instance(format_instance(g, Format::DimacsEdge));
    log.expect(std::get<Graph>(dimacs).edges() == g.edges() && std::get<Graph>(dimacs).order() == n,
               "DIMACS round trip preserves the graph");
    log.expect(std::get<Graph>(parse_instance(format_instance(g, Format::Json))) == g, "JSON round trip");
    auto closed = ds_to_setcover(g);
    log.expect(std::get<SetSystem>(parse_instance(format_instance(closed, Format::SetSystemText))) == closed,
               "set-system text round trip");
    auto cnf = is_to_max2sat(g, 1);
    log.expect(std::get<CnfInstance>(parse_instance(format_instance(cnf, Format::DimacsWcnf))) == cnf,
               "wcnf round trip");

    Graph gs = without_isolated(g);
    if (gs.order() > 0)
        log.expect(ds_to_setcover(gs).frequency() == gs.max_degree() + 1, "closed-neighborhood frequency is Delta + 1");
}

void complement_duality(const Graph& g, CheckLog& log) {
    int n = g.order();
    if (n > 12) throw std::invalid_argument("complement duality check is exhaustive; n <= 12");
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<Vertex> c, rest;
        for (Vertex v = 0; v < n; ++v) (mask >> v & 1 ? c : rest).push_back(v);
        bool minimal = is_minimal_vertex_cover(g, c);
        bool ids = is_independent_dominating(g, rest);
        bool via_validate = feasible(Problem::MaxMinimalVertexCover, g, make_selection(Problem::MaxMinimalVertexCover, c)) ==
                            feasible(Problem::IndependentDominatingSet, g, make_selection(Problem::IndependentDominatingSet, rest));
        expect_that(log, minimal == ids && via_validate, [&] {
            return "minimal cover / IDS complement mismatch at mask " + std::to_string(mask) + " on " + to_json(g).dump();
        });
    }
}

// ---------------------------------------------------------------------------
// oracles

void oracle_agreement(const Graph& g, Rng& rng, const OracleBudget& budget, CheckLog& log) {
    using P = Problem;
    int n = g.order();
    long alpha = solve_exact(P::IndependentSet, g, budget).value;
    long tau = solve_exact(P::VertexCover, g, budget).value;
    log.expect(alpha + tau == n, "alpha + tau = n");
    long ids = solve_exact(P::IndependentDominatingSet, g, budget).value;
    long mmvc = solve_exact(P::MaxMinimalVertexCover, g, budget).value;
    log.expect(mmvc == n - ids, "MMVC = n - IDS");
    if (n <= 14) {
        for (P p : {P::IndependentSet, P::VertexCover, P::DominatingSet, P::IndependentDominatingSet,
                    P::FeedbackVertexSet, P::MaxMinimalVertexCover}) {
            long exact = solve_exact(p, g, budget).value;
            long brute = solve_by_enumeration(p, g, {}, 16).value;
            expect_that(log, exact == brute, [&] {
                return std::string(tag_name(p)) + ": branch and bound " + str(exact) + " vs enumeration " +
                       str(brute) + " on " + to_json(g).dump();
            });
        }
        auto cnf = is_to_max2sat(g);
        log.expect(solve_exact(P::Max2Sat, cnf, budget).value == solve_by_enumeration(P::Max2Sat, cnf, {}, 16).value,
                   "MAX-2-SAT: exact vs enumeration");
    }
    auto bip = graphs::random_bipartite(rng.between(1, 8), rng.between(1, 8), 0.4, rng);
    auto konig = max_is_bipartite(bip);
    log.expect(feasible(P::IndependentSet, bip, konig), "matching-based bipartite IS is independent");
    expect_that(log, konig.value == solve_exact(P::IndependentSet, bip, budget).value, [&] {
        return "bipartite IS differs from branch and bound on " + to_json(bip).dump();
    });
}

// ---------------------------------------------------------------------------
// sparsify

void sparsifier_preservation(const Graph& g, SolutionMode mode, const ThresholdPolicy& policy,
                             const OracleBudget& budget, CheckLog& log) {
    Problem p = mode == SolutionMode::IndependentSet ? Problem::IndependentSet : Problem::VertexCover;
    long root_opt = solve_exact(p, g, budget).value;
    auto stream = superlinear_sparsify(g, mode, policy);
    int t = stream.threshold();
    bool lambda = policy.kind() == ThresholdPolicy::Kind::OfLambda;
    std::optional<long> best;
    std::uint64_t leaves = 0;
    auto tag = std::string(mode_name(mode)) + " " + policy.to_string();
    while (auto leaf = stream.next()) {
        ++leaves;
        auto violation = check_leaf(g, *leaf, mode, t);
        expect_that(log, !violation, [&] { return tag + ": leaf " + leaf->path + ": " + *violation; });
        if (lambda) {
            long bound = leaf_edge_bound(leaf->residual.order(), policy.value());
            expect_that(log, static_cast<long>(leaf->residual.size()) <= bound, [&] {
                return tag + ": leaf " + leaf->path + " has " + str(static_cast<long>(leaf->residual.size())) +
                       " edges, bound " + str(bound);
            });
        }
        auto lifted = lift_solution(g, *leaf, solve_exact(p, leaf->residual, budget), mode);
        log.expect(feasible(p, g, lifted), tag + ": lifted leaf optimum is feasible");
        if (!best || (is_maximization(p) ? lifted.value > *best : lifted.value < *best)) best = lifted.value;
    }
    // Branching on degree >= g(lambda) removes g(lambda) + 1 vertices: vector (1, g + 1).
    double bound = leaf_count_bound(lambda ? t + 1 : t, g.order());
    expect_that(log, static_cast<double>(leaves) <= bound, [&] {
        return tag + ": " + std::to_string(leaves) + " leaves exceed bound " + std::to_string(bound);
    });
    expect_that(log, best && *best == root_opt, [&] {
        return tag + ": best lifted value " + (best ? str(*best) : "none") + " vs optimum " + str(root_opt) + " on " +
               to_json(g).dump();
    });
}

void sparsifier_ratio(const Graph& g, const ThresholdPolicy& policy, double ratio, const OracleBudget& budget,
                      CheckLog& log) {
    auto optimum = solve_exact(Problem::IndependentSet, g, budget);
    auto in_opt = membership(g, optimum.selection());
    auto stream = superlinear_sparsify(g, SolutionMode::IndependentSet, policy);
    int consistent = 0;
    auto degraded = degraded_subsolver(Problem::IndependentSet, ratio, {}, budget);
    while (auto leaf = stream.next()) {
        bool ok = std::all_of(leaf->committed.begin(), leaf->committed.end(), [&](Vertex v) { return in_opt[v]; }) &&
                  std::none_of(leaf->deleted.begin(), leaf->deleted.end(), [&](Vertex v) { return in_opt[v]; });
        if (!ok) continue;
        ++consistent;
        auto local = make_selection(Problem::IndependentSet, degraded(leaf->residual));
        auto lifted = lift_solution(g, *leaf, local, SolutionMode::IndependentSet);
        expect_that(log, lifted.value * ratio >= optimum.value - kEps, [&] {
            return "ratio " + std::to_string(ratio) + " leaf lift gives " + str(lifted.value) + " < alpha/r, alpha " +
                   str(optimum.value);
        });
    }
    log.expect(consistent == 1, "exactly one leaf is consistent with a fixed optimum");
}

void kstep_chain(const Graph& g, const OracleBudget& budget, CheckLog& log) {
    int delta = g.max_degree();
    int n = g.order();
    for (int k = 1; k < delta; ++k) {
        auto ex = kstep_sparsify(g, k);
        std::vector<char> removed(n, 0);
        // Excavation stops early once every vertex has been excavated.
        bool layers_ok = static_cast<int>(ex.layers.size()) == k || ex.residual.order() == 0;
        std::size_t total = 0;
        for (const auto& layer : ex.layers) {
            std::vector<Vertex> remaining;
            for (Vertex v = 0; v < n; ++v)
                if (!removed[v]) remaining.push_back(v);
            auto sub = induced_subgraph(g, remaining);
            std::vector<Vertex> local;
            for (Vertex v : layer) {
                auto it = std::lower_bound(remaining.begin(), remaining.end(), v);
                layers_ok = layers_ok && it != remaining.end() && *it == v;
                if (it != remaining.end()) local.push_back(static_cast<Vertex>(it - remaining.begin()));
            }
            layers_ok = layers_ok && is_independent_dominating(sub, local);
            for (Vertex v : layer) removed[v] = 1;
            total += layer.size();
        }
        log.expect(layers_ok, "each excavated layer is a maximal independent set of the remaining graph");
        log.expect(total + static_cast<std::size_t>(ex.residual.order()) == static_cast<std::size_t>(n),
                   "layers and residual partition V");
        expect_that(log, ex.residual.max_degree() <= delta - k, [&] {
            return "k = " + std::to_string(k) + ": residual degree " + std::to_string(ex.residual.max_degree()) +
                   " > Delta - k on " + to_json(g).dump();
        });
    }

    long alpha = solve_exact(Problem::IndependentSet, g, budget).value;
    auto exact = approx_is_kstep(g, exact_subsolver(Problem::IndependentSet, {}, budget));
    log.expect(feasible(Problem::IndependentSet, g, exact), "approx_is_kstep output is independent");
    expect_that(log, exact.value >= (alpha + 1) / 2, [&] {
        return "approx_is_kstep " + str(exact.value) + " < ceil(alpha/2), alpha " + str(alpha) + " on " +
               to_json(g).dump();
    });
    auto half = approx_is_kstep(g, degraded_subsolver(Problem::IndependentSet, 2.0, {}, budget));
    expect_that(log, 3 * half.value >= alpha, [&] {
        return "approx_is_kstep with a 2-approximate subsolver " + str(half.value) + " < alpha/3";
    });

    ProblemParams two{2};
    long lcol = solve_exact(Problem::ColorableSubgraph, g, budget, two).value;
    auto lc = approx_lcol_kstep(g, 2, exact_subsolver(Problem::ColorableSubgraph, two, budget));
    log.expect(feasible(Problem::ColorableSubgraph, g, lc, two), "approx_lcol_kstep output is 2-colorable");
    log.expect(2 * lc.value >= lcol, "approx_lcol_kstep within factor 2");
    long planar = solve_exact(Problem::PlanarSubgraph, g, budget).value;
    auto pl = approx_planar_kstep(g, exact_subsolver(Problem::PlanarSubgraph, {}, budget));
    log.expect(feasible(Problem::PlanarSubgraph, g, pl), "approx_planar_kstep output is planar");
    log.expect(2 * pl.value >= planar, "approx_planar_kstep within factor 2");
}

void param_excavation(const Graph& g, const OracleBudget& budget, CheckLog& log) {
    long alpha = solve_exact(Problem::IndependentSet, g, budget).value;
    auto result = param_is_excavation(g);
    log.expect(feasible(Problem::IndependentSet, g, result.solution), "param_is_excavation output is independent");
    expect_that(log, result.solution.value == alpha, [&] {
        return "param_is_excavation " + str(result.solution.value) + " vs alpha " + str(alpha) + " on " +
               to_json(g).dump();
    });
    int delta = g.max_degree();
    if (delta >= 3) {
        double cap = std::ldexp(1.0, static_cast<int>((delta - 2) * alpha));
        expect_that(log, static_cast<double>(result.enumerated_subsets) <= cap, [&] {
            return "enumerated " + std::to_string(result.enumerated_subsets) + " subsets > 2^((Delta-2) alpha)";
        });
        log.expect(result.union_size <= static_cast<std::size_t>((delta - 2) * alpha), "|U| <= (Delta - 2) alpha");
    }
}

// ---------------------------------------------------------------------------
// reductions

void reduction_optima(const Graph& g, const OracleBudget& budget, CheckLog& log) {
    using P = Problem;
    int n = g.order();
    long m = static_cast<long>(g.size());
    long alpha = solve_exact(P::IndependentSet, g, budget).value;
    long tau = n - alpha;
    for (const auto& c : reduction_cases(g)) {
        const auto& red = c.reduction;
        auto res = red.forward(c.source);
        long target = solve_exact(red.target, res.target, budget, res.target_params).value;
        std::optional<long> expected;
        long lo = 0, hi = 0;
        switch (red.source) {
        case P::VertexCover: expected = tau; break;
        case P::DominatingSet:
        case P::SetCover:
        case P::HittingSet: expected = solve_exact(red.source, c.source, budget).value; break;
        case P::IndependentSet:
            switch (red.target) {
            case P::Max2Sat: expected = m + alpha; break;
            case P::SetPacking: expected = alpha; break;
            case P::MaxMinimalVertexCover: expected = mmvc_pendant_value(n, alpha, c.pendants); break;
            case P::IndependentDominatingSet: expected = ids_pendant_value(n, alpha, c.pendants - 1); break;
            case P::ColorableSubgraph: lo = alpha; hi = alpha * *res.target_params.colors; break;
            case P::PlanarSubgraph: lo = alpha; hi = 6 * alpha; break;
            default: break;
            }
            break;
        default: break;
        }
        if (expected) {
            expect_that(log, target == *expected, [&] {
                return red.name + ": target optimum " + str(target) + " expected " + str(*expected) + " on " +
                       to_json(c.source).dump();
            });
        } else {
            expect_that(log, lo <= target && target <= hi, [&] {
                return red.name + ": target optimum " + str(target) + " outside [" + str(lo) + ", " + str(hi) + "]";
            });
        }
        // The backward map of a target optimum is a source optimum for exact reductions.
        auto best = solve_exact(red.target, res.target, budget, res.target_params);
        auto back = red.backward(c.source, res, best);
        log.expect(feasible(red.source, c.source, back), red.name + ": backward of the target optimum is feasible");
    }
    log.expect(compose(identity_reduction(P::VertexCover), identity_reduction(P::VertexCover))
                       .forward(Instance{g})
                       .target == Instance{g},
               "identity then identity is the identity");
}

void reduction_sizes(const Graph& g, CheckLog& log) {
    int n = g.order();
    auto m = static_cast<int>(g.size());
    log.expect(vc_to_fvs(g).graph.order() == n + 2 * m, "vc_to_fvs has n + 2m vertices");
    log.expect(vc_to_fas(g).graph.order() == 2 * n && static_cast<int>(vc_to_fas(g).graph.size()) == n + 2 * m,
               "vc_to_fas has 2n vertices and n + 2m arcs");
    log.expect(static_cast<int>(is_to_max2sat(g).clauses().size()) == n + m, "is_to_max2sat has n + m clauses");
    Graph gs = without_isolated(g);
    if (gs.order() > 0) {
        int ms = static_cast<int>(gs.size());
        log.expect(vc_to_ds(gs).graph.order() == gs.order() + 2 * ms, "vc_to_ds has n + 2m vertices");
        log.expect(ds_to_setcover(gs).frequency() == gs.max_degree() + 1, "ds_to_setcover frequency is Delta + 1");
    }
}

void reduction_ratio_transfer(const Graph& g, double ratio, Rng& rng, const OracleBudget& budget, CheckLog& log) {
    using P = Problem;
    long m = static_cast<long>(g.size());
    for (const auto& c : reduction_cases(g)) {
        const auto& red = c.reduction;
        auto res = red.forward(c.source);
        const auto& params = res.target_params;
        auto best = solve_exact(red.target, res.target, budget, params);
        long opt_t = best.value;
        long opt_s = solve_exact(red.source, c.source, budget).value;
        int universe = universe_size(red.target, res.target);

        std::vector<Candidate> candidates{best};
        auto sel = indices_of(res.target, best);
        if (monotone_minimization(red.target)) {
            auto limit = static_cast<std::size_t>(std::floor(ratio * static_cast<double>(opt_t) + kEps));
            auto members = std::vector<char>(universe, 0);
            for (int i : sel) members[i] = 1;
            std::vector<int> high = sel, random = sel, outside;
            for (int i = universe - 1; i >= 0; --i)
                if (!members[i]) outside.push_back(i);
            for (int i : outside)
                if (high.size() < limit) high.push_back(i);
            rng.shuffle(outside);
            for (int i : outside)
                if (random.size() < limit) random.push_back(i);
            candidates.push_back(from_indices(red.target, res.target, high));
            candidates.push_back(from_indices(red.target, res.target, random));
        } else if (hereditary(red.target)) {
            auto keep = static_cast<std::size_t>(std::ceil(static_cast<double>(opt_t) / ratio - kEps));
            std::vector<int> low(sel.begin(), sel.begin() + static_cast<long>(std::min(keep, sel.size())));
            auto shuffled = sel;
            rng.shuffle(shuffled);
            shuffled.resize(std::min(keep, shuffled.size()));
            candidates.push_back(from_indices(red.target, res.target, low));
            candidates.push_back(from_indices(red.target, res.target, shuffled));
        }
        for (int k = 0; k < 6; ++k)
            if (auto extra = random_feasible(red.target, res.target, params, rng)) candidates.push_back(*extra);

        for (const auto& cand : candidates) {
            if (!feasible(red.target, res.target, cand, params)) {
                log.expect(false, red.name + ": generated target candidate is infeasible");
                continue;
            }
            double r_target = ratio_of(red.target, cand.value, opt_t);
            bool in_scope = red.target == P::Max2Sat || r_target <= ratio + kEps;
            if (!in_scope) continue;
            auto back = red.backward(c.source, res, cand);
            bool ok = feasible(red.source, c.source, back);
            expect_that(log, ok, [&] { return red.name + ": backward candidate infeasible"; });
            if (!ok) continue;
            if (red.transfer.apply) {
                double r_source = ratio_of(red.source, back.value, opt_s);
                double allowed = red.transfer.apply(r_target);
                expect_that(log, r_source <= allowed + kEps, [&] {
                    return red.name + ": target ratio " + std::to_string(r_target) + " maps to source ratio " +
                           std::to_string(r_source) + " > " + std::to_string(allowed) + " on " +
                           to_json(c.source).dump();
                });
            } else if (red.target == P::Max2Sat) {
                log.expect(back.value >= cand.value - m, red.name + ": |S| >= satisfied - m");
            } else {
                // Pendant gadgets: |target| = n + (t-1)|S| (MMVC) or t n - (t-1)|S| (IDS).
                long n = order_of(c.source);
                long t = c.pendants;
                long expected = red.target == P::MaxMinimalVertexCover ? n + (t - 1) * back.value
                                                                       : t * n - (t - 1) * back.value;
                expect_that(log, cand.value == expected, [&] {
                    return red.name + ": pendant size relation broken, |C| = " + str(cand.value) + ", |S| = " +
                           str(back.value);
                });
            }
        }
    }
}

void reduction_feasibility(const Graph& g, Rng& rng, int samples, const OracleBudget&, CheckLog& log) {
    for (const auto& c : reduction_cases(g)) {
        const auto& red = c.reduction;
        auto res = red.forward(c.source);
        const auto& params = res.target_params;
        int universe = universe_size(red.target, res.target);
        auto check = [&](const Candidate& cand) {
            auto back = red.backward(c.source, res, cand);
            expect_that(log, feasible(red.source, c.source, back), [&] {
                return red.name + ": backward of a feasible target candidate is infeasible on " +
                       to_json(c.source).dump();
            });
        };
        if (universe <= 16) {
            for (std::uint32_t mask = 0; mask < (1u << universe); ++mask) {
                std::vector<int> idx;
                for (int i = 0; i < universe; ++i)
                    if (mask >> i & 1) idx.push_back(i);
                auto cand = from_indices(red.target, res.target, idx);
                if (feasible(red.target, res.target, cand, params)) check(cand);
            }
        } else {
            for (int k = 0; k < samples; ++k)
                if (auto cand = random_feasible(red.target, res.target, params, rng)) check(*cand);
        }
    }
}

void mmvc_ratio_inequality(const Graph& g, int r, Rng& rng, int samples, const OracleBudget& budget, CheckLog& log) {
    int n = g.order();
    long alpha = solve_exact(Problem::IndependentSet, g, budget).value;
    if (alpha == 0) return;
    auto gadget = is_to_mmvc(g, r + 1);
    long opt = mmvc_pendant_value(n, alpha, r + 1);
    auto check = [&](const Candidate& cover) {
        auto s = is_from_mmvc(g, gadget.map, cover);
        double rho = static_cast<double>(cover.value) / static_cast<double>(opt);
        double lhs = static_cast<double>(s.value) / static_cast<double>(alpha);
        double rhs = rho - (1 - rho) * n / (static_cast<double>(r) * static_cast<double>(alpha));
        expect_that(log, lhs >= rhs - kEps, [&] {
            return "|S|/alpha = " + std::to_string(lhs) + " < " + std::to_string(rhs) + " for r = " + std::to_string(r);
        });
    };
    const Graph& h = gadget.graph;
    for (int k = 0; k < samples; ++k) {
        auto is = random_maximal_is(h, rng);
        check(make_selection(Problem::MaxMinimalVertexCover, complement(h.order(), is)));
    }
    check(solve_exact(Problem::MaxMinimalVertexCover, h, budget));
}

// ---------------------------------------------------------------------------
// analysis

void analysis_identities(Rng& rng, CheckLog& log) {
    int b = rng.between(2, 10'000);
    long double r = branching_root(b);
    expect_that(log, std::fabs(static_cast<double>(characteristic_residual(b, r))) <= 1e-12,
                [&] { return "root residual above 1e-12 at b = " + std::to_string(b); });
    long double identity = std::pow(r, static_cast<long double>(b - 1)) * (r - 1);
    log.expect(std::fabs(static_cast<double>(identity - 1)) <= 1e-9, "r^(b-1)(r-1) = 1");
    log.expect(r > 1 && r < 2, "root inside (1, 2)");
    log.expect(branching_root(b + 1) < r, "root strictly decreasing in b");

    double lambda = 1.01 + 0.89 * rng.uniform();
    int p = g_of_lambda(lambda);
    log.expect(branching_root(p + 1) < lambda, "root(g + 1) < lambda");
    if (p > 1) log.expect(branching_root(p) >= lambda, "g(lambda) is minimal");
    log.expect(mu_lower_bound(lambda, 1, 1) < mu_lower_bound(lambda + 0.005, 1, 1), "mu increasing in lambda");
    log.expect(mu_lower_bound(lambda, 1, 1) > mu_lower_bound(lambda, 2, 1), "mu decreasing in alpha");
    // beta is weighted by floor(g/2), which is 0 above the golden ratio.
    if (p >= 2) log.expect(mu_lower_bound(lambda, 1, 1) > mu_lower_bound(lambda, 1, 2), "mu decreasing in beta");
    else log.expect(mu_lower_bound(lambda, 1, 1) == mu_lower_bound(lambda, 1, 2), "mu independent of beta when g < 2");
}

}  // namespace sparselab::checks
