#include <algorithm>

#include "doctest.h"
#include "sparselab/checks.hpp"
#include "sparselab/generators.hpp"
#include "sparselab/reductions.hpp"
#include "sparselab/validate.hpp"

using namespace sparselab;

namespace {

long opt(Problem p, const Instance& i, ProblemParams params = {}) { return solve_exact(p, i, {}, params).value; }

/// Failures other than the VC -> IDS gadget, whose optimum identity does not hold.
std::vector<std::string> unexpected(const checks::CheckLog& log) {
    std::vector<std::string> out;
    for (const auto& f : log.failures)
        if (f.rfind("vc->ids", 0) != 0) out.push_back(f);
    return out;
}

}  // namespace

TEST_CASE("vertex cover to dominating set") {
    auto k3 = graphs::complete(3);
    auto gadget = vc_to_ds(k3);
    CHECK(gadget.graph.order() == 9);
    CHECK(opt(Problem::DominatingSet, gadget.graph) == 2);
    CHECK(gadget.map.vertices[3].role == GadgetVertex::Role::EdgeDummy);
    CHECK(gadget.map.vertices[3].anchor == 0);
    CHECK(gadget.map.vertices[3].partner == 1);
    // A dummy in the dominating set is replaced by the lower endpoint of its edge.
    auto back = vc_from_ds(k3, gadget.map, make_selection(Problem::DominatingSet, {1, 3}));
    CHECK(back.selection() == std::vector<Vertex>{0, 1});
    CHECK_THROWS_AS(vc_to_ds(disjoint_union(k3, graphs::empty(1))), std::invalid_argument);
    CHECK(gadget.map.json()["vertices"].size() == 9);
}

TEST_CASE("dominating set, set cover and hitting set") {
    auto k3 = graphs::complete(3);
    auto chain = parse_chain("vc:ds,ds:setcover");
    auto result = chain.forward(Instance{k3});
    const auto& sets = std::get<SetSystem>(result.target);
    CHECK(sets.count() == 9);
    CHECK(sets.ground() == 9);
    CHECK(opt(Problem::SetCover, sets) == 2);
    auto cover = solve_exact(Problem::SetCover, sets);
    auto back = chain.backward(Instance{k3}, result, cover);
    CHECK(validate(Problem::VertexCover, k3, back).feasible);
    CHECK(back.value == 2);

    auto closed = ds_to_setcover(graphs::petersen());
    CHECK(closed.frequency() == 4);
    CHECK(opt(Problem::SetCover, closed) == opt(Problem::DominatingSet, graphs::petersen()));
    auto dual = setcover_to_hittingset(closed);
    CHECK(opt(Problem::HittingSet, dual) == opt(Problem::SetCover, closed));
    auto hs = solve_exact(Problem::HittingSet, dual);
    CHECK(validate(Problem::SetCover, closed, setcover_from_hittingset(closed, hs)).feasible);
}

TEST_CASE("feedback vertex and arc set gadgets") {
    auto k3 = graphs::complete(3);
    CHECK(opt(Problem::FeedbackVertexSet, vc_to_fvs(k3).graph) == 2);
    auto fas = vc_to_fas(k3);
    CHECK(fas.graph.order() == 6);
    CHECK(fas.graph.size() == 9);
    CHECK(opt(Problem::FeedbackArcSet, fas.graph) == 2);
    // The crossing arc (0,1) -> (1,0) is replaced by the split arc of vertex 1.
    auto normal = normalize_feedback_arcs(fas.map, {{1, 2}});
    CHECK(normal == ArcList{{2, 3}});
    CHECK(opt(Problem::FeedbackArcSet, vc_to_fas(graphs::empty(4)).graph) == 0);
}

TEST_CASE("independent set to max-2-sat") {
    auto k3 = graphs::complete(3);
    auto f = is_to_max2sat(k3);
    CHECK(f.clauses().size() == 6);
    CHECK(opt(Problem::Max2Sat, f) == 4);
    CHECK(is_to_max2sat(graphs::cycle(5)).clauses().size() == 10);
    CHECK(is_to_max2sat(k3, 1).target() == 4);
    // All-true on K2 violates the edge clause; the lower endpoint is flipped.
    auto back = is_from_max2sat(graphs::complete(2), Candidate{Problem::Max2Sat, Assignment{true, true}, 2});
    CHECK(back.selection() == std::vector<Vertex>{1});
}

TEST_CASE("independent set to set packing") {
    auto g = disjoint_union(graphs::cycle(5), graphs::empty(2));
    auto s = is_to_setpacking(g);
    CHECK(s.count() == 7);
    CHECK(s.set(5).empty());
    CHECK(opt(Problem::SetPacking, s) == 4);
}

TEST_CASE("pendant gadgets") {
    auto c5 = graphs::cycle(5);
    CHECK_THROWS_AS(is_to_mmvc(c5, 1), std::invalid_argument);
    auto h = is_to_mmvc(c5, 3);
    CHECK(h.graph.order() == 20);
    CHECK(opt(Problem::MaxMinimalVertexCover, h.graph) == mmvc_pendant_value(5, 2, 3));
    CHECK(mmvc_pendant_value(5, 2, 3) == 9);
    auto cover = mmvc_from_is(h, {0, 2});
    CHECK(validate(Problem::MaxMinimalVertexCover, h.graph, cover).feasible);
    CHECK(cover.value == 9);
    CHECK(is_from_mmvc(c5, h.map, cover).selection() == std::vector<Vertex>{0, 2});

    CHECK(ids_pendant_value(5, 2, 2) == 2 + 3 * 3);
    CHECK(opt(Problem::IndependentDominatingSet, h.graph) == ids_pendant_value(5, 2, 2));
    CHECK(ids_pendant_value(c5, 2) == 11);
    CHECK_THROWS_AS(ids_pendant_value(5, 2, 0), std::invalid_argument);
}

TEST_CASE("colorable and planar backward maps") {
    auto c5 = graphs::cycle(5);
    auto back = lcol_backward(c5, {0, 1, 2, 3}, 2);
    CHECK(validate(Problem::IndependentSet, c5, back).feasible);
    CHECK(back.value == 2);
    CHECK_THROWS_AS(lcol_backward(c5, {0, 1, 2, 3, 4}, 2), std::invalid_argument);

    auto k4 = graphs::complete(4);
    auto planar = planar_backward(k4, {0, 1, 2, 3});
    CHECK(planar.value == 1);
    auto grid_like = graphs::cycle(8);
    CHECK(planar_backward(grid_like, {0, 1, 2, 3, 4, 5, 6, 7}).value * 6 >= 8);

    auto red = make_reduction(Problem::IndependentSet, Problem::ColorableSubgraph, {std::nullopt, 3, std::nullopt});
    CHECK(red.transfer.apply(2.0) == doctest::Approx(6.0));
    CHECK(make_reduction(Problem::IndependentSet, Problem::PlanarSubgraph).transfer.apply(1.5) == doctest::Approx(9.0));
}

TEST_CASE("composition and registry") {
    auto id = compose(identity_reduction(Problem::VertexCover), identity_reduction(Problem::VertexCover));
    auto g = graphs::petersen();
    CHECK(std::get<Graph>(id.forward(Instance{g}).target) == g);
    CHECK_THROWS_AS(compose(make_reduction(Problem::VertexCover, Problem::DominatingSet),
                            make_reduction(Problem::IndependentSet, Problem::Max2Sat)),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_chain("vc:ds,is:max2sat"), std::invalid_argument);
    CHECK_THROWS_AS(parse_chain("vc-ds"), std::invalid_argument);
    CHECK_THROWS_AS(parse_chain(""), std::invalid_argument);
    CHECK_THROWS_AS(make_reduction(Problem::Max2Sat, Problem::IndependentSet), std::invalid_argument);
    for (auto [from, to] : available_reductions()) CHECK_NOTHROW(make_reduction(from, to));
    CHECK(make_reduction(Problem::IndependentSet, Problem::Max2Sat).transfer.apply == nullptr);
}

TEST_CASE("the two-dummy IDS gadget does not preserve the optimum") {
    // K2: the gadget is a 4-cycle whose minimum IDS has size 2, while tau(K2) = 1.
    auto k2 = graphs::complete(2);
    auto gadget = vc_to_ids(k2);
    CHECK(gadget.graph.edges() == std::vector<Edge>{{0, 2}, {0, 3}, {1, 2}, {1, 3}});
    CHECK(opt(Problem::IndependentDominatingSet, gadget.graph) == 2);
    CHECK(opt(Problem::VertexCover, k2) == 1);
    // The backward map is still sound.
    auto back = vc_from_ids(k2, gadget.map, make_selection(Problem::IndependentDominatingSet, {2, 3}));
    CHECK(validate(Problem::VertexCover, k2, back).feasible);
}

TEST_CASE("optimum identities, sizes and soundness on random graphs") {
    Rng rng(42);
    for (int i = 0; i < 60; ++i) {
        auto g = graphs::gnp(rng.between(1, 9), i % 2 ? 0.2 : 0.5, rng);
        checks::CheckLog log;
        checks::reduction_optima(g, {}, log);
        checks::reduction_sizes(g, log);
        checks::reduction_feasibility(g, rng, 4, {}, log);
        for (double r : {1.5, 2.0}) checks::reduction_ratio_transfer(g, r, rng, {}, log);
        for (int r : {1, 2}) checks::mmvc_ratio_inequality(g, r, rng, 6, {}, log);
        auto bad = unexpected(log);
        INFO((bad.empty() ? std::string() : bad.front()));
        REQUIRE(bad.empty());
    }
}
