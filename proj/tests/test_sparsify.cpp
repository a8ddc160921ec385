#include <cmath>

#include "doctest.h"
#include "sparselab/analysis.hpp"
#include "sparselab/checks.hpp"
#include "sparselab/generators.hpp"
#include "sparselab/sparsify.hpp"
#include "sparselab/validate.hpp"

using namespace sparselab;

namespace {

std::vector<SparsificationLeaf> all_leaves(const Graph& g, SolutionMode mode, const char* policy) {
    auto stream = superlinear_sparsify(g, mode, ThresholdPolicy::parse(policy));
    std::vector<SparsificationLeaf> out;
    while (auto leaf = stream.next()) out.push_back(std::move(*leaf));
    return out;
}

}  // namespace

TEST_CASE("threshold policies") {
    CHECK(ThresholdPolicy::parse("power:0.5").leaf_degree(20) == 4);
    CHECK(ThresholdPolicy::parse("const:4").leaf_degree(100) == 4);
    CHECK(ThresholdPolicy::parse("lambda:1.18").leaf_degree(100) == 10);
    CHECK(ThresholdPolicy::parse("lambda:1.18").to_string() == "lambda:1.18");
    for (const char* bad : {"power:1.5", "power:0", "const:0", "lambda:2.5", "lambda:1", "foo", "const:x", "power"})
        CHECK_THROWS_AS(ThresholdPolicy::parse(bad), std::invalid_argument);
    CHECK(parse_mode("vc") == SolutionMode::VertexCover);
    CHECK_THROWS_AS(parse_mode("ds"), std::invalid_argument);
}

TEST_CASE("star and cycle examples") {
    auto star = graphs::star(5);
    auto leaves = all_leaves(star, SolutionMode::IndependentSet, "const:2");
    REQUIRE(leaves.size() == 2);
    CHECK(leaves[0].committed == std::vector<Vertex>{0});
    CHECK(leaves[0].residual.order() == 0);
    CHECK(leaves[0].path == "1");
    CHECK(leaves[1].deleted == std::vector<Vertex>{0});
    CHECK(leaves[1].residual.order() == 5);
    CHECK(leaves[1].residual.size() == 0);
    CHECK(leaves[1].path == "0");

    auto five = lift_solution(star, leaves[1], make_selection(Problem::IndependentSet, {0, 1, 2, 3, 4}),
                              SolutionMode::IndependentSet);
    CHECK(five.value == 5);
    CHECK(five.selection() == std::vector<Vertex>{1, 2, 3, 4, 5});
    auto one = lift_solution(star, leaves[0], make_selection(Problem::IndependentSet, {}), SolutionMode::IndependentSet);
    CHECK(one.selection() == std::vector<Vertex>{0});
    CHECK_THROWS_AS(lift_solution(star, leaves[1], make_selection(Problem::IndependentSet, {0, 9}),
                                  SolutionMode::IndependentSet),
                    std::invalid_argument);

    auto c5 = all_leaves(graphs::cycle(5), SolutionMode::IndependentSet, "const:2");
    REQUIRE(c5.size() == 1);
    CHECK(c5[0].depth == 0);
    CHECK(c5[0].residual.edges() == graphs::cycle(5).edges());
}

TEST_CASE("vertex cover mode drops isolated vertices") {
    auto star = graphs::star(5);
    auto leaves = all_leaves(star, SolutionMode::VertexCover, "const:2");
    REQUIRE(leaves.size() == 2);
    // Commit the center: its leaves become isolated and are dropped.
    CHECK(leaves[0].committed == std::vector<Vertex>{0});
    CHECK(leaves[0].residual.order() == 0);
    // Discard the center: all leaves are committed.
    CHECK(leaves[1].committed == std::vector<Vertex>{1, 2, 3, 4, 5});
    for (const auto& leaf : leaves) CHECK_FALSE(check_leaf(star, leaf, SolutionMode::VertexCover, 2));
    auto best = lift_solution(star, leaves[0], make_selection(Problem::VertexCover, {}), SolutionMode::VertexCover);
    CHECK(best.value == 1);
}

TEST_CASE("power policy on G(20, 0.4)") {
    Rng rng(20);
    auto g = graphs::gnp(20, 0.4, rng);
    auto leaves = all_leaves(g, SolutionMode::IndependentSet, "power:0.5");
    for (const auto& leaf : leaves) {
        CHECK(leaf.residual.max_degree() <= 4);
        CHECK_FALSE(check_leaf(g, leaf, SolutionMode::IndependentSet, 4));
    }
    CHECK(static_cast<double>(leaves.size()) <= std::ceil(std::pow(branching_root(5), 20.0L)));
    // The stream is deterministic.
    auto again = all_leaves(g, SolutionMode::IndependentSet, "power:0.5");
    REQUIRE(again.size() == leaves.size());
    for (std::size_t i = 0; i < leaves.size(); ++i) CHECK(again[i].path == leaves[i].path);
}

TEST_CASE("lambda policy edge bound") {
    Rng rng(21);
    auto g = graphs::gnp(20, 0.6, rng);
    for (const auto& leaf : all_leaves(g, SolutionMode::IndependentSet, "lambda:1.18"))
        CHECK(static_cast<long>(leaf.residual.size()) <= 5L * leaf.residual.order());
}

TEST_CASE("check_leaf detects broken leaves") {
    auto g = graphs::path(3);
    auto leaves = all_leaves(g, SolutionMode::IndependentSet, "const:1");
    REQUIRE_FALSE(leaves.empty());
    auto leaf = leaves.front();
    leaf.committed.push_back(leaf.committed.empty() ? 0 : leaf.committed.front());
    CHECK(check_leaf(g, leaf, SolutionMode::IndependentSet, 1));
    auto unbounded = all_leaves(graphs::star(4), SolutionMode::IndependentSet, "const:4").front();
    CHECK(check_leaf(graphs::star(4), unbounded, SolutionMode::IndependentSet, 3));
}

TEST_CASE("optimum and ratio preservation on random graphs") {
    Rng rng(22);
    for (int i = 0; i < 40; ++i) {
        auto g = graphs::gnp(rng.between(4, 16), i % 2 ? 0.3 : 0.5, rng);
        checks::CheckLog log;
        for (auto mode : {SolutionMode::IndependentSet, SolutionMode::VertexCover})
            for (const char* policy : {"const:2", "const:3", "lambda:1.18", "power:0.5"})
                checks::sparsifier_preservation(g, mode, ThresholdPolicy::parse(policy), {}, log);
        for (double r : {1.0, 2.0}) checks::sparsifier_ratio(g, ThresholdPolicy::constant(2), r, {}, log);
        INFO((log.failures.empty() ? std::string() : log.failures.front()));
        REQUIRE(log.ok());
    }
}

TEST_CASE("k-step excavation examples") {
    auto c5 = kstep_sparsify(graphs::cycle(5), 1);
    REQUIRE(c5.layers.size() == 1);
    CHECK(c5.layers[0] == std::vector<Vertex>{0, 2});
    CHECK(c5.residual.max_degree() <= 1);
    CHECK(kstep_sparsify(graphs::complete(4), 2).residual.max_degree() <= 2);
    CHECK(kstep_sparsify(graphs::petersen(), 1).residual.max_degree() <= 2);
    CHECK_THROWS_AS(kstep_sparsify(graphs::petersen(), 0), std::invalid_argument);
    CHECK_THROWS_AS(kstep_sparsify(graphs::petersen(), 3), std::invalid_argument);
}

TEST_CASE("k-step approximations") {
    auto exact_is = exact_subsolver(Problem::IndependentSet);
    CHECK(approx_is_kstep(graphs::cycle(5), exact_is).value == 2);
    CHECK(approx_is_kstep(graphs::empty(6), exact_is).value == 6);

    ProblemParams two{2};
    auto exact_lcol = exact_subsolver(Problem::ColorableSubgraph, two);
    CHECK(approx_lcol_kstep(graphs::complete(4), 2, exact_lcol).value >= 2);
    // C5 is 3-chromatic, so the best 2-colorable induced subgraph has 4 vertices.
    CHECK(approx_lcol_kstep(graphs::cycle(5), 2, exact_lcol).value == 4);
    CHECK_THROWS_AS(approx_lcol_kstep(graphs::cycle(5), 1, exact_lcol), std::invalid_argument);
    CHECK(approx_planar_kstep(graphs::empty(7), exact_subsolver(Problem::PlanarSubgraph)).value == 7);

    Subsolver liar = [](const Graph& g) {
        std::vector<Vertex> all(g.order());
        for (Vertex v = 0; v < g.order(); ++v) all[v] = v;
        return all;
    };
    CHECK_THROWS_AS(approx_is_kstep(graphs::complete(5), liar), std::invalid_argument);

    Rng rng(23);
    for (int i = 0; i < 40; ++i) {
        auto g = graphs::gnp(rng.between(3, 14), 0.4, rng);
        checks::CheckLog log;
        checks::kstep_chain(g, {}, log);
        INFO((log.failures.empty() ? std::string() : log.failures.front()));
        REQUIRE(log.ok());
    }
}

TEST_CASE("parameterized excavation") {
    auto petersen = param_is_excavation(graphs::petersen());
    CHECK(petersen.solution.value == 4);
    CHECK(petersen.enumerated_subsets <= 16);
    CHECK(param_is_excavation(disjoint_union(graphs::cycle(5), graphs::complete(4))).solution.value == 3);
    CHECK(param_is_excavation(graphs::cycle(7)).solution.value == 3);

    Rng rng(24);
    for (int i = 0; i < 10; ++i) {
        auto g = graphs::random_regular(14, 3, rng);
        auto r = param_is_excavation(g);
        long alpha = solve_exact(Problem::IndependentSet, g).value;
        CHECK(r.solution.value == alpha);
        CHECK(static_cast<double>(r.enumerated_subsets) <= std::ldexp(1.0, static_cast<int>(alpha)));
    }
    for (int i = 0; i < 30; ++i) {
        checks::CheckLog log;
        checks::param_excavation(graphs::gnp_capped(rng.between(4, 18), 0.4, 4, rng), {}, log);
        INFO((log.failures.empty() ? std::string() : log.failures.front()));
        REQUIRE(log.ok());
    }
}

TEST_CASE("degraded subsolver") {
    auto half = degraded_subsolver(Problem::IndependentSet, 2.0);
    CHECK(half(graphs::empty(5)).size() == 3);
    CHECK(half(graphs::empty(5)) == std::vector<Vertex>{0, 1, 2});
}
