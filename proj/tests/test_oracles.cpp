#include "doctest.h"
#include "sparselab/checks.hpp"
#include "sparselab/generators.hpp"
#include "sparselab/oracles.hpp"
#include "sparselab/validate.hpp"

using namespace sparselab;

namespace {

SetSystem random_sets(Rng& rng, int ground, int count, double p) {
    std::vector<std::vector<int>> sets(count);
    for (auto& s : sets)
        for (int e = 0; e < ground; ++e)
            if (rng.bernoulli(p)) s.push_back(e);
    // Every element in some set, so covers exist.
    for (int e = 0; e < ground; ++e) {
        bool covered = false;
        for (const auto& s : sets) covered = covered || std::find(s.begin(), s.end(), e) != s.end();
        if (!covered) sets[rng.below(count)].push_back(e);
    }
    return SetSystem(ground, sets);
}

CnfInstance random_cnf(Rng& rng, int vars, int clauses, int width) {
    std::vector<Clause> out;
    for (int c = 0; c < clauses; ++c) {
        std::vector<int> pool(vars);
        for (int v = 0; v < vars; ++v) pool[v] = v;
        rng.shuffle(pool);
        Clause clause;
        int w = rng.between(1, std::min(width, vars));
        for (int i = 0; i < w; ++i) clause.push_back(Literal{pool[i], rng.bernoulli(0.5)});
        out.push_back(clause);
    }
    return CnfInstance(vars, out);
}

Graph random_digraph(Rng& rng, int n, double p) {
    std::vector<Edge> arcs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
            if (u != v && rng.bernoulli(p)) arcs.emplace_back(u, v);
    return Graph::directed(n, arcs);
}

}  // namespace

TEST_CASE("known optima") {
    CHECK(solve_exact(Problem::IndependentSet, graphs::petersen()).value == 4);
    CHECK(solve_exact(Problem::VertexCover, graphs::petersen()).value == 6);
    CHECK(solve_exact(Problem::DominatingSet, graphs::petersen()).value == 3);
    CHECK(solve_exact(Problem::IndependentSet, graphs::cycle(5)).value == 2);
    CHECK(solve_exact(Problem::VertexCover, graphs::complete(3)).value == 2);
    CHECK(solve_exact(Problem::FeedbackVertexSet, graphs::complete(4)).value == 2);
    CHECK(solve_exact(Problem::IndependentDominatingSet, graphs::star(5)).value == 1);
    CHECK(solve_exact(Problem::MaxMinimalVertexCover, graphs::star(5)).value == 5);
    CHECK(solve_exact(Problem::FeedbackArcSet, Graph::directed(4, {})).value == 0);
    ProblemParams two{2};
    CHECK(solve_exact(Problem::ColorableSubgraph, graphs::cycle(5), {}, two).value == 4);
    CHECK(solve_exact(Problem::PlanarSubgraph, graphs::complete(5)).value == 4);
    CHECK(solve_exact(Problem::PlanarSubgraph, graphs::complete_bipartite(3, 3)).value == 5);
}

TEST_CASE("branch and bound agrees with enumeration on graph problems") {
    Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        auto g = graphs::gnp(rng.between(1, 12), i % 2 ? 0.25 : 0.5, rng);
        checks::CheckLog log;
        checks::oracle_agreement(g, rng, {}, log);
        INFO((log.failures.empty() ? std::string() : log.failures.front()));
        REQUIRE(log.ok());
    }
}

TEST_CASE("set and sat oracles agree with enumeration") {
    CnfInstance wide(3, {{Literal{0, true}, Literal{1, false}, Literal{2, true}}});
    CHECK_THROWS_AS(solve_exact(Problem::Max2Sat, wide), std::invalid_argument);
    Rng rng(12);
    for (int i = 0; i < 60; ++i) {
        auto s = random_sets(rng, rng.between(1, 9), rng.between(1, 9), 0.3);
        for (Problem p : {Problem::SetCover, Problem::HittingSet, Problem::SetPacking}) {
            if (p == Problem::HittingSet) {
                bool empty = false;
                for (const auto& set : s.sets()) empty = empty || set.empty();
                if (empty) continue;
            }
            CHECK(solve_exact(p, s).value == solve_by_enumeration(p, s).value);
        }
        auto f2 = random_cnf(rng, rng.between(1, 10), rng.between(1, 14), 2);
        CHECK(solve_exact(Problem::Max2Sat, f2).value == solve_by_enumeration(Problem::Max2Sat, f2).value);
        auto f3 = random_cnf(rng, rng.between(1, 10), rng.between(1, 14), 3);
        CHECK(solve_exact(Problem::Max3Sat, f3).value == solve_by_enumeration(Problem::Max3Sat, f3).value);
    }
}

TEST_CASE("feedback arc set engines agree") {
    Rng rng(13);
    for (int i = 0; i < 80; ++i) {
        auto d = random_digraph(rng, rng.between(2, 9), 0.25);
        long dp = solve_fas_by_ordering(d).value;
        CHECK(solve_fas_by_cycles(d).value == dp);
        if (d.size() <= 16) CHECK(solve_by_enumeration(Problem::FeedbackArcSet, d).value == dp);
    }
    for (int i = 0; i < 10; ++i) {
        auto d = random_digraph(rng, 14, 0.15);
        CHECK(solve_fas_by_cycles(d).value == solve_fas_by_ordering(d).value);
    }
}

TEST_CASE("colorable and planar subgraph oracles agree with enumeration") {
    Rng rng(14);
    for (int i = 0; i < 30; ++i) {
        auto g = graphs::gnp(rng.between(1, 9), 0.5, rng);
        for (int colors : {1, 2, 3}) {
            ProblemParams params{colors};
            CHECK(solve_exact(Problem::ColorableSubgraph, g, {}, params).value ==
                  solve_by_enumeration(Problem::ColorableSubgraph, g, params).value);
        }
        CHECK(solve_exact(Problem::PlanarSubgraph, g).value == solve_by_enumeration(Problem::PlanarSubgraph, g).value);
    }
}

TEST_CASE("bipartite and degree-two solvers") {
    Rng rng(15);
    for (int i = 0; i < 50; ++i) {
        auto b = graphs::random_bipartite(rng.between(1, 9), rng.between(1, 9), 0.3, rng);
        auto mate = maximum_bipartite_matching(b);
        long matched = std::count_if(mate.begin(), mate.end(), [](Vertex v) { return v >= 0; }) / 2;
        auto is = max_is_bipartite(b);
        CHECK(validate(Problem::IndependentSet, b, is).feasible);
        // Koenig: alpha = n - maximum matching.
        CHECK(is.value == b.order() - matched);
        CHECK(is.value == solve_exact(Problem::IndependentSet, b).value);
    }
    CHECK_THROWS_AS(max_is_bipartite(graphs::cycle(5)), std::invalid_argument);

    for (int i = 0; i < 30; ++i) {
        auto g = disjoint_union(graphs::cycle(rng.between(3, 8)), graphs::path(rng.between(1, 7)));
        auto d2 = max_is_degree2(g);
        CHECK(validate(Problem::IndependentSet, g, d2).feasible);
        CHECK(d2.value == solve_exact(Problem::IndependentSet, g).value);
    }
    CHECK_THROWS_AS(max_is_degree2(graphs::star(3)), std::invalid_argument);
}

TEST_CASE("greedy maximal independent sets") {
    CHECK(maximal_is_greedy(graphs::cycle(5)) == std::vector<Vertex>{0, 2});
    CHECK(maximal_is_greedy(graphs::cycle(5), TieRule::HighestId) == std::vector<Vertex>{2, 4});
    CHECK(maximal_is_greedy(graphs::empty(3)) == std::vector<Vertex>{0, 1, 2});
}

TEST_CASE("budgets") {
    OracleBudget tiny;
    tiny.max_nodes = 3;
    CHECK_THROWS_AS(solve_exact(Problem::IndependentSet, graphs::petersen(), tiny), BudgetExceeded);
    OracleBudget narrow;
    narrow.max_vertices = 4;
    CHECK_THROWS_AS(solve_exact(Problem::PlanarSubgraph, graphs::complete(5), narrow), BudgetExceeded);
    CHECK_THROWS_AS(solve_by_enumeration(Problem::IndependentSet, graphs::empty(30)), BudgetExceeded);
    CHECK_THROWS_AS(solve_exact(Problem::SetCover, graphs::petersen()), std::invalid_argument);
}
