#include <cmath>

#include "doctest.h"
#include "sparselab/analysis.hpp"
#include "sparselab/checks.hpp"

using namespace sparselab;

TEST_CASE("branching roots") {
    CHECK(static_cast<double>(branching_root(2)) == doctest::Approx((1 + std::sqrt(5.0)) / 2).epsilon(1e-12));
    long double r10 = branching_root(10);
    CHECK(std::fabs(static_cast<double>(characteristic_residual(10, r10))) <= 1e-12);
    CHECK(std::fabs(static_cast<double>(std::pow(r10, 9.0L) * (r10 - 1) - 1)) <= 1e-9);
    CHECK(static_cast<double>(r10) == doctest::Approx(1.19749).epsilon(1e-5));
    CHECK(branching_root(1000) < branching_root(100));
    CHECK(branching_root(1000) < 1.02L);
    CHECK_THROWS_AS(branching_root(1), std::invalid_argument);

    long double previous = 2;
    for (int b = 2; b <= 10'000; ++b) {
        long double r = branching_root(b);
        if (std::fabs(static_cast<double>(characteristic_residual(b, r))) > 1e-12 || !(r < previous) || r <= 1) {
            FAIL("root calculus broken at b = " << b);
        }
        previous = r;
    }
}

TEST_CASE("g of lambda") {
    CHECK(g_of_lambda(1.618034) == 1);
    CHECK(g_of_lambda(1.18) == 11);
    CHECK(g_of_lambda(1.1) == 25);
    CHECK(g_of_lambda(1.21) == 9);
    // lambda equal to a root is not "smaller than": the golden ratio itself needs p = 2.
    CHECK(g_of_lambda(static_cast<double>(branching_root(2))) == 2);
    CHECK_THROWS_AS(g_of_lambda(1.0), std::invalid_argument);
    CHECK_THROWS_AS(g_of_lambda(2.0), std::invalid_argument);
    CHECK(g_of_lambda(1.001) > 1000);
}

TEST_CASE("mu lower bound and leaf edges") {
    CHECK(mu_lower_bound(1.1, 1, 1) == doctest::Approx(1.0073).epsilon(1e-3));
    CHECK(mu_lower_bound(1.18, 1, 1) == doctest::Approx(1.027).epsilon(1e-3));
    CHECK(mu_lower_bound(1.21, 1, 1) == doctest::Approx(1.038).epsilon(1e-3));
    CHECK(std::fabs(mu_lower_bound(1.18, 1, 1) - std::pow(1.18, 1.0 / 6)) < 1e-15);
    CHECK(std::fabs(mu_lower_bound(1.1, 1, 1) - std::pow(1.1, 1.0 / 13)) < 1e-15);
    CHECK(leaf_edge_bound(10, 1.18) == 50);
    CHECK(leaf_edge_bound(0, 1.5) == 0);
    CHECK(leaf_edge_bound(20, 1.1) == 240);
}

TEST_CASE("random identities") {
    Rng rng(5);
    checks::CheckLog log;
    for (int i = 0; i < 1000; ++i) checks::analysis_identities(rng, log);
    INFO((log.failures.empty() ? std::string() : log.failures.front()));
    CHECK(log.ok());
}

TEST_CASE("reference tables") {
    auto t = reference_tables();
    REQUIRE(t.mu_rows.size() == 3);
    CHECK(t.mu_rows[0].mu == doctest::Approx(1.0073).epsilon(1e-3));
    CHECK(t.mu_rows[1].mu == doctest::Approx(1.027).epsilon(1e-3));
    CHECK(t.mu_rows[2].mu == doctest::Approx(1.038).epsilon(1e-3));
    REQUIRE(t.excavation_rows.size() == 2);
    CHECK(t.excavation_rows[0].max_degree == 3);
    CHECK(t.excavation_rows[0].branching_base == 4);
    CHECK(t.excavation_rows[0].excavation_base == 2);
    CHECK(t.excavation_rows[1].branching_base == 5);
    CHECK(t.excavation_rows[1].excavation_base == 4);
    CHECK(t.json()["excavation"].size() == 2);
}
