#include <cstdlib>

#include "doctest.h"
#include "sparselab/campaign.hpp"

using namespace sparselab;

namespace {

CampaignConfig small_config() {
    CampaignConfig c;
    c.count = 8;
    c.min_order = 3;
    c.max_order = 7;
    return c;
}

}  // namespace

TEST_CASE("configuration parsing") {
    auto c = CampaignConfig::from_json(
        {{"seed", 7}, {"family", "regular"}, {"count", 5}, {"min_order", 6}, {"max_order", 8}, {"degree", 3},
         {"suites", {"oracles"}}});
    CHECK(c.seed == 7);
    CHECK(c.family == CampaignConfig::Family::Regular);
    CHECK(c.suites == std::vector<std::string>{"oracles"});
    CHECK(CampaignConfig::from_json(c.to_json()).to_json() == c.to_json());
    CHECK_THROWS_AS(CampaignConfig::from_json({{"sed", 1}}), std::invalid_argument);
    CHECK_THROWS_AS(CampaignConfig::from_json({{"family", "tree"}}), std::invalid_argument);
    CHECK_THROWS_AS(CampaignConfig::from_json({{"suites", {"nope"}}}), std::invalid_argument);
    CHECK_THROWS_AS(CampaignConfig::from_json({{"min_order", 9}, {"max_order", 3}}), std::invalid_argument);
}

TEST_CASE("instances are a function of seed and index") {
    auto c = small_config();
    CHECK(campaign_instance(c, 3) == campaign_instance(c, 3));
    auto other = c;
    other.seed = 43;
    bool differs = false;
    for (std::size_t i = 0; i < 8; ++i) differs |= !(campaign_instance(c, i) == campaign_instance(other, i));
    CHECK(differs);
    for (std::size_t i = 0; i < 8; ++i) {
        int n = campaign_instance(c, i).order();
        CHECK(n >= 3);
        CHECK(n <= 7);
    }
    c.family = CampaignConfig::Family::Named;
    c.named = {"petersen", "k3"};
    CHECK(campaign_instance(c, 0).order() == 10);
    CHECK(campaign_instance(c, 1).order() == 3);
}

TEST_CASE("worker count honours SPARSELAB_THREADS") {
    ::setenv("SPARSELAB_THREADS", "2", 1);
    CHECK(worker_count(8) == 2);
    CHECK(worker_count(1) == 1);
    ::setenv("SPARSELAB_THREADS", "junk", 1);
    CHECK(worker_count(3) == 3);
    ::unsetenv("SPARSELAB_THREADS");
    CHECK(worker_count(5) == 5);
    CHECK(worker_count(0) >= 1);
}

TEST_CASE("reports are byte-identical across runs and worker counts") {
    auto c = small_config();
    c.threads = 1;
    auto first = run_campaign(c);
    c.threads = 4;
    auto second = run_campaign(c);
    CHECK(first.json().dump() == second.json().dump());
    CHECK(first.text() == second.text());
    CHECK(first.suites.size() == all_suites().size());
    for (const auto& s : first.suites) CHECK(s.instances > 0);
}

TEST_CASE("suites pass on a default-sized family") {
    auto c = small_config();
    c.suites = {"instance-core", "oracles", "sparsify", "analysis", "tables"};
    auto report = run_campaign(c);
    INFO(report.text());
    CHECK(report.passed());
}

TEST_CASE("tables suite fails on a wrong golden file") {
    auto c = small_config();
    c.suites = {"tables"};
    c.golden_dir = std::filesystem::temp_directory_path() / "sparselab-missing-golden";
    auto report = run_campaign(c);
    CHECK_FALSE(report.passed());
    REQUIRE(report.suites.front().first_failure.has_value());
}
