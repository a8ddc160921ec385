#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "sparselab/graph.hpp"
#include "sparselab/oracles.hpp"

namespace sparselab {

/// Everything a verification campaign depends on; same config, same report.
struct CampaignConfig {
    enum class Family { Gnp, Regular, Named };

    std::uint64_t seed = 42;
    Family family = Family::Gnp;
    int count = 50;
    int min_order = 4;
    int max_order = 10;
    std::vector<double> edge_probabilities{0.2, 0.5};  // gnp; instance i uses entry i mod size
    int degree = 3;                                    // regular
    std::vector<std::string> named{"petersen"};        // named; instance i uses entry i mod size
    std::vector<std::string> suites;                   // empty: every suite
    OracleBudget budget;
    unsigned threads = 0;                              // 0: SPARSELAB_THREADS or hardware concurrency
    std::filesystem::path golden_dir;                  // tables suite; empty: built-in location

    /// Throws std::invalid_argument on unknown keys or values.
    static CampaignConfig from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
};

/// "instance-core", "oracles", "sparsify", "reductions", "analysis", "tables".
const std::vector<std::string>& all_suites();

/// Instance `index` of the campaign family.
Graph campaign_instance(const CampaignConfig& config, std::size_t index);

/// min(requested or hardware concurrency, SPARSELAB_THREADS when set), at least 1.
unsigned worker_count(unsigned requested);

struct SuiteReport {
    std::string suite;
    std::uint64_t instances = 0;
    std::uint64_t checks = 0;
    std::uint64_t failures = 0;
    /// Failure count per check, keyed by the message text before the first ':'.
    std::map<std::string, std::uint64_t> failing_checks;
    /// {"instance": index, "message": ..., "graph": <json>} for the lowest failing index.
    std::optional<nlohmann::json> first_failure;
};

struct CampaignReport {
    nlohmann::json config;
    std::vector<SuiteReport> suites;

    bool passed() const;
    nlohmann::json json() const;
    std::string text() const;
};

/// Runs the selected suites over the instance family on a worker pool.
/// Results are aggregated in instance order, so the report does not depend on
/// scheduling. A BudgetExceeded on an instance counts as a failure.
CampaignReport run_campaign(const CampaignConfig& config);

/// Default directory of the golden tables file.
std::filesystem::path default_golden_dir();

}  // namespace sparselab
