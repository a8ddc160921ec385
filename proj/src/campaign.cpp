#include "sparselab/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

#include "sparselab/analysis.hpp"
#include "sparselab/checks.hpp"
#include "sparselab/generators.hpp"
#include "sparselab/io.hpp"

#ifndef SPARSELAB_GOLDEN_DIR
#define SPARSELAB_GOLDEN_DIR "tests/golden"
#endif

namespace sparselab {

namespace {

using checks::CheckLog;

std::string_view family_name(CampaignConfig::Family f) {
    switch (f) {
    case CampaignConfig::Family::Gnp: return "gnp";
    case CampaignConfig::Family::Regular: return "regular";
    case CampaignConfig::Family::Named: return "named";
    }
    return "gnp";
}

CampaignConfig::Family parse_family(const std::string& text) {
    if (text == "gnp") return CampaignConfig::Family::Gnp;
    if (text == "regular") return CampaignConfig::Family::Regular;
    if (text == "named") return CampaignConfig::Family::Named;
    throw std::invalid_argument("unknown instance family '" + text + "'");
}

std::uint64_t stream_seed(std::uint64_t seed, std::size_t index, std::uint64_t salt) {
    return Rng::splitmix64(seed ^ Rng::splitmix64(index * 0x9E3779B97F4A7C15ULL + salt));
}

void run_instance_core(const Graph& g, Rng&, const OracleBudget& budget, CheckLog& log) {
    checks::validator_soundness(g, budget, log);
    if (g.order() <= 10) checks::complement_duality(g, log);
}

void run_oracles(const Graph& g, Rng& rng, const OracleBudget& budget, CheckLog& log) {
    checks::oracle_agreement(g, rng, budget, log);
}

void run_sparsify(const Graph& g, Rng&, const OracleBudget& budget, CheckLog& log) {
    for (auto mode : {SolutionMode::IndependentSet, SolutionMode::VertexCover})
        for (const char* policy : {"const:2", "lambda:1.18", "power:0.5"})
            checks::sparsifier_preservation(g, mode, ThresholdPolicy::parse(policy), budget, log);
    for (double r : {1.0, 2.0}) checks::sparsifier_ratio(g, ThresholdPolicy::constant(2), r, budget, log);
    checks::kstep_chain(g, budget, log);
    if (g.max_degree() <= 4) checks::param_excavation(g, budget, log);
}

void run_reductions(const Graph& g, Rng& rng, const OracleBudget& budget, CheckLog& log) {
    checks::reduction_optima(g, budget, log);
    checks::reduction_sizes(g, log);
    for (double r : {1.5, 2.0}) checks::reduction_ratio_transfer(g, r, rng, budget, log);
    checks::reduction_feasibility(g, rng, 4, budget, log);
    for (int r : {1, 2}) checks::mmvc_ratio_inequality(g, r, rng, 6, budget, log);
}

void run_analysis(const Graph&, Rng& rng, const OracleBudget&, CheckLog& log) { checks::analysis_identities(rng, log); }

using SuiteFn = std::function<void(const Graph&, Rng&, const OracleBudget&, CheckLog&)>;

SuiteFn suite_function(const std::string& name) {
    if (name == "instance-core") return run_instance_core;
    if (name == "oracles") return run_oracles;
    if (name == "sparsify") return run_sparsify;
    if (name == "reductions") return run_reductions;
    if (name == "analysis") return run_analysis;
    throw std::invalid_argument("unknown suite '" + name + "'");
}

SuiteReport run_tables(const CampaignConfig& config) {
    SuiteReport report{"tables", 1, 2, 0, {}, std::nullopt};
    auto dir = config.golden_dir.empty() ? default_golden_dir() : config.golden_dir;
    auto path = dir / "tables.txt";
    std::ifstream in(path, std::ios::binary);
    std::string message;
    if (!in) {
        message = "cannot read golden file " + path.string();
    } else {
        std::ostringstream golden;
        golden << in.rdbuf();
        if (golden.str() != reference_tables().text()) message = "tables differ from " + path.string();
    }
    auto tables = reference_tables();
    bool rows = tables.mu_rows.size() == 3 && tables.excavation_rows.size() == 2;
    if (!rows && message.empty()) message = "unexpected table shape";
    if (!message.empty()) {
        report.failures = 1;
        report.first_failure = nlohmann::json{{"instance", 0}, {"message", message}};
    }
    return report;
}

}  // namespace

std::filesystem::path default_golden_dir() { return SPARSELAB_GOLDEN_DIR; }

const std::vector<std::string>& all_suites() {
    static const std::vector<std::string> names{"instance-core", "oracles", "sparsify", "reductions", "analysis", "tables"};
    return names;
}

CampaignConfig CampaignConfig::from_json(const nlohmann::json& j) {
    static const std::vector<std::string> known{"seed",  "family", "count", "min_order", "max_order", "p",
                                                "degree", "named", "suites", "budget_nodes", "timeout_sec",
                                                "threads", "golden_dir"};
    for (const auto& [key, value] : j.items())
        if (std::find(known.begin(), known.end(), key) == known.end())
            throw std::invalid_argument("unknown campaign key '" + key + "'");
    CampaignConfig c;
    c.seed = j.value("seed", c.seed);
    c.family = parse_family(j.value("family", std::string(family_name(c.family))));
    c.count = j.value("count", c.count);
    c.min_order = j.value("min_order", c.min_order);
    c.max_order = j.value("max_order", c.max_order);
    if (j.contains("p")) {
        const auto& p = j.at("p");
        c.edge_probabilities = p.is_array() ? p.get<std::vector<double>>() : std::vector<double>{p.get<double>()};
    }
    c.degree = j.value("degree", c.degree);
    if (j.contains("named")) c.named = j.at("named").get<std::vector<std::string>>();
    if (j.contains("suites")) c.suites = j.at("suites").get<std::vector<std::string>>();
    c.budget.max_nodes = j.value("budget_nodes", c.budget.max_nodes);
    c.budget.timeout_seconds = j.value("timeout_sec", c.budget.timeout_seconds);
    c.threads = j.value("threads", c.threads);
    if (j.contains("golden_dir")) c.golden_dir = j.at("golden_dir").get<std::string>();
    if (c.count < 0 || c.min_order < 1 || c.max_order < c.min_order)
        throw std::invalid_argument("campaign needs count >= 0 and 1 <= min_order <= max_order");
    if (c.edge_probabilities.empty() || c.named.empty()) throw std::invalid_argument("empty instance family");
    for (double p : c.edge_probabilities)
        if (p < 0 || p > 1) throw std::invalid_argument("edge probability outside [0, 1]");
    for (const auto& s : c.suites)
        if (std::find(all_suites().begin(), all_suites().end(), s) == all_suites().end())
            throw std::invalid_argument("unknown suite '" + s + "'");
    return c;
}

nlohmann::json CampaignConfig::to_json() const {
    // Threads and the golden location do not change results, so they stay out.
    return {{"seed", seed},
            {"family", family_name(family)},
            {"count", count},
            {"min_order", min_order},
            {"max_order", max_order},
            {"p", edge_probabilities},
            {"degree", degree},
            {"named", named},
            {"suites", suites.empty() ? all_suites() : suites},
            {"budget_nodes", budget.max_nodes},
            {"timeout_sec", budget.timeout_seconds}};
}

Graph campaign_instance(const CampaignConfig& config, std::size_t index) {
    Rng rng(stream_seed(config.seed, index, 0));
    int n = rng.between(config.min_order, config.max_order);
    switch (config.family) {
    case CampaignConfig::Family::Gnp:
        return graphs::gnp(n, config.edge_probabilities[index % config.edge_probabilities.size()], rng);
    case CampaignConfig::Family::Regular: {
        int d = config.degree;
        if (n <= d) n = d + 1;
        if ((n * d) % 2 != 0) ++n;
        return graphs::random_regular(n, d, rng);
    }
    case CampaignConfig::Family::Named: return graphs::named(config.named[index % config.named.size()]);
    }
    return {};
}

unsigned worker_count(unsigned requested) {
    unsigned n = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("SPARSELAB_THREADS")) {
        char* end = nullptr;
        unsigned long cap = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && cap > 0) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
    }
    return std::max(1u, n);
}

bool CampaignReport::passed() const {
    return std::all_of(suites.begin(), suites.end(), [](const SuiteReport& s) { return s.failures == 0; });
}

nlohmann::json CampaignReport::json() const {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& s : suites) {
        nlohmann::json item{{"suite", s.suite},
                            {"instances", s.instances},
                            {"checks", s.checks},
                            {"failures", s.failures},
                            {"passed", s.failures == 0}};
        if (!s.failing_checks.empty()) item["failing_checks"] = s.failing_checks;
        if (s.first_failure) item["first_failure"] = *s.first_failure;
        list.push_back(std::move(item));
    }
    return {{"config", config}, {"suites", std::move(list)}, {"passed", passed()}};
}

std::string CampaignReport::text() const {
    std::ostringstream out;
    for (const auto& s : suites) {
        out << (s.failures == 0 ? "PASS " : "FAIL ") << s.suite << ": " << s.instances << " instances, " << s.checks
            << " checks, " << s.failures << " failures\n";
        for (const auto& [check, count] : s.failing_checks) out << "  " << check << ": " << count << " failures\n";
        if (s.first_failure) out << "  first failure: " << s.first_failure->dump() << '\n';
    }
    out << (passed() ? "all suites passed\n" : "some suites failed\n");
    return out.str();
}

CampaignReport run_campaign(const CampaignConfig& config) {
    CampaignReport report;
    report.config = config.to_json();
    auto names = config.suites.empty() ? all_suites() : config.suites;
    unsigned workers = worker_count(config.threads);
    auto count = static_cast<std::size_t>(config.count);

    for (std::size_t s = 0; s < names.size(); ++s) {
        const auto& name = names[s];
        if (name == "tables") {
            report.suites.push_back(run_tables(config));
            continue;
        }
        auto fn = suite_function(name);
        std::vector<CheckLog> logs(count);
        std::vector<std::string> graphs_json(count);
        std::atomic<std::size_t> next{0};
        auto work = [&] {
            for (std::size_t i = next++; i < count; i = next++) {
                auto g = campaign_instance(config, i);
                Rng rng(stream_seed(config.seed, i, s + 1));
                try {
                    fn(g, rng, config.budget, logs[i]);
                } catch (const std::exception& e) {
                    logs[i].expect(false, std::string("exception: ") + e.what());
                }
                if (!logs[i].ok()) graphs_json[i] = to_json(g).dump();
            }
        };
        std::vector<std::thread> pool;
        for (unsigned w = 1; w < std::min<std::size_t>(workers, std::max<std::size_t>(count, 1)); ++w)
            pool.emplace_back(work);
        work();
        for (auto& t : pool) t.join();

        SuiteReport suite{name, count, 0, 0, {}, std::nullopt};
        for (std::size_t i = 0; i < count; ++i) {
            suite.checks += logs[i].checks;
            suite.failures += logs[i].failures.size();
            for (const auto& f : logs[i].failures) suite.failing_checks[f.substr(0, f.find(':'))]++;
            if (!suite.first_failure && !logs[i].ok())
                suite.first_failure = nlohmann::json{{"instance", i},
                                                     {"message", logs[i].failures.front()},
                                                     {"graph", nlohmann::json::parse(graphs_json[i])}};
        }
        report.suites.push_back(std::move(suite));
    }
    return report;
}

}  // namespace sparselab
