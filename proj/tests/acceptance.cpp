#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>

#include "sparselab/analysis.hpp"
#include "sparselab/campaign.hpp"
#include "sparselab/checks.hpp"
#include "sparselab/generators.hpp"
#include "sparselab/sparsify.hpp"

using namespace sparselab;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

/// "N checks, F failures" plus the failing prefixes (text before the first ':') and the first message.
Outcome summarize(const checks::CheckLog& log, std::string what) {
    Outcome o;
    o.pass = log.ok();
    std::ostringstream s;
    s << what << ", " << log.checks << " checks, " << log.failures.size() << " failures";
    if (!log.ok()) {
        std::map<std::string, int> by_prefix;
        for (const auto& f : log.failures) by_prefix[f.substr(0, f.find(':'))]++;
        s << " [";
        bool first = true;
        for (const auto& [prefix, count] : by_prefix) {
            s << (first ? "" : ", ") << prefix << " x" << count;
            first = false;
        }
        std::string msg = log.failures.front();
        if (msg.size() > 160) msg = msg.substr(0, 160) + "...";
        s << "]; first: " << msg;
    }
    o.detail = s.str();
    return o;
}

Graph corpus_graph(Rng& rng, int index, int min_n, int max_n) {
    return graphs::gnp(rng.between(min_n, max_n), index % 2 ? 0.5 : 0.2, rng);
}

Outcome tables() {
    auto t = reference_tables();
    const double expected[] = {1.0073, 1.027, 1.038};
    bool ok = t.mu_rows.size() == 3 && t.excavation_rows.size() == 2;
    for (std::size_t i = 0; ok && i < 3; ++i) ok = std::fabs(t.mu_rows[i].mu - expected[i]) <= 1e-3;
    ok = ok && t.excavation_rows[0].max_degree == 3 && t.excavation_rows[0].branching_base == 4 &&
         t.excavation_rows[0].excavation_base == 2 && t.excavation_rows[1].max_degree == 4 &&
         t.excavation_rows[1].branching_base == 5 && t.excavation_rows[1].excavation_base == 4;
    std::ifstream golden(default_golden_dir() / "tables.txt", std::ios::binary);
    std::string text((std::istreambuf_iterator<char>(golden)), std::istreambuf_iterator<char>());
    bool matches = golden && text == t.text();
    std::ostringstream s;
    s << "mu " << t.mu_rows[0].mu << " / " << t.mu_rows[1].mu << " / " << t.mu_rows[2].mu
      << ", golden file " << (matches ? "matches" : "differs");
    return {ok && matches, s.str()};
}

Outcome root_calculus() {
    bool ok = std::fabs(static_cast<double>(branching_root(2)) - (1 + std::sqrt(5.0)) / 2) <= 1e-10;
    long double previous = 2, worst = 0;
    for (int b = 2; b <= 10'000; ++b) {
        long double r = branching_root(b);
        long double res = std::fabs(characteristic_residual(b, r));
        worst = std::max(worst, res);
        ok = ok && res <= 1e-12L && r < previous;
        previous = r;
    }
    std::ostringstream s;
    s << "b = 2..10000, max residual " << static_cast<double>(worst);
    return {ok, s.str()};
}

Outcome reduction_optima() {
    Rng rng(301);
    checks::CheckLog log;
    for (int i = 0; i < 200; ++i) checks::reduction_optima(corpus_graph(rng, i, 1, 10), {}, log);
    return summarize(log, "200 graphs");
}

Outcome ratio_transfer() {
    Rng rng(301);
    Rng draws(401);
    checks::CheckLog log;
    for (int i = 0; i < 200; ++i) {
        auto g = corpus_graph(rng, i, 1, 10);
        for (double r : {1.5, 2.0}) checks::reduction_ratio_transfer(g, r, draws, {}, log);
    }
    return summarize(log, "200 graphs, r in {3/2, 2}");
}

Outcome sparsifier() {
    Rng rng(501);
    checks::CheckLog log;
    const ThresholdPolicy policies[] = {ThresholdPolicy::power(0.5), ThresholdPolicy::constant(2),
                                        ThresholdPolicy::of_lambda(1.18)};
    for (int i = 0; i < 100; ++i) {
        auto g = corpus_graph(rng, i, 4, 16);
        for (const auto& policy : policies)
            for (auto mode : {SolutionMode::IndependentSet, SolutionMode::VertexCover})
                checks::sparsifier_preservation(g, mode, policy, {}, log);
    }
    return summarize(log, "100 graphs, 3 policies, 2 modes");
}

Outcome kstep() {
    Rng rng(601);
    checks::CheckLog log;
    for (int i = 0; i < 100; ++i) checks::kstep_chain(corpus_graph(rng, i, 4, 16), {}, log);
    return summarize(log, "100 graphs");
}

Outcome excavation() {
    Rng rng(701);
    checks::CheckLog log;
    for (int i = 0; i < 100; ++i) {
        auto g = graphs::gnp_capped(rng.between(4, 18), i % 2 ? 0.5 : 0.25, 4, rng);
        checks::param_excavation(g, {}, log);
    }
    return summarize(log, "100 graphs with max degree <= 4");
}

Outcome duality() {
    Rng rng(801);
    checks::CheckLog log;
    for (int i = 0; i < 300; ++i) checks::complement_duality(corpus_graph(rng, i, 1, 8), log);
    return summarize(log, "300 graphs");
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        double limit_sec;
        std::function<Outcome()> run;
    };
    const Criterion criteria[] = {
        {"table reproduction", 1, tables},
        {"root calculus", 1, root_calculus},
        {"reduction optimum correspondence", 600, reduction_optima},
        {"ratio-transfer soundness", 600, ratio_transfer},
        {"sparsifier preservation", 600, sparsifier},
        {"k-step chain", 600, kstep},
        {"parameterized excavation", 300, excavation},
        {"complement duality", 600, duality},
    };
    int failed = 0, index = 0;
    for (const auto& c : criteria) {
        ++index;
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (sec > c.limit_sec) {
            o.pass = false;
            o.detail += ", over the time limit";
        }
        if (!o.pass) ++failed;
        std::printf("%s %d %s (%.2f s): %s\n", o.pass ? "PASS" : "FAIL", index, c.name, sec, o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of 8 criteria passed\n", 8 - failed);
    return failed ? 1 : 0;
}
