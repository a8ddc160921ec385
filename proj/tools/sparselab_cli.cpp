#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "sparselab/analysis.hpp"
#include "sparselab/campaign.hpp"
#include "sparselab/generators.hpp"
#include "sparselab/io.hpp"
#include "sparselab/oracles.hpp"
#include "sparselab/reductions.hpp"
#include "sparselab/sparsify.hpp"
#include "sparselab/validate.hpp"

namespace {

using namespace sparselab;
using nlohmann::json;

constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct Globals {
    bool json = false;
    std::uint64_t seed = 42;
    std::uint64_t budget_nodes = OracleBudget{}.max_nodes;
    double timeout_sec = 0;

    OracleBudget budget() const {
        OracleBudget b;
        b.max_nodes = budget_nodes;
        b.timeout_seconds = timeout_sec;
        return b;
    }
};

/// A file path, or a generator name such as "petersen", "k4", "c5", "star5".
Instance load(const std::string& spec, const std::string& format) {
    std::optional<Format> f;
    if (!format.empty()) f = parse_format(format);
    if (std::filesystem::exists(spec)) return read_instance(spec, f);
    try {
        return graphs::named(spec);
    } catch (const std::invalid_argument&) {
        throw std::runtime_error("no such file or generator: " + spec);
    }
}

const Graph& need_graph(const Instance& instance) {
    const auto* g = std::get_if<Graph>(&instance);
    if (!g) throw std::invalid_argument("this command needs a graph instance");
    return *g;
}

json describe(const Instance& instance) {
    return std::visit(
        [](const auto& value) -> json {
            using T = std::decay_t<decltype(value)>;
            if constexpr (std::is_same_v<T, Graph>)
                return {{"kind", value.is_directed() ? "digraph" : "graph"},
                        {"vertices", value.order()},
                        {value.is_directed() ? "arcs" : "edges", value.size()},
                        {"max_degree", value.max_degree()}};
            else if constexpr (std::is_same_v<T, SetSystem>)
                return {{"kind", "setsystem"}, {"elements", value.ground()}, {"sets", value.count()},
                        {"frequency", value.frequency()}};
            else
                return {{"kind", "cnf"}, {"variables", value.num_vars()}, {"clauses", value.clauses().size()},
                        {"max_width", value.max_width()}};
        },
        instance);
}

void print_object(const json& j, bool as_json) {
    if (as_json) {
        std::cout << j.dump() << '\n';
        return;
    }
    for (const auto& [key, value] : j.items())
        std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
}

// ---------------------------------------------------------------------------

struct SparsifyArgs {
    std::string in, format, mode = "is", policy = "power:0.5", transcript;
    bool quiet = false, lift = false;
};

int cmd_sparsify(const SparsifyArgs& a, const Globals& g) {
    auto root = need_graph(load(a.in, a.format));
    auto mode = parse_mode(a.mode);
    auto policy = ThresholdPolicy::parse(a.policy);
    auto stream = superlinear_sparsify(root, mode, policy);
    int threshold = stream.threshold();
    bool lambda = policy.kind() == ThresholdPolicy::Kind::OfLambda;

    std::ofstream file;
    std::ostream* out = a.quiet ? nullptr : &std::cout;
    if (!a.transcript.empty()) {
        file.open(a.transcript);
        if (!file) throw std::runtime_error("cannot open " + a.transcript);
        out = &file;
    }
    Problem problem = mode == SolutionMode::IndependentSet ? Problem::IndependentSet : Problem::VertexCover;
    std::uint64_t leaves = 0, violations = 0;
    int max_leaf_degree = 0;
    std::optional<long> best;
    std::string first_violation;
    auto budget = g.budget();
    while (auto leaf = stream.next()) {
        ++leaves;
        max_leaf_degree = std::max(max_leaf_degree, leaf->residual.max_degree());
        auto problem_text = check_leaf(root, *leaf, mode, threshold);
        if (!problem_text && lambda &&
            static_cast<long>(leaf->residual.size()) > leaf_edge_bound(leaf->residual.order(), policy.value()))
            problem_text = "leaf edge count above the g(lambda)/2 bound";
        if (problem_text) {
            ++violations;
            if (first_violation.empty()) first_violation = "leaf " + leaf->path + ": " + *problem_text;
        }
        if (out) *out << to_json(*leaf).dump() << '\n';
        if (a.lift) {
            auto lifted = lift_solution(root, *leaf, solve_exact(problem, leaf->residual, budget), mode);
            if (!best || (is_maximization(problem) ? lifted.value > *best : lifted.value < *best)) best = lifted.value;
        }
    }
    double bound = leaf_count_bound(lambda ? threshold + 1 : threshold, root.order());
    bool count_ok = static_cast<double>(leaves) <= bound;
    if (!count_ok) ++violations;
    json summary{{"mode", mode_name(mode)},
                 {"policy", policy.to_string()},
                 {"vertices", root.order()},
                 {"leaf_degree_threshold", threshold},
                 {"leaves", leaves},
                 {"leaf_count_bound", bound},
                 {"max_leaf_degree", max_leaf_degree},
                 {"violations", violations},
                 {"passed", violations == 0}};
    if (lambda) {
        summary["g_lambda"] = g_of_lambda(policy.value());
        summary["edges_per_leaf_vertex"] = g_of_lambda(policy.value()) / 2;
    }
    if (a.lift) {
        long opt = solve_exact(problem, root, budget).value;
        summary["best_lifted_value"] = best ? *best : 0;
        summary["optimum"] = opt;
        if (!best || *best != opt) {
            ++violations;
            summary["violations"] = violations;
            summary["passed"] = false;
        }
    }
    if (!first_violation.empty()) summary["first_violation"] = first_violation;
    if (g.json) {
        std::cout << json{{"summary", summary}}.dump() << '\n';
    } else {
        std::cout << "summary:\n";
        for (const auto& [key, value] : summary.items())
            std::cout << "  " << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
    return violations == 0 ? 0 : kExitViolation;
}

// ---------------------------------------------------------------------------

struct ReduceArgs {
    std::string from, to, chain, in, format, out, out_format, gadget;
    std::optional<int> pendants;
    int colors = 2;
    std::optional<long> target;
};

json gadget_json(const ReductionResult& r) {
    if (r.stages.empty()) return r.gadget.json();
    json list = json::array();
    for (const auto& s : r.stages) list.push_back(gadget_json(s));
    return list;
}

int cmd_reduce(const ReduceArgs& a, const Globals& g) {
    ReductionParams params;
    params.pendants = a.pendants;
    params.colors = a.colors;
    params.target = a.target;
    Reduction red = [&] {
        if (!a.chain.empty()) {
            if (!a.from.empty() || !a.to.empty()) throw CLI::ValidationError("use either --chain or --from/--to");
            return parse_chain(a.chain, params);
        }
        if (a.from.empty() || a.to.empty()) throw CLI::ValidationError("--from and --to (or --chain) are required");
        return make_reduction(parse_problem(a.from), parse_problem(a.to), params);
    }();
    auto source = load(a.in, a.format);
    auto result = red.forward(source);
    if (!a.out.empty()) {
        Format f = a.out_format.empty() ? format_from_extension(a.out).value_or(Format::Json) : parse_format(a.out_format);
        write_instance(result.target, a.out, f);
    }
    if (!a.gadget.empty()) {
        std::ofstream file(a.gadget);
        if (!file) throw std::runtime_error("cannot open " + a.gadget);
        file << gadget_json(result).dump(2) << '\n';
    }
    json summary{{"reduction", red.name},
                 {"source", tag_name(red.source)},
                 {"target", tag_name(red.target)},
                 {"source_instance", describe(source)},
                 {"target_instance", describe(result.target)},
                 {"size_bound", red.size_bound},
                 {"ratio_transfer", red.transfer.description}};
    if (result.target_params.colors) summary["colors"] = *result.target_params.colors;
    print_object(summary, g.json);
    return 0;
}

// ---------------------------------------------------------------------------

struct SolveArgs {
    std::string problem, in, format, algo = "exact";
    std::optional<int> colors;
};

int cmd_solve(const SolveArgs& a, const Globals& g) {
    Problem p = parse_problem(a.problem);
    auto instance = load(a.in, a.format);
    ProblemParams params{a.colors};
    auto budget = g.budget();
    Candidate c;
    json extra = json::object();
    try {
        if (a.algo == "exact") {
            c = solve_exact(p, instance, budget, params);
        } else if (a.algo == "enumeration") {
            c = solve_by_enumeration(p, instance, params);
        } else if (a.algo == "param-excavation") {
            if (p != Problem::IndependentSet) throw CLI::ValidationError("param-excavation solves IS only");
            auto r = param_is_excavation(need_graph(instance));
            c = r.solution;
            extra = {{"enumerated_subsets", r.enumerated_subsets}, {"union_size", r.union_size}};
        } else if (a.algo == "kstep") {
            const auto& graph = need_graph(instance);
            if (p == Problem::IndependentSet) c = approx_is_kstep(graph, exact_subsolver(p, {}, budget));
            else if (p == Problem::ColorableSubgraph && a.colors)
                c = approx_lcol_kstep(graph, *a.colors, exact_subsolver(p, params, budget));
            else if (p == Problem::PlanarSubgraph) c = approx_planar_kstep(graph, exact_subsolver(p, {}, budget));
            else throw CLI::ValidationError("kstep supports is, lcol (with --colors) and planar");
        } else {
            throw CLI::ValidationError("unknown --algo '" + a.algo + "'");
        }
    } catch (const BudgetExceeded& e) {
        std::cout << json{{"problem", tag_name(p)}, {"error", "budget exceeded"}, {"detail", e.what()},
                          {"instance", describe(instance)}}
                         .dump()
                  << '\n';
        return kExitBudget;
    }
    auto verdict = validate(p, instance, c, params);
    auto out = to_json(c);
    out["algorithm"] = a.algo;
    out["feasible"] = verdict.feasible;
    for (const auto& [key, value] : extra.items()) out[key] = value;
    std::cout << (g.json ? out.dump() : out.dump(2)) << '\n';
    return verdict.feasible ? 0 : kExitViolation;
}

// ---------------------------------------------------------------------------

struct AnalyzeArgs {
    std::string what;
    int b = 2;
    double lambda = 1.18, alpha = 1, beta = 1;
    long n_leaf = 0;
};

int cmd_analyze(const AnalyzeArgs& a, const Globals& g) {
    char buffer[64];
    if (a.what == "root") {
        long double r = branching_root(a.b);
        std::snprintf(buffer, sizeof buffer, "%.15Lf", r);
        print_object({{"b", a.b}, {"root", static_cast<double>(r)}, {"root_text", buffer},
                      {"residual", static_cast<double>(characteristic_residual(a.b, r))}},
                     g.json);
    } else if (a.what == "g") {
        int p = g_of_lambda(a.lambda);
        print_object({{"lambda", a.lambda}, {"g", p}, {"root_g_plus_1", static_cast<double>(branching_root(p + 1))}},
                     g.json);
    } else if (a.what == "mu") {
        double mu = mu_lower_bound(a.lambda, a.alpha, a.beta);
        std::snprintf(buffer, sizeof buffer, "%.5f", mu);
        print_object({{"lambda", a.lambda}, {"alpha", a.alpha}, {"beta", a.beta}, {"g", g_of_lambda(a.lambda)},
                      {"mu", mu}, {"mu_text", buffer}},
                     g.json);
    } else if (a.what == "leaf-edges") {
        print_object({{"n_leaf", a.n_leaf}, {"lambda", a.lambda}, {"bound", leaf_edge_bound(a.n_leaf, a.lambda)}},
                     g.json);
    } else if (a.what == "tables") {
        auto t = reference_tables();
        if (g.json) std::cout << t.json().dump() << '\n';
        else std::cout << t.text();
    } else {
        throw CLI::ValidationError("analyze expects root, g, mu, leaf-edges or tables");
    }
    return 0;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
    std::string config, family, golden;
    std::optional<int> count, min_order, max_order, degree, threads;
    std::vector<double> p;
    std::vector<std::string> named, suites;
};

int cmd_verify(const VerifyArgs& a, const Globals& g, bool seed_given) {
    json j = json::object();
    if (!a.config.empty()) {
        std::ifstream in(a.config);
        if (!in) throw std::runtime_error("cannot open " + a.config);
        j = json::parse(in);
    }
    if (seed_given || !j.contains("seed")) j["seed"] = g.seed;
    if (!a.family.empty()) j["family"] = a.family;
    if (a.count) j["count"] = *a.count;
    if (a.min_order) j["min_order"] = *a.min_order;
    if (a.max_order) j["max_order"] = *a.max_order;
    if (a.degree) j["degree"] = *a.degree;
    if (a.threads) j["threads"] = *a.threads;
    if (!a.p.empty()) j["p"] = a.p;
    if (!a.named.empty()) j["named"] = a.named;
    if (!a.suites.empty()) j["suites"] = a.suites;
    if (!a.golden.empty()) j["golden_dir"] = a.golden;
    if (g.budget_nodes != OracleBudget{}.max_nodes || !j.contains("budget_nodes")) j["budget_nodes"] = g.budget_nodes;
    if (g.timeout_sec > 0 || !j.contains("timeout_sec")) j["timeout_sec"] = g.timeout_sec;
    auto report = run_campaign(CampaignConfig::from_json(j));
    if (g.json) std::cout << report.json().dump() << '\n';
    else std::cout << report.text();
    return report.passed() ? 0 : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sparselab: approximation-preserving sparsifiers, reductions and exact oracles"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals globals;
    app.add_flag("--json", globals.json, "Emit JSON instead of text");
    auto* seed = app.add_option("--seed", globals.seed, "Campaign RNG seed");
    app.add_option("--budget-nodes", globals.budget_nodes, "Search-node cap for the exact solvers");
    app.add_option("--timeout-sec", globals.timeout_sec, "Wall-clock cap per exact solve (0: none)");

    SparsifyArgs sp;
    auto* sparsify = app.add_subcommand("sparsify", "Stream the leaves of the branching sparsifier");
    sparsify->add_option("--in", sp.in, "Graph file or generator name")->required();
    sparsify->add_option("--format", sp.format, "Input format (default: by extension or content)");
    sparsify->add_option("--mode", sp.mode, "is or vc")->capture_default_str();
    sparsify->add_option("--policy", sp.policy, "power:<eta> | const:<B> | lambda:<lambda>")->capture_default_str();
    sparsify->add_option("--transcript", sp.transcript, "Write the JSON-lines transcript here instead of stdout");
    sparsify->add_flag("--quiet", sp.quiet, "Do not print the transcript");
    sparsify->add_flag("--lift", sp.lift, "Solve every leaf exactly and check the lifted optimum");

    ReduceArgs rd;
    auto* reduce = app.add_subcommand("reduce", "Apply a reduction (or a chain) to an instance");
    reduce->add_option("--from", rd.from, "Source problem");
    reduce->add_option("--to", rd.to, "Target problem");
    reduce->add_option("--chain", rd.chain, "Comma-separated steps, e.g. vc:ds,ds:setcover");
    reduce->add_option("--in", rd.in, "Source instance file or generator name")->required();
    reduce->add_option("--format", rd.format, "Input format");
    reduce->add_option("--out", rd.out, "Write the target instance here");
    reduce->add_option("--out-format", rd.out_format, "Output format (default: by extension, else json)");
    reduce->add_option("--gadget", rd.gadget, "Write the gadget map JSON here");
    reduce->add_option("--pendants", rd.pendants, "Pendants per vertex for is:mmvc / is:ids");
    reduce->add_option("--colors", rd.colors, "l for is:lcol")->capture_default_str();
    reduce->add_option("--target", rd.target, "Decision target k for is:max2sat");

    SolveArgs sv;
    auto* solve = app.add_subcommand("solve", "Solve an instance and print the candidate as JSON");
    solve->add_option("problem", sv.problem, "Problem tag (is, vc, ds, ids, fvs, mmvc, setcover, ...)")->required();
    solve->add_option("file", sv.in, "Instance file or generator name")->required();
    solve->add_option("--format", sv.format, "Input format");
    solve->add_option("--algo", sv.algo, "exact | enumeration | param-excavation | kstep")->capture_default_str();
    solve->add_option("--colors", sv.colors, "l for lcol");

    AnalyzeArgs an;
    auto* analyze = app.add_subcommand("analyze", "Branching-root calculus and reference tables");
    analyze->add_option("what", an.what, "root | g | mu | leaf-edges | tables")->required();
    analyze->add_option("--b", an.b, "Degree b of X^b - X^(b-1) - 1");
    analyze->add_option("--lambda", an.lambda, "lambda in (1, 2)");
    analyze->add_option("--alpha", an.alpha, "Reduction size coefficient alpha");
    analyze->add_option("--beta", an.beta, "Reduction size coefficient beta");
    analyze->add_option("--n-leaf", an.n_leaf, "Leaf order for leaf-edges");

    VerifyArgs vf;
    auto* verify = app.add_subcommand("verify", "Run a seeded verification campaign");
    verify->add_option("--config", vf.config, "Campaign config JSON");
    verify->add_option("--family", vf.family, "gnp | regular | named");
    verify->add_option("--count", vf.count, "Number of instances");
    verify->add_option("--n-min", vf.min_order, "Smallest order");
    verify->add_option("--n-max", vf.max_order, "Largest order");
    verify->add_option("--p", vf.p, "Edge probabilities (gnp)");
    verify->add_option("--degree", vf.degree, "Degree (regular)");
    verify->add_option("--named", vf.named, "Generator names (named)");
    verify->add_option("--suite", vf.suites, "Suites to run (default: all)");
    verify->add_option("--threads", vf.threads, "Worker threads (capped by SPARSELAB_THREADS)");
    verify->add_option("--golden-dir", vf.golden, "Directory holding tables.txt");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitUsage;
    }
    try {
        if (*sparsify) return cmd_sparsify(sp, globals);
        if (*reduce) return cmd_reduce(rd, globals);
        if (*solve) return cmd_solve(sv, globals);
        if (*analyze) return cmd_analyze(an, globals);
        if (*verify) return cmd_verify(vf, globals, seed->count() > 0);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
