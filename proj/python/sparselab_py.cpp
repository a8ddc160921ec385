#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sparselab/analysis.hpp"
#include "sparselab/campaign.hpp"
#include "sparselab/generators.hpp"
#include "sparselab/io.hpp"
#include "sparselab/reductions.hpp"
#include "sparselab/sparsify.hpp"
#include "sparselab/validate.hpp"

namespace py = pybind11;
using namespace sparselab;
using nlohmann::json;

namespace {

json to_native(const py::handle& obj) {
    return json::parse(py::module_::import("json").attr("dumps")(obj).cast<std::string>());
}

py::object to_python(const json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

/// A dict in the JSON form, or text in any supported file format.
Instance as_instance(const py::object& obj) {
    if (py::isinstance<py::str>(obj)) return parse_instance(obj.cast<std::string>());
    return instance_from_json(to_native(obj));
}

OracleBudget make_budget(std::optional<std::uint64_t> nodes, std::optional<double> timeout) {
    OracleBudget b;
    if (nodes) b.max_nodes = *nodes;
    if (timeout) b.timeout_seconds = *timeout;
    return b;
}

py::dict verdict_dict(const Verdict& v) {
    py::dict d;
    d["feasible"] = v.feasible;
    d["value"] = v.value;
    if (!v.feasible) d["reason"] = v.reason;
    return d;
}

class PyReduction {
public:
    explicit PyReduction(Reduction r) : r_(std::move(r)) {}

    std::string name() const { return r_.name; }
    std::string transfer() const { return r_.transfer.description; }
    std::optional<double> apply_transfer(double ratio) const {
        if (!r_.transfer.apply) return std::nullopt;
        return r_.transfer.apply(ratio);
    }

    py::object forward(const py::object& instance) {
        source_ = as_instance(instance);
        result_ = r_.forward(*source_);
        return to_python(to_json(result_->target));
    }

    py::object backward(const py::object& candidate) const {
        if (!source_) throw std::logic_error("backward called before forward");
        return to_python(to_json(r_.backward(*source_, *result_, candidate_from_json(to_native(candidate)))));
    }

    py::object gadget() const {
        if (!result_) throw std::logic_error("gadget called before forward");
        return to_python(result_->gadget.json());
    }

private:
    Reduction r_;
    std::optional<Instance> source_;
    std::optional<ReductionResult> result_;
};

}  // namespace

PYBIND11_MODULE(_sparselab, m) {
    m.doc() = "Sparsification, reductions and exact oracles for graph optimization problems";

    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    m.def("graph", [](const std::string& name) { return to_python(to_json(graphs::named(name))); }, py::arg("name"),
          "Named graph (k3, c5, petersen, star5, ...) in JSON form.");
    m.def(
        "gnp",
        [](int n, double p, std::uint64_t seed) {
            Rng rng(seed);
            return to_python(to_json(graphs::gnp(n, p, rng)));
        },
        py::arg("n"), py::arg("p"), py::arg("seed") = 42);
    m.def(
        "parse_instance",
        [](const std::string& text, std::optional<std::string> format) {
            std::optional<Format> f;
            if (format) f = parse_format(*format);
            return to_python(to_json(parse_instance(text, f)));
        },
        py::arg("text"), py::arg("format") = py::none());
    m.def(
        "format_instance",
        [](const py::object& instance, const std::string& format) {
            return format_instance(as_instance(instance), parse_format(format));
        },
        py::arg("instance"), py::arg("format"));

    m.def(
        "solve",
        [](const std::string& problem, const py::object& instance, std::optional<int> colors,
           std::optional<std::uint64_t> budget_nodes, std::optional<double> timeout_sec) {
            Problem p = parse_problem(problem);
            auto inst = as_instance(instance);
            Candidate c;
            {
                py::gil_scoped_release release;
                c = solve_exact(p, inst, make_budget(budget_nodes, timeout_sec), ProblemParams{colors});
            }
            return to_python(to_json(c));
        },
        py::arg("problem"), py::arg("instance"), py::arg("colors") = py::none(), py::arg("budget_nodes") = py::none(),
        py::arg("timeout_sec") = py::none(), "Exact optimum as a candidate dict.");
    m.def(
        "validate",
        [](const std::string& problem, const py::object& instance, const py::object& candidate,
           std::optional<int> colors) {
            return verdict_dict(validate(parse_problem(problem), as_instance(instance),
                                         candidate_from_json(to_native(candidate)), ProblemParams{colors}));
        },
        py::arg("problem"), py::arg("instance"), py::arg("candidate"), py::arg("colors") = py::none());
    m.def(
        "param_is_excavation",
        [](const py::object& instance) {
            auto r = param_is_excavation(std::get<Graph>(as_instance(instance)));
            py::dict d = to_python(to_json(r.solution));
            d["enumerated_subsets"] = r.enumerated_subsets;
            d["union_size"] = r.union_size;
            return d;
        },
        py::arg("graph"));

    m.def(
        "sparsify",
        [](const py::object& instance, const std::string& mode, const std::string& policy,
           std::optional<std::size_t> limit) {
            auto g = std::get<Graph>(as_instance(instance));
            auto stream = superlinear_sparsify(g, parse_mode(mode), ThresholdPolicy::parse(policy));
            py::list leaves;
            while (!limit || leaves.size() < *limit) {
                auto leaf = stream.next();
                if (!leaf) break;
                leaves.append(to_python(to_json(*leaf)));
            }
            return leaves;
        },
        py::arg("graph"), py::arg("mode") = "is", py::arg("policy") = "const:2", py::arg("limit") = py::none(),
        "Leaves of the superlinear sparsifier in depth-first order.");

    py::class_<PyReduction>(m, "Reduction")
        .def_property_readonly("name", &PyReduction::name)
        .def_property_readonly("transfer", &PyReduction::transfer)
        .def("apply_transfer", &PyReduction::apply_transfer, py::arg("ratio"))
        .def("forward", &PyReduction::forward, py::arg("instance"))
        .def("backward", &PyReduction::backward, py::arg("candidate"))
        .def("gadget", &PyReduction::gadget);
    m.def(
        "reduction",
        [](const std::string& chain, std::optional<int> pendants, int colors, std::optional<long> target) {
            return PyReduction(parse_chain(chain, ReductionParams{pendants, colors, target}));
        },
        py::arg("chain"), py::arg("pendants") = py::none(), py::arg("colors") = 2, py::arg("target") = py::none(),
        "Reduction chain such as 'vc:ds' or 'vc:ds,ds:setcover'.");
    m.def("available_reductions", [] {
        std::vector<std::string> out;
        for (auto [from, to] : available_reductions())
            out.push_back(std::string(short_name(from)) + ":" + std::string(short_name(to)));
        return out;
    });

    m.def("branching_root", [](int b) { return static_cast<double>(branching_root(b)); }, py::arg("b"));
    m.def("g_of_lambda", &g_of_lambda, py::arg("lam"));
    m.def("mu_lower_bound", &mu_lower_bound, py::arg("lam"), py::arg("alpha") = 1.0, py::arg("beta") = 1.0);
    m.def("leaf_edge_bound", &leaf_edge_bound, py::arg("n_leaf"), py::arg("lam"));
    m.def("reference_tables", [] { return to_python(reference_tables().json()); });
    m.def("reference_tables_text", [] { return reference_tables().text(); });

    m.def(
        "verify",
        [](const py::object& config) {
            auto c = config.is_none() ? CampaignConfig{} : CampaignConfig::from_json(to_native(config));
            CampaignReport report;
            {
                py::gil_scoped_release release;
                report = run_campaign(c);
            }
            return to_python(report.json());
        },
        py::arg("config") = py::none(), "Runs a verification campaign and returns its report.");
}
