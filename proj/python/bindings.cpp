#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "logdegen/io.hpp"
#include "logdegen/verify.hpp"

namespace py = pybind11;
using namespace logdegen;

namespace {

Vec to_vec(const std::vector<long>& xs) {
    Vec v;
    for (long x : xs) v.push_back(Int(x));
    return v;
}

std::vector<Insertion> to_insertions(const TargetModel& t,
                                     const std::vector<std::pair<int, std::string>>& specs) {
    std::vector<Insertion> out;
    for (const auto& [m, name] : specs) {
        GradedClass cls = zero_class(t.x_cohomology);
        bool hit = false;
        for (size_t i = 0; i < t.x_cohomology.size(); ++i)
            if (t.x_cohomology.names[i] == name) {
                cls.coeffs[i] = 1;
                hit = true;
            }
        if (!hit) throw validation_error("unknown class name \"" + name + "\"");
        out.push_back({m, cls});
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact combinatorics of the degeneration formula";

    py::register_exception<validation_error>(m, "ValidationError");
    py::register_exception<search_cap_error>(m, "SearchCapError");
    py::register_exception<unresolved_query_error>(m, "UnresolvedQueryError");

    m.def(
        "enumerate_graphs",
        [](const std::string& target_json, int g, int n, const std::vector<long>& beta) {
            TargetModel t = load_target(target_json);
            std::vector<std::string> out;
            for (const auto& graph : enumerate_graphs(t, g, n, to_vec(beta)))
                out.push_back(save_decorated_graph(graph));
            return out;
        },
        py::arg("target_json"), py::arg("genus"), py::arg("markings"), py::arg("beta"),
        "All decorated bipartite graphs of the given type, as JSON documents.");

    m.def(
        "evaluate",
        [](const std::string& target_json, const std::string& table_json, int g, int n,
           const std::vector<long>& beta,
           const std::vector<std::pair<int, std::string>>& insertions) {
            TargetModel t = load_target(target_json);
            TableProvider provider(t, load_invariant_table(t, table_json));
            return rat_to_string(
                evaluate(t, g, n, to_vec(beta), to_insertions(t, insertions), provider));
        },
        py::arg("target_json"), py::arg("table_json"), py::arg("genus"), py::arg("markings"),
        py::arg("beta"), py::arg("insertions") = std::vector<std::pair<int, std::string>>{},
        "Evaluate the numerical formula with a table-backed provider; exact \"p/q\" result.");

    m.def(
        "evaluate_constant",
        [](const std::string& target_json, int g, int n, const std::vector<long>& beta,
           const std::string& value) {
            TargetModel t = load_target(target_json);
            ConstantProvider provider{rat_from_string(value)};
            return rat_to_string(evaluate(t, g, n, to_vec(beta), {}, provider));
        },
        py::arg("target_json"), py::arg("genus"), py::arg("markings"), py::arg("beta"),
        py::arg("value") = "1",
        "Evaluate with a constant synthetic provider (no insertions).");

    m.def(
        "splitting_rays",
        [](const std::string& curve_json) {
            CurveGraph cg = load_curve_graph(curve_json);
            BasicMonoidDual b = basic_dual_cone(cg);
            std::vector<py::dict> out;
            for (const auto& rho : splitting_rays(b)) {
                py::dict d;
                d["l"] = rho.l.get_str();
                std::vector<std::string> pos, lens;
                for (const auto& x : rho.positions) pos.push_back(x.get_str());
                for (const auto& x : rho.lengths) lens.push_back(x.get_str());
                d["positions"] = pos;
                d["lengths"] = lens;
                d["splitting_nodes"] = rho.splitting_nodes;
                d["facet_verified"] = verify_split_facet(cg, rho).verified;
                out.push_back(d);
            }
            return out;
        },
        py::arg("curve_json"),
        "Splitting rays of a curve graph with their facet-product witnesses.");

    m.def(
        "glue",
        [](const std::string& half1_json, const std::string& half2_json) {
            GlueResult r = glue_halves(load_curve_half(half1_json), load_curve_half(half2_json));
            py::dict d;
            d["curve_json"] = save_curve_graph(r.glued);
            d["l"] = r.l.get_str();
            std::vector<std::string> rho;
            for (const auto& x : r.rho) rho.push_back(x.get_str());
            d["rho"] = rho;
            return d;
        },
        py::arg("half1_json"), py::arg("half2_json"),
        "Glue two curve halves along matching half-edge labels.");

    m.def(
        "run_suite",
        [](const std::string& suite, unsigned long long seed, int size) {
            VerifyReport rep = run_suite(suite, seed, size);
            return std::make_pair(rep.passed, rep.text);
        },
        py::arg("suite"), py::arg("seed") = 0, py::arg("size") = 20,
        "Run a randomized verification suite; returns (passed, report).");

    m.def("suite_names", [] { return suite_names(); });
}
