// pybind11 surface: instances travel as JSON text, rationals as "p/q" strings.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "msp/harness.hpp"
#include "msp/lifts.hpp"
#include "msp/tree_dp.hpp"

namespace py = pybind11;
using namespace msp;

namespace {

ProblemInstance from_json(const std::string& text) { return parse_instance(text); }

std::vector<std::string> rat_strings(const std::vector<Rat>& xs) {
    std::vector<std::string> out;
    out.reserve(xs.size());
    for (const auto& x : xs) out.push_back(rat_str(x));
    return out;
}

py::dict decision_dict(const ProblemInstance& inst, const Decision& d) {
    py::dict out;
    out["x_hat"] = d.x_hat;
    out["delta"] = d.delta;
    std::vector<std::vector<std::string>> mu(inst.n);
    for (int v = 0; v < inst.n; ++v)
        for (const auto& x : d.mu[v]) mu[v].push_back(x.str());
    out["mu"] = mu;
    return out;
}

} // namespace

PYBIND11_MODULE(msp_native, mod) {
    mod.doc() = "exact min-sum / LP toolkit for packing and covering programs";

    mod.def("generate", [](const std::string& family, const std::string& params,
                           std::uint64_t seed) {
        return serialize_instance(generate(family, params, seed));
    }, py::arg("family"), py::arg("params") = "", py::arg("seed") = 0);

    mod.def("validate_instance", [](const std::string& text) {
        from_json(text).check();
        return true;
    });

    mod.def("minsum", [](const std::string& text, int iterations) {
        auto inst = from_json(text);
        return decision_dict(inst, run_minsum(inst, iterations));
    }, py::arg("instance"), py::arg("iterations"));

    mod.def("tree_dp", [](const std::string& text, int root, int iterations) {
        auto inst = from_json(text);
        auto base = inst.sense == Sense::Covering ? complement_reduction(inst) : inst;
        auto fg = build_factor_graph(base);
        auto tree = build_tree(fg, root, 2 * iterations);
        auto optima = tree_optima(fg, tree);
        py::dict out;
        std::vector<std::string> opt;
        for (const auto& x : optima) opt.push_back(x.str());
        out["optima"] = opt;
        out["root_set"] = opt_dp_root_set(fg, tree);
        return out;
    }, py::arg("instance"), py::arg("root"), py::arg("iterations"));

    mod.def("solve_lp", [](const std::string& text) {
        auto inst = from_json(text);
        auto res = solve_lp(inst);
        auto vr = variable_range(inst, res);
        py::dict out;
        out["opt"] = rat_str(res.opt_value);
        out["witness"] = rat_strings(res.witness);
        std::vector<std::vector<std::string>> verts;
        for (std::size_t idx : res.opt_indices)
            verts.push_back(rat_strings(res.vertices[idx]));
        out["optimal_vertices"] = verts;
        out["x_min"] = rat_strings(vr.x_min);
        out["x_max"] = rat_strings(vr.x_max);
        out["classification"] = lp_class_str(classify(inst, res));
        return out;
    }, py::arg("instance"));

    mod.def("uniqueness_margin", [](const std::string& text) {
        auto inst = from_json(text);
        return rat_str(compute_c(inst, solve_lp(inst)));
    }, py::arg("instance"));

    mod.def("lift", [](const std::string& text, int fold, std::uint64_t seed) {
        auto inst = from_json(text);
        std::size_t edges = 0;
        for (const auto& row : inst.rows) edges += row.size();
        return serialize_instance(lift_instance(inst, fold,
                                                random_perms(edges, fold, seed)));
    }, py::arg("instance"), py::arg("fold"), py::arg("seed") = 0);

    mod.def("girth", [](const std::string& text) -> py::object {
        auto inst = from_json(text);
        auto base = inst.sense == Sense::Covering ? complement_reduction(inst) : inst;
        auto gi = girth(build_factor_graph(base).graph());
        if (!gi) return py::none();
        return py::int_(*gi);
    }, py::arg("instance"));

    mod.def("oscillation", [](const std::string& text, int t_max) {
        auto inst = from_json(text);
        auto rep = check_weak_oscillation(inst, t_max);
        py::list rows;
        for (const auto& row : rep.rows) {
            py::dict r;
            r["r"] = row.r;
            r["t"] = row.t;
            r["parity"] = row.parity;
            r["delta_min"] = row.delta_min;
            r["delta_max"] = row.delta_max;
            r["x_min"] = rat_str(row.x_min);
            r["x_max"] = rat_str(row.x_max);
            r["x_hat"] = row.x_hat;
            r["verdict"] = row.verdict;
            rows.append(r);
        }
        py::dict out;
        out["rows"] = rows;
        out["all_pass"] = rep.all_pass;
        out["rounding_pass"] = rep.rounding_pass;
        out["pinning_pass"] = rep.pinning_pass;
        return out;
    }, py::arg("instance"), py::arg("t_max") = 4);

    mod.def("convergence", [](const std::string& text, int slack) {
        auto rep = check_convergence(from_json(text), slack);
        py::dict out;
        out["preconditions_met"] = rep.preconditions_met;
        out["reason"] = rep.reason;
        if (rep.preconditions_met) {
            out["c"] = rat_str(rep.c);
            out["w_max"] = rat_str(rep.w_max);
            out["t_star"] = rep.t_star;
            out["x_star"] = rep.x_star;
            out["pass"] = rep.pass;
        }
        return out;
    }, py::arg("instance"), py::arg("slack") = 0);

    mod.def("sweep", [](const std::string& config) {
        std::ostringstream csv;
        auto s = sweep(config, csv);
        py::dict out;
        out["csv"] = csv.str();
        out["instances"] = s.instances;
        out["skipped"] = s.skipped;
        out["violations"] = s.violations;
        return out;
    }, py::arg("config"));

    py::register_exception<Error>(mod, "MspError");
}
