#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "msp/harness.hpp"
#include "msp/lifts.hpp"
#include "msp/tree_dp.hpp"

namespace {

void print_decision(const msp::ProblemInstance& inst, const msp::Decision& d) {
    std::cout << "x_hat:";
    for (long v : d.x_hat) std::cout << ' ' << v;
    std::cout << '\n';
    for (int v = 0; v < inst.n; ++v) {
        std::cout << "v" << v << " delta: {";
        for (std::size_t k = 0; k < d.delta[v].size(); ++k)
            std::cout << (k ? "," : "") << d.delta[v][k];
        std::cout << "} mu:";
        for (const auto& x : d.mu[v]) std::cout << ' ' << x.str();
        std::cout << '\n';
    }
}

std::vector<std::vector<int>> perms_from_spec(const std::string& spec,
                                              std::size_t edges, int fold) {
    if (spec == "all-swap") {
        if (fold != 2) throw msp::ParseError("all-swap requires --fold 2");
        return msp::all_swap_perms(edges);
    }
    if (spec.rfind("random:", 0) == 0)
        return msp::random_perms(edges, fold, std::stoull(spec.substr(7)));
    std::ifstream in(spec);
    if (!in) throw msp::ParseError("cannot open perms file: " + spec);
    std::vector<std::vector<int>> perms;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::vector<int> p;
        int x;
        while (ls >> x) p.push_back(x);
        perms.push_back(std::move(p));
    }
    return perms;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact min-sum / LP toolkit for packing and covering programs"};
    app.require_subcommand(1);

    std::string instance_path, trace_path, csv_path, perms_spec = "all-swap";
    std::string family = "random", params, out_path, config_path;
    int iterations = 1, root = 0, t_max = 4, slack = 0, fold = 2, target = 6;
    std::uint64_t seed = 0;
    bool normalize = false;

    auto* gen = app.add_subcommand("gen", "generate an instance");
    gen->add_option("--family", family, "random|triangle-mwis|path-matching|b-matching|set-cover");
    gen->add_option("--params", params, "generator params as JSON");
    gen->add_option("--seed", seed);
    gen->add_option("--out", out_path, "output file (default stdout)");

    auto* ms = app.add_subcommand("minsum", "run the min-sum algorithm");
    ms->add_option("--instance", instance_path)->required();
    ms->add_option("--iterations", iterations)->required();
    ms->add_option("--trace", trace_path, "per-iteration message table dump");
    ms->add_flag("--normalize", normalize, "subtract per-table maxima each iteration");

    auto* td = app.add_subcommand("tree-dp", "computation-tree DP oracle");
    td->add_option("--instance", instance_path)->required();
    td->add_option("--root", root)->required();
    td->add_option("--iterations", iterations)->required();

    auto* lp = app.add_subcommand("solve-lp", "exact LP relaxation");
    lp->add_option("--instance", instance_path)->required();

    auto* lf = app.add_subcommand("lift", "build an M-lift of the factor graph");
    lf->add_option("--instance", instance_path)->required();
    lf->add_option("--fold", fold);
    lf->add_option("--perms", perms_spec, "file | all-swap | random:<seed>");
    lf->add_option("--out", out_path, "write the lifted instance here");
    auto* amp = lf->add_subcommand("amplify", "repeated girth doubling");
    amp->add_option("--target", target)->required();

    auto* osc = app.add_subcommand("oscillation", "weak-oscillation check");
    osc->add_option("--instance", instance_path)->required();
    osc->add_option("--t-max", t_max);
    osc->add_option("--csv", csv_path);

    auto* conv = app.add_subcommand("convergence", "convergence-threshold check");
    conv->add_option("--instance", instance_path)->required();
    conv->add_option("--slack", slack);

    auto* sw = app.add_subcommand("sweep", "sweep a generator family");
    sw->add_option("--config", config_path)->required();
    sw->add_option("--csv", csv_path, "output CSV (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            auto inst = msp::generate(family, params, seed);
            std::string text = msp::serialize_instance(inst);
            if (out_path.empty()) {
                std::cout << text;
            } else {
                std::ofstream(out_path) << text;
            }
        } else if (ms->parsed()) {
            auto inst = msp::load_instance(instance_path);
            std::ofstream trace_file;
            std::ostream* trace = nullptr;
            if (!trace_path.empty()) {
                trace_file.open(trace_path);
                trace = &trace_file;
            }
            auto d = msp::run_minsum(inst, iterations, normalize, trace);
            print_decision(inst, d);
        } else if (td->parsed()) {
            auto inst = msp::load_instance(instance_path);
            auto base = inst.sense == msp::Sense::Covering
                            ? msp::complement_reduction(inst)
                            : inst;
            auto fg = msp::build_factor_graph(base);
            auto tree = msp::build_tree(fg, root, 2 * iterations);
            auto optima = msp::tree_optima(fg, tree);
            for (long beta = 0; beta < static_cast<long>(optima.size()); ++beta)
                std::cout << "beta " << beta << ": " << optima[beta].str() << '\n';
            auto root_set = msp::opt_dp_root_set(fg, tree);
            std::cout << "root set: {";
            for (std::size_t k = 0; k < root_set.size(); ++k)
                std::cout << (k ? "," : "") << root_set[k];
            std::cout << "}\n";
        } else if (lp->parsed()) {
            auto inst = msp::load_instance(instance_path);
            auto res = msp::solve_lp(inst);
            std::cout << "opt: " << msp::rat_str(res.opt_value) << '\n';
            std::cout << "optimal vertices:\n";
            for (std::size_t idx : res.opt_indices) {
                std::cout << "  (";
                for (int i = 0; i < inst.n; ++i)
                    std::cout << (i ? ", " : "") << msp::rat_str(res.vertices[idx][i]);
                std::cout << ")\n";
            }
            auto vr = msp::variable_range(inst, res);
            for (int i = 0; i < inst.n; ++i)
                std::cout << "x" << i << " range: [" << msp::rat_str(vr.x_min[i])
                          << ", " << msp::rat_str(vr.x_max[i]) << "]\n";
            auto cls = msp::classify(inst, res);
            std::cout << "classification: " << msp::lp_class_str(cls) << '\n';
            if (cls != msp::LpClass::Multiple && res.vertices.size() > 1)
                std::cout << "c: " << msp::rat_str(msp::compute_c(inst, res)) << '\n';
        } else if (lf->parsed()) {
            auto inst = msp::load_instance(instance_path);
            auto fg = msp::build_factor_graph(
                inst.sense == msp::Sense::Covering ? msp::complement_reduction(inst)
                                                   : inst);
            if (amp->parsed()) {
                auto lifted = msp::amplify_girth(fg.graph(), target);
                auto gi = msp::girth(lifted.lifted);
                std::cout << "fold: " << lifted.fold << "\n"
                          << "girth: " << (gi ? std::to_string(*gi) : "inf") << '\n';
            } else {
                std::size_t edges = 0;
                for (const auto& row : inst.rows) edges += row.size();
                auto perms = perms_from_spec(perms_spec, edges, fold);
                auto lifted = msp::lift_instance(inst, fold, perms);
                auto lg = msp::build_factor_graph(
                    lifted.sense == msp::Sense::Covering
                        ? msp::complement_reduction(lifted)
                        : lifted);
                auto gi = msp::girth(lg.graph());
                std::cout << "lifted n: " << lifted.n << " m: " << lifted.m
                          << " girth: " << (gi ? std::to_string(*gi) : "inf") << '\n';
                if (!out_path.empty())
                    std::ofstream(out_path) << msp::serialize_instance(lifted);
            }
        } else if (osc->parsed()) {
            auto inst = msp::load_instance(instance_path);
            auto rep = msp::check_weak_oscillation(inst, t_max);
            for (const auto& row : rep.rows)
                std::cout << "r=" << row.r << " t=" << row.t << " (" << row.parity
                          << ") delta=[" << row.delta_min << "," << row.delta_max
                          << "] x=[" << msp::rat_str(row.x_min) << ","
                          << msp::rat_str(row.x_max) << "] x_hat=" << row.x_hat
                          << ' ' << (row.verdict ? "pass" : "FAIL") << '\n';
            std::cout << "oscillation: " << (rep.all_pass ? "pass" : "FAIL")
                      << "  rounding: " << (rep.rounding_pass ? "pass" : "FAIL")
                      << "  pinning: " << (rep.pinning_pass ? "pass" : "FAIL") << '\n';
            if (!csv_path.empty()) {
                std::ofstream csv(csv_path);
                csv << "instance_id,r,t,parity,delta_min,delta_max,x_min,x_max,x_hat,verdict\n";
                for (const auto& row : rep.rows)
                    csv << row.instance_id << ',' << row.r << ',' << row.t << ','
                        << row.parity << ',' << row.delta_min << ',' << row.delta_max
                        << ',' << msp::rat_str(row.x_min) << ','
                        << msp::rat_str(row.x_max) << ',' << row.x_hat << ','
                        << (row.verdict ? "pass" : "fail") << '\n';
            }
            return rep.all_pass && rep.rounding_pass && rep.pinning_pass ? 0 : 1;
        } else if (conv->parsed()) {
            auto inst = msp::load_instance(instance_path);
            auto rep = msp::check_convergence(inst, slack);
            if (!rep.preconditions_met) {
                std::cout << "precondition-violation: " << rep.reason << '\n';
                return 0;
            }
            std::cout << "c: " << msp::rat_str(rep.c)
                      << " w_max: " << msp::rat_str(rep.w_max)
                      << " t*: " << rep.t_star << '\n';
            std::cout << "x*:";
            for (long v : rep.x_star) std::cout << ' ' << v;
            std::cout << '\n' << (rep.pass ? "pass" : "FAIL") << '\n';
            return rep.pass ? 0 : 1;
        } else if (sw->parsed()) {
            std::ifstream in(config_path);
            if (!in) throw msp::ParseError("cannot open config: " + config_path);
            std::stringstream ss;
            ss << in.rdbuf();
            msp::SweepSummary summary;
            if (csv_path.empty()) {
                summary = msp::sweep(ss.str(), std::cout);
            } else {
                std::ofstream csv(csv_path);
                summary = msp::sweep(ss.str(), csv);
            }
            std::cerr << "instances: " << summary.instances
                      << " skipped: " << summary.skipped
                      << " violations: " << summary.violations
                      << " convergence checked/failed: " << summary.convergence_checked
                      << '/' << summary.convergence_failures << '\n';
            return summary.violations == 0 && summary.convergence_failures == 0 ? 0 : 1;
        }
    } catch (const msp::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
