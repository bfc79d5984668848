#include "msp/harness.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "msp/errors.hpp"

namespace msp {

using nlohmann::json;

namespace {

// If the decision at an even iteration equals the decision at an odd one,
// that value is squeezed between the two oscillation bounds, so the whole
// optimal face is pinned there.
bool cross_parity_pinned(long even_hat, long odd_hat, const Rat& x_min,
                         const Rat& x_max) {
    if (even_hat != odd_hat) return true;
    return x_min == x_max && x_min == even_hat;
}

} // namespace

OscillationReport check_weak_oscillation(const ProblemInstance& inst, int t_max,
                                         const std::string& instance_id) {
    LpResult lp = solve_lp(inst);
    VariableRange vr = variable_range(inst, lp);

    OscillationReport report;
    std::vector<Decision> decisions;
    for (int t = 1; t <= t_max; ++t)
        decisions.push_back(run_minsum(inst, t));

    for (int t = 1; t <= t_max; ++t) {
        const Decision& d = decisions[t - 1];
        bool even = t % 2 == 0;
        for (int r = 0; r < inst.n; ++r) {
            OscRow row;
            row.instance_id = instance_id;
            row.r = r;
            row.t = t;
            row.parity = even ? "even" : "odd";
            row.delta_min = d.delta[r].front();
            row.delta_max = d.delta[r].back();
            row.x_min = vr.x_min[r];
            row.x_max = vr.x_max[r];
            row.x_hat = d.x_hat[r];
            if (inst.sense == Sense::Packing)
                row.verdict = even ? Rat(row.delta_max) >= row.x_max
                                   : Rat(row.delta_min) <= row.x_min;
            else
                row.verdict = even ? Rat(row.delta_min) <= row.x_min
                                   : Rat(row.delta_max) >= row.x_max;
            if (!row.verdict) report.all_pass = false;

            // rounding bounds at fractional optimal components
            // (packing form; the covering analogue flips through z = X - x).
            for (std::size_t idx : lp.opt_indices) {
                const Rat& xr = lp.vertices[idx][r];
                if (is_integer(xr)) continue;
                bool ok;
                if (inst.sense == Sense::Packing)
                    ok = even ? row.x_hat >= ceil_long(xr)
                              : row.x_hat <= floor_long(xr);
                else
                    ok = even ? row.x_hat <= floor_long(xr)
                              : row.x_hat >= ceil_long(xr);
                if (!ok) report.rounding_pass = false;
            }
            report.rows.push_back(std::move(row));
        }
    }

    // cross-parity agreement over every even/odd iteration pair
    for (int t = 2; t <= t_max; t += 2)
        for (int s = 1; s <= t_max; s += 2)
            for (int r = 0; r < inst.n; ++r)
                if (!cross_parity_pinned(decisions[t - 1].x_hat[r],
                                         decisions[s - 1].x_hat[r],
                                         vr.x_min[r], vr.x_max[r]))
                    report.pinning_pass = false;
    return report;
}

ConvergenceReport check_convergence(const ProblemInstance& inst, int slack) {
    ConvergenceReport rep;

    // column degrees
    std::vector<int> col_deg(inst.n, 0);
    for (const auto& row : inst.rows)
        for (int i : row) ++col_deg[i];
    if (std::any_of(col_deg.begin(), col_deg.end(), [](int d) { return d > 2; })) {
        rep.reason = "a column has more than two 1s";
        return rep;
    }

    LpResult lp = solve_lp(inst);
    if (classify(inst, lp) != LpClass::UniqueIntegral) {
        rep.reason = "LP optimum is not unique-integral";
        return rep;
    }
    for (int i = 0; i < inst.n; ++i) {
        const Rat& v = lp.witness[i];
        if (v != 0 && v != inst.box[i]) {
            rep.reason = "optimum is not on the box boundary";
            return rep;
        }
    }
    if (lp.vertices.size() == 1) {
        rep.reason = "polytope is a single point; c(P,w) undefined";
        return rep;
    }

    rep.preconditions_met = true;
    rep.c = compute_c(inst, lp);
    rep.w_max = inst.w.empty() ? Rat(0) : *std::max_element(inst.w.begin(), inst.w.end());
    for (const Rat& v : lp.witness) rep.x_star.push_back(floor_long(v));

    // smallest integer t with t > w_max/c + 1/2
    Rat bound = rep.w_max / rep.c + rat(1, 2);
    rep.t_star = static_cast<int>(floor_long(bound)) + 1;

    rep.pass = true;
    for (int t = rep.t_star; t <= rep.t_star + slack; ++t) {
        rep.checked_t.push_back(t);
        Decision d = run_minsum(inst, t);
        if (d.x_hat != rep.x_star) rep.pass = false;
    }
    return rep;
}

SweepSummary sweep(const std::string& config_json, std::ostream& csv) {
    json cfg;
    try {
        cfg = json::parse(config_json);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid sweep config: ") + e.what());
    }
    std::string family = cfg.at("family").get<std::string>();
    std::string params = cfg.contains("params") ? cfg["params"].dump() : "";
    std::uint64_t seed_lo = cfg.at("seeds")[0].get<std::uint64_t>();
    std::uint64_t seed_hi = cfg.at("seeds")[1].get<std::uint64_t>();
    int t_max = cfg.at("t_max").get<int>();
    bool conv = cfg.contains("convergence") && cfg["convergence"].get<bool>();
    int slack = cfg.contains("slack") ? cfg["slack"].get<int>() : 0;

    SweepSummary summary;
    csv << "instance_id,r,t,parity,delta_min,delta_max,x_min,x_max,x_hat,verdict\n";
    std::vector<std::string> lines;
    for (std::uint64_t seed = seed_lo; seed < seed_hi; ++seed) {
        std::string id = family + ":" + std::to_string(seed);
        ProblemInstance inst;
        try {
            inst = generate(family, params, seed);
        } catch (const ParseError&) {
            throw;
        }
        OscillationReport rep;
        try {
            rep = check_weak_oscillation(inst, t_max, id);
        } catch (const ResourceError&) {
            ++summary.skipped;
            continue;
        } catch (const InfeasibleError&) {
            ++summary.skipped;
            continue;
        }
        ++summary.instances;
        for (const auto& row : rep.rows) {
            std::ostringstream os;
            os << row.instance_id << ',' << row.r << ',' << row.t << ','
               << row.parity << ',' << row.delta_min << ',' << row.delta_max << ','
               << rat_str(row.x_min) << ',' << rat_str(row.x_max) << ','
               << row.x_hat << ',' << (row.verdict ? "pass" : "fail");
            lines.push_back(os.str());
            if (!row.verdict) ++summary.violations;
        }
        if (!rep.pinning_pass || !rep.rounding_pass) ++summary.violations;
        if (conv) {
            ConvergenceReport cr = check_convergence(inst, slack);
            if (cr.preconditions_met) {
                ++summary.convergence_checked;
                if (!cr.pass) ++summary.convergence_failures;
            }
        }
    }
    std::sort(lines.begin(), lines.end());
    for (const auto& line : lines) csv << line << '\n';
    return summary;
}

} // namespace msp
