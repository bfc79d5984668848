#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "msp/lp_exact.hpp"
#include "msp/minsum.hpp"

namespace msp {

struct OscRow {
    std::string instance_id;
    int r = 0;
    int t = 0;
    std::string parity;    // "even" | "odd"
    long delta_min = 0;
    long delta_max = 0;
    Rat x_min;
    Rat x_max;
    long x_hat = 0;
    bool verdict = false;  // oscillation inequality for this (r, t)
};

struct OscillationReport {
    std::vector<OscRow> rows;
    bool all_pass = true;       // every per-(r, t) oscillation inequality
    bool rounding_pass = true;  // fractional-component rounding bounds
    bool pinning_pass = true;   // agreeing cross-parity decisions are pinned
};

// Runs min-sum for t = 1..t_max against the exact LP optimal face and
// evaluates the oscillation inequalities (sense-appropriate), the rounding
// bounds at fractional optima, and the cross-parity pinning property.
OscillationReport check_weak_oscillation(const ProblemInstance& inst, int t_max,
                                         const std::string& instance_id = "");

struct ConvergenceReport {
    bool preconditions_met = false;
    std::string reason;          // which hypothesis failed, when not met
    Rat c;                       // c(P,w) on the packing side
    Rat w_max;
    int t_star = 0;              // smallest integer t > w_max/c + 1/2
    std::vector<long> x_star;    // unique integral LP optimum (instance sense)
    bool pass = false;           // x_hat == x_star at every checked t
    std::vector<int> checked_t;
};

// Convergence-threshold check: hypotheses (column degree <= 2, unique
// integral boundary optimum) are verified first; failure to meet them is
// reported, not thrown.
ConvergenceReport check_convergence(const ProblemInstance& inst, int slack = 0);

// Sweep config (JSON): { "family": ..., "params": {...}, "seeds": [lo, hi],
//   "t_max": k, "convergence": bool, "slack": k }.
// Emits sorted CSV rows: instance_id,r,t,parity,delta_min,delta_max,x_min,
// x_max,x_hat,verdict. Instances past the LP cap are skipped with a comment.
struct SweepSummary {
    int instances = 0;
    int skipped = 0;
    int violations = 0;
    int convergence_checked = 0;
    int convergence_failures = 0;
};

SweepSummary sweep(const std::string& config_json, std::ostream& csv);

} // namespace msp
