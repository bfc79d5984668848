#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "msp/factor_graph.hpp"
#include "msp/instance.hpp"

namespace msp::test {

// Single-variable instance: one row {0}, b = 1, w = 1, X = 2, packing.
inline ProblemInstance fixture_s() {
    ProblemInstance s;
    s.n = 1;
    s.m = 1;
    s.rows = {{0}};
    s.b = {rat(1)};
    s.w = {rat(1)};
    s.box = {2};
    s.sense = Sense::Packing;
    return s;
}

// Triangle MWIS relaxation: unique fractional optimum (1/2, 1/2, 1/2).
inline ProblemInstance fixture_t() {
    return generate("triangle-mwis", "", 0);
}

// Two-edge path matching with weights (2, 1): unique integral optimum (1, 0).
inline ProblemInstance fixture_m() {
    return generate("path-matching", "", 0);
}

// Calls fn for every integral point of ZBox(X).
inline void for_each_in_box(const std::vector<long>& box,
                            const std::function<void(const std::vector<long>&)>& fn) {
    std::vector<long> a(box.size(), 0);
    while (true) {
        fn(a);
        std::size_t k = 0;
        while (k < box.size()) {
            if (++a[k] <= box[k]) break;
            a[k++] = 0;
        }
        if (k == box.size()) break;
    }
}

// Brute-force integer optimum (nullopt when infeasible).
inline std::optional<Rat> brute_force_ip(const ProblemInstance& inst) {
    std::optional<Rat> best;
    for_each_in_box(inst.box, [&](const std::vector<long>& a) {
        if (!validate_assignment(inst, a)) return;
        Rat val = objective_value(inst, a);
        if (!best || (inst.sense == Sense::Packing ? val > *best : val < *best))
            best = val;
    });
    return best;
}

} // namespace msp::test
