#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "msp/factor_graph.hpp"

namespace msp {

// M-lift of a graph given by one permutation of {0..M-1} per base edge.
// Lifted vertex (v, k) has id v*M + k; base edge e = (u, v) contributes
// lifted edges (u,k)-(v, perms[e][k]).
struct Lift {
    Graph base;
    int fold = 1;
    std::vector<std::vector<int>> perms; // one per base edge, each size fold
    Graph lifted;
};

Lift build_lift(const Graph& base, int fold,
                const std::vector<std::vector<int>>& perms);

// Local-bijection condition of a covering map, checked on the lifted graph
// itself (projection = vertex id / fold). Tolerates hand-built bad lifts.
bool validate_covering_map(const Graph& base, const Graph& lifted, int fold);
bool validate_covering_map(const Lift& lift);

// Lifted problem instance over the factor-graph lift defined by one
// permutation per factor-graph edge (row-major edge order). Lifted variable
// (i, k) has column index i*fold + k.
ProblemInstance lift_instance(const ProblemInstance& base, int fold,
                              const std::vector<std::vector<int>>& perms);

// Convenience permutation builders (one per factor-graph edge).
std::vector<std::vector<int>> identity_perms(std::size_t edges, int fold);
std::vector<std::vector<int>> all_swap_perms(std::size_t edges);
std::vector<std::vector<int>> random_perms(std::size_t edges, int fold,
                                           std::uint64_t seed);

// x~_(v,k) = a_v; asserts the result is valid on the lifted instance.
std::vector<long> lift_assignment(const ProblemInstance& base,
                                  const ProblemInstance& lifted, int fold,
                                  const std::vector<long>& a);

// Per-fiber mean; asserts LP-feasibility on the base.
std::vector<Rat> average_assignment(const ProblemInstance& base, int fold,
                                    const std::vector<long>& lifted_values);

// 2^|E|-lift whose fibers are indexed by bit strings; edge i flips bit i.
// Guarantees girth(lifted) >= 2*girth(base).
Lift girth_doubling_lift(const Graph& g, std::size_t vertex_cap = 2'000'000);

// Repeated doubling until girth >= target (forests qualify immediately).
Lift amplify_girth(const Graph& g, int target, std::size_t vertex_cap = 2'000'000);

struct Realization {
    int fold;
    std::vector<std::vector<int>> perms;   // factor-graph edge perms
    std::vector<long> lifted_values;       // valid on lift_instance(...)
};

// Bounded backtracking search for an M-lift and integral valid assignment
// averaging to the given feasible rational x. Tries folds that are multiples
// of the lcm of denominators up to fold_max. not-found is a normal outcome.
std::optional<Realization> realize_fractional_solution(
    const ProblemInstance& inst, const std::vector<Rat>& x, int fold_max,
    std::size_t search_budget = 1'000'000);

} // namespace msp
