#pragma once

#include <cstddef>
#include <vector>

#include "msp/instance.hpp"

namespace msp {

struct LpResult {
    Rat opt_value;
    std::vector<Rat> witness;                   // one optimal vertex
    std::vector<std::vector<Rat>> vertices;     // all basic feasible solutions,
                                                // deduplicated, lexicographic order
    std::vector<std::size_t> opt_indices;       // indices into vertices
};

struct VariableRange {
    std::vector<Rat> x_min;
    std::vector<Rat> x_max;
};

enum class LpClass { UniqueIntegral, UniqueFractional, Multiple };

std::string lp_class_str(LpClass c);

// Exact LP optimum by basic-feasible-solution enumeration: pick tight box
// constraints for a subset of variables and tight rows for the rest, solve
// the rational square system, keep feasible solutions. Throws
// InfeasibleError when no vertex is feasible, ResourceError past the cap.
LpResult solve_lp(const ProblemInstance& inst, std::size_t basis_cap = 5'000'000);

// Coordinate extrema over the optimal face (attained at optimal vertices).
VariableRange variable_range(const ProblemInstance& inst, const LpResult& lp);

LpClass classify(const ProblemInstance& inst, const LpResult& lp);

// Uniqueness margin c(P,w) = min over vertices x != x* of
// w'(x*-x)/||x*-x||_1 (numerator flipped for covering). Returns 0 when the
// optimum is not unique; throws DomainError when the polytope is a point.
Rat compute_c(const ProblemInstance& inst, const LpResult& lp);

} // namespace msp
