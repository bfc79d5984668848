#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "msp/rational.hpp"

namespace nlohmann {
template <typename T, typename SFINAE> struct adl_serializer;
}

namespace msp {

enum class Sense { Packing, Covering };

std::string sense_str(Sense s);
Sense parse_sense(const std::string& s);

// Packing/covering program over a zero-one matrix with box constraints.
// rows[j] holds the sorted column indices with A[j][i] == 1.
struct ProblemInstance {
    int n = 0;
    int m = 0;
    std::vector<std::vector<int>> rows;
    std::vector<Rat> b;
    std::vector<Rat> w;
    std::vector<long> box; // X
    Sense sense = Sense::Packing;

    // Throws on structural violations (empty rows, duplicates, negative b/X, ...).
    void check() const;

    // Integer budget of row j: floor(b_j) for packing, ceil(b_j) for covering.
    long budget(int j) const;

    bool operator==(const ProblemInstance&) const = default;
};

bool validate_assignment(const ProblemInstance& inst, const std::vector<long>& a);
bool validate_assignment(const ProblemInstance& inst, const std::vector<Rat>& a);

Rat objective_value(const ProblemInstance& inst, const std::vector<long>& a);
Rat objective_value(const ProblemInstance& inst, const std::vector<Rat>& a);

// Claim-1 complementation: covering instance -> packing instance with the
// same A, w, X and constraint vector d = A*X - b. Solutions map via
// z = X - x with w'z = w'X - w'x. Throws InfeasibleError if any d_j < 0.
ProblemInstance complement_reduction(const ProblemInstance& inst);

std::string serialize_instance(const ProblemInstance& inst);
ProblemInstance parse_instance(const std::string& text);
ProblemInstance load_instance(const std::string& path);

// Deterministic instance generators.
// Families: random, triangle-mwis, path-matching, b-matching, set-cover.
// Params are a JSON object (see README); unknown keys are rejected.
ProblemInstance generate(const std::string& family, const std::string& params_json,
                         std::uint64_t seed);

} // namespace msp
