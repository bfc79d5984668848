#pragma once

#include <optional>
#include <span>
#include <vector>

#include "msp/extended.hpp"
#include "msp/instance.hpp"

namespace msp {

// Plain undirected simple graph, used for girth computation and lifts.
struct Graph {
    int num_vertices = 0;
    std::vector<std::pair<int, int>> edges;

    std::vector<std::vector<int>> adjacency() const;
};

// Shortest cycle length; nullopt for forests.
std::optional<int> girth(const Graph& g);

// Bipartite factor graph of an instance: variable vertices carry (w_i, X_i),
// constraint vertices carry the integer budget and the sense.
struct FactorGraph {
    int n = 0;
    int m = 0;
    Sense sense = Sense::Packing;
    std::vector<Rat> w;
    std::vector<long> box;
    std::vector<long> budgets;                  // per constraint
    std::vector<std::vector<int>> con_neighbors; // rows of A
    std::vector<std::vector<int>> var_neighbors; // constraints touching each var

    // Underlying graph: variables are 0..n-1, constraint j is n+j.
    Graph graph() const;

    std::string dot() const;
};

FactorGraph build_factor_graph(const ProblemInstance& inst);

// psi_C evaluated on a partial assignment y, one value per neighbor of
// constraint j in con_neighbors[j] order.
ExtVal eval_factor(const FactorGraph& fg, int j, std::span<const long> y);

// sum_v phi_v(a_v) + sum_C psi_C(a|N(C)); equals w'a for valid a, otherwise
// the sense-appropriate infinity.
ExtVal objective(const FactorGraph& fg, const std::vector<long>& a);

} // namespace msp
