#pragma once

#include <cstddef>
#include <vector>

#include "msp/factor_graph.hpp"

namespace msp {

// Path-prefix tree rooted at a variable vertex: nodes are backtrack-free
// paths of length <= h. Variable paths sit at even depth, constraint paths
// at odd depth. Vertex ids follow FactorGraph::graph() (constraint j is n+j).
struct PathPrefixTree {
    struct Node {
        int vertex;      // endpoint t(p) of the path
        int parent;      // node index, -1 for the root
        int depth;
        std::vector<int> children;
    };

    int root_var = 0;
    int height = 0;
    std::vector<Node> nodes; // nodes[0] is the root
};

PathPrefixTree build_tree(const FactorGraph& fg, int r, int h,
                          std::size_t node_cap = 1'000'000);

// Optimum of the tree objective over valid assignments with the root pinned
// to beta; -inf when no valid completion exists.
ExtVal tree_optimum(const FactorGraph& fg, const PathPrefixTree& tree, long beta);

// All root-pinned optima at once (beta = 0..X_r).
std::vector<ExtVal> tree_optima(const FactorGraph& fg, const PathPrefixTree& tree);

// { beta : tree_optimum(beta) attains the max }; tree must have height 2t.
std::vector<long> opt_dp_root_set(const FactorGraph& fg, const PathPrefixTree& tree);

} // namespace msp
