#include "msp/tree_dp.hpp"

#include <algorithm>

#include "msp/errors.hpp"

namespace msp {

PathPrefixTree build_tree(const FactorGraph& fg, int r, int h, std::size_t node_cap) {
    if (r < 0 || r >= fg.n) throw DomainError("root is not a variable vertex");
    if (h < 0) throw DomainError("negative tree height");
    Graph g = fg.graph();
    auto adj = g.adjacency();
    for (auto& a : adj) std::sort(a.begin(), a.end());

    PathPrefixTree tree;
    tree.root_var = r;
    tree.height = h;
    tree.nodes.push_back({r, -1, 0, {}});
    // BFS frontier expansion; a child may not revisit the node's predecessor
    std::size_t head = 0;
    while (head < tree.nodes.size()) {
        std::size_t p = head++;
        if (tree.nodes[p].depth == h) continue;
        int prev = tree.nodes[p].parent < 0 ? -1 : tree.nodes[tree.nodes[p].parent].vertex;
        for (int next : adj[tree.nodes[p].vertex]) {
            if (next == prev) continue;
            if (tree.nodes.size() >= node_cap)
                throw ResourceError("path-prefix tree exceeds node cap");
            tree.nodes[p].children.push_back(static_cast<int>(tree.nodes.size()));
            tree.nodes.push_back({next, static_cast<int>(p),
                                  tree.nodes[p].depth + 1, {}});
        }
    }
    return tree;
}

namespace {

// Exhaustive maximization over child value tuples with sum <= room.
// child_tables[k][z] is the subtree value of child k at value z.
ExtVal enumerate_children(const std::vector<const std::vector<ExtVal>*>& child_tables,
                          long room) {
    if (room < 0) return ExtVal::neg_inf();
    ExtVal best = ExtVal::neg_inf();
    std::vector<long> choice(child_tables.size(), 0);
    while (true) {
        long sum = 0;
        for (long z : choice) sum += z;
        if (sum <= room) {
            ExtVal val(0L);
            bool ok = true;
            for (std::size_t k = 0; k < choice.size(); ++k) {
                const ExtVal& x = (*child_tables[k])[choice[k]];
                if (x.is_neg_inf()) {
                    ok = false;
                    break;
                }
                val += x;
            }
            if (ok) best = max(best, val);
        }
        std::size_t k = 0;
        while (k < choice.size()) {
            if (++choice[k] < static_cast<long>(child_tables[k]->size())) break;
            choice[k++] = 0;
        }
        if (k == choice.size()) break;
    }
    return best;
}

// Knapsack fallback for wide constraint nodes.
ExtVal knapsack_children(const std::vector<const std::vector<ExtVal>*>& child_tables,
                         long room) {
    if (room < 0) return ExtVal::neg_inf();
    long box_sum = 0;
    for (const auto* tab : child_tables)
        box_sum += static_cast<long>(tab->size()) - 1;
    long cap = std::min(room, box_sum);
    std::vector<ExtVal> dp(cap + 1, ExtVal::neg_inf());
    dp[0] = ExtVal(0L);
    for (const auto* tab : child_tables) {
        long xu = static_cast<long>(tab->size()) - 1;
        std::vector<ExtVal> ndp(cap + 1, ExtVal::neg_inf());
        for (long s = 0; s <= cap; ++s)
            for (long z = 0; z <= std::min(xu, s); ++z) {
                if (dp[s - z].is_neg_inf() || (*tab)[z].is_neg_inf()) continue;
                ndp[s] = max(ndp[s], dp[s - z] + (*tab)[z]);
            }
        dp = std::move(ndp);
    }
    ExtVal best = ExtVal::neg_inf();
    for (const auto& x : dp) best = max(best, x);
    return best;
}

constexpr long kEnumerationCap = 10'000;

} // namespace

std::vector<ExtVal> tree_optima(const FactorGraph& fg, const PathPrefixTree& tree) {
    // tables[p][beta]: best subtree value at variable path p with value beta;
    // for constraint paths, indexed by the parent's value.
    std::vector<std::vector<ExtVal>> tables(tree.nodes.size());
    for (std::size_t idx = tree.nodes.size(); idx-- > 0;) {
        const auto& node = tree.nodes[idx];
        if (node.vertex < fg.n) {
            int v = node.vertex;
            std::vector<ExtVal> tab(fg.box[v] + 1);
            for (long beta = 0; beta <= fg.box[v]; ++beta) {
                ExtVal acc(fg.w[v] * beta);
                for (int c : node.children) acc += tables[c][beta];
                tab[beta] = acc;
            }
            tables[idx] = std::move(tab);
        } else {
            int j = node.vertex - fg.n;
            int parent_var = tree.nodes[node.parent].vertex;
            std::vector<const std::vector<ExtVal>*> child_tables;
            long space = 1;
            for (int c : node.children) {
                child_tables.push_back(&tables[c]);
                space *= static_cast<long>(tables[c].size());
                space = std::min(space, kEnumerationCap + 1);
            }
            std::vector<ExtVal> tab(fg.box[parent_var] + 1);
            for (long beta = 0; beta <= fg.box[parent_var]; ++beta) {
                long room = fg.budgets[j] - beta;
                tab[beta] = space <= kEnumerationCap
                                ? enumerate_children(child_tables, room)
                                : knapsack_children(child_tables, room);
            }
            tables[idx] = std::move(tab);
        }
    }
    return tables[0];
}

ExtVal tree_optimum(const FactorGraph& fg, const PathPrefixTree& tree, long beta) {
    if (beta < 0 || beta > fg.box[tree.root_var])
        throw DomainError("root value out of box");
    return tree_optima(fg, tree)[beta];
}

std::vector<long> opt_dp_root_set(const FactorGraph& fg, const PathPrefixTree& tree) {
    auto optima = tree_optima(fg, tree);
    ExtVal best = ExtVal::neg_inf();
    for (const auto& x : optima) best = max(best, x);
    if (!best.is_finite())
        throw InfeasibleError("no valid assignment at any root value");
    std::vector<long> out;
    for (long beta = 0; beta < static_cast<long>(optima.size()); ++beta)
        if (optima[beta] == best) out.push_back(beta);
    return out;
}

} // namespace msp
