#include "msp/factor_graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <sstream>

#include "msp/errors.hpp"

namespace msp {

std::vector<std::vector<int>> Graph::adjacency() const {
    std::vector<std::vector<int>> adj(num_vertices);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

std::optional<int> girth(const Graph& g) {
    auto adj = g.adjacency();
    int best = std::numeric_limits<int>::max();
    std::vector<int> dist(g.num_vertices), parent(g.num_vertices);
    for (int s = 0; s < g.num_vertices; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::queue<int> q;
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            if (2 * dist[u] >= best) continue;
            for (int v : adj[u]) {
                if (v == parent[u]) continue;
                if (dist[v] == -1) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    q.push(v);
                } else {
                    best = std::min(best, dist[u] + dist[v] + 1);
                }
            }
        }
    }
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

FactorGraph build_factor_graph(const ProblemInstance& inst) {
    inst.check();
    FactorGraph fg;
    fg.n = inst.n;
    fg.m = inst.m;
    fg.sense = inst.sense;
    fg.w = inst.w;
    fg.box = inst.box;
    fg.con_neighbors = inst.rows;
    fg.var_neighbors.resize(inst.n);
    for (int j = 0; j < inst.m; ++j) {
        fg.budgets.push_back(inst.budget(j));
        for (int i : inst.rows[j]) fg.var_neighbors[i].push_back(j);
    }
    return fg;
}

Graph FactorGraph::graph() const {
    Graph g;
    g.num_vertices = n + m;
    for (int j = 0; j < m; ++j)
        for (int i : con_neighbors[j]) g.edges.emplace_back(i, n + j);
    return g;
}

std::string FactorGraph::dot() const {
    std::ostringstream os;
    os << "graph factor_graph {\n";
    for (int i = 0; i < n; ++i)
        os << "  v" << i << " [shape=circle];\n";
    for (int j = 0; j < m; ++j)
        os << "  C" << j << " [shape=box];\n";
    for (int j = 0; j < m; ++j)
        for (int i : con_neighbors[j]) os << "  v" << i << " -- C" << j << ";\n";
    os << "}\n";
    return os.str();
}

ExtVal eval_factor(const FactorGraph& fg, int j, std::span<const long> y) {
    const auto& nbrs = fg.con_neighbors.at(j);
    if (y.size() != nbrs.size())
        throw DimensionError("factor argument size != neighborhood size");
    long sum = 0;
    for (std::size_t k = 0; k < y.size(); ++k) {
        long x = fg.box[nbrs[k]];
        if (y[k] < 0 || y[k] > x) throw DomainError("factor argument out of box");
        sum += y[k];
    }
    if (fg.sense == Sense::Packing)
        return sum <= fg.budgets[j] ? ExtVal(0L) : ExtVal::neg_inf();
    return sum >= fg.budgets[j] ? ExtVal(0L) : ExtVal::pos_inf();
}

ExtVal objective(const FactorGraph& fg, const std::vector<long>& a) {
    if (static_cast<int>(a.size()) != fg.n)
        throw DimensionError("assignment length != n");
    ExtVal total(0L);
    for (int i = 0; i < fg.n; ++i) total += ExtVal(fg.w[i] * a[i]);
    std::vector<long> y;
    for (int j = 0; j < fg.m; ++j) {
        y.clear();
        for (int i : fg.con_neighbors[j]) y.push_back(a[i]);
        ExtVal psi = eval_factor(fg, j, y);
        if (!psi.is_finite()) return psi;
        total += psi;
    }
    return total;
}

} // namespace msp
