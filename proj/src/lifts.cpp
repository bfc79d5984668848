#include "msp/lifts.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "msp/errors.hpp"

namespace msp {

namespace {

void check_perm(const std::vector<int>& perm, int fold) {
    if (static_cast<int>(perm.size()) != fold)
        throw ParseError("permutation size != fold");
    std::vector<bool> hit(fold, false);
    for (int x : perm) {
        if (x < 0 || x >= fold || hit[x]) throw ParseError("malformed permutation");
        hit[x] = true;
    }
}

} // namespace

Lift build_lift(const Graph& base, int fold,
                const std::vector<std::vector<int>>& perms) {
    if (fold < 1) throw ParseError("fold must be positive");
    if (perms.size() != base.edges.size())
        throw ParseError("need one permutation per base edge");
    for (const auto& p : perms) check_perm(p, fold);

    Lift lift;
    lift.base = base;
    lift.fold = fold;
    lift.perms = perms;
    lift.lifted.num_vertices = base.num_vertices * fold;
    for (std::size_t e = 0; e < base.edges.size(); ++e) {
        auto [u, v] = base.edges[e];
        for (int k = 0; k < fold; ++k)
            lift.lifted.edges.emplace_back(u * fold + k, v * fold + perms[e][k]);
    }
    return lift;
}

bool validate_covering_map(const Graph& base, const Graph& lifted, int fold) {
    if (lifted.num_vertices != base.num_vertices * fold) return false;
    auto base_adj = base.adjacency();
    auto lift_adj = lifted.adjacency();
    for (int lv = 0; lv < lifted.num_vertices; ++lv) {
        int v = lv / fold;
        std::multiset<int> projected;
        for (int lu : lift_adj[lv]) projected.insert(lu / fold);
        std::multiset<int> expected(base_adj[v].begin(), base_adj[v].end());
        if (projected != expected) return false;
        // local bijection: no two neighbors in the same fiber
        std::set<int> distinct(lift_adj[lv].begin(), lift_adj[lv].end());
        if (distinct.size() != lift_adj[lv].size()) return false;
    }
    return true;
}

bool validate_covering_map(const Lift& lift) {
    return validate_covering_map(lift.base, lift.lifted, lift.fold);
}

std::vector<std::vector<int>> identity_perms(std::size_t edges, int fold) {
    std::vector<int> id(fold);
    std::iota(id.begin(), id.end(), 0);
    return std::vector<std::vector<int>>(edges, id);
}

std::vector<std::vector<int>> all_swap_perms(std::size_t edges) {
    return std::vector<std::vector<int>>(edges, {1, 0});
}

std::vector<std::vector<int>> random_perms(std::size_t edges, int fold,
                                           std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::vector<int>> out;
    for (std::size_t e = 0; e < edges; ++e) {
        std::vector<int> p(fold);
        std::iota(p.begin(), p.end(), 0);
        for (int i = fold - 1; i > 0; --i) {
            int j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
            std::swap(p[i], p[j]);
        }
        out.push_back(std::move(p));
    }
    return out;
}

ProblemInstance lift_instance(const ProblemInstance& base, int fold,
                              const std::vector<std::vector<int>>& perms) {
    base.check();
    std::size_t edge_count = 0;
    for (const auto& row : base.rows) edge_count += row.size();
    if (perms.size() != edge_count)
        throw ParseError("need one permutation per factor-graph edge");
    for (const auto& p : perms) check_perm(p, fold);

    ProblemInstance out;
    out.n = base.n * fold;
    out.m = base.m * fold;
    out.sense = base.sense;
    for (int i = 0; i < base.n; ++i)
        for (int k = 0; k < fold; ++k) {
            out.w.push_back(base.w[i]);
            out.box.push_back(base.box[i]);
        }
    out.rows.assign(out.m, {});
    out.b.resize(out.m);
    std::size_t e = 0;
    for (int j = 0; j < base.m; ++j) {
        for (int c = 0; c < fold; ++c) out.b[j * fold + c] = base.b[j];
        for (int i : base.rows[j]) {
            const auto& perm = perms[e++];
            for (int k = 0; k < fold; ++k)
                out.rows[j * fold + perm[k]].push_back(i * fold + k);
        }
    }
    for (auto& row : out.rows) std::sort(row.begin(), row.end());
    out.check();
    return out;
}

std::vector<long> lift_assignment(const ProblemInstance& base,
                                  const ProblemInstance& lifted, int fold,
                                  const std::vector<long>& a) {
    if (!validate_assignment(base, a))
        throw DomainError("assignment is not valid on the base instance");
    std::vector<long> out;
    out.reserve(static_cast<std::size_t>(base.n) * fold);
    for (int i = 0; i < base.n; ++i)
        for (int k = 0; k < fold; ++k) out.push_back(a[i]);
    if (!validate_assignment(lifted, out))
        throw Error("lifted assignment unexpectedly invalid");
    return out;
}

std::vector<Rat> average_assignment(const ProblemInstance& base, int fold,
                                    const std::vector<long>& lifted_values) {
    if (lifted_values.size() != static_cast<std::size_t>(base.n) * fold)
        throw DimensionError("lifted assignment length != n*fold");
    std::vector<Rat> avg(base.n);
    for (int i = 0; i < base.n; ++i) {
        long s = 0;
        for (int k = 0; k < fold; ++k) s += lifted_values[i * fold + k];
        avg[i] = rat(s, fold);
    }
    if (!validate_assignment(base, avg))
        throw Error("average assignment unexpectedly infeasible on the base");
    return avg;
}

Lift girth_doubling_lift(const Graph& g, std::size_t vertex_cap) {
    std::size_t k = g.edges.size();
    if (k > 16) throw ResourceError("girth doubling needs |E| <= 16");
    int fold = 1 << k;
    if (static_cast<std::size_t>(g.num_vertices) * fold > vertex_cap)
        throw ResourceError("girth doubling lift exceeds vertex cap");
    std::vector<std::vector<int>> perms;
    for (std::size_t e = 0; e < k; ++e) {
        std::vector<int> p(fold);
        for (int idx = 0; idx < fold; ++idx) p[idx] = idx ^ (1 << e);
        perms.push_back(std::move(p));
    }
    return build_lift(g, fold, perms);
}

Lift amplify_girth(const Graph& g, int target, std::size_t vertex_cap) {
    auto current_girth = [](const Graph& gr) {
        return girth(gr); // nullopt = acyclic = infinite girth
    };
    Graph cur = g;
    Lift last = build_lift(g, 1, identity_perms(g.edges.size(), 1));
    while (true) {
        auto gi = current_girth(cur);
        if (!gi || *gi >= target) return last;
        last = girth_doubling_lift(cur, vertex_cap);
        cur = last.lifted;
    }
}

namespace {

struct RealizeSearch {
    const ProblemInstance& base;
    int fold;
    std::vector<std::vector<long>> fiber_values; // per variable, size fold
    std::vector<std::vector<int>> perms;         // per fg edge
    std::size_t budget;

    // flattened edge list per constraint: (edge index, var)
    std::vector<std::vector<std::pair<std::size_t, int>>> con_edges;

    bool assign_constraint(std::size_t j) {
        if (j == con_edges.size()) return true;
        return assign_edge(j, 0);
    }

    bool constraint_ok(std::size_t j) {
        long budget_j = base.budget(static_cast<int>(j));
        for (int c = 0; c < fold; ++c) {
            long sum = 0;
            for (auto [e, i] : con_edges[j]) {
                const auto& perm = perms[e];
                // find k with perm[k] == c
                for (int k = 0; k < fold; ++k)
                    if (perm[k] == c) {
                        sum += fiber_values[i][k];
                        break;
                    }
            }
            if (base.sense == Sense::Packing ? sum > budget_j : sum < budget_j)
                return false;
        }
        return true;
    }

    bool assign_edge(std::size_t j, std::size_t pos) {
        if (budget == 0) return false;
        --budget;
        if (pos == con_edges[j].size())
            return constraint_ok(j) && assign_constraint(j + 1);
        std::size_t e = con_edges[j][pos].first;
        std::vector<int> perm(fold);
        std::iota(perm.begin(), perm.end(), 0);
        std::sort(perm.begin(), perm.end());
        do {
            perms[e] = perm;
            if (assign_edge(j, pos + 1)) return true;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return false;
    }
};

} // namespace

std::optional<Realization> realize_fractional_solution(const ProblemInstance& inst,
                                                       const std::vector<Rat>& x,
                                                       int fold_max,
                                                       std::size_t search_budget) {
    if (!validate_assignment(inst, x))
        throw DomainError("input solution is not feasible");

    long lcm = 1;
    for (const auto& xi : x) {
        mpz_class l;
        mpz_lcm(l.get_mpz_t(), mpz_class(lcm).get_mpz_t(), xi.get_den_mpz_t());
        if (!l.fits_slong_p() || l.get_si() > fold_max) return std::nullopt;
        lcm = l.get_si();
    }

    std::size_t edge_count = 0;
    for (const auto& row : inst.rows) edge_count += row.size();

    for (int fold = static_cast<int>(lcm); fold <= fold_max; fold += static_cast<int>(lcm)) {
        // canonical fiber multiset: r copies of q+1 then fold-r copies of q
        std::vector<std::vector<long>> fiber(inst.n);
        for (int i = 0; i < inst.n; ++i) {
            Rat scaled = x[i] * fold;
            long total = floor_long(scaled);
            long q = total / fold, r = total % fold;
            for (int k = 0; k < fold; ++k) fiber[i].push_back(k < r ? q + 1 : q);
        }

        RealizeSearch search{inst, fold, fiber,
                             identity_perms(edge_count, fold), search_budget, {}};
        search.con_edges.resize(inst.m);
        std::size_t e = 0;
        for (int j = 0; j < inst.m; ++j)
            for (int i : inst.rows[j]) search.con_edges[j].emplace_back(e++, i);

        if (search.assign_constraint(0)) {
            Realization out;
            out.fold = fold;
            out.perms = search.perms;
            for (int i = 0; i < inst.n; ++i)
                for (int k = 0; k < fold; ++k) out.lifted_values.push_back(fiber[i][k]);
            // both guarantees checked before returning
            ProblemInstance lifted = lift_instance(inst, fold, out.perms);
            if (!validate_assignment(lifted, out.lifted_values))
                throw Error("realized assignment failed validation");
            auto avg = average_assignment(inst, fold, out.lifted_values);
            if (avg != x) throw Error("realized assignment does not average back");
            return out;
        }
    }
    return std::nullopt;
}

} // namespace msp
