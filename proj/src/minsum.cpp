#include "msp/minsum.hpp"

#include <algorithm>
#include <ostream>

#include "msp/errors.hpp"

namespace msp {

MinSumEngine::MinSumEngine(const FactorGraph& fg, bool normalize)
    : fg_(fg), normalize_(normalize) {
    if (fg_.sense != Sense::Packing)
        throw DomainError("min-sum engine runs on packing factor graphs; "
                          "covering goes through the complement reduction");
    var_edges_.resize(fg_.n);
    con_edges_.resize(fg_.m);
    for (int j = 0; j < fg_.m; ++j) {
        for (int i : fg_.con_neighbors[j]) {
            int e = num_edges();
            edge_var_.push_back(i);
            edge_con_.push_back(j);
            var_edges_[i].push_back(e);
            con_edges_[j].push_back(e);
        }
    }
}

int MinSumEngine::edge_index(int var, int con) const {
    for (int e : con_edges_.at(con))
        if (edge_var_[e] == var) return e;
    return -1;
}

MessageState MinSumEngine::init_messages() const {
    MessageState state;
    state.iteration = 0;
    state.con_to_var.resize(num_edges());
    for (int e = 0; e < num_edges(); ++e)
        state.con_to_var[e].assign(fg_.box[edge_var_[e]] + 1, ExtVal(0L));
    return state;
}

std::vector<ExtVal> MinSumEngine::var_to_con_message(const MessageState& state,
                                                     int e) const {
    int v = edge_var_[e];
    std::vector<ExtVal> out(fg_.box[v] + 1);
    for (long beta = 0; beta <= fg_.box[v]; ++beta) {
        ExtVal acc(fg_.w[v] * beta);
        for (int e2 : var_edges_[v])
            if (e2 != e) acc += state.con_to_var[e2][beta];
        out[beta] = acc;
    }
    return out;
}

// Budgeted maximization over the neighbors of C other than v: a bounded
// knapsack over budget b_C - beta with the incoming tables as profits.
std::vector<ExtVal> MinSumEngine::con_to_var_message(
    const std::vector<std::vector<ExtVal>>& v2c, int e) const {
    int v = edge_var_[e];
    int j = edge_con_[e];

    std::vector<const std::vector<ExtVal>*> tables;
    long box_sum = 0;
    for (int e2 : con_edges_[j]) {
        if (e2 == e) continue;
        tables.push_back(&v2c[e2]);
        box_sum += fg_.box[edge_var_[e2]];
    }

    std::vector<ExtVal> out(fg_.box[v] + 1, ExtVal::neg_inf());
    long full_budget = fg_.budgets[j];
    long cap = std::min(full_budget, box_sum);
    if (cap < 0) return out;

    // dp[s] = best total of incoming messages with neighbor sum exactly s.
    std::vector<ExtVal> dp(cap + 1, ExtVal::neg_inf());
    dp[0] = ExtVal(0L);
    for (const auto* tab : tables) {
        long xu = static_cast<long>(tab->size()) - 1;
        std::vector<ExtVal> ndp(cap + 1, ExtVal::neg_inf());
        for (long s = 0; s <= cap; ++s) {
            for (long z = 0; z <= std::min(xu, s); ++z) {
                if (dp[s - z].is_neg_inf() || (*tab)[z].is_neg_inf()) continue;
                ndp[s] = max(ndp[s], dp[s - z] + (*tab)[z]);
            }
        }
        dp = std::move(ndp);
    }
    // best over sums s <= budget - beta, for each beta
    std::vector<ExtVal> best_prefix(cap + 1, ExtVal::neg_inf());
    for (long s = 0; s <= cap; ++s)
        best_prefix[s] = s == 0 ? dp[0] : max(best_prefix[s - 1], dp[s]);
    for (long beta = 0; beta <= fg_.box[v]; ++beta) {
        long room = std::min(full_budget - beta, cap);
        if (room >= 0) out[beta] = best_prefix[room];
    }
    return out;
}

void MinSumEngine::step(MessageState& state) const {
    int t = state.iteration + 1;
    std::vector<std::vector<ExtVal>> v2c(num_edges());
    for (int e = 0; e < num_edges(); ++e) v2c[e] = var_to_con_message(state, e);
    std::vector<std::vector<ExtVal>> c2v(num_edges());
    for (int e = 0; e < num_edges(); ++e) c2v[e] = con_to_var_message(v2c, e);

    if (normalize_) {
        for (auto& table : c2v) {
            ExtVal mx = ExtVal::neg_inf();
            for (const auto& x : table) mx = max(mx, x);
            if (!mx.is_finite()) continue;
            for (auto& x : table)
                if (x.is_finite()) x = ExtVal(x.value() - mx.value());
        }
    }

    if (trace_) {
        for (int e = 0; e < num_edges(); ++e) {
            for (std::size_t beta = 0; beta < v2c[e].size(); ++beta)
                *trace_ << "{\"t\":" << t << ",\"dir\":\"v2c\",\"v\":" << edge_var_[e]
                        << ",\"C\":" << edge_con_[e] << ",\"beta\":" << beta
                        << ",\"value\":\"" << v2c[e][beta].str() << "\"}\n";
            for (std::size_t beta = 0; beta < c2v[e].size(); ++beta)
                *trace_ << "{\"t\":" << t << ",\"dir\":\"c2v\",\"v\":" << edge_var_[e]
                        << ",\"C\":" << edge_con_[e] << ",\"beta\":" << beta
                        << ",\"value\":\"" << c2v[e][beta].str() << "\"}\n";
        }
    }

    state.var_to_con = std::move(v2c);
    state.con_to_var = std::move(c2v);
    state.iteration = t;
}

Decision MinSumEngine::decide(const MessageState& state, int t) const {
    Decision d;
    d.mu.resize(fg_.n);
    for (int v = 0; v < fg_.n; ++v) {
        std::vector<ExtVal> mu(fg_.box[v] + 1);
        for (long beta = 0; beta <= fg_.box[v]; ++beta) {
            // includes phi_v so that the belief matches the tree optimum
            ExtVal acc(fg_.w[v] * beta);
            for (int e : var_edges_[v]) acc += state.con_to_var[e][beta];
            mu[beta] = acc;
        }
        ExtVal mx = ExtVal::neg_inf();
        for (const auto& x : mu) mx = max(mx, x);
        if (!mx.is_finite())
            throw InfeasibleError("no valid completion at variable " +
                                  std::to_string(v));
        std::vector<long> delta;
        for (long beta = 0; beta <= fg_.box[v]; ++beta)
            if (mu[beta] == mx) delta.push_back(beta);
        d.x_hat.push_back(t % 2 == 0 ? delta.back() : delta.front());
        d.mu[v] = std::move(mu);
        d.mu_max.push_back(mx);
        d.delta.push_back(std::move(delta));
    }
    return d;
}

Decision run_minsum_packing(const ProblemInstance& inst, int t, bool normalize,
                            std::ostream* trace) {
    if (inst.sense != Sense::Packing)
        throw DomainError("run_minsum_packing expects a packing instance");
    if (t < 0) throw DomainError("negative iteration count");
    FactorGraph fg = build_factor_graph(inst);
    MinSumEngine engine(fg, normalize);
    engine.set_trace(trace);
    MessageState state = engine.init_messages();
    for (int i = 0; i < t; ++i) engine.step(state);
    return engine.decide(state, t);
}

Decision run_minsum_covering(const ProblemInstance& inst, int t, bool normalize,
                             std::ostream* trace) {
    if (inst.sense != Sense::Covering)
        throw DomainError("run_minsum_covering expects a covering instance");
    ProblemInstance packed = complement_reduction(inst);
    Decision pd = run_minsum_packing(packed, t, normalize, trace);
    Decision d;
    d.mu.resize(inst.n);
    for (int v = 0; v < inst.n; ++v) {
        long xv = inst.box[v];
        std::vector<ExtVal> mu(xv + 1);
        for (long beta = 0; beta <= xv; ++beta) mu[beta] = pd.mu[v][xv - beta];
        std::vector<long> delta;
        for (long beta : pd.delta[v]) delta.push_back(xv - beta);
        std::sort(delta.begin(), delta.end());
        d.mu[v] = std::move(mu);
        d.mu_max.push_back(pd.mu_max[v]);
        d.delta.push_back(std::move(delta));
        d.x_hat.push_back(xv - pd.x_hat[v]);
    }
    return d;
}

Decision run_minsum(const ProblemInstance& inst, int t, bool normalize,
                    std::ostream* trace) {
    return inst.sense == Sense::Packing
               ? run_minsum_packing(inst, t, normalize, trace)
               : run_minsum_covering(inst, t, normalize, trace);
}

} // namespace msp
