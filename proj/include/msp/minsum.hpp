#pragma once

#include <iosfwd>
#include <vector>

#include "msp/factor_graph.hpp"

namespace msp {

// Message tables of one iteration. Edges are indexed in row-major order:
// constraint 0's neighbors first, then constraint 1's, ...
struct MessageState {
    int iteration = 0;
    // var_to_con[e][beta], con_to_var[e][beta]; tables are total over
    // beta in {0..X_v} for the edge's variable v.
    std::vector<std::vector<ExtVal>> var_to_con;
    std::vector<std::vector<ExtVal>> con_to_var;
};

struct Decision {
    std::vector<std::vector<ExtVal>> mu; // mu_v(beta)
    std::vector<ExtVal> mu_max;
    std::vector<std::vector<long>> delta; // argmax sets, sorted ascending
    std::vector<long> x_hat;
};

class MinSumEngine {
public:
    explicit MinSumEngine(const FactorGraph& fg, bool normalize = false);

    const FactorGraph& fg() const { return fg_; }
    int num_edges() const { return static_cast<int>(edge_var_.size()); }
    int edge_index(int var, int con) const; // -1 if absent
    int edge_var(int e) const { return edge_var_[e]; }
    int edge_con(int e) const { return edge_con_[e]; }

    MessageState init_messages() const;

    // One full iteration (variable-to-constraint then constraint-to-variable).
    void step(MessageState& state) const;

    // mu_v(beta) = w_v*beta + sum_C mu_{C->v}(beta); x_hat takes max of the
    // argmax set on even t, min on odd t. Throws InfeasibleError if some
    // variable has no finite belief.
    Decision decide(const MessageState& state, int t) const;

    void set_trace(std::ostream* os) { trace_ = os; }

private:
    std::vector<ExtVal> var_to_con_message(const MessageState& state, int e) const;
    std::vector<ExtVal> con_to_var_message(const std::vector<std::vector<ExtVal>>& v2c,
                                           int e) const;

    const FactorGraph& fg_;
    bool normalize_;
    std::ostream* trace_ = nullptr;
    std::vector<int> edge_var_, edge_con_;
    std::vector<std::vector<int>> var_edges_, con_edges_;
};

// Algorithm 1 for t iterations (t = 0 decides on the variable functions alone).
Decision run_minsum_packing(const ProblemInstance& inst, int t,
                            bool normalize = false, std::ostream* trace = nullptr);

// Algorithm 2: complement, run packing min-sum, map back (z = X - x,
// delta sets and beliefs reflected through beta -> X_v - beta).
Decision run_minsum_covering(const ProblemInstance& inst, int t,
                             bool normalize = false, std::ostream* trace = nullptr);

// Dispatches on inst.sense.
Decision run_minsum(const ProblemInstance& inst, int t, bool normalize = false,
                    std::ostream* trace = nullptr);

} // namespace msp
