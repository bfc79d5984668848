#include "msp/lp_exact.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "msp/errors.hpp"

namespace msp {

namespace {

// Solves square system M x = rhs over rationals; nullopt if singular.
std::optional<std::vector<Rat>> solve_square(std::vector<std::vector<Rat>> M,
                                             std::vector<Rat> rhs) {
    const std::size_t k = M.size();
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t pivot = col;
        while (pivot < k && M[pivot][col] == 0) ++pivot;
        if (pivot == k) return std::nullopt;
        std::swap(M[pivot], M[col]);
        std::swap(rhs[pivot], rhs[col]);
        Rat inv = 1 / M[col][col];
        for (std::size_t c = col; c < k; ++c) M[col][c] *= inv;
        rhs[col] *= inv;
        for (std::size_t r = 0; r < k; ++r) {
            if (r == col || M[r][col] == 0) continue;
            Rat f = M[r][col];
            for (std::size_t c = col; c < k; ++c) M[r][c] -= f * M[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    return rhs;
}

std::uint64_t binom(int a, int b) {
    if (b < 0 || b > a) return 0;
    std::uint64_t r = 1;
    for (int i = 0; i < b; ++i) r = r * static_cast<std::uint64_t>(a - i) /
                                    static_cast<std::uint64_t>(i + 1);
    return r;
}

} // namespace

LpResult solve_lp(const ProblemInstance& inst, std::size_t basis_cap) {
    inst.check();
    const int n = inst.n, m = inst.m;

    std::uint64_t work = 0;
    for (int k = 0; k <= std::min(n, m); ++k)
        work += binom(n, k) * binom(m, k) << (n - k);
    if (work > basis_cap)
        throw ResourceError("basis enumeration too large: " + std::to_string(work));

    std::set<std::vector<Rat>> seen;

    std::vector<int> free_vars, chosen_rows;
    std::vector<Rat> point(n);

    // Enumerate: subset of free variables, equal-size subset of tight rows,
    // and a 0/X choice for every fixed variable.
    auto try_basis = [&]() {
        const std::size_t k = free_vars.size();
        std::vector<std::vector<Rat>> M(k, std::vector<Rat>(k, 0));
        std::vector<Rat> rhs(k);
        for (std::size_t rI = 0; rI < k; ++rI) {
            int j = chosen_rows[rI];
            Rat r = inst.b[j];
            for (int i : inst.rows[j]) {
                auto it = std::find(free_vars.begin(), free_vars.end(), i);
                if (it != free_vars.end())
                    M[rI][static_cast<std::size_t>(it - free_vars.begin())] = 1;
                else
                    r -= point[i];
            }
            rhs[rI] = r;
        }
        auto sol = solve_square(std::move(M), std::move(rhs));
        if (!sol) return;
        for (std::size_t c = 0; c < k; ++c) point[free_vars[c]] = (*sol)[c];
        if (validate_assignment(inst, point)) seen.insert(point);
    };

    auto enumerate_fixed = [&](auto&& self, std::size_t vi) -> void {
        if (vi == static_cast<std::size_t>(n)) {
            if (free_vars.empty()) {
                if (validate_assignment(inst, point)) seen.insert(point);
                return;
            }
            // choose |free_vars| rows to hold with equality
            std::vector<int> rows_idx(free_vars.size());
            auto choose_rows = [&](auto&& rec, std::size_t pos, int start) -> void {
                if (pos == rows_idx.size()) {
                    chosen_rows = rows_idx;
                    try_basis();
                    return;
                }
                for (int j = start; j < m; ++j) {
                    rows_idx[pos] = j;
                    rec(rec, pos + 1, j + 1);
                }
            };
            choose_rows(choose_rows, 0, 0);
            return;
        }
        int i = static_cast<int>(vi);
        if (static_cast<int>(free_vars.size()) < m) {
            free_vars.push_back(i);
            self(self, vi + 1);
            free_vars.pop_back();
        }
        point[i] = 0;
        self(self, vi + 1);
        if (inst.box[i] != 0) {
            point[i] = rat(inst.box[i]);
            self(self, vi + 1);
        }
    };
    enumerate_fixed(enumerate_fixed, 0);

    if (seen.empty()) throw InfeasibleError("LP has no feasible vertex");

    LpResult res;
    res.vertices.assign(seen.begin(), seen.end());
    bool maximize = inst.sense == Sense::Packing;
    for (std::size_t i = 0; i < res.vertices.size(); ++i) {
        Rat val = objective_value(inst, res.vertices[i]);
        if (i == 0 || (maximize ? val > res.opt_value : val < res.opt_value)) {
            res.opt_value = val;
            res.opt_indices.clear();
        }
        if (val == res.opt_value) res.opt_indices.push_back(i);
    }
    res.witness = res.vertices[res.opt_indices.front()];
    return res;
}

VariableRange variable_range(const ProblemInstance& inst, const LpResult& lp) {
    VariableRange vr;
    vr.x_min.resize(inst.n);
    vr.x_max.resize(inst.n);
    for (int i = 0; i < inst.n; ++i) {
        bool first = true;
        for (std::size_t idx : lp.opt_indices) {
            const Rat& v = lp.vertices[idx][i];
            if (first || v < vr.x_min[i]) vr.x_min[i] = v;
            if (first || v > vr.x_max[i]) vr.x_max[i] = v;
            first = false;
        }
    }
    return vr;
}

LpClass classify(const ProblemInstance& inst, const LpResult& lp) {
    if (lp.opt_indices.size() > 1) return LpClass::Multiple;
    for (const Rat& v : lp.witness)
        if (!is_integer(v)) return LpClass::UniqueFractional;
    return LpClass::UniqueIntegral;
}

std::string lp_class_str(LpClass c) {
    switch (c) {
    case LpClass::UniqueIntegral: return "unique-integral";
    case LpClass::UniqueFractional: return "unique-fractional";
    default: return "multiple";
    }
}

Rat compute_c(const ProblemInstance& inst, const LpResult& lp) {
    if (lp.opt_indices.size() > 1) return 0;
    if (lp.vertices.size() == 1)
        throw DomainError("c(P,w) undefined: polytope has a single vertex");
    const auto& star = lp.witness;
    bool first = true;
    Rat best = 0;
    for (const auto& v : lp.vertices) {
        if (v == star) continue;
        Rat num = 0, den = 0;
        for (int i = 0; i < inst.n; ++i) {
            Rat diff = star[i] - v[i];
            num += inst.w[i] * diff;
            den += abs(diff);
        }
        if (inst.sense == Sense::Covering) num = -num;
        Rat ratio = num / den;
        if (first || ratio < best) best = ratio;
        first = false;
    }
    return best;
}

} // namespace msp
