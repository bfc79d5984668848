#include "msp/instance.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "msp/errors.hpp"

namespace msp {

using nlohmann::json;

std::string sense_str(Sense s) {
    return s == Sense::Packing ? "packing" : "covering";
}

Sense parse_sense(const std::string& s) {
    if (s == "packing") return Sense::Packing;
    if (s == "covering") return Sense::Covering;
    throw ParseError("unknown sense: '" + s + "'");
}

void ProblemInstance::check() const {
    if (n < 0 || m < 0) throw ParseError("negative dimensions");
    if (static_cast<int>(rows.size()) != m) throw DimensionError("rows size != m");
    if (static_cast<int>(b.size()) != m) throw DimensionError("b size != m");
    if (static_cast<int>(w.size()) != n) throw DimensionError("w size != n");
    if (static_cast<int>(box.size()) != n) throw DimensionError("X size != n");
    for (const auto& row : rows) {
        if (row.empty()) throw ParseError("empty constraint row");
        int prev = -1;
        for (int i : row) {
            if (i < 0 || i >= n) throw ParseError("row index out of range");
            if (i <= prev) throw ParseError("row indices not strictly increasing");
            prev = i;
        }
    }
    for (const auto& bj : b)
        if (bj < 0) throw ParseError("negative constraint value");
    for (long x : box)
        if (x < 0) throw ParseError("negative box bound");
}

long ProblemInstance::budget(int j) const {
    return sense == Sense::Packing ? floor_long(b[j]) : ceil_long(b[j]);
}

namespace {

template <typename T>
bool check_assignment(const ProblemInstance& inst, const std::vector<T>& a) {
    if (static_cast<int>(a.size()) != inst.n)
        throw DimensionError("assignment length != n");
    for (int i = 0; i < inst.n; ++i)
        if (a[i] < 0 || a[i] > inst.box[i]) return false;
    for (int j = 0; j < inst.m; ++j) {
        T s{};
        for (int i : inst.rows[j]) s += a[i];
        if (inst.sense == Sense::Packing ? Rat(s) > inst.b[j] : Rat(s) < inst.b[j])
            return false;
    }
    return true;
}

} // namespace

bool validate_assignment(const ProblemInstance& inst, const std::vector<long>& a) {
    return check_assignment(inst, a);
}

bool validate_assignment(const ProblemInstance& inst, const std::vector<Rat>& a) {
    return check_assignment(inst, a);
}

Rat objective_value(const ProblemInstance& inst, const std::vector<long>& a) {
    if (static_cast<int>(a.size()) != inst.n)
        throw DimensionError("assignment length != n");
    Rat s = 0;
    for (int i = 0; i < inst.n; ++i) s += inst.w[i] * a[i];
    return s;
}

Rat objective_value(const ProblemInstance& inst, const std::vector<Rat>& a) {
    if (static_cast<int>(a.size()) != inst.n)
        throw DimensionError("assignment length != n");
    Rat s = 0;
    for (int i = 0; i < inst.n; ++i) s += inst.w[i] * a[i];
    return s;
}

ProblemInstance complement_reduction(const ProblemInstance& inst) {
    if (inst.sense != Sense::Covering)
        throw DomainError("complement_reduction expects a covering instance");
    ProblemInstance out = inst;
    out.sense = Sense::Packing;
    for (int j = 0; j < inst.m; ++j) {
        Rat row_cap = 0;
        for (int i : inst.rows[j]) row_cap += inst.box[i];
        Rat d = row_cap - inst.b[j];
        if (d < 0)
            throw InfeasibleError("covering row " + std::to_string(j) +
                                  " exceeds its box capacity");
        out.b[j] = d;
    }
    return out;
}

std::string serialize_instance(const ProblemInstance& inst) {
    inst.check();
    json j;
    j["n"] = inst.n;
    j["m"] = inst.m;
    j["rows"] = inst.rows;
    json b = json::array(), w = json::array();
    for (const auto& x : inst.b) b.push_back(rat_str(x));
    for (const auto& x : inst.w) w.push_back(rat_str(x));
    j["b"] = b;
    j["w"] = w;
    j["X"] = inst.box;
    j["sense"] = sense_str(inst.sense);
    return j.dump(2) + "\n";
}

ProblemInstance parse_instance(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid instance JSON: ") + e.what());
    }
    ProblemInstance inst;
    try {
        inst.n = j.at("n").get<int>();
        inst.m = j.at("m").get<int>();
        inst.rows = j.at("rows").get<std::vector<std::vector<int>>>();
        for (const auto& s : j.at("b")) inst.b.push_back(parse_rat(s.get<std::string>()));
        for (const auto& s : j.at("w")) inst.w.push_back(parse_rat(s.get<std::string>()));
        inst.box = j.at("X").get<std::vector<long>>();
        inst.sense = parse_sense(j.at("sense").get<std::string>());
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad instance field: ") + e.what());
    }
    for (auto& row : inst.rows) std::sort(row.begin(), row.end());
    inst.check();
    return inst;
}

ProblemInstance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open instance file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_instance(ss.str());
}

namespace {

ProblemInstance triangle_mwis(const json& params) {
    ProblemInstance t;
    t.n = 3;
    t.m = 3;
    t.rows = {{0, 1}, {1, 2}, {0, 2}};
    t.b = {rat(1), rat(1), rat(1)};
    Rat unit = params.contains("weight") ? parse_rat(params["weight"].get<std::string>())
                                         : rat(1);
    t.w = {unit, unit, unit};
    t.box = {1, 1, 1};
    t.sense = Sense::Packing;
    return t;
}

ProblemInstance path_matching(const json& params) {
    ProblemInstance p;
    p.n = 2;
    p.m = 3;
    p.rows = {{0}, {0, 1}, {1}};
    p.b = {rat(1), rat(1), rat(1)};
    Rat w0 = rat(2), w1 = rat(1);
    if (params.contains("weights")) {
        auto ws = params["weights"];
        if (ws.size() != 2) throw ParseError("path-matching weights must have 2 entries");
        w0 = parse_rat(ws[0].get<std::string>());
        w1 = parse_rat(ws[1].get<std::string>());
    }
    p.w = {w0, w1};
    p.box = {1, 1};
    p.sense = Sense::Packing;
    return p;
}

long get_long(const json& params, const char* key, long def, long lo, long hi) {
    long v = def;
    if (params.contains(key)) v = params[key].get<long>();
    if (v < lo || v > hi)
        throw ParseError(std::string("param '") + key + "' out of range");
    return v;
}

ProblemInstance random_instance(const json& params, std::uint64_t seed) {
    long n = get_long(params, "n", 4, 1, 12);
    long m = get_long(params, "m", 3, 1, 12);
    long max_x = get_long(params, "max_x", 2, 0, 4);
    long row_max = get_long(params, "row_max", std::min<long>(3, n), 1, n);
    long w_min = get_long(params, "w_min", 0, -20, 20);
    long w_max = get_long(params, "w_max", 9, w_min, 50);
    Sense sense = Sense::Packing;
    if (params.contains("sense")) sense = parse_sense(params["sense"].get<std::string>());

    std::mt19937_64 rng(seed);
    auto pick = [&rng](long lo, long hi) {
        return static_cast<long>(lo + rng() % static_cast<std::uint64_t>(hi - lo + 1));
    };

    ProblemInstance inst;
    inst.n = static_cast<int>(n);
    inst.m = static_cast<int>(m);
    inst.sense = sense;
    for (int i = 0; i < n; ++i) {
        inst.w.push_back(rat(pick(w_min, w_max)));
        inst.box.push_back(pick(0, max_x));
    }
    for (int j = 0; j < m; ++j) {
        long size = pick(1, row_max);
        std::set<int> cols;
        while (static_cast<long>(cols.size()) < size)
            cols.insert(static_cast<int>(pick(0, n - 1)));
        std::vector<int> row(cols.begin(), cols.end());
        long cap = 0;
        for (int i : row) cap += inst.box[i];
        // covering rows stay satisfiable (d >= 0); packing budgets may bind
        long bj = sense == Sense::Packing ? pick(0, std::max<long>(cap, 1)) : pick(0, cap);
        inst.rows.push_back(std::move(row));
        inst.b.push_back(rat(bj));
    }
    inst.check();
    return inst;
}

// Edge variables over a random graph; every column meets at most two rows.
ProblemInstance b_matching(const json& params, std::uint64_t seed) {
    long vertices = get_long(params, "vertices", 4, 2, 10);
    long edges = get_long(params, "edges", 5, 1, 14);
    long max_x = get_long(params, "max_x", 1, 1, 4);
    long cap_max = get_long(params, "capacity_max", 2, 1, 6);
    long w_maxp = get_long(params, "w_max", 9, 1, 50);

    std::mt19937_64 rng(seed);
    auto pick = [&rng](long lo, long hi) {
        return static_cast<long>(lo + rng() % static_cast<std::uint64_t>(hi - lo + 1));
    };

    std::vector<std::pair<int, int>> edge_list;
    for (long e = 0; e < edges; ++e) {
        int u = static_cast<int>(pick(0, vertices - 1));
        int v = static_cast<int>(pick(0, vertices - 1));
        while (v == u) v = static_cast<int>(pick(0, vertices - 1));
        edge_list.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::vector<std::vector<int>> incident(vertices);
    for (int e = 0; e < static_cast<int>(edge_list.size()); ++e) {
        incident[edge_list[e].first].push_back(e);
        incident[edge_list[e].second].push_back(e);
    }

    ProblemInstance inst;
    inst.n = static_cast<int>(edge_list.size());
    inst.sense = Sense::Packing;
    for (int e = 0; e < inst.n; ++e) {
        inst.w.push_back(rat(pick(1, w_maxp)));
        inst.box.push_back(pick(1, max_x));
    }
    for (long v = 0; v < vertices; ++v) {
        if (incident[v].empty()) continue; // isolated vertex: no row
        inst.rows.push_back(incident[v]);
        inst.b.push_back(rat(pick(1, cap_max)));
    }
    inst.m = static_cast<int>(inst.rows.size());
    inst.check();
    return inst;
}

ProblemInstance set_cover(const json& params, std::uint64_t seed) {
    long n = get_long(params, "n", 5, 1, 12);
    long m = get_long(params, "m", 4, 1, 12);
    long row_max = get_long(params, "row_max", std::min<long>(3, n), 1, n);
    long w_maxp = get_long(params, "w_max", 9, 1, 50);

    std::mt19937_64 rng(seed);
    auto pick = [&rng](long lo, long hi) {
        return static_cast<long>(lo + rng() % static_cast<std::uint64_t>(hi - lo + 1));
    };

    ProblemInstance inst;
    inst.n = static_cast<int>(n);
    inst.m = static_cast<int>(m);
    inst.sense = Sense::Covering;
    for (int i = 0; i < n; ++i) {
        inst.w.push_back(rat(pick(1, w_maxp)));
        inst.box.push_back(1);
    }
    for (int j = 0; j < m; ++j) {
        long size = pick(1, row_max);
        std::set<int> cols;
        while (static_cast<long>(cols.size()) < size)
            cols.insert(static_cast<int>(pick(0, n - 1)));
        inst.rows.emplace_back(cols.begin(), cols.end());
        inst.b.push_back(rat(1));
    }
    inst.check();
    return inst;
}

} // namespace

ProblemInstance generate(const std::string& family, const std::string& params_json,
                         std::uint64_t seed) {
    json params = json::object();
    if (!params_json.empty()) {
        try {
            params = json::parse(params_json);
        } catch (const json::exception& e) {
            throw ParseError(std::string("invalid params JSON: ") + e.what());
        }
    }
    if (family == "triangle-mwis") return triangle_mwis(params);
    if (family == "path-matching") return path_matching(params);
    if (family == "random") return random_instance(params, seed);
    if (family == "b-matching") return b_matching(params, seed);
    if (family == "set-cover") return set_cover(params, seed);
    throw ParseError("unknown generator family: '" + family + "'");
}

} // namespace msp
