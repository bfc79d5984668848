#include <doctest.h>

#include <sstream>

#include "helpers.hpp"
#include "msp/harness.hpp"

using namespace msp;
using namespace msp::test;

TEST_CASE("triangle oscillation report") {
    auto rep = check_weak_oscillation(fixture_t(), 4, "T");
    CHECK(rep.all_pass);
    CHECK(rep.rounding_pass);
    CHECK(rep.pinning_pass);
    for (const auto& row : rep.rows) {
        if (row.parity == "even") CHECK(row.delta_max >= 1); // ceil(1/2)
        else CHECK(row.delta_min <= 0);
    }
}

TEST_CASE("path-matching enters the convergence regime") {
    auto rep = check_weak_oscillation(fixture_m(), 6, "M");
    CHECK(rep.all_pass);
    for (const auto& row : rep.rows)
        if (row.t >= 5) CHECK(row.x_hat == (row.r == 0 ? 1 : 0));
}

TEST_CASE("pinned single-variable instance") {
    auto rep = check_weak_oscillation(fixture_s(), 2, "S");
    CHECK(rep.all_pass);
    CHECK(rep.pinning_pass);
    for (const auto& row : rep.rows) {
        CHECK(row.delta_min == 1);
        CHECK(row.delta_max == 1);
        CHECK(row.x_min == rat(1));
        CHECK(row.x_max == rat(1));
    }
}

TEST_CASE("convergence check on fixtures") {
    auto m = check_convergence(fixture_m(), 1);
    REQUIRE(m.preconditions_met);
    CHECK(m.c == parse_rat("1/2"));
    CHECK(m.t_star == 5);
    CHECK(m.x_star == std::vector<long>{1, 0});
    CHECK(m.pass);

    auto t = check_convergence(fixture_t(), 0);
    CHECK_FALSE(t.preconditions_met); // fractional optimum
}

TEST_CASE("sweep determinism and CSV shape") {
    std::string cfg = R"({"family":"random","params":{"n":3,"m":3},
                          "seeds":[0,5],"t_max":3})";
    std::ostringstream a, b;
    auto sa = sweep(cfg, a);
    auto sb = sweep(cfg, b);
    CHECK(a.str() == b.str());
    CHECK(sa.violations == 0);
    CHECK(sa.instances == 5);
    CHECK(a.str().rfind("instance_id,r,t,parity,", 0) == 0);

    std::ostringstream empty;
    auto se = sweep(R"({"family":"random","seeds":[3,3],"t_max":2})", empty);
    CHECK(se.instances == 0);
    CHECK(empty.str() ==
          "instance_id,r,t,parity,delta_min,delta_max,x_min,x_max,x_hat,verdict\n");
}

TEST_CASE("covering sweep has no violations") {
    std::string cfg = R"({"family":"set-cover","params":{"n":4,"m":3},
                          "seeds":[0,10],"t_max":4})";
    std::ostringstream out;
    auto s = sweep(cfg, out);
    CHECK(s.violations == 0);
    CHECK(s.instances + s.skipped == 10);
}
