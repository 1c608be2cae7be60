#include <cmath>

#include "doctest.h"
#include "qchrom/lp.hpp"

using namespace qchrom;

TEST_CASE("single variable feasible") {
    LpProblem p;
    p.nvars = 1;
    p.rows = {{1.0}};
    p.rhs = {1.0};
    p.nonneg = {true};
    auto r = solve_lp_feasibility(p);
    REQUIRE(r.status == LpStatus::Feasible);
    CHECK(r.x[0] == doctest::Approx(1.0));
}

TEST_CASE("single variable infeasible with certificate") {
    LpProblem p;
    p.nvars = 1;
    p.rows = {{1.0}};
    p.rhs = {-1.0};
    p.nonneg = {true};
    auto r = solve_lp_feasibility(p);
    REQUIRE(r.status == LpStatus::Infeasible);
    REQUIRE(r.farkas.size() == 1);
    // direct re-check: y*A <= 0 on the nonneg var, y*b > 0
    CHECK(r.farkas[0] * 1.0 <= 1e-12);
    CHECK(r.farkas[0] * (-1.0) > 0.0);
}

TEST_CASE("free variables and mixed systems") {
    // x free, y >= 0: x + y = 3, x - y = -1  ->  x = 1, y = 2
    LpProblem p;
    p.nvars = 2;
    p.rows = {{1.0, 1.0}, {1.0, -1.0}};
    p.rhs = {3.0, -1.0};
    p.nonneg = {false, true};
    auto r = solve_lp_feasibility(p);
    REQUIRE(r.status == LpStatus::Feasible);
    CHECK(r.x[0] + r.x[1] == doctest::Approx(3.0));
    CHECK(r.x[0] - r.x[1] == doctest::Approx(-1.0));
    CHECK(r.x[1] >= -1e-12);
}

TEST_CASE("contradictory equalities") {
    LpProblem p;
    p.nvars = 1;
    p.rows = {{1.0}, {1.0}};
    p.rhs = {1.0, 2.0};
    p.nonneg = {false};
    auto r = solve_lp_feasibility(p);
    CHECK(r.status == LpStatus::Infeasible);
}

TEST_CASE("redundant consistent rows are harmless") {
    LpProblem p;
    p.nvars = 2;
    p.rows = {{1.0, 1.0}, {2.0, 2.0}, {1.0, 0.0}};
    p.rhs = {1.0, 2.0, 0.25};
    p.nonneg = {true, true};
    auto r = solve_lp_feasibility(p);
    REQUIRE(r.status == LpStatus::Feasible);
    CHECK(r.x[0] == doctest::Approx(0.25));
    CHECK(r.x[1] == doctest::Approx(0.75));
}

TEST_CASE("degenerate system exercises anti-cycling") {
    // Classic degenerate corner: many redundant constraints through origin.
    LpProblem p;
    p.nvars = 4;
    p.rows = {{1, -1, 0, 0}, {1, 0, -1, 0}, {1, 0, 0, -1}, {1, 1, 1, 1}};
    p.rhs = {0.0, 0.0, 0.0, 1.0};
    p.nonneg = {true, true, true, true};
    auto r = solve_lp_feasibility(p);
    REQUIRE(r.status == LpStatus::Feasible);
    CHECK(r.residual <= 1e-9);
}
