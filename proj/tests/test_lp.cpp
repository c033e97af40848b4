#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <vector>

#include "revmax/errors.hpp"
#include "revmax/lp.hpp"
#include "revmax/rng.hpp"

using namespace revmax;

namespace {

const double kInf = LinearProgram::infinity();

//------------------------------------------------------------------------------
// Independent oracle: exhaustive vertex enumeration. Only used on LPs whose
// variables all live in [0,1], so the feasible set is a polytope and any
// optimum sits on a vertex, i.e. an intersection of num_vars active
// hyperplanes drawn from {constraint rows, x_j = 0, x_j = 1}.
//------------------------------------------------------------------------------

struct BruteResult {
    bool feasible = false;
    double objective = 0.0;
};

// solve n x n system by Gaussian elimination; false when near-singular
bool solve_square(std::vector<std::vector<double>> a, std::vector<double> b,
                  std::vector<double>& x) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::fabs(a[r][col]) > std::fabs(a[piv][col])) piv = r;
        if (std::fabs(a[piv][col]) < 1e-9) return false;
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            double f = a[r][col] / a[col][col];
            if (f == 0.0) continue;
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    x.resize(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return true;
}

bool point_feasible(const LinearProgram& lp, const std::vector<double>& x, double tol) {
    for (int j = 0; j < lp.num_vars; ++j)
        if (x[(std::size_t)j] < -tol || x[(std::size_t)j] > lp.upper[(std::size_t)j] + tol)
            return false;
    for (const auto& c : lp.constraints) {
        double lhs = 0.0;
        for (auto [j, a] : c.coeffs) lhs += a * x[(std::size_t)j];
        switch (c.relation) {
            case LinearConstraint::Relation::less_equal:
                if (lhs > c.rhs + tol) return false;
                break;
            case LinearConstraint::Relation::greater_equal:
                if (lhs < c.rhs - tol) return false;
                break;
            case LinearConstraint::Relation::equal:
                if (std::fabs(lhs - c.rhs) > tol) return false;
                break;
        }
    }
    return true;
}

BruteResult brute_force_lp(const LinearProgram& lp) {
    const int n = lp.num_vars;
    // hyperplane pool: every constraint as equality, then x_j = 0 and x_j = ub
    struct Plane {
        std::vector<double> coeffs;
        double rhs;
    };
    std::vector<Plane> pool;
    for (const auto& c : lp.constraints) {
        Plane p{std::vector<double>((std::size_t)n, 0.0), c.rhs};
        for (auto [j, a] : c.coeffs) p.coeffs[(std::size_t)j] += a;
        pool.push_back(std::move(p));
    }
    for (int j = 0; j < n; ++j) {
        Plane lo{std::vector<double>((std::size_t)n, 0.0), 0.0};
        lo.coeffs[(std::size_t)j] = 1.0;
        pool.push_back(lo);
        Plane hi{std::vector<double>((std::size_t)n, 0.0), lp.upper[(std::size_t)j]};
        hi.coeffs[(std::size_t)j] = 1.0;
        pool.push_back(std::move(hi));
    }

    BruteResult best;
    const std::size_t psz = pool.size();
    REQUIRE(psz <= 20);
    for (std::uint32_t mask = 0; mask < (1u << psz); ++mask) {
        if (__builtin_popcount(mask) != n) continue;
        std::vector<std::vector<double>> a;
        std::vector<double> b;
        for (std::size_t k = 0; k < psz; ++k)
            if (mask & (1u << k)) {
                a.push_back(pool[k].coeffs);
                b.push_back(pool[k].rhs);
            }
        std::vector<double> x;
        if (!solve_square(std::move(a), std::move(b), x)) continue;
        if (!point_feasible(lp, x, 1e-7)) continue;
        double obj = 0.0;
        for (int j = 0; j < n; ++j) obj += lp.objective[(std::size_t)j] * x[(std::size_t)j];
        if (!best.feasible || obj > best.objective) {
            best.feasible = true;
            best.objective = obj;
        }
    }
    return best;
}

// random LP on a coarse coefficient grid: ties and degeneracy on purpose
LinearProgram random_boxed_lp(Rng& rng, int max_vars, int max_rows) {
    LinearProgram lp;
    int n = rng.uniform_int(1, max_vars);
    for (int j = 0; j < n; ++j)
        lp.add_variable(0.0, 1.0, 0.25 * rng.uniform_int(-8, 8));
    int m = rng.uniform_int(0, max_rows);
    for (int r = 0; r < m; ++r) {
        std::vector<std::pair<int, double>> coeffs;
        for (int j = 0; j < n; ++j) {
            double a = 0.5 * rng.uniform_int(-4, 4);
            if (a != 0.0) coeffs.emplace_back(j, a);
        }
        auto rel = LinearConstraint::Relation::less_equal;
        int kind = rng.uniform_int(0, 9);
        if (kind >= 8) rel = LinearConstraint::Relation::equal;
        else if (kind >= 5) rel = LinearConstraint::Relation::greater_equal;
        lp.add_constraint(std::move(coeffs), rel, 0.25 * rng.uniform_int(-4, 8));
    }
    return lp;
}

}  // namespace

TEST_CASE("one-variable basics") {
    LinearProgram lp;
    lp.add_variable(0.0, kInf, 1.0);
    lp.add_constraint({{0, 1.0}}, LinearConstraint::Relation::less_equal, 3.0);
    LpSolution s = solve_lp(lp);
    REQUIRE(s.status == LpStatus::optimal);
    CHECK(s.objective_value == doctest::Approx(3.0));
    CHECK(s.assignment[0] == doctest::Approx(3.0));
}

TEST_CASE("box constraints: max x+y with x+y <= 1") {
    LinearProgram lp;
    lp.add_variable(0.0, 1.0, 1.0);
    lp.add_variable(0.0, 1.0, 1.0);
    lp.add_constraint({{0, 1.0}, {1, 1.0}}, LinearConstraint::Relation::less_equal, 1.0);
    LpSolution s = solve_lp(lp);
    REQUIRE(s.status == LpStatus::optimal);
    CHECK(s.objective_value == doctest::Approx(1.0));
}

TEST_CASE("infeasible pair x >= 2, x <= 1") {
    LinearProgram lp;
    lp.add_variable(0.0, kInf, 1.0);
    lp.add_constraint({{0, 1.0}}, LinearConstraint::Relation::greater_equal, 2.0);
    lp.add_constraint({{0, 1.0}}, LinearConstraint::Relation::less_equal, 1.0);
    CHECK(solve_lp(lp).status == LpStatus::infeasible);
}

TEST_CASE("unbounded ray") {
    LinearProgram lp;
    lp.add_variable(0.0, kInf, 1.0);
    CHECK(solve_lp(lp).status == LpStatus::unbounded);

    // bounded after adding the missing row
    lp.add_constraint({{0, 2.0}}, LinearConstraint::Relation::less_equal, 5.0);
    LpSolution s = solve_lp(lp);
    REQUIRE(s.status == LpStatus::optimal);
    CHECK(s.objective_value == doctest::Approx(2.5));
}

TEST_CASE("equality rows work through the row split") {
    LinearProgram lp;
    lp.add_variable(0.0, kInf, 1.0);
    lp.add_variable(0.0, kInf, 2.0);
    lp.add_constraint({{0, 1.0}, {1, 1.0}}, LinearConstraint::Relation::equal, 1.0);
    LpSolution s = solve_lp(lp);
    REQUIRE(s.status == LpStatus::optimal);
    CHECK(s.objective_value == doctest::Approx(2.0));
    CHECK(s.assignment[0] == doctest::Approx(0.0));
    CHECK(s.assignment[1] == doctest::Approx(1.0));
}

TEST_CASE("free variables can go negative") {
    LinearProgram lp;
    lp.add_variable(-kInf, kInf, 1.0);
    lp.add_constraint({{0, 1.0}}, LinearConstraint::Relation::less_equal, -3.0);
    LpSolution s = solve_lp(lp);
    REQUIRE(s.status == LpStatus::optimal);
    CHECK(s.objective_value == doctest::Approx(-3.0));
    CHECK(s.assignment[0] == doctest::Approx(-3.0));
}

TEST_CASE("iteration limit reported honestly") {
    LinearProgram lp;
    lp.add_variable(0.0, 1.0, 1.0);
    lp.add_variable(0.0, 1.0, 1.0);
    SimplexOptions opts;
    opts.max_iterations = 1;
    CHECK(solve_lp(lp, opts).status == LpStatus::iteration_limit);
}

TEST_CASE("validation: bad indices, bounds, non-finite input") {
    LinearProgram lp;
    lp.add_variable(0.0, kInf, 1.0);
    lp.add_constraint({{3, 1.0}}, LinearConstraint::Relation::less_equal, 1.0);
    CHECK_THROWS_AS(solve_lp(lp), validation_error);

    LinearProgram lp2;
    lp2.add_variable(0.5, kInf, 1.0);  // lower bound must be 0 or -inf
    CHECK_THROWS_AS(solve_lp(lp2), validation_error);

    LinearProgram lp3;
    lp3.add_variable(0.0, kInf, std::numeric_limits<double>::quiet_NaN());
    CHECK_THROWS_AS(solve_lp(lp3), validation_error);
}

TEST_CASE("optimal solutions satisfy every constraint within 1e-9") {
    Rng rng(31);
    for (int k = 0; k < 60; ++k) {
        LinearProgram lp = random_boxed_lp(rng, 5, 6);
        LpSolution s = solve_lp(lp);
        if (s.status != LpStatus::optimal) continue;
        for (const auto& c : lp.constraints) {
            double lhs = 0.0;
            for (auto [j, a] : c.coeffs) lhs += a * s.assignment[(std::size_t)j];
            switch (c.relation) {
                case LinearConstraint::Relation::less_equal: CHECK(lhs <= c.rhs + 1e-9); break;
                case LinearConstraint::Relation::greater_equal: CHECK(lhs >= c.rhs - 1e-9); break;
                case LinearConstraint::Relation::equal: CHECK(std::fabs(lhs - c.rhs) <= 1e-9); break;
            }
        }
        double obj = 0.0;
        for (int j = 0; j < lp.num_vars; ++j)
            obj += lp.objective[(std::size_t)j] * s.assignment[(std::size_t)j];
        CHECK(obj == doctest::Approx(s.objective_value).epsilon(1e-9));
    }
}

TEST_CASE("simplex agrees with vertex enumeration on 150 random boxed LPs") {
    Rng rng(1234);
    int optimal_count = 0, infeasible_count = 0;
    for (int k = 0; k < 150; ++k) {
        LinearProgram lp = random_boxed_lp(rng, 5, 6);
        BruteResult oracle = brute_force_lp(lp);
        LpSolution s = solve_lp(lp);
        if (oracle.feasible) {
            ++optimal_count;
            REQUIRE(s.status == LpStatus::optimal);
            CHECK(s.objective_value == doctest::Approx(oracle.objective).epsilon(1e-6));
        } else {
            ++infeasible_count;
            REQUIRE(s.status == LpStatus::infeasible);
        }
    }
    // the generator must exercise both outcomes
    CHECK(optimal_count > 50);
    CHECK(infeasible_count > 5);
}

TEST_CASE("the classic cycling example solves") {
    // heavily degenerate at the origin; naive pivoting cycles forever here
    LinearProgram lp;
    lp.add_variable(0.0, kInf, 0.75);
    lp.add_variable(0.0, kInf, -150.0);
    lp.add_variable(0.0, kInf, 0.02);
    lp.add_variable(0.0, kInf, -6.0);
    lp.add_constraint({{0, 0.25}, {1, -60.0}, {2, -0.04}, {3, 9.0}},
                      LinearConstraint::Relation::less_equal, 0.0);
    lp.add_constraint({{0, 0.5}, {1, -90.0}, {2, -0.02}, {3, 3.0}},
                      LinearConstraint::Relation::less_equal, 0.0);
    lp.add_constraint({{2, 1.0}}, LinearConstraint::Relation::less_equal, 1.0);
    LpSolution s = solve_lp(lp);
    REQUIRE(s.status == LpStatus::optimal);
    CHECK(s.objective_value == doctest::Approx(0.05).epsilon(1e-9));
}

TEST_CASE("redundant equality rows do not confuse phase 1") {
    LinearProgram lp;
    lp.add_variable(0.0, kInf, 1.0);
    lp.add_variable(0.0, kInf, 2.0);
    lp.add_constraint({{0, 1.0}, {1, 1.0}}, LinearConstraint::Relation::equal, 1.0);
    lp.add_constraint({{0, 2.0}, {1, 2.0}}, LinearConstraint::Relation::equal, 2.0);
    lp.add_constraint({{1, 1.0}}, LinearConstraint::Relation::less_equal, 0.4);
    LpSolution s = solve_lp(lp);
    REQUIRE(s.status == LpStatus::optimal);
    CHECK(s.objective_value == doctest::Approx(1.4).epsilon(1e-9));
    CHECK(s.assignment[0] == doctest::Approx(0.6));
    CHECK(s.assignment[1] == doctest::Approx(0.4));
}

TEST_CASE("deterministic: same LP, bitwise-equal solution") {
    Rng rng(77);
    LinearProgram lp = random_boxed_lp(rng, 5, 6);
    LpSolution a = solve_lp(lp);
    LpSolution b = solve_lp(lp);
    REQUIRE(a.status == b.status);
    if (a.status == LpStatus::optimal) {
        CHECK(a.objective_value == b.objective_value);
        CHECK(a.assignment == b.assignment);
    }
}

TEST_CASE("plain-text dump") {
    LinearProgram lp;
    lp.add_variable(0.0, 1.0, 0.25);
    lp.add_variable(0.0, kInf, -1.0);
    lp.add_constraint({{0, 1.0}, {1, -2.0}}, LinearConstraint::Relation::greater_equal, 0.0);
    std::string text = dump_lp(lp, {"q1_0_0", "u_0_0"});
    CHECK(text == "max: 0.25*q1_0_0 - 1*u_0_0\n"
                  "q1_0_0 >= 0, q1_0_0 <= 1\n"
                  "u_0_0 >= 0\n"
                  "1*q1_0_0 - 2*u_0_0 >= 0\n");
}
