#include "revmax/mechanism.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "revmax/errors.hpp"
#include "revmax/myerson.hpp"

namespace revmax {

namespace {

// variable layout: per type t = i*m + j, columns (3t, 3t+1, 3t+2) = (q1, q2, u)
inline int var_q1(std::size_t t) { return static_cast<int>(3 * t); }
inline int var_q2(std::size_t t) { return static_cast<int>(3 * t + 1); }
inline int var_u(std::size_t t) { return static_cast<int>(3 * t + 2); }

}  // namespace

namespace {

// Restricted revenue LP: same variables and objective, but only the listed
// (t, t2) truthfulness rows.
LinearProgram build_restricted_lp(const ProductInstance& inst,
                                  const std::vector<std::pair<int, int>>& pairs) {
    const std::size_t n = inst.d1.size(), m = inst.d2.size();
    const auto& xs = inst.d1.values();
    const auto& ys = inst.d2.values();

    LinearProgram lp;
    const double inf = LinearProgram::infinity();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            double f = inst.joint_prob(i, j);
            lp.add_variable(0.0, 1.0, f * xs[i]);
            lp.add_variable(0.0, 1.0, f * ys[j]);
            lp.add_variable(0.0, inf, -f);
        }
    for (auto [t, t2] : pairs) {
        std::size_t i = static_cast<std::size_t>(t) / m, j = static_cast<std::size_t>(t) % m;
        std::size_t i2 = static_cast<std::size_t>(t2) / m, j2 = static_cast<std::size_t>(t2) % m;
        std::vector<std::pair<int, double>> row;
        row.reserve(4);
        row.emplace_back(var_u(static_cast<std::size_t>(t)), 1.0);
        row.emplace_back(var_u(static_cast<std::size_t>(t2)), -1.0);
        if (xs[i] != xs[i2])
            row.emplace_back(var_q1(static_cast<std::size_t>(t2)), -(xs[i] - xs[i2]));
        if (ys[j] != ys[j2])
            row.emplace_back(var_q2(static_cast<std::size_t>(t2)), -(ys[j] - ys[j2]));
        lp.add_constraint(std::move(row), LinearConstraint::Relation::greater_equal, 0.0);
    }
    return lp;
}

}  // namespace

LinearProgram build_revenue_lp(const ProductInstance& inst, std::size_t grid_limit) {
    const std::size_t nt = inst.num_types();
    if (nt > grid_limit)
        throw size_error("grid: " + std::to_string(nt) +
                         " types exceed the limit of " + std::to_string(grid_limit));

    // truthfulness: type t must not prefer the menu entry of any other type t'
    std::vector<std::pair<int, int>> all_pairs;
    all_pairs.reserve(nt * (nt - 1));
    for (std::size_t t = 0; t < nt; ++t)
        for (std::size_t t2 = 0; t2 < nt; ++t2)
            if (t != t2) all_pairs.emplace_back(static_cast<int>(t), static_cast<int>(t2));
    return build_restricted_lp(inst, all_pairs);
}

std::vector<std::string> revenue_lp_var_names(const ProductInstance& inst) {
    const std::size_t n = inst.d1.size(), m = inst.d2.size();
    std::vector<std::string> names(3 * n * m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            std::size_t t = i * m + j;
            std::string suffix = "_" + std::to_string(i) + "_" + std::to_string(j);
            names[static_cast<std::size_t>(var_q1(t))] = "q1" + suffix;
            names[static_cast<std::size_t>(var_q2(t))] = "q2" + suffix;
            names[static_cast<std::size_t>(var_u(t))] = "u" + suffix;
        }
    return names;
}

// The full pairwise constraint set is huge (nm(nm-1) rows) and almost all of
// it is slack at the optimum, so the rows are activated lazily: solve with an
// active subset, scan every pair for violations against the candidate
// solution, add the worst offenders, repeat. The returned point satisfies the
// complete row set, and since dropping rows can only enlarge the feasible
// region, its value is exactly the full LP optimum.
RevenueResult optimal_revenue(const ProductInstance& inst, const RevenueLpOptions& opts) {
    const std::size_t n = inst.d1.size(), m = inst.d2.size();
    const std::size_t nt = n * m;
    if (nt > opts.grid_limit)
        throw size_error("grid: " + std::to_string(nt) +
                         " types exceed the limit of " + std::to_string(opts.grid_limit));
    const auto& xs = inst.d1.values();
    const auto& ys = inst.d2.values();

    // seed with the grid-neighbor rows, the usual binding ones
    std::vector<std::pair<int, int>> active;
    std::vector<char> in_active(nt * nt, 0);
    auto activate = [&](std::size_t t, std::size_t t2) {
        if (t == t2 || in_active[t * nt + t2]) return;
        in_active[t * nt + t2] = 1;
        active.emplace_back(static_cast<int>(t), static_cast<int>(t2));
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            std::size_t t = i * m + j;
            if (i > 0) {
                activate(t, t - m);
                activate(t - m, t);
            }
            if (j > 0) {
                activate(t, t - 1);
                activate(t - 1, t);
            }
        }

    LpSolution sol;
    const int max_rounds = 200;
    int round = 0;
    for (;; ++round) {
        if (round == max_rounds)
            throw lp_error("revenue LP: constraint generation did not settle after " +
                           std::to_string(max_rounds) + " rounds");
        LinearProgram lp = build_restricted_lp(inst, active);
        sol = solve_lp(lp, opts.simplex);
        if (sol.status != LpStatus::optimal)
            throw lp_error(std::string("revenue LP did not reach an optimum: ") +
                           to_string(sol.status));

        // exhaustive scan of all ordered pairs against the candidate solution
        struct Violation {
            double amount;
            int t, t2;
        };
        std::vector<Violation> violated;
        const double gen_tol = 1e-10;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                std::size_t t = i * m + j;
                double ut = sol.assignment[static_cast<std::size_t>(var_u(t))];
                for (std::size_t i2 = 0; i2 < n; ++i2)
                    for (std::size_t j2 = 0; j2 < m; ++j2) {
                        std::size_t t2 = i2 * m + j2;
                        if (t == t2 || in_active[t * nt + t2]) continue;
                        double gain =
                            sol.assignment[static_cast<std::size_t>(var_u(t2))] +
                            (xs[i] - xs[i2]) *
                                sol.assignment[static_cast<std::size_t>(var_q1(t2))] +
                            (ys[j] - ys[j2]) *
                                sol.assignment[static_cast<std::size_t>(var_q2(t2))] -
                            ut;
                        if (gain > gen_tol)
                            violated.push_back({gain, static_cast<int>(t),
                                                static_cast<int>(t2)});
                    }
            }
        if (violated.empty()) break;
        std::sort(violated.begin(), violated.end(), [](const Violation& a, const Violation& b) {
            if (a.amount != b.amount) return a.amount > b.amount;
            if (a.t != b.t) return a.t < b.t;
            return a.t2 < b.t2;
        });
        const std::size_t batch = 4 * nt;  // plenty per round, keeps LPs small
        for (std::size_t k = 0; k < violated.size() && k < batch; ++k)
            activate(static_cast<std::size_t>(violated[k].t),
                     static_cast<std::size_t>(violated[k].t2));
    }

    Mechanism mech;
    mech.n = n;
    mech.m = m;
    mech.q1.resize(n * m);
    mech.q2.resize(n * m);
    mech.s.resize(n * m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            std::size_t t = i * m + j;
            double q1 = sol.assignment[static_cast<std::size_t>(var_q1(t))];
            double q2 = sol.assignment[static_cast<std::size_t>(var_q2(t))];
            double u = sol.assignment[static_cast<std::size_t>(var_u(t))];
            mech.q1[t] = q1;
            mech.q2[t] = q2;
            mech.s[t] = xs[i] * q1 + ys[j] * q2 - u;
        }

    MechanismCheck check = verify_mechanism(inst, mech);
    if (!check.passes(opts.mechanism_tol))
        throw lp_error("revenue LP mechanism failed verification: ic " +
                       std::to_string(check.max_ic_violation) + ", ir " +
                       std::to_string(check.max_ir_violation));

    return {sol.objective_value, std::move(mech)};
}

MechanismCheck verify_mechanism(const ProductInstance& inst, const Mechanism& mech) {
    const std::size_t n = inst.d1.size(), m = inst.d2.size();
    const auto& xs = inst.d1.values();
    const auto& ys = inst.d2.values();

    MechanismCheck out;
    out.max_ic_violation = -std::numeric_limits<double>::infinity();
    out.max_ir_violation = -std::numeric_limits<double>::infinity();
    out.max_bound_violation = -std::numeric_limits<double>::infinity();

    for (std::size_t t = 0; t < n * m; ++t) {
        out.max_bound_violation = std::max({out.max_bound_violation, -mech.q1[t],
                                            mech.q1[t] - 1.0, -mech.q2[t],
                                            mech.q2[t] - 1.0});
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            std::size_t t = mech.idx(i, j);
            double truthful = xs[i] * mech.q1[t] + ys[j] * mech.q2[t] - mech.s[t];
            out.max_ir_violation = std::max(out.max_ir_violation, -truthful);
            out.revenue += inst.joint_prob(i, j) * mech.s[t];
            for (std::size_t t2 = 0; t2 < n * m; ++t2) {
                if (t2 == t) continue;
                double deviate =
                    xs[i] * mech.q1[t2] + ys[j] * mech.q2[t2] - mech.s[t2];
                out.max_ic_violation = std::max(out.max_ic_violation, deviate - truthful);
            }
        }
    return out;
}

RevenueResult separate_sale_revenue(const ProductInstance& inst) {
    MyersonResult m1 = optimal_price(inst.d1);
    MyersonResult m2 = optimal_price(inst.d2);

    const std::size_t n = inst.d1.size(), m = inst.d2.size();
    Mechanism mech;
    mech.n = n;
    mech.m = m;
    mech.q1.assign(n * m, 0.0);
    mech.q2.assign(n * m, 0.0);
    mech.s.assign(n * m, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            std::size_t t = mech.idx(i, j);
            if (inst.d1.values()[i] >= m1.price) {
                mech.q1[t] = 1.0;
                mech.s[t] += m1.price;
            }
            if (inst.d2.values()[j] >= m2.price) {
                mech.q2[t] = 1.0;
                mech.s[t] += m2.price;
            }
        }
    return {m1.revenue + m2.revenue, std::move(mech)};
}

double bundle_revenue(const ProductInstance& inst) {
    // distribution of X + Y over the grid, then the best posted bundle price;
    // the maximum is attained at one of the realized sums
    std::map<double, double> sum_mass;
    for (std::size_t i = 0; i < inst.d1.size(); ++i)
        for (std::size_t j = 0; j < inst.d2.size(); ++j)
            sum_mass[inst.d1.values()[i] + inst.d2.values()[j]] +=
                inst.joint_prob(i, j);

    double best = 0.0, tail = 0.0;
    for (auto it = sum_mass.rbegin(); it != sum_mass.rend(); ++it) {
        tail += it->second;
        best = std::max(best, it->first * tail);
    }
    return best;
}

}  // namespace revmax
