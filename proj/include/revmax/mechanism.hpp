#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "revmax/distribution.hpp"
#include "revmax/lp.hpp"

namespace revmax {

// Two independent items sold to one additive buyer. The type grid is the
// product support, with joint mass f(i,j) = f1(i) * f2(j).
struct ProductInstance {
    DiscreteDistribution d1;
    DiscreteDistribution d2;

    std::size_t num_types() const { return d1.size() * d2.size(); }
    double joint_prob(std::size_t i, std::size_t j) const {
        return d1.probs()[i] * d2.probs()[j];
    }
    // full surplus E[X] + E[Y]; no mechanism can collect more
    double total_surplus() const { return d1.expectation() + d2.expectation(); }
};

// Direct mechanism on the product grid, row-major over (i, j): allocation
// probabilities q1, q2 in [0,1] and expected payment s.
struct Mechanism {
    std::size_t n = 0, m = 0;
    std::vector<double> q1, q2, s;

    std::size_t idx(std::size_t i, std::size_t j) const { return i * m + j; }
    // buyer utility at the truthful report
    double utility(const ProductInstance& inst, std::size_t i, std::size_t j) const {
        std::size_t t = idx(i, j);
        return inst.d1.values()[i] * q1[t] + inst.d2.values()[j] * q2[t] - s[t];
    }
};

// Exhaustive truthfulness / participation audit. Violations are data, not
// errors: positive entries mean the constraint is broken by that amount.
struct MechanismCheck {
    double max_ic_violation = 0.0;     // gain from the best misreport
    double max_ir_violation = 0.0;     // most negative truthful utility
    double max_bound_violation = 0.0;  // q outside [0,1]
    double revenue = 0.0;              // sum f * s, recomputed

    bool passes(double tol) const {
        return max_ic_violation <= tol && max_ir_violation <= tol &&
               max_bound_violation <= tol;
    }
};

struct RevenueLpOptions {
    std::size_t grid_limit = 200;  // max product-support size nm
    SimplexOptions simplex;
    double mechanism_tol = 1e-7;  // returned mechanisms must verify at this
};

struct RevenueResult {
    double revenue = 0.0;
    Mechanism mechanism;
};

// The exact optimal-revenue LP over the product grid, in buyer-utility form:
// per type t the variables are q1(t), q2(t) in [0,1] and u(t) >= 0, with
//   maximize   sum_t f(t) * (x_t*q1(t) + y_t*q2(t) - u(t))
//   subject to u(t) >= u(t') + (x_t - x_t')*q1(t') + (y_t - y_t')*q2(t')
// for every ordered pair t != t'. Payments are recovered afterwards as
// s = x*q1 + y*q2 - u. Throws size_error when nm exceeds the grid limit.
LinearProgram build_revenue_lp(const ProductInstance& inst,
                               std::size_t grid_limit = 200);

// Variable names q1_i_j, q2_i_j, u_i_j matching build_revenue_lp's layout,
// for the plain-text LP dump.
std::vector<std::string> revenue_lp_var_names(const ProductInstance& inst);

// Maximal revenue over all IC and IR mechanisms, plus a mechanism attaining
// it. The returned mechanism is re-verified at opts.mechanism_tol.
RevenueResult optimal_revenue(const ProductInstance& inst,
                              const RevenueLpOptions& opts = {});

MechanismCheck verify_mechanism(const ProductInstance& inst, const Mechanism& mech);

// Sell each item separately at its own optimal posted price. Returns
// srev = R1 + R2 and the deterministic posted-price mechanism.
RevenueResult separate_sale_revenue(const ProductInstance& inst);

// Best revenue from a single take-it-or-leave-it price for the pair, over all
// candidate prices x+y on the grid. A feasible mechanism, so a lower bound on
// the LP optimum.
double bundle_revenue(const ProductInstance& inst);

}  // namespace revmax
