#pragma once

#include <optional>
#include <string>

#include "revmax/mechanism.hpp"

namespace revmax {

// g(alpha) = 2 - (alpha - 1 - ln(alpha)) / (1 + alpha), for alpha >= 1.
// g(1) = 2 exactly; g decreases toward 1 as the revenue ratio grows.
// Throws std::domain_error for alpha < 1: callers must pass the max-ratio
// orientation.
double guarantee_factor(double alpha);

// Per-instance record of every quantity the revenue bound is made of.
// Items are relabeled so r1 >= r2; slacks >= 0 (up to check tolerance) mean
// the corresponding inequality holds. When r2 = 0 the ratio alpha is
// undefined: `degenerate` is set and alpha/g_alpha and the theorem and
// lemma-2 slacks are NaN.
struct BoundReport {
    double r1 = 0.0, r2 = 0.0;  // per-item optimal posted-price revenues
    double alpha = 0.0;         // r1 / r2
    double srev = 0.0;          // r1 + r2
    double rev = 0.0;           // LP optimum over all IC/IR mechanisms
    double emin = 0.0;          // E[min{X, Y}]
    double g_alpha = 0.0;
    double theorem_slack = 0.0;  // g(alpha)*srev - rev
    double lemma1_slack = 0.0;   // r1 + r2 + emin - rev
    double lemma2_slack = 0.0;   // (2 + ln(alpha))*r2 - emin
    bool labels_swapped = false;
    bool degenerate = false;
    double ratio() const { return rev / srev; }
};

// slack of  r1 + r2 + E[min] >= rev;  rev must come from optimal_revenue
double check_lemma1(const ProductInstance& inst, double rev);

// slack of  E[min] <= (2 + ln(r1/r2)) * r2  with r1 >= r2 relabeled.
// nullopt when r2 = 0 (the bound is vacuous there).
std::optional<double> check_lemma2(const ProductInstance& inst);

// slack of  g(alpha) * srev >= rev;  nullopt when r2 = 0
std::optional<double> check_theorem(const ProductInstance& inst, double rev);

// |r1 + (3 + ln(r1/r2))*r2  -  g(r1/r2)*(r1 + r2)|, which is zero in exact
// arithmetic: the two sides are the same bound written differently.
// Requires r1 >= r2 > 0.
double algebraic_identity_check(double r1, double r2);

struct AnalyzeOptions {
    RevenueLpOptions lp;
    double check_tol = 1e-7;  // slack below -check_tol counts as a violation
};

// Full per-instance analysis: Myerson revenues, LP revenue, E[min], and all
// three checks. Propagates LP errors.
BoundReport analyze(const ProductInstance& inst, const AnalyzeOptions& opts = {});

// true when every applicable slack is >= -tol
bool report_passes(const BoundReport& r, double tol);

// JSON object with the field names above; NaN serializes as null
std::string report_to_json(const BoundReport& r);

}  // namespace revmax
