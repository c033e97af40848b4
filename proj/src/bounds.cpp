#include "revmax/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "revmax/myerson.hpp"

namespace revmax {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Myerson revenues relabeled so hi >= lo.
struct RevenuePair {
    double hi, lo;
    bool swapped;
};

RevenuePair item_revenues(const ProductInstance& inst) {
    double a = optimal_price(inst.d1).revenue;
    double b = optimal_price(inst.d2).revenue;
    if (a >= b) return {a, b, false};
    return {b, a, true};
}

}  // namespace

double guarantee_factor(double alpha) {
    if (!(alpha >= 1.0))
        throw std::domain_error("guarantee_factor: alpha must be >= 1");
    return 2.0 - (alpha - 1.0 - std::log(alpha)) / (1.0 + alpha);
}

double check_lemma1(const ProductInstance& inst, double rev) {
    RevenuePair r = item_revenues(inst);
    return r.hi + r.lo + expected_min(inst.d1, inst.d2) - rev;
}

std::optional<double> check_lemma2(const ProductInstance& inst) {
    RevenuePair r = item_revenues(inst);
    if (r.lo <= 0.0) return std::nullopt;
    return (2.0 + std::log(r.hi / r.lo)) * r.lo - expected_min(inst.d1, inst.d2);
}

std::optional<double> check_theorem(const ProductInstance& inst, double rev) {
    RevenuePair r = item_revenues(inst);
    if (r.lo <= 0.0) return std::nullopt;
    return guarantee_factor(r.hi / r.lo) * (r.hi + r.lo) - rev;
}

double algebraic_identity_check(double r1, double r2) {
    if (!(r1 >= r2) || !(r2 > 0.0))
        throw std::domain_error("algebraic_identity_check: need r1 >= r2 > 0");
    double lhs = r1 + (3.0 + std::log(r1 / r2)) * r2;
    double rhs = guarantee_factor(r1 / r2) * (r1 + r2);
    return std::fabs(lhs - rhs);
}

BoundReport analyze(const ProductInstance& inst, const AnalyzeOptions& opts) {
    BoundReport rep;
    RevenuePair r = item_revenues(inst);
    rep.r1 = r.hi;
    rep.r2 = r.lo;
    rep.labels_swapped = r.swapped;
    rep.srev = rep.r1 + rep.r2;
    rep.emin = expected_min(inst.d1, inst.d2);
    rep.rev = optimal_revenue(inst, opts.lp).revenue;
    rep.lemma1_slack = rep.srev + rep.emin - rep.rev;

    if (rep.r2 <= 0.0) {
        rep.degenerate = true;
        rep.alpha = kNaN;
        rep.g_alpha = kNaN;
        rep.theorem_slack = kNaN;
        rep.lemma2_slack = kNaN;
        return rep;
    }
    rep.alpha = rep.r1 / rep.r2;
    rep.g_alpha = guarantee_factor(rep.alpha);
    rep.theorem_slack = rep.g_alpha * rep.srev - rep.rev;
    rep.lemma2_slack = (2.0 + std::log(rep.alpha)) * rep.r2 - rep.emin;
    return rep;
}

bool report_passes(const BoundReport& r, double tol) {
    if (r.lemma1_slack < -tol) return false;
    if (r.degenerate) return true;
    return r.theorem_slack >= -tol && r.lemma2_slack >= -tol;
}

std::string report_to_json(const BoundReport& r) {
    auto num = [](double x) {
        return std::isnan(x) ? nlohmann::json() : nlohmann::json(x);
    };
    nlohmann::json j;
    j["r1"] = r.r1;
    j["r2"] = r.r2;
    j["alpha"] = num(r.alpha);
    j["srev"] = r.srev;
    j["rev"] = r.rev;
    j["emin"] = r.emin;
    j["g_alpha"] = num(r.g_alpha);
    j["theorem_slack"] = num(r.theorem_slack);
    j["lemma1_slack"] = r.lemma1_slack;
    j["lemma2_slack"] = num(r.lemma2_slack);
    j["labels_swapped"] = r.labels_swapped;
    j["degenerate"] = r.degenerate;
    return j.dump();
}

}  // namespace revmax
