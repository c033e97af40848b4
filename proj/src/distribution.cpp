#include "revmax/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "revmax/errors.hpp"

namespace revmax {

double DiscreteDistribution::tail(double u) const {
    // first support point >= u; everything from there up counts
    auto it = std::lower_bound(values_.begin(), values_.end(), u);
    double t = 0.0;
    for (auto i = static_cast<std::size_t>(it - values_.begin()); i < probs_.size(); ++i)
        t += probs_[i];
    return t;
}

double DiscreteDistribution::expectation() const {
    double e = 0.0;
    for (std::size_t i = 0; i < values_.size(); ++i) e += values_[i] * probs_[i];
    return e;
}

DiscreteDistribution DiscreteDistribution::scaled(double c) const {
    if (!(c > 0.0)) throw validation_error("scale: factor must be positive");
    std::vector<double> v(values_);
    for (double& x : v) x *= c;
    return make_distribution(std::move(v), probs_);
}

DiscreteDistribution make_distribution(std::vector<double> values,
                                       std::vector<double> probs) {
    if (values.empty())
        throw validation_error("values: support must contain at least one point");
    if (values.size() != probs.size())
        throw validation_error("probs: length does not match values");

    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!std::isfinite(values[i]))
            throw validation_error("values: non-finite entry at index " + std::to_string(i));
        if (values[i] < 0.0)
            throw validation_error("values: negative value at index " + std::to_string(i));
        if (!std::isfinite(probs[i]) || probs[i] <= 0.0)
            throw validation_error("probs: nonpositive probability at index " +
                                   std::to_string(i));
    }

    double sum = std::accumulate(probs.begin(), probs.end(), 0.0);
    if (std::fabs(sum - 1.0) > 1e-9) {
        std::ostringstream os;
        os << "probs: sum " << sum << " deviates from 1 beyond 1e-9";
        throw validation_error(os.str());
    }

    // sort by value, merge exact duplicates, renormalize
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

    std::vector<double> v, p;
    v.reserve(values.size());
    p.reserve(values.size());
    for (std::size_t k : order) {
        if (!v.empty() && values[k] == v.back()) {
            p.back() += probs[k];
        } else {
            v.push_back(values[k]);
            p.push_back(probs[k]);
        }
    }
    for (double& x : p) x /= sum;

    return DiscreteDistribution(std::move(v), std::move(p));
}

double expected_min(const DiscreteDistribution& d1, const DiscreteDistribution& d2) {
    double e = 0.0;
    for (std::size_t i = 0; i < d1.size(); ++i)
        for (std::size_t j = 0; j < d2.size(); ++j)
            e += d1.probs()[i] * d2.probs()[j] *
                 std::min(d1.values()[i], d2.values()[j]);

    // the survival route must agree; a mismatch means a tail bug
    double es = expected_min_survival(d1, d2);
    if (std::fabs(e - es) > 1e-10)
        throw std::logic_error("expected_min: pairwise and survival routes disagree");
    return e;
}

double expected_min_survival(const DiscreteDistribution& d1,
                             const DiscreteDistribution& d2) {
    // P(min >= u) = tail1(u)*tail2(u) is piecewise constant between support
    // points, so E[min] = sum over breakpoints of width * tail product.
    std::vector<double> bp;
    bp.reserve(d1.size() + d2.size() + 1);
    bp.push_back(0.0);
    bp.insert(bp.end(), d1.values().begin(), d1.values().end());
    bp.insert(bp.end(), d2.values().begin(), d2.values().end());
    std::sort(bp.begin(), bp.end());
    bp.erase(std::unique(bp.begin(), bp.end()), bp.end());

    double e = 0.0;
    for (std::size_t k = 0; k + 1 < bp.size(); ++k) {
        double u = bp[k + 1];
        e += (bp[k + 1] - bp[k]) * d1.tail(u) * d2.tail(u);
    }
    return e;
}

DiscreteDistribution point_mass(double v) {
    return make_distribution({v}, {1.0});
}

DiscreteDistribution uniform_on(std::vector<double> values) {
    if (values.empty())
        throw validation_error("values: support must contain at least one point");
    std::vector<double> probs(values.size(), 1.0 / static_cast<double>(values.size()));
    return make_distribution(std::move(values), std::move(probs));
}

DiscreteDistribution equal_revenue_discrete(int n, double base) {
    if (n < 1) throw validation_error("n: support size must be >= 1");
    if (!(base > 0.0)) throw validation_error("base: must be positive");

    // tails 2^-i give posted-price revenue v_i * tail_i = base at every point
    std::vector<double> v(static_cast<std::size_t>(n));
    std::vector<double> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        v[static_cast<std::size_t>(i)] = base * std::ldexp(1.0, i);
        double tail_i = std::ldexp(1.0, -i);
        double tail_next = (i + 1 < n) ? std::ldexp(1.0, -(i + 1)) : 0.0;
        p[static_cast<std::size_t>(i)] = tail_i - tail_next;
    }
    return make_distribution(std::move(v), std::move(p));
}

DiscreteDistribution random_distribution(Rng& rng, int support_size,
                                         std::pair<double, double> value_range) {
    if (support_size < 1) throw validation_error("support_size: must be >= 1");
    if (!(value_range.second > value_range.first) || value_range.first < 0.0)
        throw validation_error("value_range: need 0 <= lo < hi");

    std::vector<double> v;
    v.reserve(static_cast<std::size_t>(support_size));
    while (v.size() < static_cast<std::size_t>(support_size)) {
        double x = rng.uniform(value_range.first, value_range.second);
        if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
    }
    std::vector<double> w(static_cast<std::size_t>(support_size));
    double sum = 0.0;
    for (double& x : w) {
        x = rng.uniform(0.05, 1.0);  // bounded away from 0 so no atom degenerates
        sum += x;
    }
    for (double& x : w) x /= sum;
    return make_distribution(std::move(v), std::move(w));
}

DiscreteDistribution distribution_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw validation_error(std::string("json: ") + e.what());
    }
    if (!j.is_object() || !j.contains("values") || !j.contains("probs"))
        throw validation_error("json: expected object with \"values\" and \"probs\"");
    try {
        auto values = j.at("values").get<std::vector<double>>();
        auto probs = j.at("probs").get<std::vector<double>>();
        return make_distribution(std::move(values), std::move(probs));
    } catch (const nlohmann::json::exception& e) {
        throw validation_error(std::string("json: ") + e.what());
    }
}

DiscreteDistribution load_distribution(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw validation_error("file: cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return distribution_from_json(buf.str());
}

std::string distribution_to_json(const DiscreteDistribution& d) {
    nlohmann::json j;
    j["values"] = d.values();
    j["probs"] = d.probs();
    return j.dump();
}

}  // namespace revmax
