#include "revmax/myerson.hpp"

#include <algorithm>
#include <cmath>

#include "revmax/errors.hpp"

namespace revmax {

double revenue_at_price(const DiscreteDistribution& d, double p) {
    if (p < 0.0) throw validation_error("price: must be nonnegative");
    return p * d.tail(p);
}

MyersonResult optimal_price(const DiscreteDistribution& d) {
    // suffix tails in one pass; candidates are the support points
    const auto& v = d.values();
    const auto& pr = d.probs();
    std::vector<double> rev(v.size());
    double tail = 0.0;
    for (std::size_t i = v.size(); i-- > 0;) {
        tail += pr[i];
        rev[i] = v[i] * tail;
    }

    double best = *std::max_element(rev.begin(), rev.end());
    double tol = 1e-12 * std::max(1.0, best);

    MyersonResult res;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (rev[i] >= best - tol) res.argmax_prices.push_back(v[i]);
    res.price = res.argmax_prices.front();
    res.revenue = revenue_at_price(d, res.price);
    return res;
}

double tail_revenue_check(const DiscreteDistribution& d, double revenue) {
    double worst = -revenue;  // u -> 0+ gives u*tail(u) -> 0
    for (double u : d.values())
        worst = std::max(worst, u * d.tail(u) - revenue);
    return worst;
}

}  // namespace revmax
