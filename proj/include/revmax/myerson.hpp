#pragma once

#include <vector>

#include "revmax/distribution.hpp"

namespace revmax {

struct MyersonResult {
    double price = 0.0;    // smallest revenue-maximizing posted price
    double revenue = 0.0;  // price * P(X >= price)
    std::vector<double> argmax_prices;  // all maximizing support prices, ascending
};

// p * P(X >= p): posted-price revenue under the convention that a buyer whose
// value equals the price buys.
double revenue_at_price(const DiscreteDistribution& d, double p);

// Optimal posted price. Restricting candidates to support points loses
// nothing: on (v_{k-1}, v_k] the tail is constant, so revenue grows linearly
// in p and peaks at v_k; above the top value revenue is 0. Ties break toward
// the smallest price.
MyersonResult optimal_price(const DiscreteDistribution& d);

// max over support points u of (u * tail(u) - R). With R the Myerson revenue
// this is <= 0 by definition of the maximum; downstream tail bounds rely on it.
double tail_revenue_check(const DiscreteDistribution& d, double revenue);

}  // namespace revmax
