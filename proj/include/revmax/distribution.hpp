#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "revmax/rng.hpp"

namespace revmax {

// A finite discrete value distribution: strictly increasing nonnegative
// support, positive probabilities summing to 1. Immutable after construction;
// safe to share across threads.
class DiscreteDistribution {
public:
    const std::vector<double>& values() const { return values_; }
    const std::vector<double>& probs() const { return probs_; }
    std::size_t size() const { return values_.size(); }
    double min_value() const { return values_.front(); }
    double max_value() const { return values_.back(); }

    // P(X >= u). An atom exactly at u counts: a buyer with value equal to the
    // price buys.
    double tail(double u) const;

    double expectation() const;

    // Scale every support value by c > 0.
    DiscreteDistribution scaled(double c) const;

private:
    friend DiscreteDistribution make_distribution(std::vector<double>,
                                                  std::vector<double>);
    DiscreteDistribution(std::vector<double> values, std::vector<double> probs)
        : values_(std::move(values)), probs_(std::move(probs)) {}

    std::vector<double> values_;  // strictly increasing, >= 0
    std::vector<double> probs_;   // positive, renormalized to sum 1
};

// Canonical constructor: sorts values, merges duplicates by summing their
// probabilities, validates (nonnegative values, positive probs, prob sum
// within 1e-9 of 1) and renormalizes the probabilities to sum exactly 1.
// Throws validation_error naming the offending field.
DiscreteDistribution make_distribution(std::vector<double> values,
                                       std::vector<double> probs);

// Exact E[min{X,Y}] for independent X ~ d1, Y ~ d2, by enumerating the product
// support. Cross-checked internally against the survival form
// sum_k (b_{k+1}-b_k) * tail1(b_{k+1}) * tail2(b_{k+1}).
double expected_min(const DiscreteDistribution& d1, const DiscreteDistribution& d2);

// The survival-integral route for E[min{X,Y}]; kept public so tests can compare
// the two routes independently.
double expected_min_survival(const DiscreteDistribution& d1,
                             const DiscreteDistribution& d2);

//------------------------------------------------------------------------------
// Generators
//------------------------------------------------------------------------------

DiscreteDistribution point_mass(double v);

// Equal probability on the given support.
DiscreteDistribution uniform_on(std::vector<double> values);

// Support {base*2^0, ..., base*2^(n-1)} with tails P(X >= v_i) = v_0/v_i, so
// every support point posted as a price yields revenue exactly `base`. The top
// atom absorbs the remaining mass.
DiscreteDistribution equal_revenue_discrete(int n, double base);

// Deterministic random instance: `support_size` distinct values drawn
// uniformly from [value_range.first, value_range.second), weights drawn
// uniformly and normalized.
DiscreteDistribution random_distribution(Rng& rng, int support_size,
                                         std::pair<double, double> value_range);

//------------------------------------------------------------------------------
// JSON wire format: {"values":[...], "probs":[...]}
//------------------------------------------------------------------------------

DiscreteDistribution distribution_from_json(const std::string& text);
DiscreteDistribution load_distribution(const std::string& path);
std::string distribution_to_json(const DiscreteDistribution& d);

}  // namespace revmax
