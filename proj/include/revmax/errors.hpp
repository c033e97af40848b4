#pragma once

#include <stdexcept>
#include <string>

namespace revmax {

// Input violated a domain invariant (bad probabilities, malformed JSON, ...).
// The message names the offending field.
class validation_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Problem exceeds a configured size limit.
class size_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Numerical failure inside the simplex (tiny pivot, drift past tolerance).
class lp_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace revmax
