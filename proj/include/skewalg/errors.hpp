#pragma once

#include <stdexcept>
#include <string>

namespace skewalg {

// Base for all library-specific failures.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An exhaustive operation would exceed its candidate budget.
struct BudgetError : Error {
    using Error::Error;
};

// A monomial power was requested for a non-power-associative monomial.
// `failing_power` is the least total power whose bracketings disagree and
// `split` is a pair (s, l) with s + l = failing_power witnessing
// L(z,s)∘L(z,l) != L(z, s+l).
struct PowerAssocError : Error {
    int failing_power;
    int split_left;
    int split_right;
    PowerAssocError(const std::string& msg, int power, int s, int l)
        : Error(msg), failing_power(power), split_left(s), split_right(l) {}
};

}  // namespace skewalg
