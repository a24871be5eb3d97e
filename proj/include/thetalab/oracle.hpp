#pragma once

#include <cstdint>

#include "thetalab/form.hpp"

// Brute-force representation counts by direct enumeration over Z^4 / N^4.
// These are the ground truth for the series and closed-form code paths and
// deliberately share no machinery with them beyond integer square roots.
namespace thetalab::oracle {

/// #{(x,y,z,w) in Z^4 : a x^2 + b y^2 + c z^2 + d w^2 = n}; 0 for n < 0.
std::int64_t count_N(const FormTuple& form, std::int64_t n);

/// #{(x,y,z,w) in N^4 : sum of coefficient * x(x-1)/2 = n}; 0 for n < 0.
std::int64_t count_tprime(const FormTuple& form, std::int64_t n);

/// Same sum as count_tprime but with every coordinate ranging over Z.
std::int64_t count_t(const FormTuple& form, std::int64_t n);

}  // namespace thetalab::oracle
