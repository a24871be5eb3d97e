#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "thetalab/form.hpp"

// Direct evaluations of closed-form expressions for t and t'.
// Functions named t... return t (all of Z^4); t4_legendre and t1122_williams
// return t' (positive coordinates only).
namespace thetalab::closedform {

/// sum of x over integer pairs (x, y) with D = x^2 + c y^2 and x = 1 (mod 4).
/// Sign choices of y are separate pairs. c must be 2 or 4.
std::int64_t rep_sum_x(std::int64_t D, std::int64_t c);

/// 16 + 4 i1 (i1 - 1) i2 + 8 i1 i3, i_j = multiplicity of j among the entries.
/// Defined for entry sums 5..8; throws std::domain_error otherwise.
std::int64_t c_coefficient(const FormTuple& form);

/// t'(1,1,1,1;n) = sigma(2n+1).
std::int64_t t4_legendre(std::int64_t n);

/// t'(1,1,2,2;n) = 1/4 sum_{d | 4n+3} (d - (-1)^((d-1)/2)).
std::int64_t t1122_williams(std::int64_t n);

/// t(1,1,8,8;n) = sigma(4n+9) - (2 - (-1)^n) rep_sum_x(4n+9, 4).
std::int64_t t1188(std::int64_t n);

/// t(1,1,4,8;n) = 2(-1)^n sum_{d | 4n+7} d (2/d) - (1 - (-1)^n) rep_sum_x(4n+7, 2).
std::int64_t t1148(std::int64_t n);

/// t(1,3,3,6;n) via the factorization 8n+13 = 3^beta n1, 3 not dividing n1:
/// (2/3)(3^beta + (n1/3)) prod_{p | n1} (p^{r+1} - (6/p)^{r+1}) / (p - (6/p)), r = ord_p n1.
/// Evaluated over exact rationals; a non-integral value throws std::logic_error.
std::int64_t t1336(std::int64_t n);

/// t(1,1,6,24;n) for n = 4m: 2^{alpha+4} sigma(m1) where m+1 = 2^alpha 3^beta m1,
/// gcd(m1, 6) = 1. Throws std::domain_error unless 4 | n.
std::int64_t t11624_closed(std::int64_t n);

/// Names accepted by evaluate(): t4, t1122, t1188, t1148, t1336, t11624.
const std::vector<std::string>& formula_names();

/// Dispatch by name; throws std::invalid_argument for an unknown name.
std::int64_t evaluate(const std::string& name, std::int64_t n);

}  // namespace thetalab::closedform
