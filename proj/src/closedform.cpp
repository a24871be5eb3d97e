#include "thetalab/closedform.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "thetalab/arith.hpp"
#include "thetalab/report.hpp"

namespace thetalab::closedform {

namespace {

void require_nonnegative(std::int64_t n, const char* what) {
    if (n < 0) throw std::domain_error(std::string(what) + " requires n >= 0");
}

std::int64_t minus_one_pow(std::int64_t n) { return n % 2 == 0 ? 1 : -1; }

}  // namespace

std::int64_t rep_sum_x(std::int64_t D, std::int64_t c) {
    if (c != 2 && c != 4) throw std::domain_error("rep_sum_x supports c in {2, 4}");
    if (D < 1) throw std::domain_error("rep_sum_x requires D >= 1");
    std::int64_t total = 0;
    const auto y_max = isqrt(D / c);
    for (auto y = -y_max; y <= y_max; ++y) {
        const auto rest = D - c * y * y;
        if (!is_square(rest)) continue;
        const auto s = isqrt(rest);
        if (s == 0) continue;  // x = 0 is never 1 mod 4
        for (const auto x : {s, -s}) {
            if (((x % 4) + 4) % 4 == 1) total += x;
        }
    }
    return total;
}

std::int64_t c_coefficient(const FormTuple& form) {
    const auto s = form.sum();
    if (s < 5 || s > 8) {
        throw std::domain_error("C(a,b,c,d) is defined for entry sums 5..8, got " + form.to_string());
    }
    std::array<std::int64_t, 4> mult{};
    for (const auto e : form.entries()) {
        if (e <= 3) ++mult[static_cast<std::size_t>(e)];
    }
    const auto i1 = mult[1], i2 = mult[2], i3 = mult[3];
    return 16 + 4 * i1 * (i1 - 1) * i2 + 8 * i1 * i3;
}

std::int64_t t4_legendre(std::int64_t n) {
    require_nonnegative(n, "t4_legendre");
    return sigma(2 * n + 1);
}

std::int64_t t1122_williams(std::int64_t n) {
    require_nonnegative(n, "t1122_williams");
    std::int64_t sum = 0;
    for (const auto d : divisors(4 * n + 3)) sum += d - minus_one_pow((d - 1) / 2);
    if (sum % 4 != 0) throw std::logic_error("divisor sum not divisible by 4");
    return sum / 4;
}

std::int64_t t1188(std::int64_t n) {
    require_nonnegative(n, "t1188");
    const auto D = 4 * n + 9;
    return sigma(D) - (2 - minus_one_pow(n)) * rep_sum_x(D, 4);
}

std::int64_t t1148(std::int64_t n) {
    require_nonnegative(n, "t1148");
    const auto D = 4 * n + 7;
    std::int64_t twisted = 0;
    for (const auto d : divisors(D)) twisted += d * jacobi(2, d);
    return 2 * minus_one_pow(n) * twisted - (1 - minus_one_pow(n)) * rep_sum_x(D, 2);
}

std::int64_t t1336(std::int64_t n) {
    require_nonnegative(n, "t1336");
    const std::array<std::int64_t, 1> three{3};
    const auto split = split_small_primes(8 * n + 13, three);
    const auto beta = split.exponents[0];
    const auto n1 = split.cofactor;

    Rational value(2, 3);
    value *= ipow(3, beta) + jacobi(n1, 3);
    for (const auto& [p, r] : factorize(n1).factors) {
        const auto chi = jacobi(6, p);
        value *= Rational(ipow(p, r + 1) - ipow(chi, r + 1), p - chi);
    }
    if (value.denominator() != 1) {
        throw std::logic_error("t1336 produced non-integral value " + to_string(value) +
                               " at n=" + std::to_string(n));
    }
    return value.numerator();
}

std::int64_t t11624_closed(std::int64_t n) {
    require_nonnegative(n, "t11624_closed");
    if (n % 4 != 0) {
        throw std::domain_error("t11624 is defined for n divisible by 4, got " + std::to_string(n));
    }
    const std::array<std::int64_t, 2> small{2, 3};
    const auto split = split_small_primes(n / 4 + 1, small);
    return ipow(2, split.exponents[0] + 4) * sigma(split.cofactor);
}

const std::vector<std::string>& formula_names() {
    static const std::vector<std::string> names{"t4", "t1122", "t1188", "t1148", "t1336", "t11624"};
    return names;
}

std::int64_t evaluate(const std::string& name, std::int64_t n) {
    if (name == "t4") return t4_legendre(n);
    if (name == "t1122") return t1122_williams(n);
    if (name == "t1188") return t1188(n);
    if (name == "t1148") return t1148(n);
    if (name == "t1336") return t1336(n);
    if (name == "t11624") return t11624_closed(n);
    throw std::invalid_argument("unknown formula '" + name + "'");
}

}  // namespace thetalab::closedform
