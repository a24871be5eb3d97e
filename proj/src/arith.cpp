#include "thetalab/arith.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace thetalab {

std::int64_t Factorization::value() const {
    std::int64_t v = 1;
    for (const auto& [p, e] : factors) {
        v *= ipow(p, e);
    }
    return v;
}

std::int64_t isqrt(std::int64_t n) {
    if (n < 0) {
        throw std::domain_error("isqrt of negative value " + std::to_string(n));
    }
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    if (n < (std::int64_t{1} << 52)) {
        while (r * r > n) --r;
        while ((r + 1) * (r + 1) <= n) ++r;
        return r;
    }
    // Compare by division so r near 2^31.5 cannot overflow.
    while (r > n / r) --r;
    while (r + 1 <= n / (r + 1)) ++r;
    return r;
}

bool is_square(std::int64_t n) {
    if (n < 0) return false;
    const auto r = isqrt(n);
    return r * r == n;
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (std::int64_t d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

Factorization factorize(std::int64_t n) {
    if (n <= 0) {
        throw std::domain_error("factorize requires n >= 1, got " + std::to_string(n));
    }
    Factorization f{n, {}};
    auto take = [&](std::int64_t p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0) f.factors.push_back({p, e});
    };
    take(2);
    take(3);
    for (std::int64_t d = 5; d * d <= n; d += 6) {
        take(d);
        take(d + 2);
    }
    if (n > 1) f.factors.push_back({n, 1});
    return f;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
    if (n <= 0) {
        throw std::domain_error("divisors requires n >= 1, got " + std::to_string(n));
    }
    std::vector<std::int64_t> small, large;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::int64_t sigma(std::int64_t n) {
    if (n <= 0) return 0;
    std::int64_t s = 1;
    for (const auto& [p, e] : factorize(n).factors) {
        std::int64_t term = 1, pk = 1;
        for (int i = 0; i < e; ++i) {
            pk *= p;
            term += pk;
        }
        s *= term;
    }
    return s;
}

int jacobi(std::int64_t a, std::int64_t m) {
    if (m <= 0 || m % 2 == 0) {
        throw std::domain_error("jacobi requires odd positive modulus, got " + std::to_string(m));
    }
    a %= m;
    if (a < 0) a += m;
    int result = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            const auto r = m % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, m);
        if (a % 4 == 3 && m % 4 == 3) result = -result;
        a %= m;
    }
    return m == 1 ? result : 0;
}

int ord_p(std::int64_t p, std::int64_t n) {
    if (!is_prime(p)) {
        throw std::domain_error("ord_p requires a prime, got " + std::to_string(p));
    }
    if (n < 1) {
        throw std::domain_error("ord_p requires n >= 1, got " + std::to_string(n));
    }
    int r = 0;
    while (n % p == 0) {
        n /= p;
        ++r;
    }
    return r;
}

PrimeSplit split_small_primes(std::int64_t n, std::span<const std::int64_t> primes) {
    if (n < 1) {
        throw std::domain_error("split_small_primes requires n >= 1, got " + std::to_string(n));
    }
    PrimeSplit out;
    out.exponents.reserve(primes.size());
    for (const auto p : primes) {
        out.exponents.push_back(ord_p(p, n));
        for (int i = 0; i < out.exponents.back(); ++i) n /= p;
    }
    out.cofactor = n;
    return out;
}

std::int64_t ipow(std::int64_t base, int exp) {
    if (exp < 0) throw std::domain_error("ipow with negative exponent");
    std::int64_t r = 1;
    for (int i = 0; i < exp; ++i) {
        if (__builtin_mul_overflow(r, base, &r)) {
            throw std::overflow_error("ipow overflow");
        }
    }
    return r;
}

}  // namespace thetalab
