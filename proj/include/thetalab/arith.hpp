#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace thetalab {

struct PrimePower {
    std::int64_t p;
    int e;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// n = prod p^e, primes strictly increasing, every e >= 1.
struct Factorization {
    std::int64_t n = 1;
    std::vector<PrimePower> factors;

    std::int64_t value() const;
};

struct PrimeSplit {
    std::vector<int> exponents;  // parallel to the requested primes
    std::int64_t cofactor = 1;   // coprime to every requested prime
};

/// Largest r with r*r <= n. Requires n >= 0.
std::int64_t isqrt(std::int64_t n);
bool is_square(std::int64_t n);
bool is_prime(std::int64_t n);

/// Trial-division factorization; throws std::domain_error for n <= 0.
Factorization factorize(std::int64_t n);

/// Positive divisors in increasing order. Requires n >= 1.
std::vector<std::int64_t> divisors(std::int64_t n);

/// Sum of positive divisors; 0 for every n <= 0.
std::int64_t sigma(std::int64_t n);

/// Jacobi symbol (a/m) for odd m >= 1.
int jacobi(std::int64_t a, std::int64_t m);

/// Exponent of the prime p in n. Throws if p is not prime or n < 1.
int ord_p(std::int64_t p, std::int64_t n);

/// Strips the listed primes out of n: n = prod primes[i]^exponents[i] * cofactor.
PrimeSplit split_small_primes(std::int64_t n, std::span<const std::int64_t> primes);

/// Checked integer power; throws std::overflow_error.
std::int64_t ipow(std::int64_t base, int exp);

}  // namespace thetalab
