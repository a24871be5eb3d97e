#pragma once

// Test-only reference computations. Deliberately naive: full boxes, no
// pruning, no shared code with the library.

#include <array>
#include <cstdint>
#include <vector>

namespace naive {

inline std::int64_t sigma(std::int64_t n) {
    if (n <= 0) return 0;
    std::int64_t s = 0;
    for (std::int64_t d = 1; d <= n; ++d) {
        if (n % d == 0) s += d;
    }
    return s;
}

// Counts over the full box [-R, R]^4 (or [lo, R]^4); R must cover every solution.
template <typename Value>
std::int64_t box_count(const std::array<std::int64_t, 4>& f, std::int64_t n, std::int64_t lo,
                       std::int64_t hi, Value value) {
    std::int64_t count = 0;
    for (auto x = lo; x <= hi; ++x)
        for (auto y = lo; y <= hi; ++y)
            for (auto z = lo; z <= hi; ++z)
                for (auto w = lo; w <= hi; ++w)
                    if (f[0] * value(x) + f[1] * value(y) + f[2] * value(z) + f[3] * value(w) == n)
                        ++count;
    return count;
}

inline std::int64_t count_N(const std::array<std::int64_t, 4>& f, std::int64_t n, std::int64_t R) {
    return box_count(f, n, -R, R, [](std::int64_t x) { return x * x; });
}

inline std::int64_t count_tprime(const std::array<std::int64_t, 4>& f, std::int64_t n, std::int64_t R) {
    return box_count(f, n, 1, R, [](std::int64_t x) { return x * (x - 1) / 2; });
}

inline std::int64_t count_t(const std::array<std::int64_t, 4>& f, std::int64_t n, std::int64_t R) {
    return box_count(f, n, -R, R, [](std::int64_t x) { return x * (x - 1) / 2; });
}

// Schoolbook product over plain vectors, for cross-checking the series module.
inline std::vector<std::int64_t> poly_mul(const std::vector<std::int64_t>& a,
                                          const std::vector<std::int64_t>& b, std::size_t p) {
    std::vector<std::int64_t> out(p, 0);
    for (std::size_t i = 0; i < a.size() && i < p; ++i)
        for (std::size_t j = 0; j < b.size() && i + j < p; ++j) out[i + j] += a[i] * b[j];
    return out;
}

}  // namespace naive
