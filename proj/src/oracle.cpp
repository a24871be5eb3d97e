#include "thetalab/oracle.hpp"

#include "thetalab/arith.hpp"

namespace thetalab::oracle {

namespace {

// Largest X >= 1 with X(X-1)/2 <= v (v >= 0).
std::int64_t triangular_bound(std::int64_t v) {
    std::int64_t x = (1 + isqrt(8 * v + 1)) / 2;
    while (x * (x - 1) / 2 > v) --x;
    while ((x + 1) * x / 2 <= v) ++x;
    return x;
}

// Each policy walks one representative per orbit of a value-preserving
// involution and reports the orbit size as weight(x).

struct SquareCoords {
    // x ranges over [0, X] where X^2 <= v; x and -x are distinct unless x = 0.
    static std::int64_t lo(std::int64_t) { return 0; }
    static std::int64_t hi(std::int64_t v) { return isqrt(v); }
    static std::int64_t value(std::int64_t x) { return x * x; }
    static std::int64_t weight(std::int64_t x) { return x == 0 ? 1 : 2; }
    // Number of x with x^2 == v.
    static std::int64_t solutions(std::int64_t v) {
        if (!is_square(v)) return 0;
        return v == 0 ? 1 : 2;
    }
};

struct TriangularCoordsZ {
    // x in [1, X] stands for the pair {x, 1 - x}, which covers [1 - X, X].
    static std::int64_t lo(std::int64_t) { return 1; }
    static std::int64_t hi(std::int64_t v) { return triangular_bound(v); }
    static std::int64_t value(std::int64_t x) { return x * (x - 1) / 2; }
    static std::int64_t weight(std::int64_t) { return 2; }
    // x(x-1)/2 == v has the two roots j and 1-j whenever 8v+1 is a square.
    static std::int64_t solutions(std::int64_t v) { return is_square(8 * v + 1) ? 2 : 0; }
};

struct TriangularCoordsN {
    static std::int64_t lo(std::int64_t) { return 1; }
    static std::int64_t hi(std::int64_t v) { return triangular_bound(v); }
    static std::int64_t value(std::int64_t x) { return x * (x - 1) / 2; }
    static std::int64_t weight(std::int64_t) { return 1; }
    static std::int64_t solutions(std::int64_t v) { return is_square(8 * v + 1) ? 1 : 0; }
};

// Three nested loops over the largest coefficients; the smallest coefficient's
// coordinate is resolved exactly, which keeps the enumerated box small.
template <typename Coords>
std::int64_t enumerate(const FormTuple& form, std::int64_t n) {
    if (n < 0) return 0;
    const auto s = form.sorted();
    std::int64_t total = 0;
    const auto x_hi = Coords::hi(n / s[3]);
    for (auto x = Coords::lo(n / s[3]); x <= x_hi; ++x) {
        const auto r1 = n - s[3] * Coords::value(x);
        const auto wx = Coords::weight(x);
        const auto y_hi = Coords::hi(r1 / s[2]);
        for (auto y = Coords::lo(r1 / s[2]); y <= y_hi; ++y) {
            const auto r2 = r1 - s[2] * Coords::value(y);
            const auto wxy = wx * Coords::weight(y);
            const auto z_hi = Coords::hi(r2 / s[1]);
            for (auto z = Coords::lo(r2 / s[1]); z <= z_hi; ++z) {
                const auto r3 = r2 - s[1] * Coords::value(z);
                if (r3 % s[0] == 0) total += wxy * Coords::weight(z) * Coords::solutions(r3 / s[0]);
            }
        }
    }
    return total;
}

}  // namespace

std::int64_t count_N(const FormTuple& form, std::int64_t n) {
    return enumerate<SquareCoords>(form, n);
}

std::int64_t count_tprime(const FormTuple& form, std::int64_t n) {
    return enumerate<TriangularCoordsN>(form, n);
}

std::int64_t count_t(const FormTuple& form, std::int64_t n) {
    return enumerate<TriangularCoordsZ>(form, n);
}

}  // namespace thetalab::oracle
