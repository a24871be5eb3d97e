#include "thetalab/series.hpp"

#include <algorithm>
#include <string>

namespace thetalab {

namespace checked {

std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw SeriesOverflow("coefficient overflow in addition: " + std::to_string(a) + " + " +
                             std::to_string(b));
    }
    return r;
}

std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw SeriesOverflow("coefficient overflow in product: " + std::to_string(a) + " * " +
                             std::to_string(b));
    }
    return r;
}

}  // namespace checked

PowerSeries::PowerSeries(std::size_t precision) : coeffs_(precision, 0) {}

PowerSeries::PowerSeries(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {}

PowerSeries::PowerSeries(std::initializer_list<std::int64_t> coeffs) : coeffs_(coeffs) {}

PowerSeries PowerSeries::constant(std::int64_t c, std::size_t precision) {
    PowerSeries s(precision);
    if (precision > 0) s.coeffs_[0] = c;
    return s;
}

std::int64_t PowerSeries::coeff(std::size_t n) const {
    if (n >= coeffs_.size()) {
        throw PrecisionError("coefficient q^" + std::to_string(n) +
                             " requested from a series known modulo q^" +
                             std::to_string(coeffs_.size()));
    }
    return coeffs_[n];
}

std::size_t PowerSeries::nonzeros() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(coeffs_.begin(), coeffs_.end(), [](std::int64_t c) { return c != 0; }));
}

namespace {

template <typename Op>
PowerSeries combine(const PowerSeries& f, const PowerSeries& g, Op op) {
    const auto p = std::min(f.precision(), g.precision());
    std::vector<std::int64_t> out(p);
    const auto fc = f.coeffs();
    const auto gc = g.coeffs();
    for (std::size_t j = 0; j < p; ++j) out[j] = op(fc[j], gc[j]);
    return PowerSeries(std::move(out));
}

}  // namespace

PowerSeries add(const PowerSeries& f, const PowerSeries& g) {
    return combine(f, g, [](std::int64_t a, std::int64_t b) { return checked::add(a, b); });
}

PowerSeries sub(const PowerSeries& f, const PowerSeries& g) {
    return combine(f, g, [](std::int64_t a, std::int64_t b) {
        std::int64_t r;
        if (__builtin_sub_overflow(a, b, &r)) {
            throw SeriesOverflow("coefficient overflow in subtraction");
        }
        return r;
    });
}

PowerSeries mul(const PowerSeries& f, const PowerSeries& g) {
    const auto p = std::min(f.precision(), g.precision());
    // Outer loop over the sparser factor; theta series are mostly zeros.
    const bool swap = f.nonzeros() > g.nonzeros();
    const auto outer = swap ? g.coeffs() : f.coeffs();
    const auto inner = swap ? f.coeffs() : g.coeffs();
    std::vector<std::int64_t> out(p, 0);
    for (std::size_t i = 0; i < p; ++i) {
        const auto a = outer[i];
        if (a == 0) continue;
        for (std::size_t j = 0; i + j < p; ++j) {
            const auto b = inner[j];
            if (b == 0) continue;
            out[i + j] = checked::add(out[i + j], checked::mul(a, b));
        }
    }
    return PowerSeries(std::move(out));
}

PowerSeries scale(const PowerSeries& f, std::int64_t c) {
    std::vector<std::int64_t> out(f.precision());
    const auto fc = f.coeffs();
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = checked::mul(fc[j], c);
    return PowerSeries(std::move(out));
}

PowerSeries shift(const PowerSeries& f, std::size_t s) {
    std::vector<std::int64_t> out(f.precision() + s, 0);
    std::ranges::copy(f.coeffs(), out.begin() + static_cast<std::ptrdiff_t>(s));
    return PowerSeries(std::move(out));
}

PowerSeries substitute_power(const PowerSeries& f, std::size_t k) {
    if (k == 0) throw std::invalid_argument("substitute_power requires k >= 1");
    std::vector<std::int64_t> out(f.precision() * k, 0);
    const auto fc = f.coeffs();
    for (std::size_t j = 0; j < fc.size(); ++j) out[j * k] = fc[j];
    return PowerSeries(std::move(out));
}

PowerSeries extract_progression(const PowerSeries& f, std::size_t r, std::size_t m) {
    if (m == 0 || r >= m) {
        throw std::invalid_argument("extract_progression requires 0 <= r < m");
    }
    const auto p = f.precision();
    const std::size_t out_p = p > r ? (p - r + m - 1) / m : 0;
    std::vector<std::int64_t> out(out_p);
    const auto fc = f.coeffs();
    for (std::size_t j = 0; j < out_p; ++j) out[j] = fc[m * j + r];
    return PowerSeries(std::move(out));
}

PowerSeries truncate(const PowerSeries& f, std::size_t precision) {
    if (precision > f.precision()) {
        throw PrecisionError("cannot raise precision from " + std::to_string(f.precision()) +
                             " to " + std::to_string(precision));
    }
    const auto fc = f.coeffs();
    return PowerSeries(std::vector<std::int64_t>(fc.begin(), fc.begin() + static_cast<std::ptrdiff_t>(precision)));
}

std::optional<std::size_t> first_mismatch(const PowerSeries& f, const PowerSeries& g) {
    const auto p = std::min(f.precision(), g.precision());
    const auto fc = f.coeffs();
    const auto gc = g.coeffs();
    for (std::size_t j = 0; j < p; ++j) {
        if (fc[j] != gc[j]) return j;
    }
    return std::nullopt;
}

bool eq_to_precision(const PowerSeries& f, const PowerSeries& g) {
    return !first_mismatch(f, g).has_value();
}

}  // namespace thetalab
