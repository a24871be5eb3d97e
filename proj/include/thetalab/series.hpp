#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace thetalab {

/// Raised when a coefficient computation leaves the int64 range.
class SeriesOverflow : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// Raised on reads at or past the known precision.
class PrecisionError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Truncated power series sum_j c_j q^j known modulo q^P.
///
/// The coefficient vector always has exactly P entries. Binary operations
/// propagate the smaller precision, so a result never claims more than its
/// inputs determine. All coefficient arithmetic is overflow-checked.
class PowerSeries {
public:
    PowerSeries() = default;

    /// Zero series known modulo q^precision.
    explicit PowerSeries(std::size_t precision);
    PowerSeries(std::vector<std::int64_t> coeffs);
    PowerSeries(std::initializer_list<std::int64_t> coeffs);

    /// The constant c, known modulo q^precision.
    static PowerSeries constant(std::int64_t c, std::size_t precision);

    std::size_t precision() const noexcept { return coeffs_.size(); }
    std::span<const std::int64_t> coeffs() const noexcept { return coeffs_; }

    /// Coefficient of q^n; throws PrecisionError if n >= precision().
    std::int64_t coeff(std::size_t n) const;
    std::int64_t operator[](std::size_t n) const { return coeff(n); }

    /// Number of nonzero coefficients.
    std::size_t nonzeros() const noexcept;

    friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

private:
    std::vector<std::int64_t> coeffs_;
};

PowerSeries add(const PowerSeries& f, const PowerSeries& g);
PowerSeries sub(const PowerSeries& f, const PowerSeries& g);

/// Cauchy product truncated at min precision. Schoolbook; the sparser operand
/// drives the outer loop and zero coefficients are skipped.
PowerSeries mul(const PowerSeries& f, const PowerSeries& g);
PowerSeries scale(const PowerSeries& f, std::int64_t c);

/// f(q) * q^s; the precision grows by s.
PowerSeries shift(const PowerSeries& f, std::size_t s);

/// f(q^k); precision k * P.
PowerSeries substitute_power(const PowerSeries& f, std::size_t k);

/// sum_j c_{m j + r} q^j; precision ceil((P - r) / m), which is zero when P <= r.
PowerSeries extract_progression(const PowerSeries& f, std::size_t r, std::size_t m);

/// Drops coefficients at or above `precision`; throws if it would grow.
PowerSeries truncate(const PowerSeries& f, std::size_t precision);

/// Compares the first min(P_f, P_g) coefficients.
bool eq_to_precision(const PowerSeries& f, const PowerSeries& g);

/// First index below min precision where f and g differ.
std::optional<std::size_t> first_mismatch(const PowerSeries& f, const PowerSeries& g);

inline PowerSeries operator+(const PowerSeries& f, const PowerSeries& g) { return add(f, g); }
inline PowerSeries operator-(const PowerSeries& f, const PowerSeries& g) { return sub(f, g); }
inline PowerSeries operator*(const PowerSeries& f, const PowerSeries& g) { return mul(f, g); }
inline PowerSeries operator*(std::int64_t c, const PowerSeries& f) { return scale(f, c); }

namespace checked {

std::int64_t add(std::int64_t a, std::int64_t b);
std::int64_t mul(std::int64_t a, std::int64_t b);

}  // namespace checked

}  // namespace thetalab
