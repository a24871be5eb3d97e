#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace thetalab {

/// Coefficients (a,b,c,d) of a diagonal quaternary form; all entries >= 1.
class FormTuple {
public:
    FormTuple(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) : v_{a, b, c, d} {
        for (const auto x : v_) {
            if (x < 1) {
                throw std::invalid_argument("form entries must be positive, got " + to_string());
            }
        }
    }

    std::int64_t operator[](std::size_t i) const { return v_[i]; }
    const std::array<std::int64_t, 4>& entries() const noexcept { return v_; }
    std::int64_t sum() const noexcept { return v_[0] + v_[1] + v_[2] + v_[3]; }

    /// Entries in non-decreasing order. Every count is symmetric in them.
    FormTuple sorted() const {
        auto s = v_;
        std::ranges::sort(s);
        return FormTuple(s[0], s[1], s[2], s[3]);
    }

    std::string to_string() const {
        return std::to_string(v_[0]) + "," + std::to_string(v_[1]) + "," + std::to_string(v_[2]) +
               "," + std::to_string(v_[3]);
    }

    friend auto operator<=>(const FormTuple&, const FormTuple&) = default;

private:
    std::array<std::int64_t, 4> v_;
};

}  // namespace thetalab
