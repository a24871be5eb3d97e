#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace thetalab {

using Rational = boost::rational<std::int64_t>;

enum class Verdict { pass, mismatch, non_integral };

std::string to_string(Verdict v);
std::string to_string(const Rational& r);

/// One checked index: both sides and how they compared.
struct Evaluation {
    std::int64_t n = 0;
    Rational lhs;
    Rational rhs;
    Verdict verdict = Verdict::pass;

    bool ok() const noexcept { return verdict == Verdict::pass; }
};

/// Outcome of checking one relation or identity over a range of indices.
struct CheckReport {
    std::string id;
    std::int64_t n_max = 0;
    std::string backend;
    std::vector<Evaluation> evaluations;  // increasing n

    std::size_t tested_count() const noexcept { return evaluations.size(); }
    bool passed() const noexcept;
    std::vector<Evaluation> failures() const;
    std::optional<Evaluation> first_failure() const;

    // n = 0 is tracked separately because most statements are phrased for n >= 1.
    std::optional<bool> zero_passed() const;
    bool passed_positive() const noexcept;
};

}  // namespace thetalab
