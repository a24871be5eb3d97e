#include "thetalab/report.hpp"

#include <algorithm>

namespace thetalab {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::mismatch: return "mismatch";
        case Verdict::non_integral: return "non-integral";
    }
    return "unknown";
}

std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

bool CheckReport::passed() const noexcept {
    return std::ranges::all_of(evaluations, &Evaluation::ok);
}

std::vector<Evaluation> CheckReport::failures() const {
    std::vector<Evaluation> out;
    std::ranges::copy_if(evaluations, std::back_inserter(out),
                         [](const Evaluation& e) { return !e.ok(); });
    return out;
}

std::optional<Evaluation> CheckReport::first_failure() const {
    const auto it = std::ranges::find_if(evaluations, [](const Evaluation& e) { return !e.ok(); });
    if (it == evaluations.end()) return std::nullopt;
    return *it;
}

std::optional<bool> CheckReport::zero_passed() const {
    if (evaluations.empty() || evaluations.front().n != 0) return std::nullopt;
    return evaluations.front().ok();
}

bool CheckReport::passed_positive() const noexcept {
    return std::ranges::all_of(evaluations,
                               [](const Evaluation& e) { return e.n == 0 || e.ok(); });
}

}  // namespace thetalab
