#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "thetalab/form.hpp"
#include "thetalab/report.hpp"
#include "thetalab/series.hpp"

namespace thetalab {

enum class CountKind { N, t, tprime };

std::string to_string(CountKind kind);

/// mul * n + add, with mul >= 0.
struct Affine {
    std::int64_t mul = 1;
    std::int64_t add = 0;

    std::int64_t at(std::int64_t n) const noexcept { return mul * n + add; }
    friend bool operator==(const Affine&, const Affine&) = default;
};

/// A count applied to a form and an affine index, e.g. N(1,1,4,6;2n+3).
/// The form is stored sorted so permuted spellings compare equal.
struct Atom {
    CountKind kind;
    FormTuple form;
    Affine arg;

    Atom(CountKind k, const FormTuple& f, Affine a) : kind(k), form(f.sorted()), arg(a) {
        if (a.mul < 0) throw std::invalid_argument("affine index needs a nonnegative multiplier");
    }
    friend bool operator==(const Atom&, const Atom&) = default;
};

/// coeff * atom, or a bare rational constant when atom is empty.
struct Term {
    Rational coeff;
    std::optional<Atom> atom;

    friend bool operator==(const Term&, const Term&) = default;
};

/// Rational-linear combination of atoms and constants.
struct CountExpr {
    std::vector<Term> terms;

    friend bool operator==(const CountExpr&, const CountExpr&) = default;
};

/// Finite union of residue classes n = r (mod modulus); modulus 1 means all n.
struct Predicate {
    std::int64_t modulus = 1;
    std::vector<std::int64_t> residues{0};  // sorted, distinct, in [0, modulus)

    static Predicate all() { return {}; }
    /// Normalizes residues mod m; throws std::invalid_argument if m < 1 or the set is empty.
    static Predicate residue_classes(std::int64_t m, std::vector<std::int64_t> rs);

    bool contains(std::int64_t n) const noexcept;
    bool is_all() const noexcept;
    friend bool operator==(const Predicate&, const Predicate&) = default;
};

enum class Status { proved, conjectured, informational };

std::string to_string(Status s);

struct RelationSpec {
    std::string id;
    CountExpr lhs;
    CountExpr rhs;
    Predicate predicate;
    std::string citation;
    Status status = Status::proved;
};

using Params = std::map<std::string, std::int64_t>;

/// A relation quantified over integer parameters (a odd, k, m >= 0, ...).
struct RelationFamily {
    std::string id;
    std::string citation;
    std::vector<std::string> parameters;
    /// Returns a description of the violated side condition, or nothing.
    std::function<std::optional<std::string>(const Params&)> violation;
    std::function<RelationSpec(const Params&)> build;
    /// Parameter sets sampled by default checks.
    std::function<std::vector<Params>()> grid;
    Status status = Status::proved;
};

class SideConditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Builds the concrete relation; throws SideConditionError if params are
/// missing or violate the family's side conditions.
RelationSpec instantiate(const RelationFamily& family, const Params& params);

struct Registry {
    std::vector<RelationFamily> families;
    std::vector<RelationSpec> specs;
};

/// Every proved relation, each exactly once.
const Registry& builtin_registry();

/// Variant of the second form of the t(a,a,2a,8m+4;n) relation with the
/// subtracted index 2n+2m+2a+2 instead of 2n+2m+a+1. Informational only.
const RelationFamily& erratum_probe_family();

/// Family or concrete spec lookup by id.
const RelationFamily* find_family(std::string_view id);
const RelationSpec* find_spec(std::string_view id);

/// Source of count values used when evaluating relations.
class CountBackend {
public:
    virtual ~CountBackend() = default;
    virtual std::string name() const = 0;
    /// Count at index n; 0 for n < 0. Must be safe to call concurrently.
    virtual std::int64_t count(CountKind kind, const FormTuple& form, std::int64_t n) = 0;
    /// Optional hint that every atom of `spec` will be evaluated for n <= n_max.
    virtual void prepare(const RelationSpec& spec, std::int64_t n_max);
};

/// Direct enumeration (oracle module).
class EnumerationBackend final : public CountBackend {
public:
    std::string name() const override { return "enumerate"; }
    std::int64_t count(CountKind kind, const FormTuple& form, std::int64_t n) override;
};

/// Generating-function coefficients, cached per (kind, form) and grown on demand.
class SeriesBackend final : public CountBackend {
public:
    std::string name() const override { return "series"; }
    std::int64_t count(CountKind kind, const FormTuple& form, std::int64_t n) override;
    void prepare(const RelationSpec& spec, std::int64_t n_max) override;

private:
    std::shared_ptr<const PowerSeries> series_for(CountKind kind, const FormTuple& form,
                                                  std::size_t min_precision);

    std::mutex mutex_;
    std::map<std::pair<int, FormTuple>, std::shared_ptr<const PowerSeries>> cache_;
};

/// "series", or "enumerate" (alias "oracle"); throws std::invalid_argument otherwise.
std::unique_ptr<CountBackend> make_backend(std::string_view name);

/// Exact value of expr at n.
Rational evaluate(const CountExpr& expr, std::int64_t n, CountBackend& backend);

/// Largest index any atom of the spec touches for n in [0, n_max].
std::int64_t max_index(const RelationSpec& spec, std::int64_t n_max);

/// Evaluates both sides for every n in [0, n_max] on the predicate.
CheckReport check(const RelationSpec& spec, std::int64_t n_max, CountBackend& backend);

/// Checks many specs in parallel; reports come back in input order.
std::vector<CheckReport> check_all(const std::vector<RelationSpec>& specs, std::int64_t n_max,
                                   CountBackend& backend, unsigned workers = 0);

/// Every grid instance of the family.
std::vector<RelationSpec> instances(const RelationFamily& family);

// Text form (grammar in README):
//   relation := expr "==" expr [ "for" pred ]
//   expr     := term { ("+"|"-") term }
//   term     := [ rational "*" ] atom | rational
//   atom     := ("N"|"t"|"t'") "(" int "," int "," int "," int ";" affine ")"
//   affine   := [int ["*"]] "n" [("+"|"-") int] | int
//   pred     := "n" "%" int "in" "{" int {"," int} "}"
//   rational := int [ "/" int ]
// A leading "-" on the first term is also accepted so that every expression
// the printer emits parses back.

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position);
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

RelationSpec parse_relation(std::string_view text, std::string id = "adhoc");
std::string print(const Affine& a);
std::string print(const CountExpr& expr);
std::string print(const Predicate& p);
std::string print(const RelationSpec& spec);

}  // namespace thetalab
