#include "thetalab/relations.hpp"

#include <algorithm>

#include "thetalab/oracle.hpp"
#include "thetalab/parallel.hpp"
#include "thetalab/theta.hpp"

namespace thetalab {

std::string to_string(CountKind kind) {
    switch (kind) {
        case CountKind::N: return "N";
        case CountKind::t: return "t";
        case CountKind::tprime: return "t'";
    }
    return "?";
}

std::string to_string(Status s) {
    switch (s) {
        case Status::proved: return "proved";
        case Status::conjectured: return "conjectured";
        case Status::informational: return "informational";
    }
    return "?";
}

Predicate Predicate::residue_classes(std::int64_t m, std::vector<std::int64_t> rs) {
    if (m < 1) throw std::invalid_argument("predicate modulus must be >= 1");
    if (rs.empty()) throw std::invalid_argument("predicate needs at least one residue");
    for (auto& r : rs) r = ((r % m) + m) % m;
    std::ranges::sort(rs);
    rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
    if (static_cast<std::int64_t>(rs.size()) == m) return all();
    return Predicate{m, std::move(rs)};
}

bool Predicate::contains(std::int64_t n) const noexcept {
    const auto r = ((n % modulus) + modulus) % modulus;
    return std::ranges::binary_search(residues, r);
}

bool Predicate::is_all() const noexcept {
    return static_cast<std::int64_t>(residues.size()) == modulus;
}

RelationSpec instantiate(const RelationFamily& family, const Params& params) {
    for (const auto& p : family.parameters) {
        if (!params.contains(p)) {
            throw SideConditionError(family.id + ": missing parameter '" + p + "'");
        }
    }
    if (family.violation) {
        if (auto why = family.violation(params)) {
            throw SideConditionError(family.id + ": " + *why);
        }
    }
    auto spec = family.build(params);
    std::string suffix;
    for (const auto& p : family.parameters) {
        suffix += (suffix.empty() ? "" : ",") + p + "=" + std::to_string(params.at(p));
    }
    spec.id = family.id + "[" + suffix + "]";
    spec.citation = family.citation;
    spec.status = family.status;
    return spec;
}

std::vector<RelationSpec> instances(const RelationFamily& family) {
    std::vector<RelationSpec> out;
    for (const auto& params : family.grid()) out.push_back(instantiate(family, params));
    return out;
}

const RelationFamily* find_family(std::string_view id) {
    const auto& fams = builtin_registry().families;
    const auto it = std::ranges::find(fams, id, &RelationFamily::id);
    if (it != fams.end()) return &*it;
    if (erratum_probe_family().id == id) return &erratum_probe_family();
    return nullptr;
}

const RelationSpec* find_spec(std::string_view id) {
    const auto& specs = builtin_registry().specs;
    const auto it = std::ranges::find(specs, id, &RelationSpec::id);
    return it == specs.end() ? nullptr : &*it;
}

void CountBackend::prepare(const RelationSpec&, std::int64_t) {}

std::int64_t EnumerationBackend::count(CountKind kind, const FormTuple& form, std::int64_t n) {
    switch (kind) {
        case CountKind::N: return oracle::count_N(form, n);
        case CountKind::t: return oracle::count_t(form, n);
        case CountKind::tprime: return oracle::count_tprime(form, n);
    }
    return 0;
}

namespace {

// t is served from the t' series; N and t' each get their own product.
int cache_kind(CountKind kind) { return kind == CountKind::N ? 0 : 1; }

void for_each_atom(const RelationSpec& spec, const std::function<void(const Atom&)>& fn) {
    for (const auto* side : {&spec.lhs, &spec.rhs}) {
        for (const auto& term : side->terms) {
            if (term.atom) fn(*term.atom);
        }
    }
}

}  // namespace

std::shared_ptr<const PowerSeries> SeriesBackend::series_for(CountKind kind, const FormTuple& form,
                                                             std::size_t min_precision) {
    const auto key = std::make_pair(cache_kind(kind), form.sorted());
    std::size_t target = min_precision;
    {
        std::scoped_lock lock(mutex_);
        if (const auto it = cache_.find(key); it != cache_.end()) {
            if (it->second->precision() >= min_precision) return it->second;
            target = std::max(min_precision, 2 * it->second->precision());
        }
    }
    auto built = std::make_shared<const PowerSeries>(
        key.first == 0 ? theta::n_genfun(key.second, target) : theta::tprime_genfun(key.second, target));
    std::scoped_lock lock(mutex_);
    auto& slot = cache_[key];
    if (!slot || slot->precision() < built->precision()) slot = built;
    return slot;
}

std::int64_t SeriesBackend::count(CountKind kind, const FormTuple& form, std::int64_t n) {
    if (n < 0) return 0;
    const auto s = series_for(kind, form, static_cast<std::size_t>(n) + 1);
    const auto c = s->coeff(static_cast<std::size_t>(n));
    return kind == CountKind::t ? checked::mul(16, c) : c;
}

void SeriesBackend::prepare(const RelationSpec& spec, std::int64_t n_max) {
    for_each_atom(spec, [&](const Atom& atom) {
        const auto top = std::max(atom.arg.at(n_max), atom.arg.at(0));
        if (top >= 0) series_for(atom.kind, atom.form, static_cast<std::size_t>(top) + 1);
    });
}

std::unique_ptr<CountBackend> make_backend(std::string_view name) {
    if (name == "series") return std::make_unique<SeriesBackend>();
    if (name == "enumerate" || name == "oracle") return std::make_unique<EnumerationBackend>();
    throw std::invalid_argument("unknown backend '" + std::string(name) + "'");
}

Rational evaluate(const CountExpr& expr, std::int64_t n, CountBackend& backend) {
    Rational total(0);
    for (const auto& term : expr.terms) {
        if (!term.atom) {
            total += term.coeff;
            continue;
        }
        const auto& atom = *term.atom;
        total += term.coeff * backend.count(atom.kind, atom.form, atom.arg.at(n));
    }
    return total;
}

std::int64_t max_index(const RelationSpec& spec, std::int64_t n_max) {
    std::int64_t top = 0;
    for_each_atom(spec, [&](const Atom& atom) {
        top = std::max({top, atom.arg.at(n_max), atom.arg.at(0)});
    });
    return top;
}

CheckReport check(const RelationSpec& spec, std::int64_t n_max, CountBackend& backend) {
    CheckReport report;
    report.id = spec.id;
    report.n_max = n_max;
    report.backend = backend.name();
    backend.prepare(spec, n_max);
    for (std::int64_t n = 0; n <= n_max; ++n) {
        if (!spec.predicate.contains(n)) continue;
        Evaluation e{n, evaluate(spec.lhs, n, backend), evaluate(spec.rhs, n, backend), Verdict::pass};
        if (e.lhs.denominator() != 1 || e.rhs.denominator() != 1) {
            e.verdict = Verdict::non_integral;
        } else if (e.lhs != e.rhs) {
            e.verdict = Verdict::mismatch;
        }
        report.evaluations.push_back(e);
    }
    return report;
}

std::vector<CheckReport> check_all(const std::vector<RelationSpec>& specs, std::int64_t n_max,
                                   CountBackend& backend, unsigned workers) {
    return parallel_map(specs.size(), workers,
                        [&](std::size_t i) { return check(specs[i], n_max, backend); });
}

}  // namespace thetalab
