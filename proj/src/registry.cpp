#include <algorithm>

#include "thetalab/relations.hpp"

namespace thetalab {

namespace {

Term term(Rational c, CountKind kind, FormTuple form, std::int64_t mul, std::int64_t add) {
    return Term{c, Atom(kind, form, Affine{mul, add})};
}

Term N(Rational c, FormTuple form, std::int64_t mul, std::int64_t add) {
    return term(c, CountKind::N, form, mul, add);
}

Term t(Rational c, FormTuple form, std::int64_t mul, std::int64_t add) {
    return term(c, CountKind::t, form, mul, add);
}

Term tp(Rational c, FormTuple form, std::int64_t mul, std::int64_t add) {
    return term(c, CountKind::tprime, form, mul, add);
}

RelationSpec spec(std::string id, std::vector<Term> lhs, std::vector<Term> rhs,
                  Predicate pred = Predicate::all(), std::string citation = {}) {
    return RelationSpec{std::move(id), CountExpr{std::move(lhs)}, CountExpr{std::move(rhs)},
                        std::move(pred), std::move(citation), Status::proved};
}

std::vector<Params> product_grid(const std::vector<std::string>& names,
                                 const std::vector<std::vector<std::int64_t>>& values,
                                 const std::function<bool(const Params&)>& keep) {
    std::vector<Params> out{Params{}};
    for (std::size_t i = 0; i < names.size(); ++i) {
        std::vector<Params> next;
        for (const auto& base : out) {
            for (const auto v : values[i]) {
                auto p = base;
                p[names[i]] = v;
                next.push_back(std::move(p));
            }
        }
        out = std::move(next);
    }
    std::erase_if(out, [&](const Params& p) { return !keep(p); });
    return out;
}

const std::vector<std::int64_t> kOddA{1, 3, 5};
const std::vector<std::int64_t> kSmall{0, 1, 2, 3, 4};

std::optional<std::string> need_odd(const Params& p, const char* name) {
    if (p.at(name) < 1 || p.at(name) % 2 == 0) return std::string(name) + " must be a positive odd integer";
    return std::nullopt;
}

std::optional<std::string> need_nonnegative(const Params& p, const char* name) {
    if (p.at(name) < 0) return std::string(name) + " must be >= 0";
    return std::nullopt;
}

std::optional<std::string> need_positive(const Params& p, const char* name) {
    if (p.at(name) < 1) return std::string(name) + " must be >= 1";
    return std::nullopt;
}

template <typename... Checks>
std::optional<std::string> first_of(Checks... checks) {
    std::optional<std::string> out;
    ((out = out ? out : checks()), ...);
    return out;
}

// Shared scaffold for families whose grid is "a odd in {1,3,5}" times small k/m.
RelationFamily family(std::string id, std::string citation, std::vector<std::string> parameters,
                      std::function<std::optional<std::string>(const Params&)> violation,
                      std::function<RelationSpec(const Params&)> build,
                      std::vector<std::vector<std::int64_t>> grid_values) {
    RelationFamily f;
    f.id = std::move(id);
    f.citation = std::move(citation);
    f.parameters = parameters;
    f.violation = violation;
    f.build = std::move(build);
    f.grid = [parameters, violation, grid_values] {
        return product_grid(parameters, grid_values,
                            [&](const Params& p) { return !violation(p).has_value(); });
    };
    return f;
}

RelationFamily eq14_or_15(bool eight) {
    auto violation = [eight](const Params& p) -> std::optional<std::string> {
        for (const char* name : {"a", "b", "c", "d"}) {
            if (p.at(name) < 1) return std::string(name) + " must be >= 1";
        }
        const auto s = p.at("a") + p.at("b") + p.at("c") + p.at("d");
        if (eight ? s != 8 : (s < 5 || s > 7)) {
            return eight ? std::string("a+b+c+d must equal 8") : std::string("a+b+c+d must lie in 5..7");
        }
        return std::nullopt;
    };
    RelationFamily f;
    f.id = eight ? "eq1.5" : "eq1.4";
    f.citation = eight ? "C(a,b,c,d) t'(a,b,c,d;n) = N(a,b,c,d;8n+8) - N(a,b,c,d;2n+2), a+b+c+d = 8"
                       : "C(a,b,c,d) t'(a,b,c,d;n) = N(a,b,c,d;8n+a+b+c+d), a+b+c+d in {5,6,7}";
    f.parameters = {"a", "b", "c", "d"};
    f.violation = violation;
    f.build = [eight](const Params& p) {
        const FormTuple form(p.at("a"), p.at("b"), p.at("c"), p.at("d"));
        // C depends only on multiplicities of 1, 2, 3.
        std::int64_t i1 = 0, i2 = 0, i3 = 0;
        for (const auto e : form.entries()) {
            i1 += e == 1;
            i2 += e == 2;
            i3 += e == 3;
        }
        const Rational c(16 + 4 * i1 * (i1 - 1) * i2 + 8 * i1 * i3);
        if (eight) return spec("", {tp(c, form, 1, 0)}, {N(1, form, 8, 8), N(-1, form, 2, 2)});
        return spec("", {tp(c, form, 1, 0)}, {N(1, form, 8, form.sum())});
    };
    f.grid = [violation] {
        const std::vector<std::int64_t> v{1, 2, 3, 4, 5};
        return product_grid({"a", "b", "c", "d"}, {v, v, v, v}, [&](const Params& p) {
            return !violation(p) && p.at("a") <= p.at("b") && p.at("b") <= p.at("c") &&
                   p.at("c") <= p.at("d");
        });
    };
    return f;
}

RelationFamily eq11() {
    RelationFamily f;
    f.id = "eq1.1";
    f.citation = "t(a,b,c,d;n) = 16 t'(a,b,c,d;n)";
    f.parameters = {"a", "b", "c", "d"};
    f.violation = [](const Params& p) -> std::optional<std::string> {
        for (const char* name : {"a", "b", "c", "d"}) {
            if (p.at(name) < 1) return std::string(name) + " must be >= 1";
        }
        return std::nullopt;
    };
    f.build = [](const Params& p) {
        const FormTuple form(p.at("a"), p.at("b"), p.at("c"), p.at("d"));
        return spec("", {t(1, form, 1, 0)}, {tp(16, form, 1, 0)});
    };
    f.grid = [] {
        const std::vector<std::int64_t> v{1, 2, 3, 4};
        return product_grid({"a", "b", "c", "d"}, {v, v, v, v}, [](const Params& p) {
            return p.at("a") <= p.at("b") && p.at("b") <= p.at("c") && p.at("c") <= p.at("d");
        });
    };
    return f;
}

// Statement form of the second equality, parametrized by the subtracted index
// so the erratum probe can reuse it.
RelationSpec aa2a_second(const Params& p, bool proof_line) {
    const auto a = p.at("a"), m = p.at("m");
    const FormTuple f(a, a, 2 * a, 8 * m + 4);
    const auto sub = proof_line ? 2 * m + 2 * a + 2 : 2 * m + a + 1;
    return spec("", {t(1, f, 1, 0)},
                {N(Rational(2, 3), f, 8, 8 * m + 4 * a + 4), N(Rational(-2, 3), f, 2, sub)});
}

std::optional<std::string> a_odd_m(const Params& p) {
    return first_of([&] { return need_odd(p, "a"); }, [&] { return need_nonnegative(p, "m"); });
}

std::optional<std::string> a_odd_k_positive(const Params& p) {
    return first_of([&] { return need_odd(p, "a"); }, [&] { return need_positive(p, "k"); });
}

Registry build() {
    Registry r;
    auto& fams = r.families;

    fams.push_back(eq11());
    fams.push_back(eq14_or_15(false));
    fams.push_back(eq14_or_15(true));

    fams.push_back(family(
        "lemma2.1", "N(a,a,2k,2m;2n) = N(a,a,k,m;n), a odd", {"a", "k", "m"},
        [](const Params& p) {
            return first_of([&] { return need_odd(p, "a"); }, [&] { return need_positive(p, "k"); },
                            [&] { return need_positive(p, "m"); });
        },
        [](const Params& p) {
            const auto a = p.at("a"), k = p.at("k"), m = p.at("m");
            return spec("", {N(1, FormTuple(a, a, 2 * k, 2 * m), 2, 0)},
                        {N(1, FormTuple(a, a, k, m), 1, 0)});
        },
        {kOddA, kSmall, kSmall}));

    fams.push_back(family(
        "thm2.1a",
        "t(a,a,2a,8m+4;n) = 2/3 (N(a,a,a,4m+2;4n+4m+2a+2) - N(a,a,a,4m+2;n+m+(a+1)/2)), a odd",
        {"a", "m"}, a_odd_m,
        [](const Params& p) {
            const auto a = p.at("a"), m = p.at("m");
            const FormTuple g(a, a, a, 4 * m + 2);
            return spec("", {t(1, FormTuple(a, a, 2 * a, 8 * m + 4), 1, 0)},
                        {N(Rational(2, 3), g, 4, 4 * m + 2 * a + 2),
                         N(Rational(-2, 3), g, 1, m + (a + 1) / 2)});
        },
        {kOddA, kSmall}));

    fams.push_back(family(
        "thm2.1b",
        "t(a,a,2a,8m+4;n) = 2/3 (N(a,a,2a,8m+4;8n+8m+4a+4) - N(a,a,2a,8m+4;2n+2m+a+1)), a odd",
        {"a", "m"}, a_odd_m, [](const Params& p) { return aa2a_second(p, false); },
        {kOddA, kSmall}));

    fams.push_back(family(
        "thm2.2",
        "t(a,3a,4k+2,4m+2;n) = 2/3 (N(a,3a,4k+2,4m+2;8n+4m+4k+4a+4) - "
        "N(a,3a,4k+2,4m+2;2n+m+k+a+1)), a odd, k = m (mod 2)",
        {"a", "k", "m"},
        [](const Params& p) {
            return first_of([&] { return need_odd(p, "a"); },
                            [&] { return need_nonnegative(p, "k"); },
                            [&] { return need_nonnegative(p, "m"); },
                            [&]() -> std::optional<std::string> {
                                if ((p.at("k") - p.at("m")) % 2 != 0) return "k and m must have equal parity";
                                return std::nullopt;
                            });
        },
        [](const Params& p) {
            const auto a = p.at("a"), k = p.at("k"), m = p.at("m");
            const FormTuple f(a, 3 * a, 4 * k + 2, 4 * m + 2);
            return spec("", {t(1, f, 1, 0)},
                        {N(Rational(2, 3), f, 8, 4 * m + 4 * k + 4 * a + 4),
                         N(Rational(-2, 3), f, 2, m + k + a + 1)});
        },
        {kOddA, kSmall, kSmall}));

    fams.push_back(family(
        "thm2.3", "t(a,3a,k,k;n) = 2/3 N(a,3a,2k,2k;8n+4a+2k), a and k odd", {"a", "k"},
        [](const Params& p) {
            return first_of([&] { return need_odd(p, "a"); }, [&] { return need_odd(p, "k"); });
        },
        [](const Params& p) {
            const auto a = p.at("a"), k = p.at("k");
            return spec("", {t(1, FormTuple(a, 3 * a, k, k), 1, 0)},
                        {N(Rational(2, 3), FormTuple(a, 3 * a, 2 * k, 2 * k), 8, 4 * a + 2 * k)});
        },
        {kOddA, kSmall}));

    fams.push_back(family(
        "thm2.4",
        "t(a,3a,8k+4,4m+2;n) = 2/3 N(a,3a,8k+4,4m+2;8n+4m+8k+4a+6) for n = k+(a-1)/2 (mod 2), a odd",
        {"a", "k", "m"},
        [](const Params& p) {
            return first_of([&] { return need_odd(p, "a"); },
                            [&] { return need_nonnegative(p, "k"); },
                            [&] { return need_nonnegative(p, "m"); });
        },
        [](const Params& p) {
            const auto a = p.at("a"), k = p.at("k"), m = p.at("m");
            const FormTuple f(a, 3 * a, 8 * k + 4, 4 * m + 2);
            return spec("", {t(1, f, 1, 0)}, {N(Rational(2, 3), f, 8, 4 * m + 8 * k + 4 * a + 6)},
                        Predicate::residue_classes(2, {k + (a - 1) / 2}));
        },
        {kOddA, kSmall, kSmall}));

    fams.push_back(family(
        "thm2.5", "t(a,a,6a,4k;4n+3a) = 2 t(a,a,6a,k;n), a odd", {"a", "k"}, a_odd_k_positive,
        [](const Params& p) {
            const auto a = p.at("a"), k = p.at("k");
            return spec("", {t(1, FormTuple(a, a, 6 * a, 4 * k), 4, 3 * a)},
                        {t(2, FormTuple(a, a, 6 * a, k), 1, 0)});
        },
        {kOddA, kSmall}));

    fams.push_back(family(
        "thm2.6", "t(a,a,2a,4k;4n+3a) = 4 t(a,2a,4a,k;n), a odd", {"a", "k"}, a_odd_k_positive,
        [](const Params& p) {
            const auto a = p.at("a"), k = p.at("k");
            return spec("", {t(1, FormTuple(a, a, 2 * a, 4 * k), 4, 3 * a)},
                        {t(4, FormTuple(a, 2 * a, 4 * a, k), 1, 0)});
        },
        {kOddA, kSmall}));

    fams.push_back(family(
        "thm2.7a", "t(a,a,8a,2k;2n) = t(a,2a,2a,k;n), a odd", {"a", "k"}, a_odd_k_positive,
        [](const Params& p) {
            const auto a = p.at("a"), k = p.at("k");
            return spec("", {t(1, FormTuple(a, a, 8 * a, 2 * k), 2, 0)},
                        {t(1, FormTuple(a, 2 * a, 2 * a, k), 1, 0)});
        },
        {kOddA, kSmall}));

    fams.push_back(family(
        "thm2.7b", "t(a,a,8a,2k;2n+a) = 2 t(a,4a,4a,k;n), a odd", {"a", "k"}, a_odd_k_positive,
        [](const Params& p) {
            const auto a = p.at("a"), k = p.at("k");
            return spec("", {t(1, FormTuple(a, a, 8 * a, 2 * k), 2, a)},
                        {t(2, FormTuple(a, 4 * a, 4 * a, k), 1, 0)});
        },
        {kOddA, kSmall}));

    auto& specs = r.specs;
    specs.push_back(spec("thm2.11", {t(1, {1, 1, 4, 6}, 1, 0)}, {N(2, {1, 1, 4, 6}, 2, 3)},
                         Predicate::residue_classes(4, {1, 2}),
                         "t(1,1,4,6;n) = 2 N(1,1,4,6;2n+3) for n = 1,2 (mod 4)"));
    specs.push_back(spec("thm2.12", {t(1, {2, 2, 3, 9}, 1, 0)},
                         {N(Rational(4, 3), {2, 2, 3, 9}, 2, 4)}, Predicate::residue_classes(4, {1}),
                         "t(2,2,3,9;n) = 4/3 N(2,2,3,9;2n+4) for n = 1 (mod 4)"));
    specs.push_back(spec("thm2.13a", {t(1, {1, 2, 2, 6}, 1, 0)},
                         {N(Rational(1, 2), {1, 1, 4, 6}, 8, 11)}, Predicate::all(),
                         "t(1,2,2,6;n) = 1/2 N(1,1,4,6;8n+11)"));
    specs.push_back(spec("thm2.13b", {t(1, {1, 1, 8, 12}, 2, 0)},
                         {N(Rational(1, 2), {1, 1, 8, 12}, 16, 22)}, Predicate::all(),
                         "t(1,1,8,12;2n) = 1/2 N(1,1,8,12;16n+22)"));
    specs.push_back(spec("thm2.14a", {t(1, {1, 1, 6, 24}, 4, 1)}, {t(2, {2, 2, 3, 3}, 1, 0)},
                         Predicate::all(), "t(1,1,6,24;4n+1) = 2 t(2,2,3,3;n)"));
    specs.push_back(spec("thm2.14b", {t(1, {1, 1, 6, 24}, 4, 0)}, {t(1, {1, 1, 3, 3}, 1, 0)},
                         Predicate::all(), "t(1,1,6,24;4n) = t(1,1,3,3;n)"));
    specs.push_back(spec("cor2.1", {N(1, {2, 2, 3, 9}, 8, 6)}, {N(Rational(3, 5), {1, 1, 3, 9}, 8, 6)},
                         Predicate::all(), "N(2,2,3,9;8n+6) = 3/5 N(1,1,3,9;8n+6)"));
    for (const FormTuple f : {FormTuple{1, 1, 1, 2}, FormTuple{1, 1, 1, 3}, FormTuple{1, 1, 2, 3},
                              FormTuple{1, 1, 3, 9}, FormTuple{1, 3, 3, 3}, FormTuple{1, 3, 3, 6},
                              FormTuple{1, 3, 9, 9}}) {
        specs.push_back(spec("rem2.1[" + f.to_string() + "]", {t(1, f, 1, 0)},
                             {N(Rational(2, 5), f, 8, f.sum())}, Predicate::all(),
                             "t(a,b,c,d;n) = 2/5 N(a,b,c,d;8n+a+b+c+d)"));
    }
    return r;
}

}  // namespace

const Registry& builtin_registry() {
    static const Registry registry = build();
    return registry;
}

const RelationFamily& erratum_probe_family() {
    static const RelationFamily probe = [] {
        auto f = family(
            "thm2.1b-proofline",
            "t(a,a,2a,8m+4;n) = 2/3 (N(a,a,2a,8m+4;8n+8m+4a+4) - N(a,a,2a,8m+4;2n+2m+2a+2)), a odd",
            {"a", "m"}, a_odd_m, [](const Params& p) { return aa2a_second(p, true); },
            {kOddA, kSmall});
        f.status = Status::informational;
        return f;
    }();
    return probe;
}

}  // namespace thetalab
