#include "thetalab/theta.hpp"

#include <algorithm>
#include <stdexcept>

namespace thetalab::theta {

PowerSeries phi_series(std::size_t k, std::size_t precision) {
    if (k == 0) throw std::invalid_argument("phi_series requires k >= 1");
    std::vector<std::int64_t> c(precision, 0);
    if (precision > 0) c[0] = 1;
    for (std::size_t n = 1; k * n * n < precision; ++n) c[k * n * n] = 2;
    return PowerSeries(std::move(c));
}

PowerSeries psi_series(std::size_t k, std::size_t precision) {
    if (k == 0) throw std::invalid_argument("psi_series requires k >= 1");
    std::vector<std::int64_t> c(precision, 0);
    for (std::size_t n = 0; k * n * (n + 1) / 2 < precision; ++n) c[k * n * (n + 1) / 2] = 1;
    return PowerSeries(std::move(c));
}

namespace {

template <typename Factor>
PowerSeries fourfold(const FormTuple& form, std::size_t precision, Factor factor) {
    const auto s = form.sorted();
    // Multiply the sparsest factors first.
    auto acc = factor(static_cast<std::size_t>(s[3]), precision);
    for (int i = 2; i >= 0; --i) {
        acc = mul(acc, factor(static_cast<std::size_t>(s[i]), precision));
    }
    return acc;
}

}  // namespace

PowerSeries n_genfun(const FormTuple& form, std::size_t precision) {
    return fourfold(form, precision, phi_series);
}

PowerSeries tprime_genfun(const FormTuple& form, std::size_t precision) {
    return fourfold(form, precision, psi_series);
}

PowerSeries t_genfun(const FormTuple& form, std::size_t precision) {
    return scale(tprime_genfun(form, precision), 16);
}

namespace {

// Shorthand used only by the identity builders below.
struct Q {
    std::size_t p;
    PowerSeries phi(std::size_t k) const { return phi_series(k, p); }
    PowerSeries psi(std::size_t k) const { return psi_series(k, p); }
    // c * q^s * f
    static PowerSeries mono(std::int64_t c, std::size_t s, const PowerSeries& f) {
        return shift(scale(f, c), s);
    }
};

std::vector<ThetaIdentity> build_registry() {
    std::vector<ThetaIdentity> out;
    out.push_back({"1.8", "psi(q)^2 = phi(q) psi(q^2)",
                   [](std::size_t p) {
                       const Q q{p};
                       return q.psi(1) * q.psi(1);
                   },
                   [](std::size_t p) {
                       const Q q{p};
                       return q.phi(1) * q.psi(2);
                   }});
    out.push_back({"1.9", "phi(q) = phi(q^4) + 2q psi(q^8)",
                   [](std::size_t p) { return Q{p}.phi(1); },
                   [](std::size_t p) {
                       const Q q{p};
                       return q.phi(4) + Q::mono(2, 1, q.psi(8));
                   }});
    out.push_back({"1.10", "phi(q)^2 = phi(q^2)^2 + 4q psi(q^4)^2",
                   [](std::size_t p) {
                       const Q q{p};
                       return q.phi(1) * q.phi(1);
                   },
                   [](std::size_t p) {
                       const Q q{p};
                       return q.phi(2) * q.phi(2) + Q::mono(4, 1, q.psi(4) * q.psi(4));
                   }});
    out.push_back({"1.11", "psi(q) psi(q^3) = phi(q^6) psi(q^4) + q phi(q^2) psi(q^12)",
                   [](std::size_t p) {
                       const Q q{p};
                       return q.psi(1) * q.psi(3);
                   },
                   [](std::size_t p) {
                       const Q q{p};
                       return q.phi(6) * q.psi(4) + Q::mono(1, 1, q.phi(2) * q.psi(12));
                   }});
    auto d16 = phi_sixteen_dissection(1);
    d16.id = "1.12";
    out.push_back(std::move(d16));
    out.push_back({"L2.2",
                   "phi(q)^3 = phi(q^4)^3 + 6q phi(q^4) psi(q^4)^2 + 12q^2 psi(q^4)^2 psi(q^8) "
                   "+ 8q^3 psi(q^8)^3",
                   [](std::size_t p) {
                       const Q q{p};
                       return q.phi(1) * q.phi(1) * q.phi(1);
                   },
                   [](std::size_t p) {
                       const Q q{p};
                       const auto phi4 = q.phi(4), psi4 = q.psi(4), psi8 = q.psi(8);
                       return phi4 * phi4 * phi4 + Q::mono(6, 1, phi4 * psi4 * psi4) +
                              Q::mono(12, 2, psi4 * psi4 * psi8) + Q::mono(8, 3, psi8 * psi8 * psi8);
                   }});
    out.push_back({"L2.3",
                   "phi(q) phi(q^3) = phi(q^16) phi(q^48) + 4q^16 psi(q^32) psi(q^96) "
                   "+ 2q phi(q^48) psi(q^8) + 2q^3 phi(q^16) psi(q^24) + 6q^4 psi(q^8) psi(q^24) "
                   "+ 4q^13 psi(q^8) psi(q^96) + 4q^7 psi(q^24) psi(q^32)",
                   [](std::size_t p) {
                       const Q q{p};
                       return q.phi(1) * q.phi(3);
                   },
                   [](std::size_t p) {
                       const Q q{p};
                       return q.phi(16) * q.phi(48) + Q::mono(4, 16, q.psi(32) * q.psi(96)) +
                              Q::mono(2, 1, q.phi(48) * q.psi(8)) +
                              Q::mono(2, 3, q.phi(16) * q.psi(24)) +
                              Q::mono(6, 4, q.psi(8) * q.psi(24)) +
                              Q::mono(4, 13, q.psi(8) * q.psi(96)) +
                              Q::mono(4, 7, q.psi(24) * q.psi(32));
                   }});
    out.push_back({"L2.4",
                   "phi(q)^2 = phi(q^8)^2 + 4q^4 psi(q^16)^2 + 4q^2 psi(q^8)^2 "
                   "+ 4q phi(q^16) psi(q^8) + 8q^5 psi(q^8) psi(q^32)",
                   [](std::size_t p) {
                       const Q q{p};
                       return q.phi(1) * q.phi(1);
                   },
                   [](std::size_t p) {
                       const Q q{p};
                       return q.phi(8) * q.phi(8) + Q::mono(4, 4, q.psi(16) * q.psi(16)) +
                              Q::mono(4, 2, q.psi(8) * q.psi(8)) +
                              Q::mono(4, 1, q.phi(16) * q.psi(8)) +
                              Q::mono(8, 5, q.psi(8) * q.psi(32));
                   }});
    return out;
}

}  // namespace

ThetaIdentity phi_sixteen_dissection(std::size_t k) {
    if (k == 0) throw std::invalid_argument("dissection requires k >= 1");
    const auto ks = std::to_string(k);
    return {"1.12[k=" + ks + "]",
            "phi(q^" + ks + ") = phi(q^" + std::to_string(16 * k) + ") + 2q^" +
                std::to_string(4 * k) + " psi(q^" + std::to_string(32 * k) + ") + 2q^" + ks +
                " psi(q^" + std::to_string(8 * k) + ")",
            [k](std::size_t p) { return phi_series(k, p); },
            [k](std::size_t p) {
                const Q q{p};
                return q.phi(16 * k) + Q::mono(2, 4 * k, q.psi(32 * k)) +
                       Q::mono(2, k, q.psi(8 * k));
            }};
}

const std::vector<ThetaIdentity>& identity_registry() {
    static const std::vector<ThetaIdentity> registry = build_registry();
    return registry;
}

CheckReport verify(const ThetaIdentity& identity, std::size_t precision) {
    const auto lhs = truncate(identity.lhs(precision), precision);
    const auto rhs = truncate(identity.rhs(precision), precision);
    CheckReport report;
    report.id = identity.id;
    report.n_max = static_cast<std::int64_t>(precision) - 1;
    report.backend = "series";
    report.evaluations.reserve(precision);
    for (std::size_t j = 0; j < precision; ++j) {
        const auto l = lhs.coeff(j), r = rhs.coeff(j);
        report.evaluations.push_back({static_cast<std::int64_t>(j), Rational(l), Rational(r),
                                      l == r ? Verdict::pass : Verdict::mismatch});
    }
    return report;
}

CheckReport verify_theta_identity(const std::string& id, std::size_t precision) {
    const auto& reg = identity_registry();
    const auto it = std::ranges::find(reg, id, &ThetaIdentity::id);
    if (it == reg.end()) throw std::invalid_argument("unknown theta identity '" + id + "'");
    return verify(*it, precision);
}

}  // namespace thetalab::theta
