#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "thetalab/form.hpp"
#include "thetalab/report.hpp"
#include "thetalab/series.hpp"

namespace thetalab::theta {

/// phi(q^k) = 1 + 2 sum_{n>=1} q^{k n^2}, modulo q^P.
PowerSeries phi_series(std::size_t k, std::size_t precision);

/// psi(q^k) = sum_{n>=0} q^{k n(n+1)/2}, modulo q^P.
PowerSeries psi_series(std::size_t k, std::size_t precision);

/// Generating function of N(form; n): phi(q^a) phi(q^b) phi(q^c) phi(q^d).
PowerSeries n_genfun(const FormTuple& form, std::size_t precision);

/// Generating function of t'(form; n): psi(q^a) psi(q^b) psi(q^c) psi(q^d).
PowerSeries tprime_genfun(const FormTuple& form, std::size_t precision);

/// 16 * tprime_genfun.
PowerSeries t_genfun(const FormTuple& form, std::size_t precision);

/// A two-sided theta identity. Each builder returns a series known at least
/// modulo q^P when asked for precision P.
struct ThetaIdentity {
    std::string id;
    std::string statement;
    std::function<PowerSeries(std::size_t)> lhs;
    std::function<PowerSeries(std::size_t)> rhs;
};

/// The identity phi(q^k) = phi(q^{16k}) + 2 q^{4k} psi(q^{32k}) + 2 q^k psi(q^{8k}).
ThetaIdentity phi_sixteen_dissection(std::size_t k);

/// Built-in identities: 1.8, 1.9, 1.10, 1.11, 1.12, L2.2, L2.3, L2.4.
const std::vector<ThetaIdentity>& identity_registry();

/// Builds both sides to precision P and records every coefficient index.
CheckReport verify(const ThetaIdentity& identity, std::size_t precision);

/// Registry lookup + verify; throws std::invalid_argument for an unknown id.
CheckReport verify_theta_identity(const std::string& id, std::size_t precision);

}  // namespace thetalab::theta
