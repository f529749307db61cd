#pragma once

// Exact self-energy of the semi-infinite chain and the site-A Green's
// function of the coupled system, with explicit Riemann-sheet control.

#include <complex>
#include <cstddef>

#include "swapgate/model.hpp"

namespace swapgate {

using Complex = std::complex<double>;

enum class Sheet { Physical, Unphysical };

const char* to_string(Sheet s);

/// Sigma = delta - i*gamma on a given sheet.
struct SelfEnergyValue {
  double delta = 0.0;
  double gamma = 0.0;
  Sheet sheet = Sheet::Physical;

  Complex value() const { return {delta, -gamma}; }
};

/// Denominators below this magnitude (in units of v) count as a pole hit.
inline constexpr double kPoleHitTolerance = 1e-12;

// Physical sheet: the retarded function in the upper half plane, continued
// through the band (-2v, 2v) into the lower half plane. On the real axis the
// bounded root |Sigma| <= v is taken outside the band and
// Sigma = eps/2 - i sqrt(v^2 - eps^2/4) inside. The unphysical sheet is the
// other root of Sigma^2 - eps*Sigma + v^2 = 0.
Complex self_energy(Complex eps, Sheet sheet, double v);
SelfEnergyValue self_energy_closed(Complex eps, Sheet sheet, const AnalyticParams& p);

/// d(Sigma)/d(eps) from implicit differentiation of the fixed point.
Complex self_energy_derivative(Complex eps, Sheet sheet, double v);

/// Continued fraction v^2/(z - v^2/(z - ...)) truncated at `depth` levels
/// with a zero tail, evaluated at z = eps + i*eta (site energies shifted by
/// -i*eta, i.e. decaying sites).
Complex self_energy_cf(Complex eps, std::size_t depth, double eta, const AnalyticParams& p);

/// G0_AA = 1/(eps - v_ab^2/eps) of the isolated dimer.
Complex g_aa_isolated(Complex eps, const AnalyticParams& p);

/// Full G_AA = 1/(eps - v_ab^2/(eps - (v0/v)^2 Sigma(eps))) on `sheet`.
Complex g_aa(Complex eps, Sheet sheet, const AnalyticParams& p);

/// Cleared pole condition eps*(eps - (v0/v)^2 Sigma) - v_ab^2. Zero exactly at
/// the poles of G_AA, and finite where the inner denominator vanishes.
Complex pole_condition(Complex eps, Sheet sheet, const AnalyticParams& p);

/// Surface density of states of the bare chain, sqrt(v^2 - eps^2/4)/(pi v^2).
double surface_ldos(double eps, double v);

}  // namespace swapgate
