#pragma once

// Model parameters for the two-site system coupled at site B to a
// semi-infinite tight-binding chain.
//
//   A --v_ab-- B --v0-- 1 --v-- 2 --v-- 3 ...
//
// Energies are measured in units of the chain hopping v and times in
// units of hbar/v (hbar = 1).

#include "swapgate/error.hpp"

namespace swapgate {

struct ModelParams {
  double v_ab = 0.0;
  double v0 = 0.0;
  double v = 1.0;
  double e_a = 0.0;
  double e_b = 0.0;
  double e_n = 0.0;

  friend bool operator==(const ModelParams&, const ModelParams&) = default;
};

/// Parameters that passed the basic checks: v > 0, hoppings >= 0, all finite.
/// Accepted by exact diagonalization, which handles any site energies and v0.
class ValidatedParams {
 public:
  const ModelParams& params() const noexcept { return p_; }
  double v_ab() const noexcept { return p_.v_ab; }
  double v0() const noexcept { return p_.v0; }
  double v() const noexcept { return p_.v; }

  friend bool operator==(const ValidatedParams&, const ValidatedParams&) = default;

 protected:
  explicit ValidatedParams(const ModelParams& p) : p_(p) {}

 private:
  ModelParams p_;
  friend ValidatedParams validate(const ModelParams&);
};

/// Additionally all site energies are zero; required by the closed-form
/// Green's function, LDOS and pole formulas.
class AnalyticParams : public ValidatedParams {
 protected:
  using ValidatedParams::ValidatedParams;
  friend AnalyticParams validate_analytic(const ModelParams&);
};

/// Additionally v0 < v, so the regime boundaries and the pole formula have a
/// nonvanishing denominator V^2 - V0^2.
class RegimeParams : public AnalyticParams {
 protected:
  using AnalyticParams::AnalyticParams;
  friend RegimeParams validate_regime(const ModelParams&);
};

ValidatedParams validate(const ModelParams& p);
AnalyticParams validate_analytic(const ModelParams& p);
RegimeParams validate_regime(const ModelParams& p);

/// Bare Rabi frequency of the isolated dimer, 2 v_ab / hbar.
inline double rabi_frequency(const ValidatedParams& p) { return 2.0 * p.v_ab(); }

/// Returns p with every hopping and site energy multiplied by s.
ModelParams scaled(const ModelParams& p, double s);

}  // namespace swapgate
