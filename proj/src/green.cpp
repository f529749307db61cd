#include "swapgate/green.hpp"

#include <cmath>
#include <numbers>

namespace swapgate {

const char* to_string(Sheet s) { return s == Sheet::Physical ? "physical" : "unphysical"; }

namespace {

Complex physical_branch(Complex z, double v) {
  const double x = z.real();
  if (z.imag() == 0.0) {
    if (std::abs(x) <= 2.0 * v) return {0.5 * x, -std::sqrt(std::max(0.0, v * v - 0.25 * x * x))};
    // bounded root, computed without cancellation
    const double big = 0.5 * (x + std::copysign(std::sqrt(x * x - 4.0 * v * v), x));
    return {v * v / big, 0.0};
  }
  const Complex s = std::sqrt(4.0 * v * v - z * z);
  const Complex i{0.0, 1.0};
  Complex r = 0.5 * (z - i * s);
  const Complex other = 0.5 * (z + i * s);
  // r*other = v^2; recover the small root from the large one when needed
  if (std::abs(r) < std::abs(other)) r = v * v / other;
  return r;
}

}  // namespace

Complex self_energy(Complex eps, Sheet sheet, double v) {
  const Complex phys = physical_branch(eps, v);
  if (sheet == Sheet::Physical) return phys;
  return v * v / phys;
}

SelfEnergyValue self_energy_closed(Complex eps, Sheet sheet, const AnalyticParams& p) {
  const Complex s = self_energy(eps, sheet, p.v());
  return {s.real(), -s.imag(), sheet};
}

Complex self_energy_derivative(Complex eps, Sheet sheet, double v) {
  const Complex s = self_energy(eps, sheet, v);
  return s / (2.0 * s - eps);
}

Complex self_energy_cf(Complex eps, std::size_t depth, double eta, const AnalyticParams& p) {
  if (depth == 0) throw Error(ErrorCode::InvalidArgument, "continued fraction depth must be >= 1");
  if (!(eta > 0.0)) throw Error(ErrorCode::InvalidArgument, "eta must be > 0");
  const double v2 = p.v() * p.v();
  const double zr = eps.real(), zi = eps.imag() + eta;
  double tr = 0.0, ti = 0.0;
  for (std::size_t level = 0; level < depth; ++level) {
    const double dr = zr - tr, di = zi - ti;
    const double s = v2 / (dr * dr + di * di);
    tr = s * dr;
    ti = -s * di;
  }
  return {tr, ti};
}

Complex g_aa_isolated(Complex eps, const AnalyticParams& p) {
  if (std::abs(eps) < kPoleHitTolerance) throw Error(ErrorCode::PoleHit, "eps = 0");
  const Complex den = eps - p.v_ab() * p.v_ab() / eps;
  if (std::abs(den) < kPoleHitTolerance) throw Error(ErrorCode::PoleHit, "eps = +-v_ab");
  return 1.0 / den;
}

Complex pole_condition(Complex eps, Sheet sheet, const AnalyticParams& p) {
  const double ratio = (p.v0() * p.v0()) / (p.v() * p.v());
  const Complex inner = eps - ratio * self_energy(eps, sheet, p.v());
  return eps * inner - p.v_ab() * p.v_ab();
}

Complex g_aa(Complex eps, Sheet sheet, const AnalyticParams& p) {
  if (p.v_ab() == 0.0) {
    if (std::abs(eps) < kPoleHitTolerance) throw Error(ErrorCode::PoleHit, "eps = 0 with decoupled site A");
    return 1.0 / eps;
  }
  const double ratio = (p.v0() * p.v0()) / (p.v() * p.v());
  const Complex inner = eps - ratio * self_energy(eps, sheet, p.v());
  const Complex den = eps * inner - p.v_ab() * p.v_ab();
  if (std::abs(den) < kPoleHitTolerance) throw Error(ErrorCode::PoleHit, "pole of G_AA");
  return inner / den;
}

double surface_ldos(double eps, double v) {
  const double lo = v - 0.5 * eps;
  const double hi = v + 0.5 * eps;
  if (lo <= 0.0 || hi <= 0.0) return 0.0;
  return std::sqrt(lo * hi) / (std::numbers::pi * v * v);
}

}  // namespace swapgate
