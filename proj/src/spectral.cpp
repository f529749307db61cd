#include "swapgate/spectral.hpp"

#include <algorithm>
#include <cmath>

namespace swapgate {

std::string_view to_string(PoleKind k) {
  switch (k) {
    case PoleKind::Resonance: return "resonance";
    case PoleKind::Virtual: return "virtual";
    case PoleKind::Localized: return "localized";
    case PoleKind::Nonphysical: return "nonphysical";
  }
  return "?";
}

std::string_view to_string(Region r) {
  switch (r) {
    case Region::I: return "I";
    case Region::II: return "II";
    case Region::III: return "III";
    case Region::IV: return "IV";
    case Region::V: return "V";
  }
  return "?";
}

Boundaries regime_boundaries(double v0, double v) {
  if (!(v > 0.0) || !(v0 >= 0.0)) throw Error(ErrorCode::InvalidArgument, "need v > 0 and v0 >= 0");
  if (!(v0 < v)) throw Error(ErrorCode::DegenerateDenominator, "boundaries need v0 < v");
  if (v0 == 0.0) return {0.0, 2.0 * v, 2.0 * v, 2.0 * v};
  const double r = std::sqrt((v - v0) * (v + v0));
  Boundaries b;
  // v - r and (2v^2 - v0^2) - 2 v r = (v - r)^2 both cancel badly for small
  // v0; v - r = v0^2 / (v + r) does not.
  b.b1 = v0 * v0 / (v + r);
  b.b2 = b.b1 * std::sqrt(1.0 + 16.0 * v * v * r * r / (v0 * v0 * v0 * v0));
  b.b3 = v + r;
  b.b4 = std::sqrt(2.0 * (2.0 * v * v - v0 * v0));
  return b;
}

namespace {

Sheet best_sheet(Complex eps, const AnalyticParams& p, double& residual) {
  const double rp = std::abs(pole_condition(eps, Sheet::Physical, p));
  const double ru = std::abs(pole_condition(eps, Sheet::Unphysical, p));
  if (rp <= ru) {
    residual = rp;
    return Sheet::Physical;
  }
  residual = ru;
  return Sheet::Unphysical;
}

}  // namespace

PoleSet find_poles(const RegimeParams& p) {
  const double v = p.v(), v0 = p.v0(), vab = p.v_ab();
  const double w = vab * vab;
  const double v02 = v0 * v0;
  const double den = 2.0 * (v - v0) * (v + v0);
  const double lin = w * (2.0 * v * v - v02) - v02 * v02;

  // (W + V0^2)^2 - 4 W V^2 factored through its roots b1, b3 in v_ab so the
  // sign change at the exceptional point is exact.
  const Boundaries b = regime_boundaries(v0, v);
  double disc = (vab - b.b1) * (vab - b.b3) * (vab + b.b1) * (vab + b.b3);
  // without the chain the discriminant enters multiplied by v0^4 = 0
  if (v0 == 0.0) disc = 0.0;

  PoleSet out;
  Complex u_plus, u_minus;
  if (disc >= 0.0) {
    const double s = v02 * std::sqrt(disc);
    const double product = w * w * v * v / (0.5 * den);
    if (lin >= 0.0) {
      const double big = (lin + s) / den;
      u_plus = big;
      u_minus = big != 0.0 ? product / big : (lin - s) / den;
    } else {
      const double big = (lin - s) / den;
      u_minus = big;
      u_plus = big != 0.0 ? product / big : (lin + s) / den;
    }
  } else {
    const double s = v02 * std::sqrt(-disc);
    u_plus = Complex{lin / den, s / den};
    u_minus = Complex{lin / den, -s / den};
  }
  out.eps_squared = {u_plus, u_minus};

  const Complex r_plus = std::sqrt(u_plus);
  const Complex r_minus = std::sqrt(u_minus);
  const std::array<Complex, 4> roots{r_plus, -r_plus, r_minus, -r_minus};
  for (std::size_t i = 0; i < 4; ++i) {
    Pole& pole = out.poles[i];
    pole.energy = roots[i];
    pole.sheet = best_sheet(roots[i], p, pole.residual);
    pole.kind = PoleKind::Nonphysical;
  }

  auto pick = [&](std::size_t i, PoleKind kind) { out.poles[i].kind = kind; };
  std::array<std::size_t, 2> pair{};

  const bool real_u = disc >= 0.0;
  if (!real_u) {
    // complex conjugate pair of eps^2: keep the decaying roots
    std::size_t k = 0;
    for (std::size_t i = 0; i < 4 && k < 2; ++i) {
      if (roots[i].imag() < 0.0) pair[k++] = i;
    }
    for (std::size_t i : pair) {
      pick(i, out.poles[i].sheet == Sheet::Physical ? PoleKind::Resonance : PoleKind::Nonphysical);
    }
  } else if (u_plus.real() <= 0.0 && u_minus.real() <= 0.0) {
    // purely imaginary roots (collapsed resonances); -i sqrt|u| decays
    pair = {1, 3};
    for (std::size_t i : pair) {
      pick(i, out.poles[i].energy == Complex{0.0, 0.0} ? PoleKind::Localized : PoleKind::Resonance);
    }
  } else {
    // four real roots: a localized pair lives on the physical sheet, a
    // virtual pair only on the unphysical one
    const bool plus_phys = out.poles[0].sheet == Sheet::Physical;
    const bool minus_phys = out.poles[2].sheet == Sheet::Physical;
    const double d_plus = std::abs(r_plus.real() - vab);
    const double d_minus = std::abs(r_minus.real() - vab);
    bool use_plus;
    if (plus_phys != minus_phys) {
      use_plus = plus_phys;
    } else {
      use_plus = d_plus < d_minus;
    }
    pair = use_plus ? std::array<std::size_t, 2>{0, 1} : std::array<std::size_t, 2>{2, 3};
    const PoleKind kind = out.poles[pair[0]].sheet == Sheet::Physical ? PoleKind::Localized : PoleKind::Virtual;
    for (std::size_t i : pair) pick(i, kind);
  }

  std::sort(pair.begin(), pair.end(), [&](std::size_t a, std::size_t c) {
    const Complex ea = out.poles[a].energy, ec = out.poles[c].energy;
    if (ea.real() != ec.real()) return ea.real() < ec.real();
    return std::abs(ea.imag()) < std::abs(ec.imag());
  });
  out.physical_pair = pair;
  out.omega_tilde = std::abs(out.physical(0).energy.real() - out.physical(1).energy.real());
  return out;
}

Regime classify(const RegimeParams& p) {
  Regime r;
  r.boundaries = regime_boundaries(p.v0(), p.v());
  const double x = p.v_ab();
  int above = 0;
  for (double bi : r.boundaries.as_array()) {
    if (std::abs(x - bi) < kOnBoundaryTolerance) {
      r.on_boundary = true;
      ++above;
    } else if (x > bi) {
      ++above;
    }
  }
  r.region = static_cast<Region>(1 + above);
  return r;
}

Region classify_by_poles(const PoleSet& poles, double v) {
  const Pole& a = poles.physical(0);
  const Pole& c = poles.physical(1);
  if (a.kind == PoleKind::Virtual) return Region::IV;
  const double re = std::max(std::abs(a.energy.real()), std::abs(c.energy.real()));
  if (a.kind == PoleKind::Localized && c.kind == PoleKind::Localized && re > 2.0 * v) return Region::V;
  if (a.energy.real() == 0.0 && c.energy.real() == 0.0) {
    // a coalesced pair sits exactly on the exceptional point, which belongs to II
    const double ga = std::abs(a.energy.imag()), gc = std::abs(c.energy.imag());
    if (ga > 0.0 && std::abs(ga - gc) <= 1e-12 * ga) return Region::II;
    return Region::I;
  }
  if (a.energy.imag() < 0.0 || c.energy.imag() < 0.0) return re < 2.0 * v ? Region::II : Region::III;
  return Region::II;
}

ExceptionalPoint exceptional_point(double v0, double v) {
  const Boundaries b = regime_boundaries(v0, v);
  const RegimeParams p = validate_regime({b.b1, v0, v});
  const PoleSet poles = find_poles(p);
  const Complex e1 = poles.physical(0).energy, e2 = poles.physical(1).energy;
  return {b.b1, std::abs(std::abs(e1.imag()) - std::abs(e2.imag())), std::abs(e1.real() - e2.real())};
}

PhaseDiagram phase_diagram(const std::vector<double>& v_ab_grid, const std::vector<double>& v0_grid,
                           double v) {
  PhaseDiagram pd;
  pd.v_ab_grid = v_ab_grid;
  pd.v0_grid = v0_grid;
  pd.cells.resize(v_ab_grid.size() * v0_grid.size());
  pd.curves.resize(v0_grid.size());
  for (std::size_t i = 0; i < v0_grid.size(); ++i) {
    const double v0 = v0_grid[i];
    if (!(v0 > 0.0 && v0 < v)) continue;
    pd.curves[i] = regime_boundaries(v0, v);
    for (std::size_t j = 0; j < v_ab_grid.size(); ++j) {
      if (!(v_ab_grid[j] >= 0.0)) continue;
      pd.cells[i * v_ab_grid.size() + j] = classify(validate_regime({v_ab_grid[j], v0, v}));
    }
  }
  return pd;
}

}  // namespace swapgate
