#include "swapgate/ldos.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <limits>
#include <numbers>

namespace swapgate {

namespace {

// N_A at eps = 2v cos(theta) given s = sqrt(v^2 - eps^2/4) >= 0. With
// inner = eps - a Sigma = pr + i q and Sigma = eps/2 - i s,
// -Im G/pi = q W / (pi |eps inner - W|^2), free of cancellation.
double band_ldos(double eps, double s, const AnalyticParams& p) {
  const double w = p.v_ab() * p.v_ab();
  if (w == 0.0) return 0.0;
  const double a = (p.v0() * p.v0()) / (p.v() * p.v());
  const double q = a * s;
  const double pr = eps * (1.0 - 0.5 * a);
  const double re = eps * pr - w;
  const double im = eps * q;
  const double den = re * re + im * im;
  if (den == 0.0) return 0.0;
  return q * w / (std::numbers::pi * den);
}

void check_grid(const std::vector<double>& grid) {
  for (double e : grid) {
    if (!std::isfinite(e)) throw Error(ErrorCode::InvalidArgument, "energy grid must be finite");
  }
  if (!std::is_sorted(grid.begin(), grid.end()))
    throw Error(ErrorCode::InvalidArgument, "energy grid must be sorted");
}

}  // namespace

double ldos_exact(double eps, const AnalyticParams& p) {
  const double v = p.v();
  if (std::abs(eps) >= 2.0 * v) return 0.0;
  const double s = std::sqrt((v - 0.5 * eps) * (v + 0.5 * eps));
  return band_ldos(eps, s, p);
}

double LorentzianParams::factor(std::size_t k, double eps) const {
  if (numerator[k] == 0.0) return 0.0;
  const double x = eps - center[k];
  return numerator[k] / (x * x + gamma_sq[k]);
}

LorentzianParams lorentzian_params(const RegimeParams& p) {
  const double v = p.v(), v0 = p.v0(), vab = p.v_ab();
  const double w = vab * vab;
  const double d = (v - v0) * (v + v0);
  const double k_num = v * v * v0 * v0 * w / d;
  const double lin = w * (2.0 * v * v - v0 * v0) - v0 * v0 * v0 * v0;

  LorentzianParams lp;
  lp.region = classify(p).region;
  if (lp.region == Region::I) {
    // (V0^4 - W(2V^2 - V0^2))^2 - 4 V^2 W^2 (V^2 - V0^2) = V0^4 (W + V0^2 - 2 V_AB V)(W + V0^2 + 2 V_AB V)
    const Boundaries b = regime_boundaries(v0, v);
    const double disc = std::max(0.0, (vab - b.b1) * (vab - b.b3) * (vab + b.b1) * (vab + b.b3));
    const double root = v0 * v0 * std::sqrt(disc);
    const double g2 = (-lin + root) / (2.0 * d);
    const double g1 = g2 > 0.0 ? (w * w * v * v / d) / g2 : 0.0;
    lp.gamma_sq = {g1, g2};
    lp.center = {0.0, 0.0};
    const double gam1 = std::sqrt(g1), gam2 = std::sqrt(g2);
    lp.width = {Complex{gam1, 0.0}, Complex{gam2, 0.0}};
    if (k_num > 0.0 && gam1 > 0.0) {
      const double c = std::sqrt(k_num / (4.0 * gam1 * gam2));
      lp.amplitude = c;
      lp.numerator = {2.0 * c * gam1, 2.0 * c * gam2};
    }
    return lp;
  }

  const double a_term = lin / (2.0 * d);
  const double gamma_sq = -0.5 * a_term + v * w / (2.0 * std::sqrt(d));
  const double eps_r = std::sqrt(std::max(0.0, a_term + gamma_sq));
  lp.center = {eps_r, -eps_r};
  lp.gamma_sq = {gamma_sq, gamma_sq};
  const Complex gam = std::sqrt(Complex{gamma_sq, 0.0});
  lp.width = {gam, gam};
  lp.non_lorentzian = lp.region >= Region::IV;
  const double num = std::sqrt(k_num);
  lp.numerator = {num, num};
  lp.amplitude = gam == Complex{0.0, 0.0} ? Complex{std::numeric_limits<double>::infinity(), 0.0}
                                          : num / (2.0 * gam);
  return lp;
}

SpectrumSeries ldos_direct(const AnalyticParams& p, const std::vector<double>& eps_grid, double eta) {
  if (!(eta > 0.0)) throw Error(ErrorCode::InvalidArgument, "eta must be > 0");
  check_grid(eps_grid);
  SpectrumSeries out;
  out.eps_grid = eps_grid;
  out.method = "direct";
  out.eta = eta;
  out.n_a.reserve(eps_grid.size());
  out.n_1.reserve(eps_grid.size());
  for (double e : eps_grid) {
    const Complex g = g_aa(Complex{e, eta}, Sheet::Physical, p);
    out.n_a.push_back(-g.imag() / std::numbers::pi);
    out.n_1.push_back(surface_ldos(e, p.v()));
  }
  out.band_weight = band_weight(p);
  if (p.v0() < p.v()) {
    const RegimeParams rp = validate_regime(p.params());
    out.region = classify(rp).region;
    out.localized = localized_residues(rp, EdgePolicy::DropVanishing);
  }
  return out;
}

SpectrumSeries ldos_factorized(const RegimeParams& p, const std::vector<double>& eps_grid,
                               const std::optional<LorentzianParams>& given) {
  check_grid(eps_grid);
  const Region region = classify(p).region;
  if (given && given->region != region)
    throw Error(ErrorCode::RegionMismatch, std::string("factor parameters for region ") +
                                               std::string(to_string(given->region)) + ", input is region " +
                                               std::string(to_string(region)));
  const LorentzianParams lp = given ? *given : lorentzian_params(p);

  SpectrumSeries out;
  out.eps_grid = eps_grid;
  out.method = "factorized";
  out.region = region;
  out.non_lorentzian = lp.non_lorentzian;
  for (double e : eps_grid) {
    const double n1 = surface_ldos(e, p.v());
    const double l1 = lp.factor(0, e), l2 = lp.factor(1, e);
    out.n_1.push_back(n1);
    out.l1.push_back(l1);
    out.l2.push_back(l2);
    out.n_a.push_back(n1 == 0.0 ? 0.0 : n1 * l1 * l2);
  }
  out.band_weight = band_weight(p);
  out.localized = localized_residues(p, EdgePolicy::DropVanishing);
  return out;
}

std::vector<LocalizedState> localized_residues(const RegimeParams& p, EdgePolicy edge) {
  const PoleSet poles = find_poles(p);
  const double v = p.v();
  const double a = (p.v0() * p.v0()) / (v * v);
  const double w = p.v_ab() * p.v_ab();
  std::vector<LocalizedState> out;
  for (std::size_t i = 0; i < 2; ++i) {
    const Pole& pole = poles.physical(i);
    if (pole.kind != PoleKind::Localized) continue;
    const double e = pole.energy.real();
    if (!out.empty() && out.back().energy == e) continue;
    if (a > 0.0 && std::abs(std::abs(e) - 2.0 * v) < kNearBandEdge) {
      if (edge == EdgePolicy::DropVanishing) continue;
      throw Error(ErrorCode::NearBandEdge, "localized pole at the band edge");
    }
    // G_AA = 1/g with g = eps - W/(eps - a Sigma)
    const Complex ec{e, 0.0};
    const Complex inner = ec - a * self_energy(ec, Sheet::Physical, v);
    const Complex dsig = a > 0.0 ? self_energy_derivative(ec, Sheet::Physical, v) : Complex{0.0, 0.0};
    const Complex gprime = 1.0 + w * (1.0 - a * dsig) / (inner * inner);
    out.push_back({e, 1.0 / gprime.real()});
  }
  return out;
}

double band_edge_exponent(const RegimeParams& p) {
  constexpr int n = 21;
  std::vector<double> eps(n), lx(n);
  for (int i = 0; i < n; ++i) {
    const double x = p.v() * std::pow(10.0, -8.0 + 2.0 * i / (n - 1));
    lx[n - 1 - i] = std::log(x);
    eps[n - 1 - i] = 2.0 * p.v() - x;
  }
  const SpectrumSeries s = ldos_factorized(p, eps);
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (int i = 0; i < n; ++i) {
    if (!(s.n_a[i] > 0.0)) return std::numeric_limits<double>::quiet_NaN();
    const double y = std::log(s.n_a[i]);
    sx += lx[i];
    sy += y;
    sxx += lx[i] * lx[i];
    sxy += lx[i] * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

std::vector<double> band_mesh(const AnalyticParams& p, std::size_t base) {
  if (base == 0) throw Error(ErrorCode::InvalidArgument, "need at least one panel");
  const double pi = std::numbers::pi;
  const double h = pi / static_cast<double>(base);
  std::vector<double> mesh;
  for (std::size_t j = 0; j <= base; ++j) mesh.push_back(h * static_cast<double>(j));
  mesh.back() = pi;
  if (p.v0() > 0.0 && p.v0() < p.v() && p.v_ab() > 0.0) {
    const PoleSet ps = find_poles(validate_regime(p.params()));
    for (const Pole& q : ps.poles) {
      const Complex th = std::acos(q.energy / (2.0 * p.v()));
      const double c = std::clamp(th.real(), 0.0, pi);
      const double w = std::abs(th.imag());
      if (!(w > 0.0) || w >= h) continue;
      if (c > 0.0 && c < pi) mesh.push_back(c);
      for (double d = w; d < h; d *= 2.0) {
        if (c - d > 0.0) mesh.push_back(c - d);
        if (c + d < pi) mesh.push_back(c + d);
      }
    }
  }
  std::sort(mesh.begin(), mesh.end());
  mesh.erase(std::unique(mesh.begin(), mesh.end(), [](double a, double b) { return b - a < 1e-15; }), mesh.end());
  mesh.back() = pi;
  return mesh;
}

std::vector<double> refine(const std::vector<double>& mesh) {
  std::vector<double> out;
  out.reserve(2 * mesh.size());
  for (std::size_t j = 0; j + 1 < mesh.size(); ++j) {
    out.push_back(mesh[j]);
    out.push_back(0.5 * (mesh[j] + mesh[j + 1]));
  }
  out.push_back(mesh.back());
  return out;
}

BandQuadrature::BandQuadrature(const AnalyticParams& p, const std::vector<double>& mesh)
    : panels_(mesh.size() < 2 ? 0 : mesh.size() - 1) {
  if (panels_ == 0) throw Error(ErrorCode::InvalidArgument, "need at least one panel");
  using rule = boost::math::quadrature::gauss<double, 20>;
  const auto& x = rule::abscissa();
  const auto& wt = rule::weights();
  const double v = p.v();
  eps_.reserve(panels_ * 20);
  w_.reserve(panels_ * 20);
  auto add = [&](double theta, double weight) {
    const double e = 2.0 * v * std::cos(theta);
    const double s = v * std::sin(theta);
    eps_.push_back(e);
    w_.push_back(weight * band_ldos(e, s, p) * 2.0 * s);
  };
  for (std::size_t j = 0; j < panels_; ++j) {
    const double mid = 0.5 * (mesh[j] + mesh[j + 1]);
    const double half = 0.5 * (mesh[j + 1] - mesh[j]);
    for (std::size_t i = 0; i < x.size(); ++i) {
      add(mid + half * x[i], half * wt[i]);
      if (x[i] != 0.0) add(mid - half * x[i], half * wt[i]);
    }
  }
}

Complex BandQuadrature::transform(double t) const {
  double re = 0.0, im = 0.0;
  for (std::size_t k = 0; k < eps_.size(); ++k) {
    const double ph = eps_[k] * t;
    re += w_[k] * std::cos(ph);
    im -= w_[k] * std::sin(ph);
  }
  return {re, im};
}

double BandQuadrature::weight() const {
  double s = 0.0;
  for (double w : w_) s += w;
  return s;
}

namespace {
constexpr std::size_t kMaxPanels = std::size_t{1} << 16;
}

std::vector<Complex> band_transform(const AnalyticParams& p, const std::vector<double>& t, double tol) {
  double tmax = 0.0;
  for (double x : t) tmax = std::max(tmax, std::abs(x));
  std::vector<double> mesh =
      band_mesh(p, std::max<std::size_t>(16, static_cast<std::size_t>(std::ceil(p.v() * tmax))));
  auto eval = [&](const std::vector<double>& m) {
    const BandQuadrature q(p, m);
    std::vector<Complex> out(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) out[i] = q.transform(t[i]);
    return out;
  };
  std::vector<Complex> prev = eval(mesh);
  while (mesh.size() < kMaxPanels) {
    mesh = refine(mesh);
    std::vector<Complex> cur = eval(mesh);
    double diff = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) diff = std::max(diff, std::abs(cur[i] - prev[i]));
    if (diff < tol) return cur;
    prev = std::move(cur);
  }
  throw Error(ErrorCode::QuadratureNotConverged, "band transform did not converge");
}

double band_weight(const AnalyticParams& p, double tol) {
  std::vector<double> mesh = band_mesh(p, 16);
  double prev = BandQuadrature(p, mesh).weight();
  while (mesh.size() < kMaxPanels) {
    mesh = refine(mesh);
    const double cur = BandQuadrature(p, mesh).weight();
    if (std::abs(cur - prev) < tol) return cur;
    prev = cur;
  }
  throw Error(ErrorCode::QuadratureNotConverged, "band weight did not converge");
}

}  // namespace swapgate
