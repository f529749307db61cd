#include <doctest.h>

#include <cmath>
#include <random>

#include "swapgate/ldos.hpp"
#include "swapgate/tridiagonal.hpp"

using namespace swapgate;

namespace {

RegimeParams rp(double vab, double v0 = 0.8, double v = 1.0) { return validate_regime({vab, v0, v}); }

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> x(n);
  for (int i = 0; i < n; ++i) x[i] = a + (b - a) * i / (n - 1);
  return x;
}

std::vector<double> band_grid(double v = 1.0) { return linspace(-1.999 * v, 1.999 * v, 4001); }

// N_A = -Im G / pi with G composed by hand from the in-band Sigma
double ldos_oracle(double e, double vab, double v0, double v) {
  const std::complex<double> sig{e / 2.0, -std::sqrt(v * v - e * e / 4.0)};
  const std::complex<double> g = 1.0 / (e - vab * vab / (e - v0 * v0 / (v * v) * sig));
  return -g.imag() / M_PI;
}

}  // namespace

TEST_CASE("decoupled site A leaves no in-band weight; surface density at the centre") {
  CHECK(surface_ldos(0.0, 1.0) == doctest::Approx(1.0 / M_PI).epsilon(1e-15));
  const SpectrumSeries s = ldos_direct(rp(0.0, 1.0 - 1e-9), linspace(-1.9, 1.9, 191));
  for (std::size_t i = 0; i < s.n_a.size(); ++i) {
    if (std::abs(s.eps_grid[i]) > 0.5) CHECK(std::abs(s.n_a[i]) < 1e-5);
  }
  CHECK(s.band_weight == doctest::Approx(0.0));
  REQUIRE(s.localized.size() == 1);
  CHECK(s.localized[0].energy == 0.0);
  CHECK(s.localized[0].weight == doctest::Approx(1.0));
}

TEST_CASE("region II shows two symmetric peaks inside the band") {
  const SpectrumSeries s = ldos_direct(rp(1.0), linspace(-1.999, 1.999, 4001));
  std::vector<double> peaks;
  for (std::size_t i = 1; i + 1 < s.n_a.size(); ++i) {
    if (s.n_a[i] > s.n_a[i - 1] && s.n_a[i] > s.n_a[i + 1]) peaks.push_back(s.eps_grid[i]);
  }
  REQUIRE(peaks.size() == 2);
  CHECK(peaks[0] == doctest::Approx(-peaks[1]).epsilon(1e-9));
  CHECK(std::abs(peaks[1]) < 2.0);
}

TEST_CASE("closed-form and factorized densities agree with a hand-composed oracle") {
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 50; ++i) {
    const double vab = 0.01 + 2.5 * u(rng), v0 = 0.02 + 0.95 * u(rng);
    const RegimeParams p = rp(vab, v0);
    const std::vector<double> g = linspace(-1.99, 1.99, 199);
    const SpectrumSeries f = ldos_factorized(p, g);
    for (std::size_t k = 0; k < g.size(); ++k) {
      const double o = ldos_oracle(g[k], vab, v0, 1.0);
      CHECK(std::abs(ldos_exact(g[k], p) - o) < 1e-10 * std::max(1.0, o));
      CHECK(std::abs(f.n_a[k] - o) < 1e-9 * std::max(1.0, o));
      CHECK(f.n_a[k] >= 0.0);
    }
  }
}

TEST_CASE("direct route is nonnegative") {
  std::mt19937 rng(37);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 30; ++i) {
    const SpectrumSeries s = ldos_direct(rp(3.0 * u(rng), 0.01 + 0.98 * u(rng)), linspace(-3.0, 3.0, 601));
    for (double n : s.n_a) CHECK(n >= -1e-12);
  }
}

TEST_CASE("factorization matches the direct route at small eta") {
  for (double vab : {0.35, 1.0, 1.58, 1.9}) {
    const RegimeParams p = rp(vab);
    const std::vector<double> g = band_grid();
    const SpectrumSeries d = ldos_direct(p, g, 1e-6);
    const SpectrumSeries f = ldos_factorized(p, g);
    double m = 0.0;
    for (std::size_t k = 0; k < g.size(); ++k) m = std::max(m, std::abs(d.n_a[k] - f.n_a[k]));
    CHECK(m < 1e-4);
  }
}

TEST_CASE("factor centres and widths lock onto the poles") {
  for (double vab : {0.05, 0.2, 0.35, 0.39, 0.41, 0.7, 1.0, 1.3, 1.55, 1.58, 1.59}) {
    const RegimeParams p = rp(vab);
    const LorentzianParams lp = lorentzian_params(p);
    const PoleSet ps = find_poles(p);
    if (lp.region == Region::I) {
      const double g_small = std::min(std::abs(ps.physical(0).energy.imag()), std::abs(ps.physical(1).energy.imag()));
      const double g_big = std::max(std::abs(ps.physical(0).energy.imag()), std::abs(ps.physical(1).energy.imag()));
      CHECK(std::abs(lp.width[0].real() - g_small) < 1e-10);
      CHECK(std::abs(lp.width[1].real() - g_big) < 1e-10);
      CHECK(lp.center[0] == 0.0);
      CHECK(lp.width[0].real() != lp.width[1].real());
    } else {
      CHECK(std::abs(lp.center[0] - std::abs(ps.physical(0).energy.real())) < 1e-10);
      CHECK(lp.center[1] == -lp.center[0]);
      CHECK(std::abs(lp.width[0].real() - std::abs(ps.physical(0).energy.imag())) < 1e-10);
      CHECK(lp.width[0] == lp.width[1]);
    }
  }
}

TEST_CASE("regions IV and V: imaginary width, real roots at eps_r +- |Gamma|") {
  for (double vab : {1.61, 1.62, 1.64, 1.7, 1.9, 3.0}) {
    const RegimeParams p = rp(vab);
    const LorentzianParams lp = lorentzian_params(p);
    CHECK(lp.non_lorentzian);
    CHECK(lp.gamma_sq[0] < 0.0);
    CHECK(lp.width[0].real() == 0.0);
    const PoleSet ps = find_poles(p);
    const double g = std::sqrt(-lp.gamma_sq[0]);
    const double r1 = std::sqrt(ps.eps_squared[0].real()), r2 = std::sqrt(ps.eps_squared[1].real());
    CHECK(lp.center[0] + g == doctest::Approx(std::max(r1, r2)).epsilon(1e-10));
    CHECK(lp.center[0] - g == doctest::Approx(std::min(r1, r2)).epsilon(1e-10));
    const SpectrumSeries f = ldos_factorized(p, band_grid());
    CHECK(f.non_lorentzian);
    for (double n : f.n_a) {
      CHECK(std::isfinite(n));
      CHECK(n >= 0.0);
    }
  }
}

TEST_CASE("normalization") {
  std::mt19937 rng(41);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    const RegimeParams p = rp(0.01 + 3.0 * u(rng), 0.01 + 0.98 * u(rng));
    double total = band_weight(p);
    try {
      for (const LocalizedState& s : localized_residues(p)) total += s.weight;
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NearBandEdge);
      continue;
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
  }
  CHECK(band_weight(rp(1.0)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("localized residues") {
  const RegimeParams p = rp(1.9);
  const auto loc = localized_residues(p);
  REQUIRE(loc.size() == 2);
  CHECK(loc[0].energy == doctest::Approx(-loc[1].energy));
  CHECK(loc[0].weight == doctest::Approx(loc[1].weight).epsilon(1e-12));
  CHECK(loc[0].weight > 0.0);
  CHECK(loc[0].weight + loc[1].weight == doctest::Approx(1.0 - band_weight(p)).epsilon(1e-10));

  // central difference of the denominator 1/G
  const double h = 1e-6;
  for (const LocalizedState& s : loc) {
    auto inv = [&](double e) { return 1.0 / g_aa(Complex{e, 0.0}, Sheet::Physical, p); };
    const double fd = ((inv(s.energy + h) - inv(s.energy - h)) / (2.0 * h)).real();
    CHECK(std::abs(1.0 / fd - s.weight) < 1e-6);
  }

  // eigenvector overlaps of a long finite chain
  const std::size_t n = 2002;
  std::vector<double> diag(n, 0.0), off(n - 1, -1.0);
  off[0] = -1.9;
  off[1] = -0.8;
  const FirstRowSpectrum fr = tridiagonal_first_row(diag, off);
  CHECK(fr.weights.front() == doctest::Approx(loc[0].weight).epsilon(1e-8));
  CHECK(fr.energies.front() == doctest::Approx(loc[0].energy).epsilon(1e-10));

  CHECK(localized_residues(rp(1.62)).empty());
  CHECK(localized_residues(rp(1.0)).empty());
  const auto big = localized_residues(rp(1000.0));
  CHECK(big[0].weight == doctest::Approx(0.5).epsilon(1e-5));
  const auto free = localized_residues(rp(0.7, 0.0));
  REQUIRE(free.size() == 2);
  CHECK(free[1].energy == doctest::Approx(0.7));
  CHECK(free[1].weight == doctest::Approx(0.5));
}

TEST_CASE("localized pole at the band edge is refused") {
  const double b4 = regime_boundaries(0.8, 1.0).b4;
  bool threw = false;
  try {
    localized_residues(rp(b4 * (1.0 + 1e-9)));
  } catch (const Error& e) {
    threw = e.code() == ErrorCode::NearBandEdge;
  }
  CHECK(threw);
}

TEST_CASE("supplied factor parameters must match the region") {
  const LorentzianParams lp = lorentzian_params(rp(0.35));
  CHECK_THROWS_AS(ldos_factorized(rp(1.0), band_grid(), lp), Error);
  try {
    ldos_factorized(rp(1.0), band_grid(), lp);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RegionMismatch);
  }
  CHECK_NOTHROW(ldos_factorized(rp(0.3), band_grid(), lp));
}

TEST_CASE("band-edge exponent") {
  CHECK(band_edge_exponent(rp(1.0)) == doctest::Approx(0.5).epsilon(0.1));
  CHECK(band_edge_exponent(rp(1.62)) == doctest::Approx(0.5).epsilon(0.1));
  CHECK(band_edge_exponent(rp(regime_boundaries(0.8, 1.0).b4)) == doctest::Approx(-0.5).epsilon(0.1));
}

TEST_CASE("virtual states leave no out-of-band peak") {
  const SpectrumSeries s = ldos_direct(rp(1.62), linspace(-3.0, 3.0, 2001));
  double in = 0.0, out = 0.0;
  for (std::size_t i = 0; i < s.n_a.size(); ++i) {
    double& slot = std::abs(s.eps_grid[i]) < 2.0 ? in : out;
    slot = std::max(slot, s.n_a[i]);
  }
  CHECK(out < 1e-3 * in);
}

TEST_CASE("argument checks") {
  CHECK_THROWS_AS(ldos_direct(rp(1.0), {0.0, 1.0}, 0.0), Error);
  CHECK_THROWS_AS(ldos_direct(rp(1.0), {1.0, 0.0}), Error);
}
