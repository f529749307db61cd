#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>

#include "swapgate/dynamics.hpp"
#include "swapgate/fitting.hpp"

using namespace swapgate;

namespace {

RegimeParams rp(double vab, double v0 = 0.8, double v = 1.0) { return validate_regime({vab, v0, v}); }

double log_slope(const std::vector<double>& x, const std::vector<double>& y) {
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += std::log(x[i]);
    my += std::log(y[i]);
  }
  mx /= x.size();
  my /= x.size();
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (std::log(x[i]) - mx) * (std::log(y[i]) - my);
    sxx += (std::log(x[i]) - mx) * (std::log(x[i]) - mx);
  }
  return sxy / sxx;
}

}  // namespace

TEST_CASE("time grid and chain defaults") {
  const auto t = default_time_grid(1.0);
  CHECK(t.size() == 101);
  CHECK(t.back() == doctest::Approx(1.0));
  const ChainSpec c = make_chain(2000, 1.0);
  CHECK(c.echo_guard == doctest::Approx(900.0));
  CHECK(c.echo_guard < 2000.0);
  CHECK(std::isinf(make_chain(0, 1.0).echo_guard));
  CHECK_THROWS_AS(default_time_grid(-1.0), Error);
}

TEST_CASE("isolated dimer oscillates as cos^2") {
  const auto t = default_time_grid(20.0, 0.05);
  const TimeSeries ed = survival_ed(validate({1.3, 0.0, 1.0}), t, make_chain(0, 1.0));
  const TimeSeries an = survival_analytic(rp(1.3, 0.0), t);
  const TimeSeries ed_chain = survival_ed(validate({1.3, 0.0, 1.0}), t, make_chain(50, 1.0));
  for (std::size_t i = 0; i < t.size(); ++i) {
    const double c = std::cos(1.3 * t[i]);
    CHECK(ed.p_aa[i] == doctest::Approx(c * c).epsilon(1e-12));
    CHECK(an.p_aa[i] == doctest::Approx(c * c).epsilon(1e-12));
    CHECK(ed_chain.p_aa[i] == doctest::Approx(c * c).epsilon(1e-12));
  }
}

TEST_CASE("exact diagonalization conserves the norm of the full state") {
  const std::size_t n_env = 300;
  const int n = static_cast<int>(n_env) + 2;
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) h(i, i + 1) = h(i + 1, i) = -1.0;
  h(0, 1) = h(1, 0) = -1.0;
  h(1, 2) = h(2, 1) = -0.8;
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
  const EdPropagator prop(validate({1.0, 0.8, 1.0}), n_env);
  for (double t : {0.0, 1.0, 7.5, 40.0, 120.0}) {
    Eigen::VectorXcd c(n);
    for (int k = 0; k < n; ++k) c(k) = es.eigenvectors()(0, k) * std::polar(1.0, -es.eigenvalues()(k) * t);
    const Eigen::VectorXcd psi = es.eigenvectors().cast<std::complex<double>>() * c;
    CHECK(psi.squaredNorm() == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(std::norm(psi(0)) == doctest::Approx(prop.survival(t)).epsilon(1e-10));
  }
}

TEST_CASE("probabilities stay in [0, 1] and start at 1") {
  const auto t = default_time_grid(30.0, 0.05);
  for (double vab : {0.2, 0.35, 1.0, 1.58, 1.62, 1.9}) {
    const TimeSeries an = survival_analytic(rp(vab), t);
    const TimeSeries ed = survival_ed(rp(vab), t, make_chain(400, 1.0));
    CHECK(an.p_aa[0] == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(ed.p_aa[0] == doctest::Approx(1.0).epsilon(1e-12));
    for (std::size_t i = 0; i < t.size(); ++i) {
      CHECK(an.p_aa[i] >= 0.0);
      CHECK(an.p_aa[i] <= 1.0 + 1e-9);
      CHECK(ed.p_aa[i] <= 1.0 + 1e-9);
      CHECK(std::abs(an.p_aa[i] - ed.p_aa[i]) < 1e-6);
    }
  }
}

TEST_CASE("short times are quadratic for both routes") {
  std::vector<double> t;
  for (int i = 1; i <= 10; ++i) t.push_back(0.005 * i);
  for (double vab : {0.35, 1.0, 1.9}) {
    const TimeSeries an = survival_analytic(rp(vab), t);
    const TimeSeries ed = survival_ed(rp(vab), t, make_chain(200, 1.0));
    std::vector<double> da, de;
    for (std::size_t i = 0; i < t.size(); ++i) {
      da.push_back(1.0 - an.p_aa[i]);
      de.push_back(1.0 - ed.p_aa[i]);
    }
    CHECK(log_slope(t, da) == doctest::Approx(2.0).epsilon(0.01));
    CHECK(log_slope(t, de) == doctest::Approx(2.0).epsilon(0.01));
    // curvature set by the only hopping out of A
    CHECK(de.front() / (t.front() * t.front()) == doctest::Approx(vab * vab).epsilon(1e-3));
  }
}

TEST_CASE("echo guard") {
  const auto t = default_time_grid(100.0, 0.5);
  CHECK_THROWS_AS(survival_ed(rp(1.0), t, make_chain(200, 1.0)), Error);
  try {
    survival_ed(rp(1.0), t, make_chain(200, 1.0));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EchoGuardViolated);
  }
  // past the guard a revival appears near t = n_env / v
  const EdPropagator prop(rp(1.0), 200);
  double before = 0.0, revival = 0.0;
  for (double x = 60.0; x < 85.0; x += 0.01) before = std::max(before, prop.survival(x));
  for (double x = 180.0; x < 230.0; x += 0.01) revival = std::max(revival, prop.survival(x));
  CHECK(revival > 10.0 * before);
}

TEST_CASE("region I decays without oscillation before the collapse") {
  const TimeSeries an = survival_analytic(rp(0.35), default_time_grid(30.0, 0.01));
  for (std::size_t i = 1; i < an.p_aa.size(); ++i) CHECK(an.p_aa[i] < an.p_aa[i - 1]);
}

TEST_CASE("region V keeps a finite oscillation amplitude") {
  const RegimeParams p = rp(1.9);
  const TimeSeries an = survival_analytic(p, default_time_grid(100.0, 0.01));
  double w = 0.0;
  for (const LocalizedState& s : localized_residues(p)) w += s.weight;
  const auto maxima = envelope_maxima(an, {50.0, 100.0});
  REQUIRE(maxima.size() > 10);
  for (const Maximum& m : maxima) CHECK(m.p > w * w - 1e-2);
}

TEST_CASE("scale invariance") {
  const auto t = default_time_grid(10.0, 0.1);
  std::vector<double> ts;
  for (double x : t) ts.push_back(x / 2.0);
  const TimeSeries a = survival_analytic(rp(1.0), t);
  const TimeSeries b = survival_analytic(validate_regime(scaled({1.0, 0.8, 1.0}, 2.0)), ts);
  for (std::size_t i = 0; i < t.size(); ++i) CHECK(std::abs(a.p_aa[i] - b.p_aa[i]) < 1e-7);
}

TEST_CASE("nonzero site energies go through exact diagonalization") {
  const auto t = default_time_grid(5.0, 0.1);
  const TimeSeries s = survival_ed(validate({1.0, 0.0, 1.0, 0.5, -0.5, 0.0}), t, make_chain(0, 1.0));
  // detuned dimer: p = 1 - (4 v^2 / W^2) sin^2(W t / 2), W = sqrt(1 + 4 v^2)
  const double w = std::sqrt(1.0 + 4.0);
  for (std::size_t i = 0; i < t.size(); ++i) {
    const double s2 = std::sin(w * t[i] / 2.0);
    CHECK(s.p_aa[i] == doctest::Approx(1.0 - 4.0 / (w * w) * s2 * s2).epsilon(1e-12));
  }
}
