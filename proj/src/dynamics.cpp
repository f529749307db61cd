#include "swapgate/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace swapgate {

std::string_view to_string(Method m) { return m == Method::AnalyticLDOS ? "analytic" : "ed"; }

ChainSpec make_chain(std::size_t n_env, double v) {
  if (!(v > 0.0)) throw Error(ErrorCode::NonPositiveV, "v must be > 0");
  if (n_env == 0) return {0, std::numeric_limits<double>::infinity()};
  return {n_env, 0.9 * static_cast<double>(n_env) / (2.0 * v)};
}

std::vector<double> default_time_grid(double tmax, double dt) {
  if (!(tmax >= 0.0) || !std::isfinite(tmax)) throw Error(ErrorCode::InvalidArgument, "tmax must be >= 0");
  if (!(dt > 0.0)) throw Error(ErrorCode::InvalidArgument, "dt must be > 0");
  const auto n = static_cast<std::size_t>(std::llround(tmax / dt));
  std::vector<double> t(n + 1);
  for (std::size_t i = 0; i <= n; ++i) t[i] = static_cast<double>(i) * dt;
  return t;
}

namespace {

void check_times(const std::vector<double>& t) {
  for (double x : t) {
    if (!std::isfinite(x)) throw Error(ErrorCode::InvalidArgument, "time grid must be finite");
  }
}

}  // namespace

EdPropagator::EdPropagator(const ValidatedParams& p, std::size_t n_env) {
  const ModelParams& m = p.params();
  std::vector<double> diag(2 + n_env, m.e_n);
  diag[0] = m.e_a;
  diag[1] = m.e_b;
  std::vector<double> off(1 + n_env, -m.v);
  off[0] = -m.v_ab;
  if (n_env > 0) off[1] = -m.v0;
  spec_ = tridiagonal_first_row(std::move(diag), off);
}

std::complex<double> EdPropagator::amplitude(double t) const {
  double re = 0.0, im = 0.0;
  for (std::size_t k = 0; k < spec_.energies.size(); ++k) {
    const double ph = spec_.energies[k] * t;
    re += spec_.weights[k] * std::cos(ph);
    im -= spec_.weights[k] * std::sin(ph);
  }
  return {re, im};
}

TimeSeries survival_analytic(const RegimeParams& p, const std::vector<double>& t_grid) {
  check_times(t_grid);
  TimeSeries out;
  out.t_grid = t_grid;
  out.method = Method::AnalyticLDOS;
  out.params = p.params();
  const std::vector<Complex> band = band_transform(p, t_grid);
  const std::vector<LocalizedState> loc = localized_residues(p, EdgePolicy::DropVanishing);
  out.p_aa.reserve(t_grid.size());
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    Complex a = band[i];
    for (const LocalizedState& s : loc) a += s.weight * std::polar(1.0, -s.energy * t_grid[i]);
    out.p_aa.push_back(std::norm(a));
  }
  return out;
}

TimeSeries survival_ed(const ValidatedParams& p, const std::vector<double>& t_grid, const ChainSpec& chain) {
  check_times(t_grid);
  for (double t : t_grid) {
    if (std::abs(t) > chain.echo_guard)
      throw Error(ErrorCode::EchoGuardViolated, "time grid exceeds the echo guard of the chain");
  }
  const EdPropagator prop(p, chain.n_env);
  TimeSeries out;
  out.t_grid = t_grid;
  out.method = Method::ExactDiag;
  out.params = p.params();
  out.n_env = chain.n_env;
  out.p_aa.reserve(t_grid.size());
  for (double t : t_grid) out.p_aa.push_back(prop.survival(t));
  return out;
}

}  // namespace swapgate
