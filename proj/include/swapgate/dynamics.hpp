#pragma once

// Survival probability P_AA(t) from the Fourier transform of the LDOS and
// from exact diagonalization of a finite chain.

#include <complex>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "swapgate/ldos.hpp"
#include "swapgate/tridiagonal.hpp"

namespace swapgate {

enum class Method { AnalyticLDOS, ExactDiag };
std::string_view to_string(Method m);

struct TimeSeries {
  std::vector<double> t_grid;
  std::vector<double> p_aa;
  Method method = Method::AnalyticLDOS;
  ModelParams params;
  std::optional<std::size_t> n_env;
};

struct ChainSpec {
  std::size_t n_env = 2000;
  /// Largest time before the wave front reflected off the far end returns.
  double echo_guard = 0.0;
};

inline constexpr std::size_t kDefaultChainSites = 2000;

/// echo_guard = 0.9 n_env / (2 v); infinite for an empty chain.
ChainSpec make_chain(std::size_t n_env, double v);

/// 0, dt, 2 dt, ..., tmax.
std::vector<double> default_time_grid(double tmax, double dt = 0.01);

/// Diagonalizes the (2 + n_env)-site chain once; amplitude(t) reuses it.
class EdPropagator {
 public:
  EdPropagator(const ValidatedParams& p, std::size_t n_env);

  std::complex<double> amplitude(double t) const;
  double survival(double t) const { return std::norm(amplitude(t)); }
  const FirstRowSpectrum& spectrum() const noexcept { return spec_; }

 private:
  FirstRowSpectrum spec_;
};

TimeSeries survival_analytic(const RegimeParams& p, const std::vector<double>& t_grid);

/// Throws EchoGuardViolated when the grid runs past chain.echo_guard.
TimeSeries survival_ed(const ValidatedParams& p, const std::vector<double>& t_grid, const ChainSpec& chain);

}  // namespace swapgate
