#pragma once

// Envelope-based fits of a survival series: power-law tail, oscillation
// frequency and the exponential-to-power-law crossover time.

#include <optional>
#include <string_view>
#include <vector>

#include "swapgate/dynamics.hpp"

namespace swapgate {

enum class FitKind { Tail, Frequency, Collapse };
std::string_view to_string(FitKind k);

struct Window {
  double t_min = 0.0;
  double t_max = 0.0;
};

struct FitReport {
  FitKind kind = FitKind::Tail;
  Window window;
  /// Tail: exponent. Frequency: angular frequency. Collapse: t_c.
  double value = 0.0;
  double std_error = 0.0;
  double r2 = 0.0;
  std::size_t points = 0;

  // collapse only
  std::optional<double> exp_rate;       ///< decay rate of the early exponential
  std::optional<double> exp_intercept;  ///< log p at t = 0 of that fit
  std::optional<double> power_exponent; ///< slope of the late log-log fit
  std::optional<double> breakpoint;     ///< split between the two fit segments
};

struct Maximum {
  double t = 0.0;
  double p = 0.0;
};

/// Strict local maxima of p, refined by a parabola through log p.
std::vector<Maximum> envelope_maxima(const TimeSeries& s, const Window& w);

/// Least-squares slope of log p_max against log t. WindowTooShort below 5 maxima.
FitReport fit_tail(const TimeSeries& s, const Window& w);

/// omega = 2 pi / (mean spacing of maxima of p). NoOscillationDetected below
/// three full periods.
FitReport fit_frequency(const TimeSeries& s, const Window& w);

/// Splits the running-max envelope into an exponential and a power-law
/// segment and intersects the two fits. Without a window the whole series is
/// used. NoCrossover when no genuine exponential stage precedes the tail.
FitReport survival_collapse(const TimeSeries& s, const std::optional<Window>& w = std::nullopt);

/// Tail exponent -(2 nu + 2) implied by an N_A ~ x^nu band edge.
double predicted_tail_exponent(double nu);

}  // namespace swapgate
