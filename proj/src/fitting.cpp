#include "swapgate/fitting.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace swapgate {

std::string_view to_string(FitKind k) {
  switch (k) {
    case FitKind::Tail: return "tail";
    case FitKind::Frequency: return "frequency";
    case FitKind::Collapse: return "collapse";
  }
  return "?";
}

namespace {

struct Line {
  double slope = 0.0;
  double intercept = 0.0;
  double sse = 0.0;
  double slope_se = 0.0;
  double r2 = 0.0;
};

Line fit_line(const double* x, const double* y, std::size_t n) {
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  Line l;
  l.slope = sxy / sxx;
  l.intercept = my - l.slope * mx;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = y[i] - (l.intercept + l.slope * x[i]);
    l.sse += r * r;
  }
  l.slope_se = n > 2 ? std::sqrt(l.sse / static_cast<double>(n - 2) / sxx) : 0.0;
  l.r2 = syy > 0.0 ? 1.0 - l.sse / syy : 1.0;
  return l;
}

Line fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  return fit_line(x.data(), y.data(), x.size());
}

void check_window(const Window& w) {
  if (!(w.t_min < w.t_max)) throw Error(ErrorCode::InvalidArgument, "window needs t_min < t_max");
}

void check_series(const TimeSeries& s) {
  if (s.t_grid.size() != s.p_aa.size()) throw Error(ErrorCode::InvalidArgument, "t and p lengths differ");
  if (!std::is_sorted(s.t_grid.begin(), s.t_grid.end()))
    throw Error(ErrorCode::InvalidArgument, "time grid must be sorted");
}

}  // namespace

std::vector<Maximum> envelope_maxima(const TimeSeries& s, const Window& w) {
  check_series(s);
  check_window(w);
  const auto& t = s.t_grid;
  const auto& p = s.p_aa;
  std::vector<Maximum> out;
  for (std::size_t i = 1; i + 1 < t.size(); ++i) {
    if (t[i] < w.t_min || t[i] > w.t_max) continue;
    if (!(p[i] > p[i - 1] && p[i] >= p[i + 1])) continue;
    Maximum m{t[i], p[i]};
    if (p[i - 1] > 0.0 && p[i + 1] > 0.0) {
      // parabola through log p in coordinates centred on t[i]
      const double h0 = t[i] - t[i - 1], h2 = t[i + 1] - t[i];
      const double y0 = std::log(p[i - 1]), y1 = std::log(p[i]), y2 = std::log(p[i + 1]);
      const double d0 = (y1 - y0) / h0, d2 = (y2 - y1) / h2;
      const double a = (d2 - d0) / (h0 + h2);
      const double b = d0 + a * h0;  // slope at t[i]
      if (a < 0.0) {
        const double u = -b / (2.0 * a);
        if (u > -h0 && u < h2) {
          m.t = t[i] + u;
          m.p = std::exp(y1 + b * u + a * u * u);
        }
      }
    }
    out.push_back(m);
  }
  return out;
}

FitReport fit_tail(const TimeSeries& s, const Window& w) {
  const std::vector<Maximum> maxima = envelope_maxima(s, w);
  std::vector<double> x, y;
  for (const Maximum& m : maxima) {
    if (m.p > 0.0 && m.t > 0.0) {
      x.push_back(std::log(m.t));
      y.push_back(std::log(m.p));
    }
  }
  if (x.size() < 5) throw Error(ErrorCode::WindowTooShort, "fewer than 5 envelope maxima in window");
  const Line l = fit_line(x, y);
  FitReport r;
  r.kind = FitKind::Tail;
  r.window = w;
  r.value = l.slope;
  r.std_error = l.slope_se;
  r.r2 = l.r2;
  r.points = x.size();
  return r;
}

FitReport fit_frequency(const TimeSeries& s, const Window& w) {
  const std::vector<Maximum> maxima = envelope_maxima(s, w);
  if (maxima.size() < 4) throw Error(ErrorCode::NoOscillationDetected, "fewer than three periods in window");
  const std::size_t n = maxima.size();
  const double period = (maxima.back().t - maxima.front().t) / static_cast<double>(n - 1);
  std::vector<double> k(n), tk(n);
  for (std::size_t i = 0; i < n; ++i) {
    k[i] = static_cast<double>(i);
    tk[i] = maxima[i].t;
  }
  const Line l = fit_line(k, tk);
  FitReport r;
  r.kind = FitKind::Frequency;
  r.window = w;
  r.value = 2.0 * std::numbers::pi / period;
  r.std_error = 2.0 * std::numbers::pi * l.slope_se / (period * period);
  r.r2 = l.r2;
  r.points = n;
  return r;
}

namespace {

constexpr double kCollapseStart = 0.5;
constexpr double kCollapseStep = 0.25;
constexpr std::size_t kMinSegment = 8;
constexpr double kMinExponentialAdvantage = 3.0;

}  // namespace

FitReport survival_collapse(const TimeSeries& s, const std::optional<Window>& win) {
  check_series(s);
  if (s.t_grid.empty()) throw Error(ErrorCode::NoCrossover, "empty series");
  Window w = win.value_or(Window{kCollapseStart, s.t_grid.back()});
  check_window(w);
  w.t_min = std::max(w.t_min, kCollapseStart);
  w.t_max = std::min(w.t_max, s.t_grid.back());

  // running maximum from the right: a monotone envelope of p
  const auto end = std::upper_bound(s.t_grid.begin(), s.t_grid.end(), w.t_max) - s.t_grid.begin();
  std::vector<double> env(s.p_aa.begin(), s.p_aa.begin() + end);
  for (std::size_t i = env.size(); i-- > 1;) env[i - 1] = std::max(env[i - 1], env[i]);

  std::vector<double> ts, lts, le;
  for (double x = w.t_min; x <= w.t_max + 1e-9; x += kCollapseStep) {
    const auto it = std::upper_bound(s.t_grid.begin(), s.t_grid.begin() + end, x);
    const std::size_t j = static_cast<std::size_t>(it - s.t_grid.begin());
    double e;
    if (j == 0) {
      e = env.front();
    } else if (j >= static_cast<std::size_t>(end)) {
      e = env.back();
    } else {
      const double t0 = s.t_grid[j - 1], t1 = s.t_grid[j];
      e = env[j - 1] + (env[j] - env[j - 1]) * (x - t0) / (t1 - t0);
    }
    if (!(e > 0.0)) throw Error(ErrorCode::NoCrossover, "envelope reaches zero");
    ts.push_back(x);
    lts.push_back(std::log(x));
    le.push_back(std::log(e));
  }
  const std::size_t n = ts.size();
  if (n < 2 * kMinSegment + 1) throw Error(ErrorCode::NoCrossover, "window too short for two fits");

  double best = INFINITY;
  std::size_t split = 0;
  Line early, late;
  for (std::size_t k = kMinSegment; k + kMinSegment < n; ++k) {
    const Line e = fit_line(ts.data(), le.data(), k);
    const Line l = fit_line(lts.data() + k, le.data() + k, n - k);
    if (e.sse + l.sse < best) {
      best = e.sse + l.sse;
      split = k;
      early = e;
      late = l;
    }
  }
  const Line early_pow = fit_line(lts.data(), le.data(), split);
  if (early_pow.sse < kMinExponentialAdvantage * early.sse)
    throw Error(ErrorCode::NoCrossover, "early decay is not distinguishable from a power law");

  auto f = [&](double x) {
    return (early.intercept + early.slope * x) - (late.intercept + late.slope * std::log(x));
  };
  std::optional<std::size_t> cross;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (f(ts[i]) > 0.0 && f(ts[i + 1]) <= 0.0) cross = i;
  }
  if (!cross) throw Error(ErrorCode::NoCrossover, "exponential and power-law fits do not cross");
  double a = ts[*cross], b = ts[*cross + 1];
  for (int it = 0; it < 100; ++it) {
    const double m = 0.5 * (a + b);
    (f(m) > 0.0 ? a : b) = m;
  }

  double sst = 0.0, mean = 0.0;
  for (double y : le) mean += y;
  mean /= static_cast<double>(n);
  for (double y : le) sst += (y - mean) * (y - mean);

  FitReport r;
  r.kind = FitKind::Collapse;
  r.window = w;
  r.value = 0.5 * (a + b);
  r.std_error = early.slope_se;
  r.r2 = sst > 0.0 ? 1.0 - best / sst : 1.0;
  r.points = n;
  r.exp_rate = -early.slope;
  r.exp_intercept = early.intercept;
  r.power_exponent = late.slope;
  r.breakpoint = ts[split];
  return r;
}

double predicted_tail_exponent(double nu) {
  if (!(nu > -1.0)) throw Error(ErrorCode::InvalidArgument, "edge exponent must exceed -1");
  return -(2.0 * nu + 2.0);
}

}  // namespace swapgate
