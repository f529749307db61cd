#pragma once

// Poles of G_AA, their Riemann-sheet classification, the effective Rabi
// frequency and the five parametric regimes.

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "swapgate/green.hpp"

namespace swapgate {

enum class PoleKind { Resonance, Virtual, Localized, Nonphysical };
enum class Region { I = 1, II = 2, III = 3, IV = 4, V = 5 };

std::string_view to_string(PoleKind k);
std::string_view to_string(Region r);

struct Pole {
  Complex energy;
  Sheet sheet = Sheet::Physical;
  PoleKind kind = PoleKind::Nonphysical;
  /// |pole_condition| on the declared sheet.
  double residual = 0.0;
};

struct PoleSet {
  /// All four roots: +-sqrt(u_plus), +-sqrt(u_minus).
  std::array<Pole, 4> poles;
  /// Indices into `poles` of the selected physical pair, ordered Re <= .
  std::array<std::size_t, 2> physical_pair{};
  /// 2 |Re eps_physical|.
  double omega_tilde = 0.0;
  /// The two eps^2 solutions, u_plus first.
  std::array<Complex, 2> eps_squared;

  const Pole& physical(std::size_t i) const { return poles[physical_pair[i]]; }
};

PoleSet find_poles(const RegimeParams& p);

/// Critical v_ab values b1 < b2 < b3 < b4 separating regions I..V.
struct Boundaries {
  double b1 = 0.0;  ///< exceptional point
  double b2 = 0.0;  ///< resonance real part reaches the band edge
  double b3 = 0.0;  ///< resonances become virtual states
  double b4 = 0.0;  ///< virtual states become localized
  std::array<double, 4> as_array() const { return {b1, b2, b3, b4}; }
};

/// |v_ab - b_i| below this counts as sitting on a boundary.
inline constexpr double kOnBoundaryTolerance = 1e-9;

Boundaries regime_boundaries(double v0, double v);

struct Regime {
  Region region = Region::I;
  Boundaries boundaries;
  bool on_boundary = false;
};

/// Region from the boundary formulas. Exact-boundary inputs get the higher label.
Regime classify(const RegimeParams& p);

/// Region read off the physical pole pair alone, independent of the boundary
/// formulas.
Region classify_by_poles(const PoleSet& poles, double v);

struct ExceptionalPoint {
  double v_ab = 0.0;
  double gamma_gap = 0.0;      ///< |Gamma_1 - Gamma_2| at v_ab
  double real_part_gap = 0.0;  ///< |Re eps_1 - Re eps_2| at v_ab
};

ExceptionalPoint exceptional_point(double v0, double v);

struct PhaseDiagram {
  std::vector<double> v_ab_grid;
  std::vector<double> v0_grid;
  /// Row-major over (v0, v_ab); empty when v0 is outside (0, v).
  std::vector<std::optional<Regime>> cells;
  /// Boundaries per v0 row; empty for unclassifiable rows.
  std::vector<std::optional<Boundaries>> curves;

  const std::optional<Regime>& at(std::size_t i_v0, std::size_t i_vab) const {
    return cells[i_v0 * v_ab_grid.size() + i_vab];
  }
};

PhaseDiagram phase_diagram(const std::vector<double>& v_ab_grid, const std::vector<double>& v0_grid,
                           double v);

}  // namespace swapgate
