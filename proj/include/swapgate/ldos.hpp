#pragma once

// Local density of states at site A: direct evaluation at small eta, the
// N_1 x L_1 x L_2 factorization, localized-state residues and band
// integrals.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "swapgate/spectral.hpp"

namespace swapgate {

struct LocalizedState {
  double energy = 0.0;
  double weight = 0.0;
};

struct SpectrumSeries {
  std::vector<double> eps_grid;
  std::vector<double> n_a;
  std::vector<double> n_1;
  std::vector<double> l1;  ///< empty for the direct route
  std::vector<double> l2;
  double band_weight = 0.0;
  std::vector<LocalizedState> localized;

  std::string method;
  std::optional<double> eta;
  std::optional<Region> region;
  bool non_lorentzian = false;
};

// Region I:  L_k = 2 C Gamma_k / (eps^2 + Gamma_k^2), centers 0.
// Region II+: L_k = 2 C Gamma / ((eps -+ eps_r)^2 + Gamma^2).
// Gamma^2 < 0 in regions IV and V; the products 2 C Gamma_k stay real.
struct LorentzianParams {
  Region region = Region::I;
  std::array<double, 2> center{};
  std::array<double, 2> gamma_sq{};
  std::array<Complex, 2> width{};  ///< sqrt(gamma_sq), imaginary when negative
  Complex amplitude;               ///< C
  std::array<double, 2> numerator{};  ///< 2 C Gamma_k
  bool non_lorentzian = false;

  double factor(std::size_t k, double eps) const;
};

inline constexpr double kDefaultEta = 1e-6;
inline constexpr double kNearBandEdge = 1e-8;

/// In-band N_A on the real axis in closed form, 0 outside the band.
double ldos_exact(double eps, const AnalyticParams& p);

SpectrumSeries ldos_direct(const AnalyticParams& p, const std::vector<double>& eps_grid,
                           double eta = kDefaultEta);

/// Factor parameters for the region of p.
LorentzianParams lorentzian_params(const RegimeParams& p);

/// N_1 L_1 L_2 on the grid. N_1 (and so n_a) vanishes outside the band.
/// Throws RegionMismatch when `given` was built for another region.
SpectrumSeries ldos_factorized(const RegimeParams& p, const std::vector<double>& eps_grid,
                               const std::optional<LorentzianParams>& given = std::nullopt);

enum class EdgePolicy { Throw, DropVanishing };

/// Residues of G_AA at the physical-sheet real poles (region V, and the
/// decoupled limits v0 = 0 or v_ab = 0). A pole at the band edge carries
/// vanishing weight; `edge` decides whether that throws or is skipped.

std::vector<LocalizedState> localized_residues(const RegimeParams& p, EdgePolicy edge = EdgePolicy::Throw);

/// Exponent nu of N_A ~ (2v - eps)^nu at the upper band edge.
double band_edge_exponent(const RegimeParams& p);

/// Panel breakpoints on [0, pi] in theta (eps = 2 v cos theta): `base`
/// uniform panels, graded geometrically towards the theta images of the
/// poles wherever a resonance is narrower than a panel.
std::vector<double> band_mesh(const AnalyticParams& p, std::size_t base);

/// Splits every panel in two.
std::vector<double> refine(const std::vector<double>& mesh);

/// Composite 20-point Gauss-Legendre rule in theta with N_A folded into the
/// weights, so that transform(t) = int_band N_A(eps) exp(-i eps t) deps.
class BandQuadrature {
 public:
  BandQuadrature(const AnalyticParams& p, const std::vector<double>& mesh);

  Complex transform(double t) const;
  double weight() const;
  std::size_t panels() const noexcept { return panels_; }

 private:
  std::size_t panels_;
  std::vector<double> eps_;
  std::vector<double> w_;
};

/// Band transform on every t. Starts from max(16, ceil(v t_max)) base
/// panels and halves all panels until two refinements agree to `tol`.
std::vector<Complex> band_transform(const AnalyticParams& p, const std::vector<double>& t,
                                    double tol = 1e-8);

/// int_band N_A deps converged to `tol`.
double band_weight(const AnalyticParams& p, double tol = 1e-10);

}  // namespace swapgate
