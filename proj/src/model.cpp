#include "swapgate/model.hpp"

#include <cmath>
#include <string>

namespace swapgate {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPositiveV: return "NonPositiveV";
    case ErrorCode::NegativeHopping: return "NegativeHopping";
    case ErrorCode::NonzeroSiteEnergy: return "NonzeroSiteEnergy";
    case ErrorCode::V0NotBelowV: return "V0NotBelowV";
    case ErrorCode::NonFiniteParameter: return "NonFiniteParameter";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::PoleHit: return "PoleHit";
    case ErrorCode::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorCode::RegionMismatch: return "RegionMismatch";
    case ErrorCode::NearBandEdge: return "NearBandEdge";
    case ErrorCode::QuadratureNotConverged: return "QuadratureNotConverged";
    case ErrorCode::EchoGuardViolated: return "EchoGuardViolated";
    case ErrorCode::EigensolverFailure: return "EigensolverFailure";
    case ErrorCode::WindowTooShort: return "WindowTooShort";
    case ErrorCode::NoOscillationDetected: return "NoOscillationDetected";
    case ErrorCode::NoCrossover: return "NoCrossover";
  }
  return "Unknown";
}

bool is_validation_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPositiveV:
    case ErrorCode::NegativeHopping:
    case ErrorCode::NonzeroSiteEnergy:
    case ErrorCode::V0NotBelowV:
    case ErrorCode::NonFiniteParameter:
    case ErrorCode::InvalidArgument:
    case ErrorCode::DegenerateDenominator:
    case ErrorCode::RegionMismatch:
    case ErrorCode::EchoGuardViolated:
    case ErrorCode::WindowTooShort:
      return true;
    default:
      return false;
  }
}

ValidatedParams validate(const ModelParams& p) {
  for (double x : {p.v_ab, p.v0, p.v, p.e_a, p.e_b, p.e_n}) {
    if (!std::isfinite(x)) throw Error(ErrorCode::NonFiniteParameter, "all parameters must be finite");
  }
  if (!(p.v > 0.0)) throw Error(ErrorCode::NonPositiveV, "environment hopping v must be > 0");
  if (p.v_ab < 0.0) throw Error(ErrorCode::NegativeHopping, "v_ab must be >= 0");
  if (p.v0 < 0.0) throw Error(ErrorCode::NegativeHopping, "v0 must be >= 0");
  return ValidatedParams(p);
}

AnalyticParams validate_analytic(const ModelParams& p) {
  validate(p);
  if (p.e_a != 0.0 || p.e_b != 0.0 || p.e_n != 0.0) {
    throw Error(ErrorCode::NonzeroSiteEnergy, "analytic paths require e_a = e_b = e_n = 0");
  }
  return AnalyticParams(p);
}

RegimeParams validate_regime(const ModelParams& p) {
  validate_analytic(p);
  if (!(p.v0 < p.v)) throw Error(ErrorCode::V0NotBelowV, "regime classification requires v0 < v");
  return RegimeParams(p);
}

ModelParams scaled(const ModelParams& p, double s) {
  if (!(s > 0.0) || !std::isfinite(s)) throw Error(ErrorCode::InvalidArgument, "scale must be positive and finite");
  return {p.v_ab * s, p.v0 * s, p.v * s, p.e_a * s, p.e_b * s, p.e_n * s};
}

}  // namespace swapgate
