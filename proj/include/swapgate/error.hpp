#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace swapgate {

enum class ErrorCode {
  // parameter validation
  NonPositiveV,
  NegativeHopping,
  NonzeroSiteEnergy,
  V0NotBelowV,
  NonFiniteParameter,
  InvalidArgument,
  // analytic evaluation
  PoleHit,
  DegenerateDenominator,
  RegionMismatch,
  NearBandEdge,
  // dynamics
  QuadratureNotConverged,
  EchoGuardViolated,
  EigensolverFailure,
  // fitting
  WindowTooShort,
  NoOscillationDetected,
  NoCrossover,
};

std::string_view to_string(ErrorCode code);

/// True for errors caused by bad input rather than numerical trouble.
bool is_validation_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace swapgate
