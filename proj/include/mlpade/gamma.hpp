#pragma once

// Real gamma function with an explicit pole convention.
//
// The coefficient systems evaluate ratios like G(b - a) / G(b - 2a) where the
// denominator argument can land exactly on a non-positive integer for
// admissible (alpha, beta). Those ratios must come out as exactly zero, so
// poles are detected on the argument, never on the value.

#include <cmath>
#include <limits>
#include <numbers>

#include "mlpade/errors.hpp"

namespace mlpade {

struct GammaValue {
  double value = 0.0;
  bool is_pole = false;
};

namespace detail {

inline constexpr double kPoleTolerance = 1e-14;
inline constexpr double kGammaOverflow = 171.6;

inline bool is_gamma_pole(double x) {
  const double r = std::nearbyint(x);
  return r <= 0.0 && std::abs(x - r) < kPoleTolerance;
}

}  // namespace detail

/// Gamma(x) on the real line. Uses the C library kernel for the positive half
/// and the reflection formula below 0.5.
inline GammaValue gamma(double x) {
  if (!std::isfinite(x)) {
    throw Error(Errc::DomainError, "gamma: non-finite argument", x);
  }
  if (detail::is_gamma_pole(x)) {
    return {std::numeric_limits<double>::infinity(), true};
  }
  if (x > detail::kGammaOverflow) {
    throw Error(Errc::Overflow, "gamma: argument above 171.6 overflows", x);
  }
  if (x >= 0.5) {
    return {std::tgamma(x), false};
  }
  // G(x) G(1-x) = pi / sin(pi x); sin(pi x) via the reduced argument keeps
  // the zeros exact.
  const double one_minus = 1.0 - x;
  if (one_minus > detail::kGammaOverflow) {
    // |G(x)| underflows far to the left of the origin.
    const double s = std::sin(std::numbers::pi * (x - 2.0 * std::floor(x / 2.0)));
    return {std::copysign(0.0, s), false};
  }
  const double s = std::sin(std::numbers::pi * (x - 2.0 * std::floor(x / 2.0)));
  return {std::numbers::pi / (s * std::tgamma(one_minus)), false};
}

/// 1 / Gamma(x), entire; exactly zero at the poles of Gamma.
inline double rgamma(double x) {
  if (!std::isfinite(x)) {
    throw Error(Errc::DomainError, "rgamma: non-finite argument", x);
  }
  if (detail::is_gamma_pole(x)) {
    return 0.0;
  }
  if (x > detail::kGammaOverflow) {
    return std::exp(-std::lgamma(x));
  }
  if (x >= 0.5) {
    return 1.0 / std::tgamma(x);
  }
  const double s = std::sin(std::numbers::pi * (x - 2.0 * std::floor(x / 2.0)));
  const double one_minus = 1.0 - x;
  if (one_minus > detail::kGammaOverflow) {
    return s * std::exp(std::lgamma(one_minus)) / std::numbers::pi;
  }
  return s * std::tgamma(one_minus) / std::numbers::pi;
}

/// Gamma(num_arg) / Gamma(den_arg), zero when den_arg is a pole.
inline double gamma_ratio(double num_arg, double den_arg) {
  if (detail::is_gamma_pole(num_arg)) {
    throw Error(Errc::NumeratorPole, "gamma_ratio: numerator argument is a pole of Gamma",
                num_arg);
  }
  const double r = rgamma(den_arg);
  if (r == 0.0) {
    return 0.0;
  }
  return gamma(num_arg).value * r;
}

}  // namespace mlpade
