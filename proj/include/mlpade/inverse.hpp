#pragma once

// Approximate inverse of x -> E_{a,b}(-x) on (0, 1/G(b)]: the positive root
// of s(x) q(x) y - p(x) = 0.

#include <cmath>
#include <vector>

#include "mlpade/errors.hpp"
#include "mlpade/gamma.hpp"
#include "mlpade/pade.hpp"
#include "mlpade/poly.hpp"

namespace mlpade {

namespace detail {

inline void check_inverse_domain(const RationalApproximant& r, double y) {
  const double top = rgamma(r.spec().beta());
  if (!(y > 0.0 && y <= top)) {
    throw Error(Errc::DomainError, "inverse: requires 0 < y <= 1/G(beta)", y);
  }
}

// f(x) = s(x) q(x) y - p(x) and f'(x).
inline std::pair<double, double> inverse_residual(const RationalApproximant& r, double y,
                                                  double x) {
  const auto& s = r.spec();
  const double c = r.scaling_constant();
  const bool lin = s.regime() == Regime::BetaGreater;
  const double sx = lin ? c * x : c * x * x;
  const double dsx = lin ? c : 2.0 * c * x;
  const double qx = r.q()(x);
  const double dqx = r.q().derivative()(x);
  const double f = sx * qx * y - r.p()(x);
  const double df = (dsx * qx + sx * dqx) * y - r.p().derivative()(x);
  return {f, df};
}

inline double newton_step(const RationalApproximant& r, double y, double x) {
  const auto [f, df] = inverse_residual(r, y, x);
  if (df == 0.0) return x;
  const double cand = x - f / df;
  if (!(cand > 0.0)) return x;
  return std::abs(inverse_residual(r, y, cand).first) <= std::abs(f) ? cand : x;
}

}  // namespace detail

/// Closed-form inverse of the second-order approximant.
inline double invert_r32(const RationalApproximant& r, double y) {
  const auto& s = r.spec();
  if (s.m() != 3 || s.n() != 2) {
    throw Error(Errc::InvalidSpec, "invert_r32: requires (m, n) = (3, 2)");
  }
  detail::check_inverse_domain(r, y);
  if (y == rgamma(s.beta())) return 0.0;
  const double q0 = r.q()[0];
  const double q1 = r.q()[1];
  const double c = r.scaling_constant();
  double radicand;
  double shift;
  if (s.regime() == Regime::BetaGreater) {
    const double half_inv = 1.0 / (2.0 * c * y);
    shift = half_inv - 0.5 * q1;
    radicand = (0.5 * q1 - half_inv) * (0.5 * q1 - half_inv) -
               q0 * (1.0 - 1.0 / (gamma(s.beta()).value * y));
  } else {
    shift = -0.5 * q1;
    radicand = 0.25 * q1 * q1 - q0 + 1.0 / (c * y);
  }
  if (radicand < 0.0) {
    throw Error(Errc::NegativeDiscriminant, "invert_r32: negative radicand", radicand);
  }
  return shift + std::sqrt(radicand);
}

/// Positive root of c y q(x) - N(x), N the reduced numerator, followed by one
/// Newton step on the unreduced residual. Works for every supported type;
/// the quadratic case is the (3,2) approximant.
inline double invert_fourth(const RationalApproximant& r, double y) {
  detail::check_inverse_domain(r, y);
  if (y == rgamma(r.spec().beta())) return 0.0;
  const double cy = r.scaling_constant() * y;
  std::vector<double> coeffs(r.q().degree() + 1, 0.0);
  for (int i = 0; i <= r.q().degree(); ++i) coeffs[i] = cy * r.q()[i] - r.reduced_numerator()[i];
  const RealPoly poly(coeffs);
  const auto rs = roots(poly).roots;

  std::vector<double> positive;
  for (const auto& z : rs) {
    if (std::abs(z.imag()) <= 1e-8 * (1.0 + std::abs(z)) && z.real() > 0.0) {
      positive.push_back(z.real());
    }
  }
  if (positive.empty()) {
    throw Error(Errc::NoPositiveRoot, "invert: no positive real root", y, rs);
  }
  if (positive.size() > 1) {
    throw Error(Errc::MultiplePositiveRoots, "invert: more than one positive real root", y, rs);
  }
  return detail::newton_step(r, y, positive.front());
}

/// Residual |s q y - p| at x, for checking returned roots.
inline double inverse_residual(const RationalApproximant& r, double y, double x) {
  return std::abs(detail::inverse_residual(r, y, x).first);
}

}  // namespace mlpade
