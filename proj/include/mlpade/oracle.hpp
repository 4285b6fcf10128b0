#pragma once

// Reference evaluation of E_{a,b}(-x) for x >= 0, used as ground truth for
// every error report. Three methods, picked by x:
//   small x   compensated power series
//   large x   optimally truncated asymptotic series, checked against its own
//             error bound
//   otherwise trapezoidal quadrature of the inverse Laplace transform on a
//             parabolic contour, verified by a doubled-node rerun

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>

#include "mlpade/errors.hpp"
#include "mlpade/gamma.hpp"

namespace mlpade {

struct OracleConfig {
  double series_cutoff = 5.0;
  double asym_cutoff = 15.0;
  int contour_nodes = 96;
  double target_rel_tol = 1e-12;
  // Largest tolerated ratio between the biggest series term and the result
  // when picking the series method. Drives the alpha-dependent series cap.
  double cancellation_budget = 1e2;
};

enum class OracleMethod { Origin, Series, Asymptotic, Contour };

inline const char* to_string(OracleMethod m) {
  switch (m) {
    case OracleMethod::Origin: return "origin";
    case OracleMethod::Series: return "series";
    case OracleMethod::Asymptotic: return "asymptotic";
    case OracleMethod::Contour: return "contour";
  }
  return "?";
}

struct OracleValue {
  double value = 0.0;
  OracleMethod method = OracleMethod::Origin;
};

namespace detail {

// Neumaier's variant of Kahan summation.
template <class T>
class CompensatedSum {
 public:
  void add(T v) {
    if constexpr (std::is_same_v<T, double>) {
      add_real(sum_, comp_, v);
    } else {
      double sr = sum_.real(), cr = comp_.real();
      double si = sum_.imag(), ci = comp_.imag();
      add_real(sr, cr, v.real());
      add_real(si, ci, v.imag());
      sum_ = T(sr, si);
      comp_ = T(cr, ci);
    }
  }
  T value() const { return sum_ + comp_; }

 private:
  static void add_real(double& s, double& c, double v) {
    const double t = s + v;
    if (std::abs(s) >= std::abs(v)) {
      c += (s - t) + v;
    } else {
      c += (v - t) + s;
    }
    s = t;
  }

  T sum_{0};
  T comp_{0};
};

inline void check_oracle_params(double alpha, double beta) {
  if (!(alpha > 0.0 && alpha <= 1.0) || !(beta > 0.0) || !std::isfinite(beta)) {
    throw Error(Errc::DomainError, "oracle: requires 0 < alpha <= 1 and beta > 0", alpha);
  }
}

// x^k / G(a k + b), computed without overflowing the power when possible.
inline double series_magnitude(double x, int k, double alpha, double beta) {
  const double p = std::pow(x, k);
  if (std::isfinite(p)) return p * rgamma(alpha * k + beta);
  return std::exp(k * std::log(x) - std::lgamma(alpha * k + beta));
}

template <class T>
T series_sum(double alpha, double beta, T z, const OracleConfig& cfg) {
  CompensatedSum<T> acc;
  T power{1};
  double biggest = 0.0;
  int small_run = 0;
  constexpr int kMaxTerms = 400;
  for (int k = 0; k < kMaxTerms; ++k) {
    T term;
    if constexpr (std::is_same_v<T, double>) {
      const double mag = series_magnitude(std::abs(z), k, alpha, beta);
      term = (z < 0.0 && k % 2 == 1) ? -mag : mag;
    } else {
      term = power * rgamma(alpha * k + beta);
      power *= z;
    }
    acc.add(term);
    biggest = std::max(biggest, std::abs(term));
    const double partial = std::abs(acc.value());
    if (std::abs(term) < cfg.target_rel_tol * partial) {
      if (++small_run == 3) {
        if (biggest > 1e13 * partial) {
          throw Error(Errc::PrecisionLoss, "series: cancellation exceeds 1e13", biggest / partial);
        }
        return acc.value();
      }
    } else {
      small_run = 0;
    }
  }
  throw Error(Errc::NonConvergence, "series: no convergence within 400 terms", std::abs(z));
}

}  // namespace detail

/// Power series for E_{a,b}(-x), 0 <= x <= series_cutoff.
inline double mlf_series(double alpha, double beta, double x, const OracleConfig& cfg = {}) {
  detail::check_oracle_params(alpha, beta);
  if (x < 0.0 || x > cfg.series_cutoff) {
    throw Error(Errc::DomainError, "mlf_series: requires 0 <= x <= series_cutoff", x);
  }
  return detail::series_sum<double>(alpha, beta, -x, cfg);
}

struct AsymptoticSum {
  double value = 0.0;
  double bound = 0.0;  // magnitude of the first omitted non-zero term
};

/// Optimally truncated expansion of E_{a,b}(-x) at infinity, no failover.
/// For a = 1 and integer b the exponential part is added, which makes the
/// result exact.
inline AsymptoticSum asymptotic_sum(double alpha, double beta, double x) {
  detail::check_oracle_params(alpha, beta);
  if (!(x > 0.0)) {
    throw Error(Errc::DomainError, "asymptotic_sum: requires x > 0", x);
  }
  constexpr int kMaxTerms = 400;
  constexpr int kZeroLookahead = 64;
  detail::CompensatedSum<double> acc;
  double last = std::numeric_limits<double>::infinity();
  AsymptoticSum out;
  int k = 1;
  bool omitted = false;
  while (k < kMaxTerms) {
    // Skip exact zeros, the arguments that land on poles of Gamma.
    int zeros = 0;
    while (detail::is_gamma_pole(beta - alpha * k) && zeros < kZeroLookahead) {
      ++k;
      ++zeros;
    }
    if (zeros == kZeroLookahead) break;
    // -(-x)^-k / G(b - a k)
    const double mag = std::pow(x, -k) * rgamma(beta - alpha * k);
    const double term = (k % 2 == 0) ? -mag : mag;
    if (std::abs(term) >= last) {
      out.bound = std::abs(term);
      omitted = true;
      break;
    }
    acc.add(term);
    last = std::abs(term);
    ++k;
    if (last == 0.0) break;
  }
  if (!omitted && k >= kMaxTerms) out.bound = last;
  out.value = acc.value();
  const double beta_int = std::nearbyint(beta);
  if (alpha == 1.0 && beta == beta_int) {
    // Residue of e^s s^{1-b} / (s + x) at s = -x, (-x)^{1-b} e^{-x}.
    const double sign = (static_cast<long long>(1.0 - beta_int) % 2 == 0) ? 1.0 : -1.0;
    out.value += sign * std::pow(x, 1.0 - beta) * std::exp(-x);
  } else if (alpha == 1.0) {
    // The pole sits on the branch cut; its e^{-x} contribution is not
    // captured, so it counts against the bound.
    out.bound += std::pow(x, 1.0 - beta) * std::exp(-x);
  } else if (alpha > 2.0 / 3.0) {
    // Exponentially small oscillating part from the poles near the cut,
    // (2/a) x^{(1-b)/a} e^{x^{1/a} cos(pi/a)}; not summed, only bounded.
    const double xr = std::pow(x, 1.0 / alpha);
    out.bound += 2.0 / alpha * std::pow(x, (1.0 - beta) / alpha) *
                 std::exp(xr * std::cos(std::numbers::pi / alpha));
  }
  return out;
}

namespace detail {

struct ContourGrid {
  double mu;
  double h;
};

inline ContourGrid contour_grid(int half_nodes, const OracleConfig& cfg) {
  const double l = std::log(1.0 / cfg.target_rel_tol) + 3.0;
  const double h = 2.0 * std::numbers::pi / (l + 4.0);
  const double umax = half_nodes * h;
  return {l / (umax * umax - 1.0), h};
}

// Trapezoid rule over u in [-umax, umax] with `refine` subdivisions per base
// step, for E(w) = (1/2 pi i) int e^s s^{a-b} / (s^a - w) ds along
// s(u) = mu (1 + i u)^2.
inline std::complex<double> contour_trapezoid(double alpha, double beta, std::complex<double> w,
                                              int half_nodes, int refine, bool real_axis,
                                              const OracleConfig& cfg) {
  using cd = std::complex<double>;
  const auto grid = contour_grid(half_nodes, cfg);
  const double h = grid.h / refine;
  const int kmax = half_nodes * refine;
  auto integrand = [&](double u) {
    const cd one_iu(1.0, u);
    const cd s = grid.mu * one_iu * one_iu;
    const cd ls = std::log(s);
    return std::exp(s + (alpha - beta) * ls) / (std::exp(alpha * ls) - w) * one_iu;
  };
  CompensatedSum<cd> acc;
  if (real_axis) {
    acc.add(0.5 * integrand(0.0));
    for (int k = 1; k <= kmax; ++k) acc.add(integrand(k * h));
    return cd(2.0 * grid.mu / std::numbers::pi * h * acc.value().real(), 0.0);
  }
  for (int k = -kmax; k <= kmax; ++k) acc.add(integrand(k * h));
  return grid.mu / std::numbers::pi * h * acc.value();
}

inline std::complex<double> contour_checked(double alpha, double beta, std::complex<double> w,
                                            bool real_axis, const OracleConfig& cfg) {
  // Strong singularities at the origin (large b - a) need a finer step than
  // the base grid; halve it up to three times before giving up.
  const int half = std::max(cfg.contour_nodes / 2, 4);
  auto coarse = contour_trapezoid(alpha, beta, w, half, 1, real_axis, cfg);
  double mismatch = 0.0;
  for (int refine = 2; refine <= 16; refine *= 2) {
    const auto fine = contour_trapezoid(alpha, beta, w, half, refine, real_axis, cfg);
    const double scale = std::max(std::abs(fine), std::numeric_limits<double>::min());
    mismatch = std::abs(fine - coarse) / scale;
    if (mismatch <= 10.0 * cfg.target_rel_tol) return fine;
    coarse = fine;
  }
  throw Error(Errc::ContourFailure, "contour: doubled-node check disagrees", mismatch);
}

}  // namespace detail

/// Parabolic-contour quadrature for E_{a,b}(-x), x > 0.
inline double mlf_contour(double alpha, double beta, double x, const OracleConfig& cfg = {}) {
  detail::check_oracle_params(alpha, beta);
  if (!(x > 0.0)) {
    throw Error(Errc::DomainError, "mlf_contour: requires x > 0", x);
  }
  return detail::contour_checked(alpha, beta, std::complex<double>(-x, 0.0), true, cfg).real();
}

/// Asymptotic evaluation with failover to the contour when the truncation
/// bound misses the target. Sector restrictions make the expansion unreliable
/// for alpha <= 0.25, which always goes to the contour.
inline OracleValue mlf_asym(double alpha, double beta, double x, const OracleConfig& cfg = {}) {
  if (alpha > 0.25) {
    const auto a = asymptotic_sum(alpha, beta, x);
    if (a.bound <= cfg.target_rel_tol * std::abs(a.value)) {
      return {a.value, OracleMethod::Asymptotic};
    }
  }
  return {mlf_contour(alpha, beta, x, cfg), OracleMethod::Contour};
}

/// Largest x at which the series is used for this alpha.
inline double series_limit(double alpha, const OracleConfig& cfg) {
  return std::min(cfg.series_cutoff, std::pow(std::log(cfg.cancellation_budget), alpha));
}

inline OracleValue mlf_oracle_detailed(double alpha, double beta, double x,
                                       const OracleConfig& cfg = {}) {
  detail::check_oracle_params(alpha, beta);
  if (!(x >= 0.0) || !std::isfinite(x)) {
    throw Error(Errc::DomainError, "oracle: requires finite x >= 0", x);
  }
  if (x == 0.0) return {rgamma(beta), OracleMethod::Origin};
  if (x <= series_limit(alpha, cfg)) {
    return {mlf_series(alpha, beta, x, cfg), OracleMethod::Series};
  }
  if (x >= cfg.asym_cutoff) return mlf_asym(alpha, beta, x, cfg);
  if (alpha > 0.25) {
    const auto a = asymptotic_sum(alpha, beta, x);
    if (a.bound <= cfg.target_rel_tol * std::abs(a.value)) {
      return {a.value, OracleMethod::Asymptotic};
    }
  }
  return {mlf_contour(alpha, beta, x, cfg), OracleMethod::Contour};
}

/// Reference value of E_{a,b}(-x).
inline double mlf_oracle(double alpha, double beta, double x, const OracleConfig& cfg = {}) {
  return mlf_oracle_detailed(alpha, beta, x, cfg).value;
}

/// E_{a,b}(z) at a complex argument. Only the Basset reference solution needs
/// this. Small |z| uses the series; otherwise the contour, plus the residue at
/// s = z^{1/a} when that pole sits to the right of the parabola.
inline std::complex<double> mlf_complex(double alpha, double beta, std::complex<double> z,
                                        const OracleConfig& cfg = {}) {
  detail::check_oracle_params(alpha, beta);
  if (z == 0.0) return rgamma(beta);
  if (std::pow(std::abs(z), 1.0 / alpha) <= std::log(cfg.cancellation_budget)) {
    return detail::series_sum<std::complex<double>>(alpha, beta, z, cfg);
  }
  auto value = detail::contour_checked(alpha, beta, z, false, cfg);
  if (std::abs(std::arg(z)) < alpha * std::numbers::pi) {
    const auto pole = std::pow(z, 1.0 / alpha);
    const double mu = detail::contour_grid(std::max(cfg.contour_nodes / 2, 4), cfg).mu;
    // Boundary of the region to the right: Re s = mu - (Im s)^2 / (4 mu).
    if (pole.real() > mu - pole.imag() * pole.imag() / (4.0 * mu)) {
      value += std::exp(pole) * std::pow(pole, 1.0 - beta) / alpha;
    }
  }
  return value;
}

/// x >= 0 with E_{a,b}(-x) = y, by bisection on the oracle to 1e-12 relative.
inline double oracle_inverse(double alpha, double beta, double y, const OracleConfig& cfg = {}) {
  const double top = rgamma(beta);
  if (!(y > 0.0 && y <= top)) {
    throw Error(Errc::DomainError, "oracle_inverse: requires 0 < y <= 1/G(beta)", y);
  }
  if (y == top) return 0.0;
  double lo = 0.0;
  double hi = 1.0;
  while (mlf_oracle(alpha, beta, hi, cfg) > y) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e300) {
      throw Error(Errc::NonConvergence, "oracle_inverse: no bracket found", y);
    }
  }
  while (hi - lo > 1e-12 * hi) {
    const double mid = 0.5 * (lo + hi);
    if (mlf_oracle(alpha, beta, mid, cfg) > y) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace mlpade
