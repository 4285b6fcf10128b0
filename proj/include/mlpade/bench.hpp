#pragma once

// Error reports and the application benchmarks: reaction-diffusion, Volterra
// integral equation, ultraslow diffusion, Bagley-Torvik and Basset. Exact
// values come from the oracle (or a closed form); approximations from the
// Pade approximants. Runtimes cover only approximant evaluation.

#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "mlpade/errors.hpp"
#include "mlpade/inverse.hpp"
#include "mlpade/matml.hpp"
#include "mlpade/oracle.hpp"
#include "mlpade/pade.hpp"
#include "mlpade/pfd.hpp"

namespace mlpade {

struct EvalReport {
  std::vector<double> grid;
  std::vector<double> approx;
  std::vector<double> exact;
  std::vector<double> abs_err;
  std::vector<double> rel_err;  // NaN where |exact| <= 1e-300
  double max_ae = 0.0;
  double max_re = 0.0;
  double runtime_seconds = 0.0;

  std::size_t size() const { return grid.size(); }
};

inline EvalReport make_report(std::vector<double> grid, std::vector<double> approx,
                              std::vector<double> exact, double runtime_seconds = 0.0) {
  EvalReport r;
  r.grid = std::move(grid);
  r.approx = std::move(approx);
  r.exact = std::move(exact);
  r.runtime_seconds = runtime_seconds;
  const std::size_t n = r.grid.size();
  r.abs_err.resize(n);
  r.rel_err.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    r.abs_err[i] = std::abs(r.approx[i] - r.exact[i]);
    r.max_ae = std::max(r.max_ae, r.abs_err[i]);
    if (std::abs(r.exact[i]) > 1e-300) {
      r.rel_err[i] = r.abs_err[i] / std::abs(r.exact[i]);
      r.max_re = std::max(r.max_re, r.rel_err[i]);
    } else {
      r.rel_err[i] = std::numeric_limits<double>::quiet_NaN();
    }
  }
  return r;
}

/// Evenly spaced grid start, start+step, ... up to stop (inclusive, with a
/// little slack for rounding).
inline std::vector<double> uniform_grid(double start, double stop, double step) {
  if (!(step > 0.0) || stop < start) {
    throw Error(Errc::DomainError, "uniform_grid: requires step > 0 and stop >= start", step);
  }
  const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
  std::vector<double> g(count);
  for (std::size_t i = 0; i < count; ++i) g[i] = start + static_cast<double>(i) * step;
  return g;
}

enum class EvalPath { Direct, PartialFractions };

namespace detail {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

// Scalar evaluator bound to one approximant, through either path.
class ScalarEvaluator {
 public:
  ScalarEvaluator(const ApproximantSpec& s, EvalPath path)
      : r_(RationalApproximant::construct(s)), path_(path) {
    if (path_ == EvalPath::PartialFractions) pf_.emplace(decompose(r_));
  }
  double operator()(double x) const { return pf_ ? pf_->eval(x) : r_.eval(x); }
  const RationalApproximant& approximant() const { return r_; }

 private:
  RationalApproximant r_;
  EvalPath path_;
  std::optional<PartialFractionForm> pf_;
};

inline std::vector<double> timed_map(const std::vector<double>& xs,
                                     const std::function<double(double)>& f, double& seconds) {
  std::vector<double> out(xs.size());
  const Stopwatch sw;
  for (std::size_t i = 0; i < xs.size(); ++i) out[i] = f(xs[i]);
  seconds = sw.seconds();
  return out;
}

}  // namespace detail

/// Approximant against the oracle on a grid.
inline EvalReport eval_error(const RationalApproximant& r, const std::vector<double>& xs,
                             const OracleConfig& cfg = {}) {
  double secs = 0.0;
  auto approx = detail::timed_map(xs, [&](double x) { return r.eval(x); }, secs);
  std::vector<double> exact(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    exact[i] = mlf_oracle(r.spec().alpha(), r.spec().beta(), xs[i], cfg);
  }
  return make_report(xs, std::move(approx), std::move(exact), secs);
}

struct ApproxType {
  int m = 7;
  int n = 2;
};

inline EvalReport run_reaction_diffusion(double alpha, double x_loc, const std::vector<double>& ts,
                                         ApproxType type = {}, EvalPath path = EvalPath::Direct,
                                         const OracleConfig& cfg = {}) {
  if (!(alpha > 0.0 && alpha < 1.0) || x_loc < 0.0 || x_loc > 1.0) {
    throw Error(Errc::DomainError, "reaction-diffusion: requires 0 < alpha < 1, 0 <= x <= 1");
  }
  const double w = x_loc * (1.0 - x_loc);
  const detail::ScalarEvaluator f(ApproximantSpec::make(alpha, 1.0, type.m, type.n), path);
  double secs = 0.0;
  auto approx = detail::timed_map(ts, [&](double t) { return w * f(std::pow(t, alpha)); }, secs);
  std::vector<double> exact(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) {
    exact[i] = w * mlf_oracle(alpha, 1.0, std::pow(ts[i], alpha), cfg);
  }
  return make_report(ts, std::move(approx), std::move(exact), secs);
}

/// u(t) = G(b) t^{b-1} E_{a,b}(-t^a). t = 0 is only allowed for b = 1.
inline EvalReport run_vie(double alpha, double beta, const std::vector<double>& ts,
                          ApproxType type = {}, EvalPath path = EvalPath::Direct,
                          const OracleConfig& cfg = {}) {
  for (double t : ts) {
    if (t < 0.0 || (t == 0.0 && beta != 1.0)) {
      throw Error(Errc::DomainError, "vie: grid must be positive (t = 0 only when beta = 1)", t);
    }
  }
  const double gb = gamma(beta).value;
  const detail::ScalarEvaluator f(ApproximantSpec::make(alpha, beta, type.m, type.n), path);
  auto weight = [&](double t) { return beta == 1.0 ? gb : gb * std::pow(t, beta - 1.0); };
  double secs = 0.0;
  auto approx =
      detail::timed_map(ts, [&](double t) { return weight(t) * f(std::pow(t, alpha)); }, secs);
  std::vector<double> exact(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) {
    exact[i] = weight(ts[i]) * mlf_oracle(alpha, beta, std::pow(ts[i], alpha), cfg);
  }
  return make_report(ts, std::move(approx), std::move(exact), secs);
}

/// Gaussian density with variance 2 k X, X the inverse of E_a(-.) at t.
inline double ultraslow_density(double k_alpha, double x_loc, double inv) {
  const double v = 4.0 * k_alpha * inv;
  return std::exp(-x_loc * x_loc / v) / std::sqrt(std::numbers::pi * v);
}

inline EvalReport run_ultraslow(double alpha, double k_alpha, double x_loc,
                                const std::vector<double>& ts, ApproxType type = {},
                                const OracleConfig& cfg = {}) {
  for (double t : ts) {
    if (!(t > 0.0 && t < 1.0)) {
      throw Error(Errc::DomainError, "ultraslow: requires 0 < t < 1", t);
    }
  }
  const auto r = RationalApproximant::construct(ApproximantSpec::make(alpha, 1.0, type.m, type.n));
  double secs = 0.0;
  auto approx = detail::timed_map(
      ts, [&](double t) { return ultraslow_density(k_alpha, x_loc, invert_fourth(r, t)); }, secs);
  std::vector<double> exact(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) {
    exact[i] = ultraslow_density(k_alpha, x_loc, oracle_inverse(alpha, 1.0, ts[i], cfg));
  }
  return make_report(ts, std::move(approx), std::move(exact), secs);
}

inline RealMatrix bagley_torvik_matrix(double a1, double a2) {
  return RealMatrix::from_rows(
      {{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {-a2, 0, 0, -a1}});
}

namespace detail {

// E_{a,b}(B) rhs through the chosen path.
class MatrixEvaluator {
 public:
  MatrixEvaluator(double alpha, double beta, ApproxType type, EvalPath path)
      : r_(RationalApproximant::construct(ApproximantSpec::make(alpha, beta, type.m, type.n))),
        pf_(decompose(r_)),
        path_(path) {}
  std::vector<double> operator()(const RealMatrix& b, const std::vector<double>& rhs) const {
    return path_ == EvalPath::PartialFractions ? mlf_action(b, pf_, rhs)
                                               : mlf_action_rational(b, r_, rhs);
  }

 private:
  RationalApproximant r_;
  PartialFractionForm pf_;
  EvalPath path_;
};

inline RealMatrix scaled(const RealMatrix& a, double s) {
  RealMatrix b = a;
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) b(i, j) *= s;
  }
  return b;
}

}  // namespace detail

/// First component of
///   2 [t^{1/2} E_{1/2,3/2}(B) + a1 t E_{1/2,2}(B) + a2 t^{5/2} E_{1/2,7/2}(B)] e4,
/// B = t^{1/2} A, against the exact solution t^2.
inline EvalReport run_bagley_torvik(double a1, double a2, const std::vector<double>& ts,
                                    ApproxType type = {},
                                    EvalPath path = EvalPath::PartialFractions) {
  if (!(a1 > 0.0 && a2 > 0.0)) {
    throw Error(Errc::DomainError, "bagley-torvik: requires a1, a2 > 0");
  }
  const RealMatrix a = bagley_torvik_matrix(a1, a2);
  const detail::MatrixEvaluator e1(0.5, 1.5, type, path);
  const detail::MatrixEvaluator e2(0.5, 2.0, type, path);
  const detail::MatrixEvaluator e3(0.5, 3.5, type, path);
  const std::vector<double> e4{0, 0, 0, 1};

  double secs = 0.0;
  auto approx = detail::timed_map(
      ts,
      [&](double t) {
        if (t == 0.0) return 0.0;
        const double rt = std::sqrt(t);
        const RealMatrix b = detail::scaled(a, rt);
        const auto u1 = e1(b, e4);
        const auto u2 = e2(b, e4);
        const auto u3 = e3(b, e4);
        return 2.0 * (rt * u1[0] + a1 * t * u2[0] + a2 * t * t * rt * u3[0]);
      },
      secs);
  std::vector<double> exact(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) exact[i] = ts[i] * ts[i];
  return make_report(ts, std::move(approx), std::move(exact), secs);
}

inline RealMatrix basset_matrix(double delta) {
  return RealMatrix::from_rows({{0, 1}, {-1, -std::sqrt(delta)}});
}

/// Reference Basset solution for alpha = 1/2:
///   u(t) = 1 - sum_k c_k E_{1/2}(a_k t^{1/2}),
/// a_k the roots of x^2 + delta^{1/2} x + 1, c_k = -A_k / a_k,
/// A_k = 1 / prod_{j != k} (a_k - a_j).
inline double basset_exact(double delta, double t, const OracleConfig& cfg = {}) {
  if (t == 0.0) return 0.0;
  const auto ak = roots(RealPoly{1.0, std::sqrt(delta), 1.0}).roots;
  const double rt = std::sqrt(t);
  cdouble acc = 0.0;
  for (std::size_t k = 0; k < ak.size(); ++k) {
    cdouble prod = 1.0;
    for (std::size_t j = 0; j < ak.size(); ++j) {
      if (j != k) prod *= ak[k] - ak[j];
    }
    const cdouble ck = -(1.0 / prod) / ak[k];
    acc += ck * mlf_complex(0.5, 1.0, ak[k] * rt, cfg);
  }
  return 1.0 - acc.real();
}

/// First component of t^{1/2} E_{1/2,3/2}(t^{1/2} A) e2 against basset_exact.
inline EvalReport run_basset(double delta, const std::vector<double>& ts, ApproxType type = {},
                             EvalPath path = EvalPath::PartialFractions,
                             const OracleConfig& cfg = {}) {
  if (!(delta > 0.0)) {
    throw Error(Errc::DomainError, "basset: requires delta > 0", delta);
  }
  const RealMatrix a = basset_matrix(delta);
  const detail::MatrixEvaluator e(0.5, 1.5, type, path);
  const std::vector<double> e2{0, 1};
  double secs = 0.0;
  auto approx = detail::timed_map(
      ts,
      [&](double t) {
        if (t == 0.0) return 0.0;
        const double rt = std::sqrt(t);
        return rt * e(detail::scaled(a, rt), e2)[0];
      },
      secs);
  std::vector<double> exact(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) exact[i] = basset_exact(delta, ts[i], cfg);
  return make_report(ts, std::move(approx), std::move(exact), secs);
}

/// The five (alpha, beta) columns of the error table.
inline const std::vector<std::pair<double, double>>& error_table_columns() {
  static const std::vector<std::pair<double, double>> cols{
      {0.9, 1.9}, {0.9, 1.0}, {0.5, 0.5}, {1.0, 1.1}, {1.0, 2.0}};
  return cols;
}

inline const std::vector<ApproxType>& approximant_types() {
  static const std::vector<ApproxType> types{{3, 2}, {5, 4}, {6, 3}, {7, 2}};
  return types;
}

}  // namespace mlpade
