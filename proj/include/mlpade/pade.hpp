#pragma once

// Global Pade approximants R(x) = p(x) / (s(x) q(x)) of E_{a,b}(-x), x >= 0.
//
// s(x) = G(b-a) x      when b > a   (Regime::BetaGreater)
// s(x) = -G(-a) x^2    when b == a  (Regime::BetaEqual)
//
// p and q are monic of degree nu = (m+n-1)/2. The free coefficients are fixed
// by making s E q - p vanish at the low Taylor powers (local rows) and at the
// top powers of its expansion at infinity (asymptotic rows).

#include <array>
#include <cmath>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mlpade/errors.hpp"
#include "mlpade/gamma.hpp"
#include "mlpade/linalg.hpp"
#include "mlpade/poly.hpp"

namespace mlpade {

enum class Regime { BetaGreater, BetaEqual };

inline const char* to_string(Regime r) {
  return r == Regime::BetaGreater ? "BetaGreater" : "BetaEqual";
}

inline constexpr double kRegimeTolerance = 1e-12;

class ApproximantSpec {
 public:
  /// Validates the admissible set and the (m, n) rules; throws
  /// Errc::InvalidSpec naming the first violated constraint.
  static ApproximantSpec make(double alpha, double beta, int m, int n) {
    auto fail = [&](const std::string& why) {
      std::ostringstream os;
      os << why << " (alpha=" << alpha << ", beta=" << beta << ", m=" << m << ", n=" << n << ")";
      throw Error(Errc::InvalidSpec, os.str());
    };
    if (!std::isfinite(alpha) || !std::isfinite(beta)) fail("alpha and beta must be finite");
    if (!(alpha > 0.0 && alpha <= 1.0)) fail("requires 0 < alpha <= 1");
    if (beta < alpha - kRegimeTolerance) fail("requires beta >= alpha");
    const Regime regime =
        std::abs(beta - alpha) <= kRegimeTolerance ? Regime::BetaEqual : Regime::BetaGreater;
    if (regime == Regime::BetaEqual && alpha == 1.0) {
      fail("(alpha, beta) = (1, 1) is excluded, requires (alpha, beta) != (1, 1)");
    }
    if ((m + n) % 2 == 0) fail("requires m + n odd");
    if (n <= 1) fail("requires n > 1");
    if (regime == Regime::BetaGreater && m < 2) fail("requires m >= 2 when beta > alpha");
    if (regime == Regime::BetaEqual && m < 3) fail("requires m >= 3 when beta = alpha");
    const bool supported =
        (m == 3 && n == 2) || (m == 5 && n == 4) || (m == 6 && n == 3) || (m == 7 && n == 2);
    if (!supported) fail("(m, n) must be one of (3,2), (5,4), (6,3), (7,2)");
    return ApproximantSpec(alpha, regime == Regime::BetaEqual ? alpha : beta, m, n, regime);
  }

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  int m() const { return m_; }
  int n() const { return n_; }
  int nu() const { return (m_ + n_ - 1) / 2; }
  Regime regime() const { return regime_; }
  bool fourth_order() const { return m_ != 3; }

  /// Lowest power of x that p may carry: p_0 = 0, plus p_1 = 0 when b == a.
  int p_low() const { return regime_ == Regime::BetaGreater ? 1 : 2; }

  /// The constant c in s(x) = c x (b > a) or c x^2 (b == a); positive.
  double scaling_constant() const {
    return regime_ == Regime::BetaGreater ? gamma(beta_ - alpha_).value : -gamma(-alpha_).value;
  }

  double scaling(double x) const {
    const double c = scaling_constant();
    return regime_ == Regime::BetaGreater ? c * x : c * x * x;
  }

  /// Weak warning condition: (5,4) with b == a has a poor fit near the origin.
  bool weak_fit() const { return regime_ == Regime::BetaEqual && m_ == 5 && n_ == 4; }

  friend bool operator==(const ApproximantSpec&, const ApproximantSpec&) = default;

 private:
  ApproximantSpec(double a, double b, int m, int n, Regime r)
      : alpha_(a), beta_(b), m_(m), n_(n), regime_(r) {}

  double alpha_;
  double beta_;
  int m_;
  int n_;
  Regime regime_;
};

namespace detail {

// Coefficient of x^k in s(x) E(-x), k >= 0.
inline double local_coeff(const ApproximantSpec& s, int k) {
  const double a = s.alpha();
  const double b = s.beta();
  const double sign = ((k - 1) % 2 == 0) ? 1.0 : -1.0;
  if (s.regime() == Regime::BetaGreater) {
    if (k < 1) return 0.0;
    return sign * gamma_ratio(b - a, b + (k - 1) * a);
  }
  if (k < 2) return 0.0;
  return sign * gamma_ratio(-a, b + (k - 2) * a);
}

// Coefficient of x^-l in the expansion of s(x) E(-x) at infinity; b_0 = 1.
inline double asym_coeff(const ApproximantSpec& s, int l) {
  if (l == 0) return 1.0;
  const double a = s.alpha();
  const double b = s.beta();
  const double sign = (l % 2 == 0) ? 1.0 : -1.0;
  if (s.regime() == Regime::BetaGreater) return sign * gamma_ratio(b - a, b - (l + 1) * a);
  return sign * gamma_ratio(-a, b - (l + 2) * a);
}

enum class RowKind { Local, Asymptotic };

struct RowPlan {
  RowKind kind;
  int index;  // power j for local rows, depth l for asymptotic rows
};

// Row order per (m, n, regime): local rows by increasing power, then
// asymptotic rows from the deepest matched coefficient up to x^{nu-1}.
inline std::vector<RowPlan> row_plan(const ApproximantSpec& s) {
  std::vector<RowPlan> rows;
  const int first_local = s.p_low();
  for (int j = first_local; j <= s.m() - 1; ++j) rows.push_back({RowKind::Local, j});
  for (int l = s.n() - 1; l >= 1; --l) rows.push_back({RowKind::Asymptotic, l});
  return rows;
}

// Unknown layout: p_{p_low} .. p_{nu-1}, then q_0 .. q_{nu-1}.
struct Layout {
  int nu;
  int p_low;
  int num_p() const { return nu - p_low; }
  int size() const { return num_p() + nu; }
  int p_col(int i) const { return i - p_low; }
  int q_col(int i) const { return num_p() + i; }
};

}  // namespace detail

struct CoefficientSystem {
  RealMatrix matrix;
  std::vector<double> rhs;
};

/// The matching-condition system for a fourth-order spec, assembled row by
/// row through gamma_ratio.
inline CoefficientSystem assemble_system(const ApproximantSpec& s) {
  const detail::Layout lay{s.nu(), s.p_low()};
  const auto plan = detail::row_plan(s);
  const int nu = s.nu();
  CoefficientSystem sys{RealMatrix(plan.size(), lay.size()), std::vector<double>(plan.size(), 0.0)};

  for (std::size_t r = 0; r < plan.size(); ++r) {
    // Row: sum_i q_i c_{power - i} - p_power = 0 with q_nu = p_nu = 1 moved right.
    const auto& row = plan[r];
    if (row.kind == detail::RowKind::Local) {
      const int j = row.index;
      for (int i = 0; i <= std::min(j, nu); ++i) {
        const double c = detail::local_coeff(s, j - i);
        if (i == nu) {
          sys.rhs[r] -= c;
        } else {
          sys.matrix(r, lay.q_col(i)) += c;
        }
      }
      if (j == nu) {
        sys.rhs[r] += 1.0;
      } else if (j < nu) {
        sys.matrix(r, lay.p_col(j)) -= 1.0;
      }
    } else {
      const int l = row.index;
      const int power = nu - l;
      for (int t = 0; t <= l; ++t) {
        const int i = power + t;
        const double c = detail::asym_coeff(s, t);
        if (i == nu) {
          sys.rhs[r] -= c;
        } else {
          sys.matrix(r, lay.q_col(i)) += c;
        }
      }
      if (power >= s.p_low()) sys.matrix(r, lay.p_col(power)) -= 1.0;
    }
  }
  return sys;
}

class RationalApproximant {
 public:
  /// Builds the approximant. With strict set, a reciprocal condition number
  /// below 1e-12 throws Errc::IllConditioned instead of only being recorded.
  static RationalApproximant construct(const ApproximantSpec& s, bool strict = false) {
    std::vector<double> p(s.nu() + 1, 0.0);
    std::vector<double> q(s.nu() + 1, 0.0);
    p[s.nu()] = 1.0;
    q[s.nu()] = 1.0;
    double rcond = 1.0;

    if (!s.fourth_order()) {
      closed_form_32(s, p, q);
    } else {
      const auto sys = assemble_system(s);
      const auto sol = solve_real(sys.matrix, sys.rhs);
      rcond = sol.rcond;
      const detail::Layout lay{s.nu(), s.p_low()};
      for (int i = s.p_low(); i < s.nu(); ++i) p[i] = sol.x[lay.p_col(i)];
      for (int i = 0; i < s.nu(); ++i) q[i] = sol.x[lay.q_col(i)];
    }
    if (strict && rcond < 1e-12) {
      throw Error(Errc::IllConditioned, "coefficient system reciprocal condition below 1e-12",
                  rcond);
    }

    RationalApproximant r(s, RealPoly(p), RealPoly(q), rcond);
    r.check_denominator();
    return r;
  }

  const ApproximantSpec& spec() const { return spec_; }
  const RealPoly& p() const { return p_; }
  const RealPoly& q() const { return q_; }
  /// Numerator with the scaling's power of x divided out: p/x or p/x^2.
  const RealPoly& reduced_numerator() const { return reduced_; }
  double scaling_constant() const { return scale_; }
  double cond_estimate() const { return rcond_; }
  bool ill_conditioned() const { return rcond_ < 1e-12; }

  double operator()(double x) const { return eval(x); }

  /// R(x) for x >= 0. The removable singularity at 0 never appears because
  /// the scaling's power of x is divided out of p beforehand.
  double eval(double x) const {
    if (x < 0.0 || std::isnan(x)) {
      throw Error(Errc::DomainError, "eval: requires x >= 0", x);
    }
    return ratio(reduced_, q_, x) / scale_;
  }

  /// s(x) R(x) = p(x)/q(x); tends to 1 at infinity.
  double asymptotic_check(double x) const {
    if (x <= 0.0) {
      throw Error(Errc::DomainError, "asymptotic_check: requires x > 0", x);
    }
    return ratio(p_, q_, x);
  }

 private:
  RationalApproximant(ApproximantSpec s, RealPoly p, RealPoly q, double rcond)
      : spec_(s), p_(std::move(p)), q_(std::move(q)), scale_(s.scaling_constant()), rcond_(rcond) {
    const int drop = spec_.p_low();
    std::vector<double> red(p_.coeffs().begin() + drop, p_.coeffs().end());
    reduced_ = RealPoly(std::move(red));
  }

  static void closed_form_32(const ApproximantSpec& s, std::vector<double>& p,
                             std::vector<double>& q) {
    const double a = s.alpha();
    const double b = s.beta();
    if (s.regime() == Regime::BetaEqual) {
      q[0] = gamma_ratio(1.0 + a, 1.0 - a);
      q[1] = 2.0 * gamma_ratio(1.0 - a, 1.0 - 2.0 * a);
      return;
    }
    const double gb = gamma(b).value;
    const double gba = gamma(b + a).value;
    const double gbma = gamma(b - a).value;
    // G(b-a)/G(b-2a), zero when b - 2a is a pole.
    const double ratio2 = gamma_ratio(b - a, b - 2.0 * a);
    const double c = 1.0 / (gba * gbma - gb * gb);
    p[1] = c * (gb * gba - gba * gbma * ratio2);
    q[0] = c * (gb * gb * gba / gbma - gb * gba * ratio2);
    q[1] = c * (gb * gba - gb * gb * ratio2);
  }

  // num(x)/q(x); for x > 1 both are evaluated in 1/x to stay clear of overflow.
  static double ratio(const RealPoly& num, const RealPoly& den, double x) {
    if (x <= 1.0) return num(x) / den(x);
    const double t = 1.0 / x;
    double n = 0.0;
    for (double c : num.coeffs()) n = n * t + c;
    double d = 0.0;
    for (double c : den.coeffs()) d = d * t + c;
    // Reversed Horner gives x^-deg times the value.
    const int gap = den.degree() - num.degree();
    return n / d * std::pow(t, gap);
  }

  void check_denominator() const {
    for (const auto& r : roots(q_).roots) {
      if (r.imag() == 0.0 && r.real() > 0.0) {
        throw Error(Errc::PoleOnPositiveAxis, "denominator has a root on the positive axis",
                    r.real(), roots(q_).roots);
      }
    }
  }

  ApproximantSpec spec_;
  RealPoly p_;
  RealPoly q_;
  RealPoly reduced_;
  double scale_;
  double rcond_;
};

inline RationalApproximant construct(double alpha, double beta, int m, int n,
                                     bool strict = false) {
  return RationalApproximant::construct(ApproximantSpec::make(alpha, beta, m, n), strict);
}

}  // namespace mlpade
