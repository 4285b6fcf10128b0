#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <initializer_list>
#include <limits>
#include <numbers>
#include <type_traits>
#include <vector>

#include "mlpade/errors.hpp"

namespace mlpade {

using cdouble = std::complex<double>;

template <class T>
struct is_complex : std::false_type {};
template <class T>
struct is_complex<std::complex<T>> : std::true_type {};

template <class A, class B>
using promote_t = std::conditional_t<is_complex<A>::value || is_complex<B>::value, cdouble, double>;

/// Dense polynomial, coefficients in ascending degree. Trailing zeros are
/// trimmed so the leading coefficient is non-zero unless the degree is 0.
template <class T>
class Polynomial {
 public:
  Polynomial() : coeffs_{T{0}} {}
  Polynomial(std::initializer_list<T> ascending) : coeffs_(ascending) { trim(); }
  explicit Polynomial(std::vector<T> ascending) : coeffs_(std::move(ascending)) { trim(); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<T>& coeffs() const { return coeffs_; }
  T operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : T{0}; }
  T leading() const { return coeffs_.back(); }

  /// Horner evaluation.
  template <class U>
  promote_t<T, U> operator()(U x) const {
    using R = promote_t<T, U>;
    R acc = R(coeffs_.back());
    for (std::size_t i = coeffs_.size() - 1; i-- > 0;) {
      acc = acc * R(x) + R(coeffs_[i]);
    }
    return acc;
  }

  Polynomial derivative() const {
    if (coeffs_.size() == 1) {
      return Polynomial{T{0}};
    }
    std::vector<T> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
      d[i - 1] = coeffs_[i] * static_cast<double>(i);
    }
    return Polynomial(std::move(d));
  }

  double max_abs_coeff() const {
    double m = 0.0;
    for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
    return m;
  }

  /// Sum of |c_i| |x|^i: the scale of the rounding error in a Horner sweep.
  double abs_scale(double abs_x) const {
    double acc = 0.0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * abs_x + std::abs(coeffs_[i]);
    return acc;
  }

  bool has_real_coefficients() const {
    if constexpr (is_complex<T>::value) {
      return std::all_of(coeffs_.begin(), coeffs_.end(),
                         [](const T& c) { return c.imag() == 0.0; });
    } else {
      return true;
    }
  }

 private:
  void trim() {
    if (coeffs_.empty()) coeffs_.push_back(T{0});
    while (coeffs_.size() > 1 && coeffs_.back() == T{0}) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

using Poly = Polynomial<cdouble>;
using RealPoly = Polynomial<double>;

struct RootSet {
  std::vector<cdouble> roots;  // multiplicity expanded
  double residual_bound = 0.0;  // max |p(r)| over the returned roots
};

/// Tolerance under which two roots are declared conjugate to each other, and
/// under which a root's imaginary part is treated as rounding dust.
inline double pairing_tolerance(cdouble r) { return 1e-8 * (1.0 + std::abs(r)); }

inline bool is_conjugate_pair(cdouble a, cdouble b) {
  return std::abs(a - std::conj(b)) <= pairing_tolerance(a);
}

namespace detail {

inline constexpr int kMaxRootIterations = 500;

template <class T>
double root_target(const Polynomial<T>& p, cdouble z) {
  const double eps = std::numeric_limits<double>::epsilon();
  return std::max(1e-13 * (1.0 + p.max_abs_coeff()), 8.0 * eps * p.abs_scale(std::abs(z)));
}

template <class T>
cdouble newton_polish(const Polynomial<T>& p, const Polynomial<T>& dp, cdouble z) {
  const cdouble fz = p(z);
  const cdouble dz = dp(z);
  if (dz == 0.0) return z;
  const cdouble candidate = z - fz / dz;
  return std::abs(p(candidate)) <= std::abs(fz) ? candidate : z;
}

inline std::vector<cdouble> quadratic_roots(cdouble a, cdouble b, cdouble c) {
  cdouble d = std::sqrt(b * b - 4.0 * a * c);
  if (std::real(std::conj(b) * d) < 0.0) d = -d;
  const cdouble q = -0.5 * (b + d);
  if (q == 0.0) {
    return {cdouble(0.0), cdouble(0.0)};
  }
  return {q / a, c / q};
}

// Aberth-Ehrlich simultaneous iteration, Gauss-Seidel updates.
template <class T>
std::vector<cdouble> aberth(const Polynomial<T>& p) {
  const int n = p.degree();
  const Polynomial<T> dp = p.derivative();
  const double lead = std::abs(p.leading());
  double radius = 0.0;
  for (int i = 0; i < n; ++i) radius = std::max(radius, std::abs(p[i]) / lead);
  radius += 1.0;

  std::vector<cdouble> z(n);
  for (int k = 0; k < n; ++k) {
    const double phase = 2.0 * std::numbers::pi * k / n + 0.4;
    z[k] = std::polar(radius, phase);
  }

  for (int iter = 0; iter < kMaxRootIterations; ++iter) {
    bool converged = true;
    for (int i = 0; i < n; ++i) {
      const cdouble fz = p(z[i]);
      if (std::abs(fz) <= root_target(p, z[i])) continue;
      converged = false;
      const cdouble ratio = fz / dp(z[i]);
      cdouble repulsion = 0.0;
      for (int j = 0; j < n; ++j) {
        if (j != i) repulsion += 1.0 / (z[i] - z[j]);
      }
      z[i] -= ratio / (1.0 - ratio * repulsion);
    }
    if (converged) return z;
  }
  for (int i = 0; i < n; ++i) {
    if (std::abs(p(z[i])) > root_target(p, z[i])) {
      throw Error(Errc::NonConvergence, "roots: residual target not met after 500 iterations",
                  std::abs(p(z[i])), z);
    }
  }
  return z;
}

// Snap rounding dust for real-coefficient inputs: near-real roots become real,
// conjugate partners become exact conjugates.
inline void symmetrize(std::vector<cdouble>& roots) {
  const std::size_t n = roots.size();
  std::vector<bool> done(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (done[i]) continue;
    if (std::abs(roots[i].imag()) <= pairing_tolerance(roots[i])) {
      roots[i] = cdouble(roots[i].real(), 0.0);
      done[i] = true;
      continue;
    }
    std::size_t best = n;
    double best_dist = std::numeric_limits<double>::infinity();
    for (std::size_t j = i + 1; j < n; ++j) {
      if (done[j]) continue;
      const double d = std::abs(roots[i] - std::conj(roots[j]));
      if (d < best_dist) {
        best_dist = d;
        best = j;
      }
    }
    if (best < n && is_conjugate_pair(roots[i], roots[best])) {
      cdouble mid = 0.5 * (roots[i] + std::conj(roots[best]));
      if (mid.imag() < 0.0) mid = std::conj(mid);
      roots[i] = mid;
      roots[best] = std::conj(mid);
      done[best] = true;
    }
    done[i] = true;
  }
}

}  // namespace detail

/// All complex roots. Degrees 1 and 2 in closed form, higher degrees by
/// Aberth iteration; every root gets one Newton polish step. Real-coefficient
/// inputs come back conjugate-closed.
template <class T>
RootSet roots(const Polynomial<T>& p) {
  const int n = p.degree();
  if (n < 1) {
    throw Error(Errc::DomainError, "roots: polynomial degree must be at least 1");
  }
  std::vector<cdouble> z;
  if (n == 1) {
    z = {-cdouble(p[0]) / cdouble(p[1])};
  } else if (n == 2) {
    z = detail::quadratic_roots(cdouble(p[2]), cdouble(p[1]), cdouble(p[0]));
  } else {
    z = detail::aberth(p);
  }

  const Polynomial<T> dp = p.derivative();
  for (auto& r : z) r = detail::newton_polish(p, dp, r);

  if (p.has_real_coefficients()) {
    detail::symmetrize(z);
    for (auto& r : z) {
      if (r.imag() == 0.0) r = detail::newton_polish(p, dp, r).real();
    }
  }

  std::sort(z.begin(), z.end(), [](cdouble a, cdouble b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });

  RootSet out;
  for (const auto& r : z) out.residual_bound = std::max(out.residual_bound, std::abs(p(r)));
  out.roots = std::move(z);
  return out;
}

}  // namespace mlpade
