#pragma once

// E_{a,b}(B) for a real square matrix B from the pole/weight form:
//   E(B) ~ 2 Re sum_i c_i (-B - r_i I)^{-1}
// one complex shifted solve per conjugate pair.

#include <complex>
#include <vector>

#include "mlpade/errors.hpp"
#include "mlpade/linalg.hpp"
#include "mlpade/pade.hpp"
#include "mlpade/pfd.hpp"

namespace mlpade {

struct MatrixFunction {
  RealMatrix value;
  // Largest |Im| of the unpaired sum over all poles; only filled in when
  // conjugate verification is requested.
  double max_imag = 0.0;
};

namespace detail {

inline void require_pairing(const PartialFractionForm& f) {
  if (!f.pairing_ok()) {
    throw Error(Errc::PairingUnavailable, "matrix evaluation needs conjugate pole pairs");
  }
}

inline ComplexMatrix shifted(const RealMatrix& b, cdouble pole) {
  if (!b.square()) {
    throw Error(Errc::DomainError, "matrix argument is not square");
  }
  ComplexMatrix m(b.rows(), b.cols());
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) m(i, j) = -b(i, j);
    m(i, i) -= pole;
  }
  return m;
}

}  // namespace detail

/// Full matrix function.
inline MatrixFunction mlf_matrix(const RealMatrix& b, const PartialFractionForm& f,
                                 bool verify_conjugates = false) {
  detail::require_pairing(f);
  const std::size_t n = b.rows();
  MatrixFunction out{RealMatrix(n, n), 0.0};
  ComplexMatrix rhs(n, n);
  for (const auto& t : f.terms()) {
    for (std::size_t i = 0; i < n; ++i) rhs(i, i) = t.weight;
    const auto x = solve_complex(detail::shifted(b, t.pole), rhs);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) out.value(i, j) += 2.0 * x(i, j).real();
    }
  }
  if (verify_conjugates) {
    ComplexMatrix sum(n, n);
    for (const auto& t : f.all_terms()) {
      for (std::size_t i = 0; i < n; ++i) rhs(i, i) = t.weight;
      const auto x = solve_complex(detail::shifted(b, t.pole), rhs);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) sum(i, j) += x(i, j);
      }
    }
    for (const auto& v : sum.data()) out.max_imag = std::max(out.max_imag, std::abs(v.imag()));
  }
  return out;
}

/// E(B) applied to a vector without forming E(B).
inline std::vector<double> mlf_action(const RealMatrix& b, const PartialFractionForm& f,
                                      const std::vector<double>& rhs) {
  detail::require_pairing(f);
  if (rhs.size() != b.rows()) {
    throw Error(Errc::DomainError, "mlf_action: right-hand side has wrong length");
  }
  std::vector<double> out(rhs.size(), 0.0);
  std::vector<cdouble> scaled(rhs.size());
  for (const auto& t : f.terms()) {
    for (std::size_t i = 0; i < rhs.size(); ++i) scaled[i] = t.weight * rhs[i];
    const auto v = solve_complex(detail::shifted(b, t.pole), scaled);
    for (std::size_t i = 0; i < rhs.size(); ++i) out[i] += 2.0 * v[i].real();
  }
  return out;
}

namespace detail {

// poly(-B) by Horner.
inline RealMatrix poly_of_negated(const RealPoly& p, const RealMatrix& b) {
  const std::size_t n = b.rows();
  RealMatrix neg(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) neg(i, j) = -b(i, j);
  }
  RealMatrix acc = RealMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) acc(i, i) = p.leading();
  for (int k = p.degree() - 1; k >= 0; --k) {
    acc = acc * neg;
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += p[k];
  }
  return acc;
}

}  // namespace detail

/// Same action computed as (c q(-B))^{-1} N(-B) rhs, without poles.
inline std::vector<double> mlf_action_rational(const RealMatrix& b, const RationalApproximant& r,
                                               const std::vector<double>& rhs) {
  if (!b.square() || rhs.size() != b.rows()) {
    throw Error(Errc::DomainError, "mlf_action_rational: shape mismatch");
  }
  RealMatrix den = detail::poly_of_negated(r.q(), b);
  for (std::size_t i = 0; i < den.rows(); ++i) {
    for (std::size_t j = 0; j < den.cols(); ++j) den(i, j) *= r.scaling_constant();
  }
  const auto num = detail::poly_of_negated(r.reduced_numerator(), b) * rhs;
  return solve_real(den, num).x;
}

}  // namespace mlpade
