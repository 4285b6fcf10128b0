#pragma once

// Small dense LU with partial pivoting. Every system in this library has at
// most a handful of unknowns, so nothing here is blocked or vectorized.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "mlpade/errors.hpp"

namespace mlpade {

template <class T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, T fill = T{0})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
    return m;
  }

  static DenseMatrix from_rows(const std::vector<std::vector<T>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows.front().size() : 0;
    DenseMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) {
        throw Error(Errc::DomainError, "matrix rows have unequal lengths");
      }
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<T>& data() const { return data_; }

  std::vector<T> column(std::size_t j) const {
    std::vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  double norm_inf() const {
    double best = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < cols_; ++j) s += std::abs((*this)(i, j));
      best = std::max(best, s);
    }
    return best;
  }

  bool all_finite() const {
    return std::all_of(data_.begin(), data_.end(), [](const T& v) {
      return std::isfinite(std::real(v)) && std::isfinite(std::imag(v));
    });
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RealMatrix = DenseMatrix<double>;
using ComplexMatrix = DenseMatrix<std::complex<double>>;

template <class T>
std::vector<T> operator*(const DenseMatrix<T>& a, const std::vector<T>& x) {
  std::vector<T> y(a.rows(), T{0});
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
  }
  return y;
}

template <class T>
DenseMatrix<T> operator*(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
  DenseMatrix<T> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T aik = a(i, k);
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

template <class T>
double norm_inf(const std::vector<T>& v) {
  double m = 0.0;
  for (const auto& x : v) m = std::max(m, std::abs(x));
  return m;
}

/// PA = LU, L unit lower, both packed into one matrix.
template <class T>
class LuFactor {
 public:
  explicit LuFactor(DenseMatrix<T> a) : lu_(std::move(a)), perm_(lu_.rows()) {
    if (!lu_.square()) {
      throw Error(Errc::DomainError, "LU: matrix is not square");
    }
    if (!lu_.all_finite()) {
      throw Error(Errc::DomainError, "LU: matrix has non-finite entries");
    }
    const std::size_t n = lu_.rows();
    anorm_ = lu_.norm_inf();
    const double floor = 1e-14 * anorm_;
    for (std::size_t i = 0; i < n; ++i) perm_[i] = i;

    for (std::size_t k = 0; k < n; ++k) {
      std::size_t piv = k;
      double best = std::abs(lu_(k, k));
      for (std::size_t i = k + 1; i < n; ++i) {
        if (std::abs(lu_(i, k)) > best) {
          best = std::abs(lu_(i, k));
          piv = i;
        }
      }
      if (best < floor || best == 0.0) {
        throw Error(Errc::Singular, "LU: pivot below 1e-14 * ||A||_inf", best);
      }
      if (piv != k) {
        for (std::size_t j = 0; j < n; ++j) std::swap(lu_(k, j), lu_(piv, j));
        std::swap(perm_[k], perm_[piv]);
      }
      for (std::size_t i = k + 1; i < n; ++i) {
        const T f = lu_(i, k) / lu_(k, k);
        lu_(i, k) = f;
        for (std::size_t j = k + 1; j < n; ++j) lu_(i, j) -= f * lu_(k, j);
      }
    }
  }

  std::size_t size() const { return lu_.rows(); }

  std::vector<T> solve(const std::vector<T>& b) const {
    const std::size_t n = size();
    if (b.size() != n) {
      throw Error(Errc::DomainError, "LU: right-hand side has wrong length");
    }
    std::vector<T> x(n);
    for (std::size_t i = 0; i < n; ++i) {
      T s = b[perm_[i]];
      for (std::size_t j = 0; j < i; ++j) s -= lu_(i, j) * x[j];
      x[i] = s;
    }
    for (std::size_t i = n; i-- > 0;) {
      T s = x[i];
      for (std::size_t j = i + 1; j < n; ++j) s -= lu_(i, j) * x[j];
      x[i] = s / lu_(i, i);
    }
    return x;
  }

  /// 1 / (||A||_inf ||A^-1||_inf). The inverse norm is exact: n solves are
  /// nothing at these sizes.
  double rcond() const {
    const std::size_t n = size();
    std::vector<double> row_sums(n, 0.0);
    std::vector<T> e(n, T{0});
    for (std::size_t j = 0; j < n; ++j) {
      e[j] = T{1};
      const auto col = solve(e);
      e[j] = T{0};
      for (std::size_t i = 0; i < n; ++i) row_sums[i] += std::abs(col[i]);
    }
    const double inv_norm = *std::max_element(row_sums.begin(), row_sums.end());
    return 1.0 / (anorm_ * inv_norm);
  }

 private:
  DenseMatrix<T> lu_;
  std::vector<std::size_t> perm_;
  double anorm_ = 0.0;
};

namespace detail {

template <class T>
std::vector<T> refine_once(const DenseMatrix<T>& a, const LuFactor<T>& lu, const std::vector<T>& b,
                           std::vector<T> x) {
  const auto ax = a * x;
  std::vector<T> r(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = b[i] - ax[i];
  const auto dx = lu.solve(r);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] += dx[i];
  return x;
}

}  // namespace detail

struct RealSolution {
  std::vector<double> x;
  double rcond = 0.0;
};

/// Solves A x = b with one step of iterative refinement.
inline RealSolution solve_real(const RealMatrix& a, const std::vector<double>& b) {
  const LuFactor<double> lu(a);
  auto x = detail::refine_once(a, lu, b, lu.solve(b));
  return {std::move(x), lu.rcond()};
}

/// Solves A X = B column by column.
inline ComplexMatrix solve_complex(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (b.rows() != a.rows()) {
    throw Error(Errc::DomainError, "solve_complex: right-hand side row count mismatch");
  }
  const LuFactor<std::complex<double>> lu(a);
  ComplexMatrix x(b.rows(), b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j) {
    const auto col = detail::refine_once(a, lu, b.column(j), lu.solve(b.column(j)));
    for (std::size_t i = 0; i < b.rows(); ++i) x(i, j) = col[i];
  }
  return x;
}

inline std::vector<std::complex<double>> solve_complex(const ComplexMatrix& a,
                                                       const std::vector<std::complex<double>>& b) {
  const LuFactor<std::complex<double>> lu(a);
  return detail::refine_once(a, lu, b, lu.solve(b));
}

}  // namespace mlpade
