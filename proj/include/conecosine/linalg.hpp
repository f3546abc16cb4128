#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>

#include "conecosine/errors.hpp"

namespace conecosine {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXd;
using CMatrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXd;

inline double max_abs(const Matrix& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

inline double max_abs(const CMatrix& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

// Factor r = t't with t upper triangular and positive diagonal, writing into
// a preallocated t. Returns false when a pivot is non-positive (r is not
// positive definite). No allocation; safe to call in sampling loops.
inline bool upper_cholesky_inplace(const Matrix& r, Matrix& t) {
  const auto m = r.rows();
  t.setZero(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    double d = r(i, i);
    for (Eigen::Index k = 0; k < i; ++k) d -= t(k, i) * t(k, i);
    if (!(d > 0.0)) return false;
    const double tii = std::sqrt(d);
    t(i, i) = tii;
    for (Eigen::Index j = i + 1; j < m; ++j) {
      double s = r(i, j);
      for (Eigen::Index k = 0; k < i; ++k) s -= t(k, i) * t(k, j);
      t(i, j) = s / tii;
    }
  }
  return true;
}

inline Matrix upper_cholesky(const Matrix& r) {
  Matrix t;
  if (!upper_cholesky_inplace(r, t))
    throw DomainError("matrix is not positive definite");
  return t;
}

// Conjugation by the anti-diagonal permutation: (i,j) -> (m-1-j, m-1-i).
inline Matrix anti_transpose(const Matrix& r) {
  const auto m = r.rows();
  Matrix out(m, m);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j) out(i, j) = r(m - 1 - j, m - 1 - i);
  return out;
}

// Symmetric positive square root via eigendecomposition. Eigenvalues below
// `floor` indicate a numerically rank-deficient input.
inline Matrix symmetric_sqrt(const Matrix& r, double floor = 1e-30) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(r);
  if (es.info() != Eigen::Success)
    throw DomainError("eigendecomposition failed");
  const Vector& ev = es.eigenvalues();
  if (ev.minCoeff() < floor) throw RankError("matrix numerically singular");
  return es.eigenvectors() * ev.cwiseSqrt().asDiagonal() *
         es.eigenvectors().transpose();
}

inline Matrix symmetric_inv_sqrt(const Matrix& r, double floor = 1e-30) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(r);
  if (es.info() != Eigen::Success)
    throw DomainError("eigendecomposition failed");
  const Vector& ev = es.eigenvalues();
  if (ev.minCoeff() < floor) throw RankError("matrix numerically singular");
  return es.eigenvectors() * ev.cwiseSqrt().cwiseInverse().asDiagonal() *
         es.eigenvectors().transpose();
}

inline bool nearly_symmetric(const Matrix& r, double rel_tol = 1e-10) {
  const double scale = std::max(1e-300, max_abs(r));
  return max_abs(Matrix(r - r.transpose())) <= rel_tol * scale;
}

// exp(lambda * log(base)) for strictly positive base; the real logarithm
// keeps complex powers free of branch ambiguity.
inline Complex positive_real_power(double base, Complex lambda) {
  return std::exp(lambda * std::log(base));
}

// i^p for integer p, exact.
inline Complex imaginary_unit_power(long long p) {
  switch (((p % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

}  // namespace conecosine
