#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "conecosine/exponent.hpp"
#include "conecosine/linalg.hpp"

namespace conecosine {

// Positive definite symmetric m x m matrix r together with its cached
// triangular factorization r = t't, t upper triangular with positive
// diagonal. The factor is the transpose of the usual lower Cholesky factor;
// it is cached because the power-function character reads directly off its
// diagonal.
class PosDefMatrix {
 public:
  explicit PosDefMatrix(Matrix r) : entries_(std::move(r)) {
    if (entries_.rows() != entries_.cols() || entries_.rows() < 1)
      throw DimensionError("positive definite matrix must be square, m >= 1");
    if (!nearly_symmetric(entries_))
      throw DomainError("matrix is not symmetric");
    if (!upper_cholesky_inplace(entries_, factor_))
      throw DomainError("matrix is not positive definite");
  }

  int dim() const { return static_cast<int>(entries_.rows()); }
  const Matrix& entries() const { return entries_; }

  // Upper triangular t with r = t't and t_jj > 0.
  const Matrix& factor() const { return factor_; }

  PosDefMatrix inverse() const {
    Matrix inv = entries_.inverse();
    // Enforce exact symmetry lost to roundoff before refactoring.
    inv = ((inv + inv.transpose()) / 2.0).eval();
    return PosDefMatrix(std::move(inv));
  }

  double determinant() const {
    double d = 1.0;
    for (int j = 0; j < dim(); ++j) d *= factor_(j, j) * factor_(j, j);
    return d;
  }

 private:
  Matrix entries_;
  Matrix factor_;
};

// Upper triangular matrix with strictly positive diagonal, the argument of
// the multiplicative character pi_lambda.
class TriangularFactor {
 public:
  explicit TriangularFactor(Matrix t) : t_(std::move(t)) {
    if (t_.rows() != t_.cols() || t_.rows() < 1)
      throw DimensionError("triangular factor must be square, m >= 1");
    for (Eigen::Index i = 0; i < t_.rows(); ++i) {
      if (!(t_(i, i) > 0.0))
        throw DomainError("triangular factor needs a positive diagonal");
      for (Eigen::Index j = 0; j < i; ++j)
        if (t_(i, j) != 0.0)
          throw DomainError("matrix is not upper triangular");
    }
  }

  int dim() const { return static_cast<int>(t_.rows()); }
  const Matrix& matrix() const { return t_; }

 private:
  Matrix t_;
};

namespace detail {

// pi_lambda on a raw factor; no validation, used by the sampling loops.
inline Complex triangular_character_unchecked(const Matrix& t,
                                              const ConeExponent& lambda) {
  Complex log_sum = 0.0;
  for (int j = 0; j < lambda.dim(); ++j)
    log_sum += lambda[j] * std::log(t(j, j));
  return std::exp(log_sum);
}

inline void require_well_conditioned(const Matrix& t, double r_scale) {
  const double floor = 1e-30 * std::max(r_scale, 1e-300);
  for (Eigen::Index j = 0; j < t.rows(); ++j)
    if (t(j, j) * t(j, j) < floor)
      throw ConditioningError(
          "minor ratio below 1e-30 of the matrix scale; power function "
          "would lose all significant digits");
}

}  // namespace detail

// Principal minors Delta_1(r), ..., Delta_m(r), evaluated as running
// products of the squared factor diagonal.
inline std::vector<double> principal_minors(const PosDefMatrix& r) {
  std::vector<double> minors(static_cast<size_t>(r.dim()));
  double acc = 1.0;
  for (int i = 0; i < r.dim(); ++i) {
    const double tii = r.factor()(i, i);
    acc *= tii * tii;
    minors[static_cast<size_t>(i)] = acc;
  }
  return minors;
}

// Multiplicative character pi_lambda(t) = prod_j t_jj^lambda_j.
inline Complex triangular_character(const TriangularFactor& t,
                                    const ConeExponent& lambda) {
  if (t.dim() != lambda.dim())
    throw DimensionError("triangular factor and exponent dimensions differ");
  return detail::triangular_character_unchecked(t.matrix(), lambda);
}

// Composite power r^lambda = prod_i (Delta_i/Delta_{i-1})^(lambda_i/2),
// evaluated as pi_lambda of the cached factor. Every base is strictly
// positive so complex powers use the real logarithm.
inline Complex composite_power(const PosDefMatrix& r,
                               const ConeExponent& lambda) {
  if (r.dim() != lambda.dim())
    throw DimensionError("matrix and exponent dimensions differ");
  detail::require_well_conditioned(r.factor(), max_abs(r.entries()));
  return detail::triangular_character_unchecked(r.factor(), lambda);
}

// Same value through the other route: principal minors taken as determinants
// of the leading submatrices of r itself. Kept as an independently computed
// path; agreement with composite_power is part of the test suite.
inline Complex composite_power_from_minors(const PosDefMatrix& r,
                                           const ConeExponent& lambda) {
  if (r.dim() != lambda.dim())
    throw DimensionError("matrix and exponent dimensions differ");
  const double scale = std::max(max_abs(r.entries()), 1e-300);
  Complex log_sum = 0.0;
  double prev = 1.0;
  for (int i = 0; i < r.dim(); ++i) {
    const double minor = r.entries().topLeftCorner(i + 1, i + 1).determinant();
    if (!(minor > 0.0)) throw DomainError("matrix is not positive definite");
    const double ratio = minor / prev;
    if (ratio < 1e-30 * scale)
      throw ConditioningError(
          "minor ratio below 1e-30 of the matrix scale; power function "
          "would lose all significant digits");
    log_sum += (lambda[i] / 2.0) * std::log(ratio);
    prev = minor;
  }
  return std::exp(log_sum);
}

// r_* = omega r omega: reflection of the entries across the anti-diagonal.
inline PosDefMatrix star_involution(const PosDefMatrix& r) {
  return PosDefMatrix(anti_transpose(r.entries()));
}

// Density of the GL(m)-invariant measure d_*r = det(r)^(-(m+1)/2) dr.
inline double invariant_measure_density(const PosDefMatrix& r) {
  return std::pow(r.determinant(), -(r.dim() + 1) / 2.0);
}

}  // namespace conecosine
