#pragma once

#include <cmath>
#include <utility>

#include "conecosine/cone.hpp"
#include "conecosine/gamma.hpp"
#include "conecosine/linalg.hpp"
#include "conecosine/rng.hpp"

namespace conecosine {

// Orthonormal m-frame in R^n: an n x m matrix v with v'v = I_m.
class StiefelFrame {
 public:
  explicit StiefelFrame(Matrix v) : v_(std::move(v)) {
    if (v_.rows() < v_.cols() || v_.cols() < 1)
      throw DimensionError("frame needs n >= m >= 1");
    Matrix gram = v_.transpose() * v_;
    gram.diagonal().array() -= 1.0;
    if (max_abs(gram) > 1e-10)
      throw DomainError("columns are not orthonormal");
  }

  // The coordinate frame [I_m; 0].
  static StiefelFrame coordinate(int n, int m) {
    Matrix v = Matrix::Zero(n, m);
    v.topLeftCorner(m, m).setIdentity();
    return StiefelFrame(std::move(v));
  }

  int rows() const { return static_cast<int>(v_.rows()); }
  int cols() const { return static_cast<int>(v_.cols()); }
  const Matrix& matrix() const { return v_; }

 private:
  Matrix v_;
};

// Total Haar mass sigma_{n,m} = 2^m pi^(nm/2) / Gamma_m(n/2).
inline double stiefel_mass(int n, int m) {
  if (!(n >= m && m >= 1)) throw DimensionError("stiefel_mass needs n >= m >= 1");
  const Complex gm = siegel_gamma(m, n / 2.0);
  return std::pow(2.0, m) * std::pow(M_PI, n * m / 2.0) / gm.real();
}

namespace detail {

// In-place Gram-Schmidt with a second sweep, diagonal of the implicit
// triangular factor kept positive. That sign convention is what makes the
// orthonormalization of a Gaussian matrix exactly Haar distributed.
inline bool orthonormalize_columns(Matrix& a) {
  const Eigen::Index m = a.cols();
  for (Eigen::Index j = 0; j < m; ++j) {
    const double original = a.col(j).norm();
    for (int sweep = 0; sweep < 2; ++sweep)
      for (Eigen::Index k = 0; k < j; ++k)
        a.col(j) -= a.col(k).dot(a.col(j)) * a.col(k);
    const double residual = a.col(j).norm();
    if (residual <= 1e-12 * std::max(original, 1e-300)) return false;
    a.col(j) /= residual;
  }
  return true;
}

}  // namespace detail

// Haar sample by orthonormalizing an n x m standard Gaussian matrix. A
// rank-deficient draw has probability zero; one resample is attempted
// before giving up.
inline StiefelFrame sample_haar(int n, int m, PhiloxEngine& eng) {
  if (!(n >= m && m >= 1)) throw DimensionError("sample_haar needs n >= m >= 1");
  Matrix x(n, m);
  for (int attempt = 0; attempt < 2; ++attempt) {
    fill_standard_normal(x, eng);
    if (detail::orthonormalize_columns(x)) return StiefelFrame(std::move(x));
  }
  throw RankError("Gaussian draw was rank deficient twice");
}

// Hot-path variant writing into caller-owned storage; returns false when
// the draw was rank deficient.
inline bool sample_haar_into(Matrix& v, PhiloxEngine& eng) {
  fill_standard_normal(v, eng);
  return detail::orthonormalize_columns(v);
}

// Polar decomposition x = v r^(1/2) with r = x'x positive definite and the
// symmetric positive square root.
inline std::pair<StiefelFrame, PosDefMatrix> polar_decompose(const Matrix& x) {
  if (x.rows() < x.cols() || x.cols() < 1)
    throw DimensionError("polar_decompose needs n >= m >= 1");
  Matrix gram = x.transpose() * x;
  gram = ((gram + gram.transpose()) / 2.0).eval();
  Eigen::SelfAdjointEigenSolver<Matrix> es(gram);
  const double largest = std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
  const double smallest =
      std::sqrt(std::max(0.0, es.eigenvalues().minCoeff()));
  if (!(smallest > 1e-10 * largest))
    throw RankError("input does not have full column rank");
  PosDefMatrix r(gram);
  Matrix v = x * symmetric_inv_sqrt(gram);
  return {StiefelFrame(std::move(v)), std::move(r)};
}

// Triangular decomposition x = u t with t upper triangular, t't = x'x.
inline std::pair<StiefelFrame, Matrix> triangular_decompose(const Matrix& x) {
  if (x.rows() < x.cols() || x.cols() < 1)
    throw DimensionError("triangular_decompose needs n >= m >= 1");
  Matrix gram = x.transpose() * x;
  gram = ((gram + gram.transpose()) / 2.0).eval();
  Eigen::SelfAdjointEigenSolver<Matrix> es(gram);
  if (!(es.eigenvalues().minCoeff() >
        1e-20 * std::max(es.eigenvalues().maxCoeff(), 1e-300)))
    throw RankError("input does not have full column rank");
  Matrix t = upper_cholesky(gram);
  Matrix u = t.triangularView<Eigen::Upper>()
                 .transpose()
                 .solve(x.transpose())
                 .transpose();
  return {StiefelFrame(std::move(u)), std::move(t)};
}

// Any frame spanning the orthogonal complement of span(v). Only the span
// and orthonormality are contractual.
inline StiefelFrame orthocomplement(const StiefelFrame& v) {
  const int n = v.rows();
  const int m = v.cols();
  if (!(n > m)) throw DimensionError("orthocomplement needs n > m");
  Eigen::HouseholderQR<Matrix> qr(v.matrix());
  Matrix q = qr.householderQ();
  return StiefelFrame(q.rightCols(n - m));
}

// |det(v'u)|^lambda; at lambda = 1 this is the volume of the projection of
// the parallelepiped spanned by u onto span(v).
inline Complex projection_volume(const StiefelFrame& u, const StiefelFrame& v,
                                 Complex lambda) {
  if (u.rows() != v.rows() || u.cols() != v.cols())
    throw DimensionError("frames must share (n, m)");
  const double d = std::abs((v.matrix().transpose() * u.matrix()).determinant());
  if (d == 0.0) {
    if (lambda.real() > 0.0) return 0.0;
    throw DomainError("zero projection with Re lambda <= 0");
  }
  return std::exp(lambda * std::log(d));
}

}  // namespace conecosine
