#pragma once

#include <cmath>
#include <span>
#include <utility>
#include <vector>

#include "conecosine/linalg.hpp"

namespace conecosine {

namespace detail {

// det(a'x)^k with the plain (unconjugated) transpose; k is a small integer
// power, evaluated by repeated multiplication.
inline Complex det_power(const CMatrix& a, int k, const Matrix& x) {
  const Complex det = (a.transpose() * x).determinant();
  Complex out = 1.0;
  for (int i = 0; i < k; ++i) out *= det;
  return out;
}

inline Complex laplacian_second_difference(const CMatrix& a, int k,
                                           const Matrix& x, double h) {
  Matrix probe = x;
  const Complex center = det_power(a, k, x);
  Complex acc = 0.0;
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
      probe(i, j) = x(i, j) + h;
      const Complex plus = det_power(a, k, probe);
      probe(i, j) = x(i, j) - h;
      const Complex minus = det_power(a, k, probe);
      probe(i, j) = x(i, j);
      acc += plus - 2.0 * center + minus;
    }
  return acc / (h * h);
}

}  // namespace detail

// Complex isotropic n x m matrix built from 2m distinct standard basis
// vectors: column j is (e_{p_{2j}} + i e_{p_{2j+1}}) / sqrt(2). Satisfies
// a'a = 0 up to exact floating-point cancellation.
inline CMatrix make_isotropic(int n, int m, std::span<const int> pairing) {
  if (!(m >= 1 && 2 * m <= n))
    throw DimensionError("isotropic matrices of full degree need 2m <= n");
  if (static_cast<int>(pairing.size()) != 2 * m)
    throw DimensionError("pairing must list 2m indices");
  std::vector<bool> used(static_cast<size_t>(n), false);
  for (int p : pairing) {
    if (p < 0 || p >= n) throw DimensionError("pairing index out of range");
    if (used[static_cast<size_t>(p)])
      throw DimensionError("pairing indices must be distinct");
    used[static_cast<size_t>(p)] = true;
  }
  CMatrix a = CMatrix::Zero(n, m);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int j = 0; j < m; ++j) {
    a(pairing[static_cast<size_t>(2 * j)], j) = Complex(inv_sqrt2, 0.0);
    a(pairing[static_cast<size_t>(2 * j + 1)], j) = Complex(0.0, inv_sqrt2);
  }
  return a;
}

// P_k(x) = det(a'x)^k with isotropic a: O(m) right-invariant up to the
// determinant character, harmonic on R^(nm), and determinantally
// homogeneous of degree k. Degree-k polynomials of this form exist for
// every k once 2m <= n; for m = 1 only even degrees occur, which the
// constructor enforces.
class HPolynomial {
 public:
  HPolynomial(CMatrix a, int k) : a_(std::move(a)), k_(k) {
    if (k_ < 0) throw DomainError("degree must be non-negative");
    const int n = static_cast<int>(a_.rows());
    const int m = static_cast<int>(a_.cols());
    if (!(m >= 1 && 2 * m <= n))
      throw DimensionError("H-polynomials of every degree need 2m <= n");
    if (m == 1 && k_ % 2 != 0)
      throw DomainError("m = 1 admits only even degrees");
    const double scale = max_abs(a_);
    if (max_abs(CMatrix(a_.transpose() * a_)) > 1e-12 * scale * scale)
      throw DomainError("matrix is not isotropic (a'a != 0)");
  }

  static HPolynomial from_pairing(int n, int m, int k,
                                  std::span<const int> pairing) {
    return HPolynomial(make_isotropic(n, m, pairing), k);
  }

  int degree() const { return k_; }
  int rows() const { return static_cast<int>(a_.rows()); }
  int cols() const { return static_cast<int>(a_.cols()); }
  const CMatrix& isotropic_matrix() const { return a_; }

 private:
  CMatrix a_;
  int k_;
};

inline Complex hpoly_eval(const HPolynomial& p, const Matrix& x) {
  if (x.rows() != p.rows() || x.cols() != p.cols())
    throw DimensionError("evaluation point has wrong dimensions");
  return detail::det_power(p.isotropic_matrix(), p.degree(), x);
}

// Central second-difference Laplacian over all nm coordinates. For a true
// H-polynomial the exact Laplacian vanishes, leaving only the O(h^2)
// truncation term; used as a harmonicity certificate.
inline Complex numeric_laplacian(const HPolynomial& p, const Matrix& x,
                                 double h) {
  if (!(h > 0.0)) throw DomainError("step must be positive");
  if (x.rows() != p.rows() || x.cols() != p.cols())
    throw DimensionError("evaluation point has wrong dimensions");
  return detail::laplacian_second_difference(p.isotropic_matrix(), p.degree(),
                                             x, h);
}

}  // namespace conecosine
