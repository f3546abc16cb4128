#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "conecosine/cosine.hpp"

namespace conecosine {

// phi(x) = exp(-beta tr(x'x)) on n x m matrices. The test-function family
// is restricted to Gaussians; they make every paired integral closed-form.
struct GaussianTestFunction {
  double beta = 1.0;
};

// Closed form of the Gaussian zeta integral with f = 1:
//   int (x'x)^lambda exp(-beta tr(x'x)) dx
//     = beta^{-(nm + |lambda|)/2} 2^{-m} sigma_{n,m}
//       Gamma_Omega(lambda + n_0).
// Pole errors occur exactly on the polar set and the boundary hyperplanes
// of the absolute-convergence domain.
inline Complex zeta_gaussian_closed_form(int n, int m,
                                         const ConeExponent& lambda,
                                         double beta = 1.0) {
  if (!(n >= m && m >= 1)) throw DimensionError("zeta needs n >= m >= 1");
  if (lambda.dim() != m) throw DimensionError("exponent length must equal m");
  if (!(beta > 0.0)) throw DomainError("Gaussian scale must be positive");
  const Complex gamma_factor =
      gamma_omega(lambda.shifted(static_cast<double>(n)));
  const Complex scale = std::exp(
      -(static_cast<double>(n) * m + lambda.trace()) / 2.0 * std::log(beta));
  return scale * std::pow(2.0, -m) * stiefel_mass(n, m) * gamma_factor;
}

namespace detail {

inline void require_mc_safe(const ConeExponent& lambda, int n, int m,
                            double beta) {
  for (int j = 1; j <= m; ++j)
    if (!(lambda[j - 1].real() > (j - n - 1) / 2.0))
      throw DomainError("zeta estimator has infinite variance: Re lambda_" +
                        std::to_string(j) + " <= " +
                        std::to_string((j - n - 1) / 2.0));
  if (!(beta > 0.25))
    throw DomainError("Gaussian scale must exceed 1/4 for finite variance");
}

// Shared implementation of the plain and starred estimators; the starred
// kernel applies the power function to omega r omega instead of r.
inline McEstimate zeta_mc_impl(const IntegrandSpec& f,
                               const ConeExponent& lambda,
                               GaussianTestFunction phi, int n, int m,
                               const McConfig& config, bool star) {
  if (!(n >= m && m >= 1)) throw DimensionError("zeta needs n >= m >= 1");
  if (lambda.dim() != m) throw DimensionError("exponent length must equal m");
  if (!f.is_one() && (f.poly().rows() != n || f.poly().cols() != m))
    throw DimensionError("integrand dimensions do not match");
  require_mc_safe(lambda, n, m, phi.beta);

  const bool with_poly = !f.is_one();
  const CMatrix a = with_poly ? f.poly().isotropic_matrix() : CMatrix();
  const int k = with_poly ? f.poly().degree() : 0;
  const double beta = phi.beta;

  auto factory = [=]() {
    return [n, m, lambda, beta, star, with_poly, a, k, x = Matrix(n, m),
            gram = Matrix(m, m), starred = Matrix(m, m),
            t = Matrix(m, m)](PhiloxEngine& eng) mutable
           -> std::optional<Complex> {
      fill_standard_normal(x, eng);
      gram.noalias() = x.transpose() * x;
      const double tr = gram.trace();
      if (star) starred = anti_transpose(gram);
      if (!upper_cholesky_inplace(star ? starred : gram, t))
        return std::nullopt;
      const double floor = 1e-30 * std::max(1.0, max_abs(gram));
      for (int j = 0; j < m; ++j)
        if (t(j, j) * t(j, j) < floor) return std::nullopt;
      Complex value = triangular_character_unchecked(t, lambda);
      value *= std::exp((0.5 - beta) * tr);
      if (with_poly) {
        // v = x (x'x)^{-1/2}; the symmetric square root needs its own
        // factorization of the unstarred Gram matrix.
        Matrix vt = symmetric_inv_sqrt(gram, 1e-300);
        value *= det_power(a, k, Matrix(x * vt));
      }
      return value;
    };
  };

  const double gaussian_norm = std::pow(2.0 * M_PI, n * m / 2.0);
  return run_mc(config, factory).scaled(gaussian_norm);
}

}  // namespace detail

// Monte Carlo zeta integral int r^lambda f(v) phi(x) dx with r = x'x and
// v = x r^{-1/2}, by importance sampling from the standard Gaussian.
inline McEstimate zeta_mc(const IntegrandSpec& f, const ConeExponent& lambda,
                          GaussianTestFunction phi, int n, int m,
                          const McConfig& config) {
  return detail::zeta_mc_impl(f, lambda, phi, n, m, config, false);
}

// Starred variant with kernel (omega r omega)^lambda.
inline McEstimate zeta_star_mc(const IntegrandSpec& f,
                               const ConeExponent& lambda,
                               GaussianTestFunction phi, int n, int m,
                               const McConfig& config) {
  return detail::zeta_mc_impl(f, lambda, phi, n, m, config, true);
}

// Normalized zeta integral: the plain estimator divided by
// Gamma_Omega(lambda + n_0). For f = 1 and the unit Gaussian the result is
// the lambda-independent constant 2^{-m} sigma_{n,m}.
inline McEstimate normalized_zeta(const IntegrandSpec& f,
                                  const ConeExponent& lambda,
                                  GaussianTestFunction phi, int n, int m,
                                  const McConfig& config) {
  const Complex gamma_factor =
      gamma_omega(lambda.shifted(static_cast<double>(n)));
  return zeta_mc(f, lambda, phi, n, m, config).scaled(1.0 / gamma_factor);
}

struct HeckeCheck {
  McEstimate lhs;
  Complex rhs{0.0, 0.0};
  double z_score = 0.0;
};

// Verifies the Hecke identity
//   int P_k(x) exp(-pi tr(x'x)) exp(2 pi i tr(y'x)) dx
//     = i^(km) P_k(y) exp(-pi tr(y'y))
// by sampling from exp(-pi tr(x'x)), which is already a probability
// density, with the oscillatory factor as the weight.
inline HeckeCheck hecke_check(const HPolynomial& p, const Matrix& y,
                              const McConfig& config) {
  const int n = p.rows();
  const int m = p.cols();
  if (y.rows() != n || y.cols() != m)
    throw DimensionError("evaluation point has wrong dimensions");

  const CMatrix a = p.isotropic_matrix();
  const int k = p.degree();
  const double sigma = 1.0 / std::sqrt(2.0 * M_PI);

  auto factory = [=]() {
    return [n, m, a, k, y, sigma,
            x = Matrix(n, m)](PhiloxEngine& eng) mutable
           -> std::optional<Complex> {
      fill_standard_normal(x, eng);
      x *= sigma;
      const double phase = 2.0 * M_PI * (y.transpose() * x).trace();
      return detail::det_power(a, k, x) *
             Complex(std::cos(phase), std::sin(phase));
    };
  };

  HeckeCheck out;
  out.lhs = run_mc(config, factory);
  out.rhs = imaginary_unit_power(static_cast<long long>(k) * m) *
            detail::det_power(a, k, y) *
            std::exp(-M_PI * (y.transpose() * y).trace());
  const double diff = std::abs(out.lhs.value - out.rhs);
  out.z_score = out.lhs.std_error > 0.0
                    ? diff / out.lhs.std_error
                    : (diff == 0.0 ? 0.0
                                   : std::numeric_limits<double>::infinity());
  return out;
}

struct FunctionalEquationCheck {
  Complex lhs{0.0, 0.0};
  Complex rhs{0.0, 0.0};
  double rel_err = 0.0;
};

// Constant relating the Fourier transform of the normalized power kernel to
// the transform: c_lambda = 2^{-|lambda|} pi^{m^2/2} / sigma_{m,m}.
inline Complex funceq_c_lambda(int m, const ConeExponent& lambda) {
  if (lambda.dim() != m) throw DimensionError("exponent length must equal m");
  return std::exp(-lambda.trace() * std::log(2.0)) *
         std::pow(M_PI, m * m / 2.0) / stiefel_mass(m, m);
}

// Constant of the H-polynomial variant:
// d_lambda = 2^{-|lambda|} pi^{nm/2} i^{km}.
inline Complex funceq_d_lambda(int n, int m, int k,
                               const ConeExponent& lambda) {
  if (lambda.dim() != m) throw DimensionError("exponent length must equal m");
  return std::exp(-lambda.trace() * std::log(2.0)) *
         std::pow(M_PI, static_cast<double>(n) * m / 2.0) *
         imaginary_unit_power(static_cast<long long>(k) * m);
}

namespace detail {

inline void require_strip(const ConeExponent& lambda, int m) {
  for (int j = 1; j <= m; ++j) {
    const double re = lambda[j - 1].real();
    if (!(re > j - m - 1.0 && re < static_cast<double>(j - m)))
      throw DomainError("lambda_" + std::to_string(j) +
                        " outside the absolute-convergence strip (" +
                        std::to_string(j - m - 1) + ", " +
                        std::to_string(j - m) + ")");
  }
}

}  // namespace detail

// Functional equation relating the transform to the starred zeta integral,
// paired against the unit Gaussian and checked in closed form inside the
// strip j - m - 1 < Re lambda_j < j - m where both sides are ordinary
// absolutely convergent integrals.
//
// For f = 1 the left side assembles the pairing
//   c_lambda / Gamma_Omega(lambda + m_0) * (T^lambda 1, F phi)
// from the closed-form average and the Gaussian moment, and the right side
// is (2 pi)^{nm} times the normalized starred zeta at -lambda_* - n_0.
// For f = P_k both sides reduce to gamma products: the left through the
// eigenvalue relation, the right through the Fourier-transform constant
// d_lambda = 2^{-|lambda|} pi^{nm/2} i^{km}.
inline FunctionalEquationCheck functional_equation_check(
    int n, int m, const ConeExponent& lambda, const IntegrandSpec& f) {
  if (!(n > m && m >= 1)) throw DimensionError("needs n > m >= 1");
  if (lambda.dim() != m) throw DimensionError("exponent length must equal m");
  detail::require_strip(lambda, m);

  const Complex trace = lambda.trace();
  const double sigma_nm = stiefel_mass(n, m);
  const Complex c_lambda = funceq_c_lambda(m, lambda);
  const ConeExponent reversed = lambda.reversed();

  FunctionalEquationCheck out;
  if (f.is_one()) {
    // Gaussian moment of the transform side: int (y'y)^lambda  F phi(y) dy
    // with F phi(y) = pi^{nm/2} exp(-tr(y'y)/4).
    const Complex gaussian_moment =
        std::pow(M_PI, n * m / 2.0) *
        std::exp((static_cast<double>(n) * m + trace) / 2.0 *
                 std::log(4.0)) *
        std::pow(2.0, -m) * sigma_nm *
        gamma_omega(lambda.shifted(static_cast<double>(n)));
    out.lhs = c_lambda *
              reciprocal_gamma_omega(lambda.shifted(static_cast<double>(m))) *
              avg_closed_form(n, m, lambda) * gaussian_moment;
    // Z_*(phi, -lambda_* - n_0, 1) = 2^{-m} sigma_{n,m}
    // Gamma_Omega(-lambda_*), then normalized by the same gamma factor.
    const Complex zeta_star_value =
        std::pow(2.0, -m) * sigma_nm * gamma_omega(-reversed);
    out.rhs = std::pow(2.0 * M_PI, static_cast<double>(n) * m) *
              zeta_star_value * reciprocal_gamma_omega(-reversed);
  } else {
    const HPolynomial& p = f.poly();
    if (p.rows() != n || p.cols() != m)
      throw DimensionError("integrand dimensions do not match");
    const int k = p.degree();
    out.lhs = c_lambda *
              reciprocal_gamma_omega(lambda.shifted(static_cast<double>(m))) *
              eigen_constant(n, m, k) * multiplier(n, m, k, lambda);
    const Complex d_lambda = funceq_d_lambda(n, m, k, lambda);
    out.rhs = d_lambda *
              gamma_omega((-reversed).shifted(static_cast<double>(k))) *
              reciprocal_gamma_omega(-reversed) *
              reciprocal_gamma_omega(
                  lambda.shifted(static_cast<double>(k + n)));
  }
  const double denom = std::max(std::abs(out.lhs), std::abs(out.rhs));
  out.rel_err = denom > 0.0 ? std::abs(out.lhs - out.rhs) / denom : 0.0;
  return out;
}

}  // namespace conecosine
