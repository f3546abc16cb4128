#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <variant>

#include "conecosine/cone.hpp"
#include "conecosine/gamma.hpp"
#include "conecosine/hpoly.hpp"
#include "conecosine/mc.hpp"
#include "conecosine/stiefel.hpp"

namespace conecosine {

// Angular factor of the transforms: either f = 1 or an H-polynomial
// restricted to the frame manifold.
class IntegrandSpec {
 public:
  static IntegrandSpec one() { return IntegrandSpec(std::monostate{}); }
  static IntegrandSpec h_polynomial(HPolynomial p) {
    return IntegrandSpec(std::move(p));
  }

  bool is_one() const { return std::holds_alternative<std::monostate>(f_); }
  const HPolynomial& poly() const { return std::get<HPolynomial>(f_); }

 private:
  explicit IntegrandSpec(std::variant<std::monostate, HPolynomial> f)
      : f_(std::move(f)) {}
  std::variant<std::monostate, HPolynomial> f_;
};

// Closed form of the rotation-averaged kernel,
//   int (u'v v'u)^lambda dv
//     = 2^m pi^(nm/2) / Gamma_m(m/2) * Gamma_Omega(lambda + m_0) /
//       Gamma_Omega(lambda + n_0),
// absolutely convergent exactly for Re lambda_j > j - m - 1.
inline Complex avg_closed_form(int n, int m, const ConeExponent& lambda) {
  if (!(n > m && m >= 1)) throw DimensionError("avg needs n > m >= 1");
  if (lambda.dim() != m) throw DimensionError("exponent length must equal m");
  for (int j = 1; j <= m; ++j)
    if (!(lambda[j - 1].real() > static_cast<double>(j - m - 1)))
      throw DomainError("average diverges: Re lambda_" + std::to_string(j) +
                        " <= " + std::to_string(j - m - 1));
  const double prefactor = std::pow(2.0, m) * std::pow(M_PI, n * m / 2.0) /
                           siegel_gamma(m, m / 2.0).real();
  const Complex log_ratio =
      log_gamma_omega(lambda.shifted(static_cast<double>(m))) -
      log_gamma_omega(lambda.shifted(static_cast<double>(n)));
  return prefactor * std::exp(log_ratio);
}

// Mean projection volume over the normalized Haar measure,
//   Gamma_m(n/2) Gamma_m((m+1)/2) / (Gamma_m(m/2) Gamma_m((n+1)/2)).
inline double avg_projection_volume(int n, int m) {
  if (!(n > m && m >= 1))
    throw DimensionError("avg_projection_volume needs n > m >= 1");
  return siegel_gamma(m, n / 2.0).real() *
         siegel_gamma(m, (m + 1) / 2.0).real() /
         (siegel_gamma(m, m / 2.0).real() *
          siegel_gamma(m, (n + 1) / 2.0).real());
}

namespace detail {

inline void require_existence_domain(const ConeExponent& lambda, int n,
                                     int m) {
  for (int j = 1; j <= m; ++j)
    if (!(lambda[j - 1].real() > static_cast<double>(j - m - 1)))
      throw DomainError(
          "transform does not exist: Re lambda_" + std::to_string(j) +
          " <= " + std::to_string(j - m - 1));
  (void)n;
}

}  // namespace detail

// Monte Carlo estimate of the transform evaluated at a general full-rank
// n x m matrix y:
//   sigma_{n,m} * mean over Haar frames v of f(v) (y'v v'y)^lambda.
// Samples with a numerically singular Gram matrix are rejected and counted
// against the rejection budget.
inline McEstimate cosine_mc_extended(const IntegrandSpec& f,
                                     const ConeExponent& lambda,
                                     const Matrix& y, const McConfig& config) {
  const int n = static_cast<int>(y.rows());
  const int m = static_cast<int>(y.cols());
  if (!(n > m && m >= 1)) throw DimensionError("transform needs n > m >= 1");
  if (lambda.dim() != m) throw DimensionError("exponent length must equal m");
  if (!f.is_one() && (f.poly().rows() != n || f.poly().cols() != m))
    throw DimensionError("integrand dimensions do not match the frame");
  detail::require_existence_domain(lambda, n, m);

  const bool with_poly = !f.is_one();
  const CMatrix a = with_poly ? f.poly().isotropic_matrix() : CMatrix();
  const int k = with_poly ? f.poly().degree() : 0;

  auto factory = [&, y]() {
    return [n, m, y, lambda, with_poly, a, k, v = Matrix(n, m),
            b = Matrix(m, m), gram = Matrix(m, m),
            t = Matrix(m, m)](PhiloxEngine& eng) mutable
           -> std::optional<Complex> {
      if (!sample_haar_into(v, eng)) return std::nullopt;
      b.noalias() = v.transpose() * y;
      gram.noalias() = b.transpose() * b;
      if (!upper_cholesky_inplace(gram, t)) return std::nullopt;
      const double floor = 1e-30 * std::max(1.0, max_abs(gram));
      for (int j = 0; j < m; ++j)
        if (t(j, j) * t(j, j) < floor) return std::nullopt;
      Complex value = detail::triangular_character_unchecked(t, lambda);
      if (with_poly) value *= detail::det_power(a, k, v);
      return value;
    };
  };

  return run_mc(config, factory).scaled(stiefel_mass(n, m));
}

inline McEstimate cosine_mc(const IntegrandSpec& f, const ConeExponent& lambda,
                            const StiefelFrame& u, const McConfig& config) {
  return cosine_mc_extended(f, lambda, u.matrix(), config);
}

// Funk-Hecke multiplier
//   mu_k(lambda) = Gamma_Omega(lambda + m_0) Gamma_Omega(k_0 - lambda_*)
//                / (Gamma_Omega(-lambda_*) Gamma_Omega(lambda + k_0 + n_0)).
// Denominator poles yield an exact zero; numerator poles are an error.
inline Complex multiplier(int n, int m, int k, const ConeExponent& lambda) {
  if (!(n > m && m >= 1)) throw DimensionError("multiplier needs n > m >= 1");
  if (lambda.dim() != m) throw DimensionError("exponent length must equal m");
  if (k < 0) throw DomainError("degree must be non-negative");

  const ConeExponent reversed = lambda.reversed();
  Complex log_numerator;
  try {
    log_numerator = log_gamma_omega(lambda.shifted(static_cast<double>(m)));
  } catch (const PoleError& e) {
    throw PoleError("multiplier numerator Gamma_Omega(lambda + m0): " +
                        std::string(e.what()),
                    e.index());
  }
  try {
    log_numerator +=
        log_gamma_omega((-reversed).shifted(static_cast<double>(k)));
  } catch (const PoleError& e) {
    throw PoleError("multiplier numerator Gamma_Omega(k0 - lambda_*): " +
                        std::string(e.what()),
                    e.index());
  }
  const Complex rec_star = reciprocal_gamma_omega(-reversed);
  const Complex rec_shift =
      reciprocal_gamma_omega(lambda.shifted(static_cast<double>(k + n)));
  if (rec_star == Complex(0.0, 0.0) || rec_shift == Complex(0.0, 0.0))
    return Complex(0.0, 0.0);
  return std::exp(log_numerator - log_gamma_omega(-reversed) -
                  log_gamma_omega(lambda.shifted(static_cast<double>(k + n))));
}

// The constant c = pi^(m(n-m)/2) i^(km) sigma_{m,m} multiplying the
// Funk-Hecke eigenvalue.
inline Complex eigen_constant(int n, int m, int k) {
  if (!(n > m && m >= 1))
    throw DimensionError("eigen_constant needs n > m >= 1");
  return std::pow(M_PI, m * (n - m) / 2.0) *
         imaginary_unit_power(static_cast<long long>(k) * m) *
         stiefel_mass(m, m);
}

struct EigenResidual {
  McEstimate mc;
  Complex predicted{0.0, 0.0};
  double z_score = 0.0;
};

// Compares a Monte Carlo run of the transform on an H-polynomial against
// the predicted eigenvalue relation value c mu_k(lambda) P_k(u).
inline EigenResidual eigen_residual(const HPolynomial& p,
                                    const ConeExponent& lambda,
                                    const StiefelFrame& u,
                                    const McConfig& config) {
  const int n = p.rows();
  const int m = p.cols();
  if (u.rows() != n || u.cols() != m)
    throw DimensionError("frame dimensions do not match the polynomial");
  const Complex pu = hpoly_eval(p, u.matrix());
  if (std::abs(pu) < 1e-12)
    throw DomainError("polynomial vanishes at the evaluation frame");

  EigenResidual out;
  out.mc = cosine_mc(IntegrandSpec::h_polynomial(p), lambda, u, config);
  out.predicted =
      eigen_constant(n, m, p.degree()) * multiplier(n, m, p.degree(), lambda) *
      pu;
  const double diff = std::abs(out.mc.value - out.predicted);
  out.z_score = out.mc.std_error > 0.0
                    ? diff / out.mc.std_error
                    : (diff == 0.0 ? 0.0
                                   : std::numeric_limits<double>::infinity());
  return out;
}

}  // namespace conecosine
