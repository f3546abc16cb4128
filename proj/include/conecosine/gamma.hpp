#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "conecosine/exponent.hpp"
#include "conecosine/linalg.hpp"

namespace conecosine {

namespace detail {

// Lanczos g = 607/128 with 15 coefficients (Godfrey's set); about 15
// significant digits over the right half plane, which the reflection
// formula extends to the left.
inline constexpr double kLanczosG = 4.7421875;
inline constexpr double kLanczosCoeff[15] = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4,
    0.15808870322491248884e-3,  -0.21026444172410488319e-3,
    0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4,
    0.36899182659531622704e-5};

inline Complex log_gamma_right_half(Complex z) {
  // Valid for Re z >= 0.5.
  Complex sum = kLanczosCoeff[0];
  for (int k = 1; k < 15; ++k)
    sum += kLanczosCoeff[k] / (z - 1.0 + static_cast<double>(k));
  const Complex t = z + (kLanczosG - 0.5);
  return 0.5 * std::log(2.0 * M_PI) + (z - 0.5) * std::log(t) - t +
         std::log(sum);
}

}  // namespace detail

// An argument counts as a gamma pole when it is within 1e-9 of a
// non-positive integer; doubles cannot distinguish closer approaches.
inline constexpr double kPoleTolerance = 1e-9;

inline bool is_gamma_pole(Complex z) {
  if (std::abs(z.imag()) >= kPoleTolerance) return false;
  const double nearest = std::round(z.real());
  return nearest <= 0.0 && std::abs(z.real() - nearest) < kPoleTolerance;
}

// log Gamma(z) on C minus the poles. The branch is unspecified; every
// consumer exponentiates sums of these, for which any branch is exact.
inline Complex log_gamma(Complex z) {
  if (is_gamma_pole(z)) throw PoleError("log_gamma at a pole", 0);
  if (z.real() >= 0.5) return detail::log_gamma_right_half(z);
  // Reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z).
  return std::log(M_PI) - std::log(std::sin(M_PI * z)) -
         detail::log_gamma_right_half(1.0 - z);
}

inline Complex gamma_fn(Complex z) { return std::exp(log_gamma(z)); }

namespace detail {

// Gamma argument of the j-th factor (1-based) of the cone gamma.
inline Complex omega_argument(const ConeExponent& lambda, int j) {
  return (lambda[j - 1] - static_cast<double>(j) + 1.0) / 2.0;
}

}  // namespace detail

// log Gamma_Omega(lambda) = (m(m-1)/4) log pi + sum_j log Gamma((lambda_j - j
// + 1)/2). Throws PoleError carrying the offending 1-based index.
inline Complex log_gamma_omega(const ConeExponent& lambda) {
  const int m = lambda.dim();
  for (int j = 1; j <= m; ++j)
    if (is_gamma_pole(detail::omega_argument(lambda, j)))
      throw PoleError("Gamma_Omega pole at entry " + std::to_string(j), j);
  Complex sum = m * (m - 1) / 4.0 * std::log(M_PI);
  for (int j = 1; j <= m; ++j)
    sum += log_gamma(detail::omega_argument(lambda, j));
  return sum;
}

inline Complex gamma_omega(const ConeExponent& lambda) {
  return std::exp(log_gamma_omega(lambda));
}

// 1/Gamma_Omega(lambda), equal to exactly 0 on the polar set; never throws.
inline Complex reciprocal_gamma_omega(const ConeExponent& lambda) {
  for (int j = 1; j <= lambda.dim(); ++j)
    if (is_gamma_pole(detail::omega_argument(lambda, j))) return 0.0;
  return std::exp(-log_gamma_omega(lambda));
}

// Siegel gamma Gamma_m(lambda) = pi^(m(m-1)/4) prod_{j=0}^{m-1}
// Gamma(lambda - j/2). PoleError reports the offending factor j (0-based).
inline Complex siegel_gamma(int m, Complex lambda) {
  if (m < 1) throw DimensionError("siegel_gamma needs m >= 1");
  for (int j = 0; j < m; ++j)
    if (is_gamma_pole(lambda - j / 2.0))
      throw PoleError("Siegel gamma pole at factor " + std::to_string(j), j);
  Complex sum = m * (m - 1) / 4.0 * std::log(M_PI);
  for (int j = 0; j < m; ++j) sum += log_gamma(lambda - j / 2.0);
  return std::exp(sum);
}

struct DomainWitness {
  int index;         // 1-based entry of lambda
  std::string rule;  // which membership rule the entry violates/triggers
  bool operator==(const DomainWitness&) const = default;
};

// Membership report for one exponent vector at fixed (n, m):
//   in_abs_domain_zeta  - Re lambda_j > j - n - 1 for all j
//   on_polar_set        - some lambda_j = j - n - l with l odd >= 1
//   in_existence_domain - Re lambda_j > j - m - 1 for all j
//   injective           - no lambda_j + m - j lands in {0, 2, 4, ...}
//   frontier            - 2m > n and the injectivity condition fails; in
//                         that regime non-injectivity is not established,
//                         so the flag marks the report as inconclusive.
struct DomainReport {
  bool in_abs_domain_zeta = true;
  bool on_polar_set = false;
  bool in_existence_domain = true;
  bool injective = true;
  bool frontier = false;
  std::vector<DomainWitness> witnesses;
};

namespace detail {

inline bool near_nonnegative_even(Complex w) {
  if (std::abs(w.imag()) >= kPoleTolerance) return false;
  const double nearest = std::round(w.real() / 2.0) * 2.0;
  return nearest >= 0.0 && std::abs(w.real() - nearest) < kPoleTolerance;
}

inline bool near_positive_odd(double d) {
  const double nearest = std::round(d);
  if (std::abs(d - nearest) >= kPoleTolerance) return false;
  const long long l = static_cast<long long>(nearest);
  return l >= 1 && l % 2 == 1;
}

}  // namespace detail

inline DomainReport classify(const ConeExponent& lambda, int n, int m) {
  if (!(n > m && m >= 1)) throw DimensionError("classify needs n > m >= 1");
  if (lambda.dim() != m)
    throw DimensionError("exponent length must equal m");

  DomainReport report;
  for (int j = 1; j <= m; ++j) {
    const Complex lj = lambda[j - 1];
    const bool polar =
        std::abs(lj.imag()) < kPoleTolerance &&
        detail::near_positive_odd(static_cast<double>(j - n) - lj.real());
    // A polar point sits on or left of the convergence boundary; entries
    // within the pole tolerance of it are treated as the exact pole, so
    // they can never count as interior.
    if (polar || !(lj.real() > static_cast<double>(j - n - 1))) {
      report.in_abs_domain_zeta = false;
      if (!polar) report.witnesses.push_back({j, "abs_domain"});
    }
    if (polar) {
      report.on_polar_set = true;
      report.witnesses.push_back({j, "polar_set"});
    }
    if (!(lj.real() > static_cast<double>(j - m - 1))) {
      report.in_existence_domain = false;
      report.witnesses.push_back({j, "existence"});
    }
    if (detail::near_nonnegative_even(lj + static_cast<double>(m - j))) {
      report.injective = false;
      report.witnesses.push_back({j, "injectivity"});
    }
  }
  report.frontier = (2 * m > n) && !report.injective;
  return report;
}

}  // namespace conecosine
