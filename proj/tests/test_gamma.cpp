#include <doctest.h>

#include "oracle_helpers.hpp"

using namespace conecosine;

namespace {

constexpr double kTol = 1e-10;
const double kSqrtPi = std::sqrt(M_PI);

}  // namespace

TEST_CASE("complex log-gamma matches the C library on the real axis") {
  for (double x = 0.05; x < 35.0; x += 0.173) {
    const Complex lg = log_gamma(Complex(x, 0.0));
    CHECK(std::abs(lg.imag()) < 1e-12 * std::max(1.0, std::abs(lg.real())));
    CHECK(std::abs(lg.real() - std::lgamma(x)) <=
          1e-12 * std::max(1.0, std::abs(std::lgamma(x))));
  }
  // Negative non-integer arguments through the reflection formula.
  for (double x : {-0.25, -0.75, -1.5, -2.3, -5.8}) {
    CHECK(oracle::rel_diff(gamma_fn(Complex(x, 0.0)),
                           Complex(std::tgamma(x), 0.0)) < 1e-12);
  }
}

TEST_CASE("complex gamma: recurrence and conjugate symmetry") {
  PhiloxEngine eng(201, 0);
  for (int trial = 0; trial < 200; ++trial) {
    const Complex z(8.0 * uniform01(eng) - 3.5, 6.0 * uniform01(eng) - 3.0);
    if (is_gamma_pole(z) || is_gamma_pole(z + 1.0)) continue;
    CHECK(oracle::rel_diff(gamma_fn(z + 1.0), z * gamma_fn(z)) < 1e-11);
    CHECK(oracle::rel_diff(gamma_fn(std::conj(z)), std::conj(gamma_fn(z))) <
          1e-12);
  }
}

TEST_CASE("gamma_omega: frozen values and poles") {
  CHECK(oracle::rel_diff(gamma_omega(ConeExponent{Complex(3.0)}),
                         Complex(kSqrtPi / 2.0)) < kTol);
  CHECK(oracle::rel_diff(reciprocal_gamma_omega(ConeExponent{Complex(3.0)}),
                         Complex(2.0 / kSqrtPi)) < kTol);
  // For m = 1 the cone gamma is Gamma(lambda/2), so lambda = 1 gives
  // 1/Gamma(1/2) = 1/sqrt(pi).
  CHECK(oracle::rel_diff(reciprocal_gamma_omega(ConeExponent{Complex(1.0)}),
                         Complex(1.0 / kSqrtPi)) < kTol);

  ConeExponent at_pole{Complex(0.0), Complex(5.0)};
  CHECK(reciprocal_gamma_omega(at_pole) == Complex(0.0, 0.0));
  try {
    gamma_omega(at_pole);
    FAIL("expected a pole error");
  } catch (const PoleError& e) {
    CHECK(e.index() == 1);
  }
}

TEST_CASE("siegel gamma: frozen values and poles") {
  CHECK(oracle::rel_diff(siegel_gamma(1, 1.0), Complex(1.0)) < kTol);
  CHECK(oracle::rel_diff(siegel_gamma(2, 2.0), Complex(M_PI / 2.0)) < kTol);
  CHECK_THROWS_AS(siegel_gamma(2, Complex(0.0)), PoleError);
}

TEST_CASE("equal-entry reduction Gamma_Omega(lambda_0) = Gamma_m(lambda/2)") {
  const Complex grid[] = {Complex(0.7),          Complex(2.0),
                          Complex(4.5),          Complex(9.99),
                          Complex(-0.3),         Complex(-1.7),
                          Complex(1.0, 0.8),     Complex(3.0, -2.0),
                          Complex(-0.5, 1.5)};
  for (int m = 1; m <= 3; ++m)
    for (const Complex& lambda : grid) {
      bool pole = false;
      for (int j = 0; j < m; ++j)
        if (is_gamma_pole(lambda / 2.0 - j / 2.0)) pole = true;
      if (pole) continue;
      CHECK(oracle::rel_diff(gamma_omega(ConeExponent::constant(m, lambda)),
                             siegel_gamma(m, lambda / 2.0)) < kTol);
    }
}

TEST_CASE("reflection consistency off the polar set") {
  PhiloxEngine eng(202, 0);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = 1 + static_cast<int>(uniform01(eng) * 3);
    ConeExponent lam = oracle::random_exponent(m, eng, -3.0, 5.0, 1.0);
    bool pole = false;
    for (int j = 1; j <= m; ++j)
      if (is_gamma_pole((lam[j - 1] - static_cast<double>(j) + 1.0) / 2.0))
        pole = true;
    if (pole) continue;
    CHECK(std::abs(gamma_omega(lam) * reciprocal_gamma_omega(lam) -
                   Complex(1.0)) < kTol);
  }
}

TEST_CASE("classification: spec table rows") {
  {
    auto rep = classify(ConeExponent{Complex(1.0), Complex(1.0)}, 5, 2);
    CHECK(rep.in_existence_domain);
    CHECK_FALSE(rep.injective);
    CHECK_FALSE(rep.frontier);
    bool witnessed = false;
    for (const auto& w : rep.witnesses)
      if (w.rule == "injectivity" && w.index == 1) witnessed = true;
    CHECK(witnessed);
  }
  {
    auto rep = classify(ConeExponent{Complex(-0.5), Complex(0.5)}, 5, 2);
    CHECK(rep.injective);
    CHECK(rep.in_existence_domain);
    CHECK(rep.witnesses.empty());
  }
  {
    auto rep = classify(ConeExponent{Complex(-3.0)}, 3, 1);
    CHECK(rep.on_polar_set);
    CHECK_FALSE(rep.in_abs_domain_zeta);
  }
}

TEST_CASE("classification: scalar case reduces to the classical rules") {
  const int n = 4;
  for (double lambda = -6.0; lambda <= 6.0; lambda += 0.5) {
    auto rep = classify(ConeExponent{Complex(lambda)}, n, 1);
    CHECK(rep.in_abs_domain_zeta == (lambda > -n));
    const bool even_nonneg =
        lambda >= 0.0 && std::abs(lambda - std::round(lambda / 2.0) * 2.0) <
                             1e-9;
    CHECK(rep.injective == !even_nonneg);
  }
}

TEST_CASE("classification: polar points always leave the convergence set") {
  PhiloxEngine eng(203, 0);
  for (int trial = 0; trial < 100; ++trial) {
    const int m = 1 + static_cast<int>(uniform01(eng) * 3);
    const int n = m + 1 + static_cast<int>(uniform01(eng) * 4);
    const int j = 1 + static_cast<int>(uniform01(eng) * m);
    const int l = 1 + 2 * static_cast<int>(uniform01(eng) * 4);
    std::vector<Complex> entries(static_cast<size_t>(m), Complex(0.0));
    entries[static_cast<size_t>(j - 1)] = Complex(j - n - l, 0.0);
    auto rep = classify(ConeExponent(std::move(entries)), n, m);
    CHECK(rep.on_polar_set);
    CHECK_FALSE(rep.in_abs_domain_zeta);
  }
}

TEST_CASE("classification: frontier flag when 2m > n") {
  auto frontier = classify(ConeExponent{Complex(1.0), Complex(1.0)}, 3, 2);
  CHECK_FALSE(frontier.injective);
  CHECK(frontier.frontier);
  auto settled = classify(ConeExponent{Complex(1.0), Complex(1.0)}, 5, 2);
  CHECK_FALSE(settled.injective);
  CHECK_FALSE(settled.frontier);
  CHECK(classify(ConeExponent{Complex(0.5), Complex(0.5)}, 3, 2).frontier ==
        false);
}

TEST_CASE("classification: boundary points are excluded") {
  auto rep = classify(ConeExponent{Complex(-4.0)}, 4, 1);  // Re = 1 - n - 1 + 1
  CHECK_FALSE(rep.in_abs_domain_zeta);
  auto rep2 = classify(ConeExponent{Complex(-3.999)}, 4, 1);
  CHECK(rep2.in_abs_domain_zeta);
}

// Laplace identity of the cone gamma: the integral of r^lambda e^{-tr(rs)}
// against the invariant measure equals Gamma_Omega(lambda) (omega s
// omega)^{-lambda_*}. Estimated by importance sampling of the triangular
// factor: squared diagonals gamma-distributed, off-diagonals Gaussian.
TEST_CASE("laplace transform identity, m = 2, Monte Carlo") {
  const int m = 2;
  PhiloxEngine setup(204, 0);
  Matrix s = oracle::random_posdef(m, setup);
  ConeExponent lambda{Complex(1.5, 0.0), Complex(2.2, 0.3)};

  Eigen::SelfAdjointEigenSolver<Matrix> es(s);
  const double c = es.eigenvalues().minCoeff() / 2.0;
  const double a1 = lambda[0].real() - 1.0 + 1.0;
  const double a2 = lambda[1].real() - 2.0 + 1.0;
  REQUIRE(a1 > 0.0);
  REQUIRE(a2 > 0.0);

  // Constant part of the importance weight.
  const double log_const =
      std::log(4.0) + std::lgamma(a1 / 2.0) + std::lgamma(a2 / 2.0) -
      std::log(2.0) * 2.0 - (a1 + a2) / 2.0 * std::log(c) +
      0.5 * std::log(M_PI / c);

  McConfig config;
  config.n_samples = 400000;
  config.seed = 205;

  auto factory = [&]() {
    const double shape1 = a1 / 2.0, shape2 = a2 / 2.0;
    const Matrix s_local = s;
    const Complex l1 = lambda[0], l2 = lambda[1];
    return [=, t = Matrix::Zero(2, 2).eval(),
            w = Matrix(2, 2)](PhiloxEngine& eng) mutable
           -> std::optional<Complex> {
      t(0, 0) = std::sqrt(gamma_variate(eng, shape1) / c);
      t(1, 1) = std::sqrt(gamma_variate(eng, shape2) / c);
      t(0, 1) = standard_normal(eng) / std::sqrt(2.0 * c);
      w.noalias() = t.transpose() * t;
      const double quad = (w * s_local).trace() - c * w.trace();
      const Complex phase =
          std::exp(Complex(0.0, l1.imag()) * std::log(t(0, 0)) +
                   Complex(0.0, l2.imag()) * std::log(t(1, 1)));
      return phase * std::exp(log_const - quad);
    };
  };

  const McEstimate estimate = run_mc(config, factory);
  const Complex expected =
      gamma_omega(lambda) *
      composite_power(star_involution(PosDefMatrix(s)), -lambda.reversed());
  CHECK(std::abs(estimate.value - expected) < 3.0 * estimate.std_error);
  CHECK(estimate.std_error <
        0.05 * std::abs(expected));  // estimator actually converged
}
