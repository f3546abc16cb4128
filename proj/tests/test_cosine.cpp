#include <doctest.h>

#include <array>

#include "oracle_helpers.hpp"

using namespace conecosine;

namespace {

constexpr std::array<int, 4> kPair42{0, 1, 2, 3};

McConfig smoke_config(std::uint64_t seed, std::int64_t n = 200000) {
  McConfig c;
  c.n_samples = n;
  c.seed = seed;
  return c;
}

double combined_z(const McEstimate& a, Complex b) {
  return std::abs(a.value - b) / a.std_error;
}

}  // namespace

TEST_CASE("constant integrand at lambda = 0 gives the Haar mass exactly") {
  for (auto [n, m] : {std::pair{3, 1}, std::pair{4, 2}, std::pair{5, 2}}) {
    const auto est = cosine_mc(IntegrandSpec::one(), ConeExponent::zero(m),
                               StiefelFrame::coordinate(n, m),
                               smoke_config(501, 20000));
    CHECK(est.value == Complex(stiefel_mass(n, m)));
    CHECK(est.std_error == 0.0);
  }
}

TEST_CASE("circle: mean of |cos|^1 over the full circle is 4") {
  const auto est =
      cosine_mc(IntegrandSpec::one(), ConeExponent{Complex(1.0)},
                StiefelFrame::coordinate(2, 1), smoke_config(502));
  CHECK(combined_z(est, Complex(4.0)) < 3.0);
  CHECK(std::abs(oracle::abs_cos_power_integral(1.0) - 4.0) < 1e-12);
}

TEST_CASE("closed-form average matches Monte Carlo") {
  {
    ConeExponent lam{Complex(1.0), Complex(1.0)};
    const auto est = cosine_mc(IntegrandSpec::one(), lam,
                               StiefelFrame::coordinate(4, 2),
                               smoke_config(503));
    CHECK(combined_z(est, avg_closed_form(4, 2, lam)) < 3.0);
  }
  {
    ConeExponent lam{Complex(0.7, 0.4)};
    const auto est = cosine_mc(IntegrandSpec::one(), lam,
                               StiefelFrame::coordinate(3, 1),
                               smoke_config(504));
    CHECK(combined_z(est, avg_closed_form(3, 1, lam)) < 3.0);
  }
}

TEST_CASE("closed-form average: values, collapse at zero, sharp domain") {
  CHECK(oracle::rel_diff(avg_closed_form(2, 1, ConeExponent{Complex(1.0)}),
                         Complex(4.0)) < 1e-10);
  for (auto [n, m] : {std::pair{3, 1}, std::pair{4, 2}, std::pair{6, 3}})
    CHECK(oracle::rel_diff(avg_closed_form(n, m, ConeExponent::zero(m)),
                           Complex(stiefel_mass(n, m))) < 1e-12);

  // Just inside the convergence region is finite, the boundary is not.
  CHECK_NOTHROW(avg_closed_form(4, 2,
                                ConeExponent{Complex(-1.9), Complex(-0.9)}));
  CHECK_THROWS_AS(avg_closed_form(4, 2,
                                  ConeExponent{Complex(-2.0), Complex(0.0)}),
                  DomainError);
}

TEST_CASE("circle quadrature confirms the average for non-integer exponents") {
  for (double lambda : {-0.9, -0.5, 0.5, 2.3, 4.0}) {
    const Complex closed = avg_closed_form(2, 1, ConeExponent{Complex(lambda)});
    CHECK(std::abs(closed.imag()) < 1e-12);
    CHECK(std::abs(closed.real() - oracle::abs_cos_power_integral(lambda)) <
          1e-10 * std::max(1.0, std::abs(closed.real())));
  }
}

TEST_CASE("mean projection volume on the 2-sphere is exactly 1/2") {
  CHECK(std::abs(avg_projection_volume(3, 1) - 0.5) < 1e-12);
  CHECK(std::abs(avg_closed_form(3, 1, ConeExponent{Complex(1.0)}).real() /
                     stiefel_mass(3, 1) -
                 0.5) < 1e-12);
}

TEST_CASE("mean projection volume") {
  CHECK(std::abs(avg_projection_volume(2, 1) - 2.0 / M_PI) < 1e-12);
  const double quad = oracle::abs_cos_power_integral(1.0) / (2.0 * M_PI);
  CHECK(std::abs(avg_projection_volume(2, 1) - quad) < 1e-10);

  for (auto [n, m] : {std::pair{3, 1}, std::pair{4, 2}, std::pair{5, 3}})
    CHECK(std::abs(avg_projection_volume(n, m) -
                   (avg_closed_form(n, m, ConeExponent::constant(m, 1.0)) /
                    stiefel_mass(n, m))
                       .real()) < 1e-10);

  // Direct Monte Carlo over Haar frame pairs at (4, 2).
  PhiloxEngine eng(505, 0);
  const int N = 100000;
  double sum = 0.0, sumsq = 0.0;
  for (int i = 0; i < N; ++i) {
    auto u = sample_haar(4, 2, eng);
    auto v = sample_haar(4, 2, eng);
    const double b = projection_volume(u, v, Complex(1.0)).real();
    sum += b;
    sumsq += b * b;
  }
  const double mean = sum / N;
  const double se = std::sqrt((sumsq / N - mean * mean) / N);
  CHECK(std::abs(mean - avg_projection_volume(4, 2)) < 3.0 * se);
}

TEST_CASE("multiplier reduces to the classical sphere formula at m = 1") {
  for (int n : {2, 3, 4, 5})
    for (int k : {0, 2, 4})
      for (double lambda : {-0.5, 0.5, 1.5}) {
        const Complex mu = multiplier(n, 1, k, ConeExponent{Complex(lambda)});
        CHECK(oracle::rel_diff(mu, Complex(oracle::mu1_reference(n, k, lambda))) <
              1e-10);
      }
}

TEST_CASE("multiplier zero set and numerator poles") {
  // Denominator pole at lambda = 0 (Gamma(-lambda/2) below).
  CHECK(multiplier(4, 1, 2, ConeExponent{Complex(0.0)}) == Complex(0.0, 0.0));

  // Integer grid: zero exactly when some lambda_j + m - j is a
  // non-negative even integer smaller than k.
  const int n = 7, m = 2;
  auto nonneg_even = [](int w) { return w >= 0 && w % 2 == 0; };
  auto neg_odd = [](int w) { return w < 0 && std::abs(w) % 2 == 1; };
  for (int k = 0; k <= 4; ++k)
    for (int l1 = -1; l1 <= 4; ++l1)
      for (int l2 = -2; l2 <= 3; ++l2) {
        ConeExponent lam{Complex(l1), Complex(l2)};
        const int w1 = l1 + m - 1, w2 = l2 + m - 2;
        // Gamma_Omega(k_0 - lambda_*) blows up when w_j >= k with the same
        // parity as k; Gamma_Omega(lambda + m_0) when w_j is negative odd.
        const bool num_pole1 =
            (w1 >= k && (w1 - k) % 2 == 0) || neg_odd(w1);
        const bool num_pole2 =
            (w2 >= k && (w2 - k) % 2 == 0) || neg_odd(w2);
        // Zeros come from 1/Gamma_Omega(-lambda_*), which vanishes whenever
        // some w_j is a non-negative even integer. With k > w_j that is the
        // annihilation condition; for k <= w_j of the opposite parity the
        // numerator stays finite and the multiplier still vanishes.
        const bool zero1 = nonneg_even(w1);
        const bool zero2 = nonneg_even(w2);
        if (num_pole1 || num_pole2) {
          CHECK_THROWS_AS(multiplier(n, m, k, lam), PoleError);
        } else {
          const bool is_zero =
              multiplier(n, m, k, lam) == Complex(0.0, 0.0);
          CHECK(is_zero == (zero1 || zero2));
          // The annihilation direction: k above a non-negative even w_j
          // always kills the multiplier.
          if ((nonneg_even(w1) && k > w1) || (nonneg_even(w2) && k > w2))
            CHECK(is_zero);
        }
      }
}

TEST_CASE("degree-zero multiplier recovers the closed-form average") {
  for (auto [n, m] : {std::pair{3, 1}, std::pair{5, 2}}) {
    PhiloxEngine eng(506, 0);
    for (int trial = 0; trial < 20; ++trial) {
      ConeExponent lam = oracle::random_exponent(m, eng, -0.4, 2.0, 0.5);
      bool uhh_fails = false;
      for (int j = 1; j <= m; ++j) {
        const Complex w = lam[j - 1] + static_cast<double>(m - j);
        if (std::abs(w.imag()) < 1e-9 &&
            std::abs(w.real() - std::round(w.real() / 2.0) * 2.0) < 1e-9 &&
            w.real() >= -1e-9)
          uhh_fails = true;
      }
      if (uhh_fails) continue;
      const Complex via_multiplier =
          eigen_constant(n, m, 0) * multiplier(n, m, 0, lam);
      CHECK(oracle::rel_diff(via_multiplier, avg_closed_form(n, m, lam)) <
            1e-10);
    }
  }
}

TEST_CASE("eigen constant specializations") {
  for (int n : {2, 3, 5}) {
    CHECK(oracle::rel_diff(eigen_constant(n, 1, 0),
                           Complex(2.0 * std::pow(M_PI, (n - 1) / 2.0))) <
          1e-12);
    CHECK(oracle::rel_diff(eigen_constant(n, 1, 2),
                           Complex(-2.0 * std::pow(M_PI, (n - 1) / 2.0))) <
          1e-12);
  }
  CHECK(oracle::rel_diff(eigen_constant(4, 2, 1),
                         Complex(-std::pow(M_PI, 2.0) * stiefel_mass(2, 2))) <
        1e-12);
}

TEST_CASE("eigen relation on the sphere: degree 2, n = 3") {
  auto p = HPolynomial::from_pairing(3, 1, 2, std::array<int, 2>{0, 1});
  Matrix e1(3, 1);
  e1 << 1.0, 0.0, 0.0;
  const auto res = eigen_residual(p, ConeExponent{Complex(1.0)},
                                  StiefelFrame(e1), smoke_config(507));
  CHECK(oracle::rel_diff(res.predicted, Complex(M_PI / 4.0)) < 1e-10);
  CHECK(res.z_score < 3.0);
}

TEST_CASE("annihilation at a non-injectivity point (smoke scale)") {
  auto p = HPolynomial::from_pairing(5, 2, 3, kPair42);
  ConeExponent lam{Complex(1.0), Complex(1.0)};
  CHECK(multiplier(5, 2, 3, lam) == Complex(0.0, 0.0));
  const auto est = cosine_mc(IntegrandSpec::h_polynomial(p), lam,
                             StiefelFrame::coordinate(5, 2),
                             smoke_config(508));
  CHECK(std::abs(est.value) < 3.0 * est.std_error);
}

TEST_CASE("rotation equivariance of the transform") {
  const int n = 4, m = 2, k = 1;
  Matrix g = Matrix::Identity(n, n);
  const double u01 = 0.6;
  g(0, 0) = std::cos(u01);
  g(0, 2) = -std::sin(u01);
  g(2, 0) = std::sin(u01);
  g(2, 2) = std::cos(u01);

  const CMatrix a = make_isotropic(n, m, kPair42);
  auto p = HPolynomial(a, k);
  auto p_rotated = HPolynomial(CMatrix(g.transpose() * a), k);

  ConeExponent lam{Complex(0.5), Complex(1.0)};
  auto u = StiefelFrame::coordinate(n, m);
  auto gu = StiefelFrame(Matrix(g * u.matrix()));

  const auto lhs = cosine_mc(IntegrandSpec::h_polynomial(p_rotated), lam, u,
                             smoke_config(509));
  const auto rhs = cosine_mc(IntegrandSpec::h_polynomial(p), lam, gu,
                             smoke_config(510));
  CHECK(std::abs(lhs.value - rhs.value) <
        3.0 * std::hypot(lhs.std_error, rhs.std_error));
}

TEST_CASE("homogeneous extension off the frame manifold") {
  PhiloxEngine eng(511, 0);
  auto u = sample_haar(4, 2, eng);
  Matrix t = oracle::random_upper_triangular(2, eng);
  const Matrix y = u.matrix() * t;
  Matrix tt = t.transpose() * t;
  tt = ((tt + tt.transpose()) / 2.0).eval();
  const Complex radial =
      composite_power(PosDefMatrix(tt), ConeExponent{Complex(0.8), Complex(1.3)});

  ConeExponent lam{Complex(0.8), Complex(1.3)};
  const auto at_y = cosine_mc_extended(IntegrandSpec::one(), lam, y,
                                       smoke_config(512, 50000));
  const auto at_u =
      cosine_mc(IntegrandSpec::one(), lam, u, smoke_config(512, 50000));
  CHECK(oracle::rel_diff(at_y.value, radial * at_u.value) < 1e-10);
}

TEST_CASE("equal exponents reduce the kernel to |det|^lambda per sample") {
  PhiloxEngine eng(513, 0);
  for (int trial = 0; trial < 200; ++trial) {
    auto u = sample_haar(4, 2, eng);
    auto v = sample_haar(4, 2, eng);
    const Complex lambda(1.3, -0.4);
    Matrix b = v.matrix().transpose() * u.matrix();
    Matrix gram = b.transpose() * b;
    gram = ((gram + gram.transpose()) / 2.0).eval();
    const Complex kernel =
        composite_power(PosDefMatrix(gram), ConeExponent::constant(2, lambda));
    CHECK(oracle::rel_diff(kernel, projection_volume(u, v, lambda)) < 1e-10);
  }
}

TEST_CASE("transform outside the existence domain is refused") {
  CHECK_THROWS_AS(cosine_mc(IntegrandSpec::one(),
                            ConeExponent{Complex(-2.5), Complex(0.0)},
                            StiefelFrame::coordinate(4, 2), smoke_config(514)),
                  DomainError);
}
