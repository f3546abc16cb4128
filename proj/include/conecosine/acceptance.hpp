#pragma once

// The verification battery behind `conecosine suite` and the acceptance
// test binary: every closed-form identity checked against an independent
// route, every Monte Carlo estimator checked against its closed form at
// fixed seeds, and the domain classifier checked against a hand-built
// table.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "conecosine/conecosine.hpp"

namespace conecosine {

struct AcceptanceOptions {
  bool full = true;  // full: N = 1e6 per MC run; quick: N = 1e5
  std::uint64_t seed = 1234;
  int workers = 0;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  std::int64_t wall_ms = 0;
};

namespace detail {

inline std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.3g", x);
  return buf;
}

// Gauss-Legendre value of int_0^{2pi} |cos t|^lambda dt, split at the kinks.
inline double quadrature_abs_cos_power(double lambda) {
  constexpr int kNodes = 96;
  static thread_local std::vector<double> x, w;
  if (x.empty()) {
    x.assign(kNodes, 0.0);
    w.assign(kNodes, 0.0);
    for (int i = 0; i < (kNodes + 1) / 2; ++i) {
      double z = std::cos(M_PI * (i + 0.75) / (kNodes + 0.5));
      double pp = 0.0;
      for (int iter = 0; iter < 100; ++iter) {
        double p0 = 1.0, p1 = 0.0;
        for (int j = 0; j < kNodes; ++j) {
          const double p2 = p1;
          p1 = p0;
          p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
        }
        pp = kNodes * (z * p0 - p1) / (z * z - 1.0);
        const double dz = p0 / pp;
        z -= dz;
        if (std::abs(dz) < 1e-15) break;
      }
      x[i] = -z;
      x[kNodes - 1 - i] = z;
      w[i] = w[kNodes - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
    }
  }
  const double a = 0.0, b = M_PI / 2.0 - 1e-14;
  const double mid = (a + b) / 2.0, rad = (b - a) / 2.0;
  double acc = 0.0;
  for (int i = 0; i < kNodes; ++i)
    acc += w[i] * std::pow(std::cos(mid + rad * x[i]), lambda);
  return 4.0 * acc * rad;
}

inline double classical_mu1(int n, int k, double lambda) {
  return std::tgamma((lambda + 1.0) / 2.0) * std::tgamma((k - lambda) / 2.0) /
         (std::tgamma(-lambda / 2.0) * std::tgamma((lambda + k + n) / 2.0));
}

inline Matrix seeded_posdef(int m, PhiloxEngine& eng) {
  Matrix g(m, m);
  fill_standard_normal(g, eng);
  Matrix r = g.transpose() * g + 0.1 * Matrix::Identity(m, m);
  return ((r + r.transpose()) / 2.0).eval();
}

inline Matrix seeded_upper_triangular(int m, PhiloxEngine& eng) {
  Matrix t = Matrix::Zero(m, m);
  for (int i = 0; i < m; ++i) {
    t(i, i) = 0.2 + 2.0 * uniform01(eng);
    for (int j = i + 1; j < m; ++j) t(i, j) = standard_normal(eng);
  }
  return t;
}

inline ConeExponent seeded_exponent(int m, PhiloxEngine& eng, double re_lo,
                                    double re_hi, double im_span) {
  std::vector<Complex> entries;
  for (int j = 0; j < m; ++j)
    entries.emplace_back(re_lo + (re_hi - re_lo) * uniform01(eng),
                         im_span * (2.0 * uniform01(eng) - 1.0));
  return ConeExponent(std::move(entries));
}

inline double rel(Complex a, Complex b) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}

using Clock = std::chrono::steady_clock;

inline std::int64_t ms_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                               start)
      .count();
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Criteria
// ---------------------------------------------------------------------------

inline CriterionResult criterion_average_vs_mc(const AcceptanceOptions& opt) {
  const auto start = detail::Clock::now();
  CriterionResult out{1, "closed-form average vs Monte Carlo", false, "", 0};
  const std::int64_t N = opt.full ? 1000000 : 100000;
  double worst_z = 0.0;
  bool ok = true;
  int run = 0;
  for (auto [n, m] : {std::pair{3, 1}, std::pair{4, 2}, std::pair{5, 2}}) {
    PhiloxEngine lam_stream(opt.seed, 1000 + static_cast<std::uint64_t>(n));
    for (int trial = 0; trial < 5; ++trial) {
      // Stay at distance >= 0.5 from the convergence boundary j - m - 1.
      std::vector<Complex> entries;
      for (int j = 1; j <= m; ++j)
        entries.emplace_back(j - m - 0.5 + 1.5 * uniform01(lam_stream),
                             0.6 * (uniform01(lam_stream) - 0.5));
      ConeExponent lambda(std::move(entries));
      McConfig config;
      config.n_samples = N;
      config.seed = opt.seed + 17 * static_cast<std::uint64_t>(++run);
      config.workers = opt.workers;
      const McEstimate est = cosine_mc(IntegrandSpec::one(), lambda,
                                       StiefelFrame::coordinate(n, m), config);
      const Complex closed = avg_closed_form(n, m, lambda);
      const double z = std::abs(est.value - closed) / est.std_error;
      worst_z = std::max(worst_z, z);
      if (!(z < 3.0)) ok = false;
    }
  }
  out.wall_ms = detail::ms_since(start);
  const bool in_time = !opt.full || out.wall_ms < 60000;
  out.pass = ok && in_time;
  out.detail = "worst z = " + detail::fmt(worst_z) +
               (in_time ? "" : ", over the 60 s budget");
  return out;
}

inline CriterionResult criterion_circle_oracle(const AcceptanceOptions&) {
  const auto start = detail::Clock::now();
  CriterionResult out{2, "circle quadrature oracle", false, "", 0};
  const double apv = avg_projection_volume(2, 1);
  const double quad_mean = detail::quadrature_abs_cos_power(1.0) / (2.0 * M_PI);
  const double avg1 =
      avg_closed_form(2, 1, ConeExponent{Complex(1.0)}).real();
  const double e1 = std::abs(apv - 2.0 / M_PI);
  const double e2 = std::abs(apv - quad_mean);
  const double e3 = std::abs(avg1 - 4.0);
  const double e4 = std::abs(avg1 - detail::quadrature_abs_cos_power(1.0));
  out.pass = e1 < 1e-10 && e2 < 1e-10 && e3 < 1e-10 && e4 < 1e-10;
  out.detail = "max error = " + detail::fmt(std::max({e1, e2, e3, e4}));
  out.wall_ms = detail::ms_since(start);
  return out;
}

inline CriterionResult criterion_funk_hecke(const AcceptanceOptions& opt) {
  const auto start = detail::Clock::now();
  CriterionResult out{3, "sphere multiplier and eigenvalue relation", false,
                      "", 0};
  double worst_rel = 0.0;
  for (int n : {2, 3, 4, 5})
    for (int k : {0, 2, 4})
      for (double lambda : {-0.5, 0.5, 1.5}) {
        const Complex mine = multiplier(n, 1, k, ConeExponent{Complex(lambda)});
        const double ref = detail::classical_mu1(n, k, lambda);
        worst_rel = std::max(worst_rel, detail::rel(mine, Complex(ref)));
      }

  Matrix e1(3, 1);
  e1 << 1.0, 0.0, 0.0;
  McConfig config;
  config.n_samples = opt.full ? 1000000 : 100000;
  config.seed = opt.seed + 301;
  config.workers = opt.workers;
  const auto res = eigen_residual(
      HPolynomial::from_pairing(3, 1, 2, std::vector<int>{0, 1}),
      ConeExponent{Complex(1.0)}, StiefelFrame(e1), config);
  out.pass = worst_rel < 1e-10 && res.z_score < 3.0;
  out.detail = "worst multiplier rel err = " + detail::fmt(worst_rel) +
               ", eigen z = " + detail::fmt(res.z_score);
  out.wall_ms = detail::ms_since(start);
  return out;
}

inline CriterionResult criterion_annihilation(const AcceptanceOptions& opt) {
  const auto start = detail::Clock::now();
  CriterionResult out{4, "annihilation at non-injectivity points", false, "",
                      0};
  const int n = 5, m = 2, k = 3;
  auto p = HPolynomial::from_pairing(n, m, k, std::vector<int>{0, 1, 2, 3});
  PhiloxEngine frame_stream(opt.seed, 4001);
  const StiefelFrame frames[2] = {StiefelFrame::coordinate(n, m),
                                  sample_haar(n, m, frame_stream)};
  bool ok = true;
  double worst_z = 0.0;
  int run = 0;
  for (double l : {0.0, 1.0}) {
    const ConeExponent lambda = ConeExponent::constant(m, Complex(l));
    if (multiplier(n, m, k, lambda) != Complex(0.0, 0.0)) ok = false;
    for (const auto& u : frames) {
      McConfig config;
      config.n_samples = opt.full ? 1000000 : 100000;
      config.seed = opt.seed + 401 + 13 * static_cast<std::uint64_t>(++run);
      config.workers = opt.workers;
      const auto est =
          cosine_mc(IntegrandSpec::h_polynomial(p), lambda, u, config);
      const double z = std::abs(est.value) / est.std_error;
      worst_z = std::max(worst_z, z);
      if (!(z < 3.0)) ok = false;
    }
  }
  out.pass = ok;
  out.detail = "multipliers exactly 0, worst |estimate|/se = " +
               detail::fmt(worst_z);
  out.wall_ms = detail::ms_since(start);
  return out;
}

inline CriterionResult criterion_zeta_gaussian(const AcceptanceOptions& opt) {
  const auto start = detail::Clock::now();
  CriterionResult out{5, "Gaussian zeta integrals", false, "", 0};
  const double exact =
      std::abs(zeta_gaussian_closed_form(2, 1, ConeExponent{Complex(0.0)}) -
               Complex(M_PI));
  bool ok = exact < 1e-12;
  double worst_z = 0.0;
  int run = 0;
  auto check = [&](int n, int m, ConeExponent lambda) {
    McConfig config;
    config.n_samples = opt.full ? 1000000 : 100000;
    config.seed = opt.seed + 501 + 29 * static_cast<std::uint64_t>(++run);
    config.workers = opt.workers;
    const auto est = zeta_mc(IntegrandSpec::one(), lambda,
                             GaussianTestFunction{1.0}, n, m, config);
    const Complex closed = zeta_gaussian_closed_form(n, m, lambda);
    const double z = std::abs(est.value - closed) / est.std_error;
    worst_z = std::max(worst_z, z);
    if (!(z < 3.0)) ok = false;
  };
  for (double l : {-0.4, 0.0, 0.8, 1.5}) check(2, 1, ConeExponent{Complex(l)});
  check(4, 2, ConeExponent{Complex(0.0), Complex(0.0)});
  check(4, 2, ConeExponent{Complex(1.0), Complex(0.5)});
  check(4, 2, ConeExponent{Complex(-1.0), Complex(-0.8)});
  check(4, 2, ConeExponent{Complex(0.5), Complex(-1.0)});
  out.pass = ok;
  out.detail = "exact error = " + detail::fmt(exact) +
               ", worst z = " + detail::fmt(worst_z);
  out.wall_ms = detail::ms_since(start);
  return out;
}

inline CriterionResult criterion_hecke(const AcceptanceOptions& opt) {
  const auto start = detail::Clock::now();
  CriterionResult out{6, "Hecke identity", false, "", 0};
  bool ok = true;
  double worst_z = 0.0;
  int run = 0;
  auto check = [&](int n, int m, int k, double y_scale,
                   std::uint64_t y_stream) {
    auto p = [&] {
      std::vector<int> pairing;
      for (int i = 0; i < 2 * m; ++i) pairing.push_back(i);
      return HPolynomial::from_pairing(n, m, k, pairing);
    }();
    PhiloxEngine ys(opt.seed, y_stream);
    for (int point = 0; point < 3; ++point) {
      Matrix y(n, m);
      fill_standard_normal(y, ys);
      y *= y_scale;
      McConfig config;
      config.n_samples = opt.full ? 1000000 : 100000;
      config.seed = opt.seed + 601 + 31 * static_cast<std::uint64_t>(++run);
      config.workers = opt.workers;
      const auto res = hecke_check(p, y, config);
      worst_z = std::max(worst_z, res.z_score);
      if (!(res.z_score < 3.0)) ok = false;
    }
  };
  check(2, 1, 2, 0.5, 6001);
  check(4, 2, 1, 0.35, 6002);
  out.pass = ok;
  out.detail = "worst z = " + detail::fmt(worst_z);
  out.wall_ms = detail::ms_since(start);
  return out;
}

inline CriterionResult criterion_functional_equation(
    const AcceptanceOptions&) {
  const auto start = detail::Clock::now();
  CriterionResult out{7, "functional equation closed-form identity", false,
                      "", 0};
  double worst = 0.0;
  for (Complex l : {Complex(-0.5), Complex(-0.2, 0.15), Complex(-0.85)})
    worst = std::max(worst, functional_equation_check(2, 1, ConeExponent{l},
                                                      IntegrandSpec::one())
                                .rel_err);
  worst = std::max(
      worst, functional_equation_check(4, 2,
                                       ConeExponent{Complex(-1.5),
                                                    Complex(-0.5)},
                                       IntegrandSpec::one())
                 .rel_err);
  worst = std::max(
      worst,
      functional_equation_check(
          4, 2, ConeExponent{Complex(-1.2, 0.1), Complex(-0.3, -0.2)},
          IntegrandSpec::one())
          .rel_err);
  worst = std::max(
      worst, functional_equation_check(4, 2,
                                       ConeExponent{Complex(-1.9),
                                                    Complex(-0.95)},
                                       IntegrandSpec::one())
                 .rel_err);

  auto p = HPolynomial::from_pairing(3, 1, 2, std::vector<int>{0, 1});
  const ConeExponent lam{Complex(-0.5)};
  worst = std::max(worst, functional_equation_check(
                              3, 1, lam, IntegrandSpec::h_polynomial(p))
                              .rel_err);
  // The m = 1 Fourier constant must match its displayed special form
  // 2^{-lambda} pi^{n/2} i^k.
  const Complex d = funceq_d_lambda(3, 1, 2, lam);
  const Complex d_display = std::pow(2.0, 0.5) * std::pow(M_PI, 1.5) *
                            Complex(-1.0, 0.0);
  const double pin = detail::rel(d, d_display);
  out.pass = worst < 1e-9 && pin < 1e-12;
  out.detail = "worst rel err = " + detail::fmt(worst) +
               ", constant pin = " + detail::fmt(pin);
  out.wall_ms = detail::ms_since(start);
  return out;
}

inline CriterionResult criterion_exact_algebra(const AcceptanceOptions& opt) {
  const auto start = detail::Clock::now();
  CriterionResult out{8, "exact algebraic identities", false, "", 0};
  constexpr double kTol = 1e-10;
  double worst = 0.0;
  auto track = [&](double err) { worst = std::max(worst, err); };

  PhiloxEngine eng(opt.seed, 8001);
  for (int trial = 0; trial < 1000; ++trial) {
    const int m = 1 + static_cast<int>(uniform01(eng) * 3);
    PosDefMatrix r(detail::seeded_posdef(m, eng));
    ConeExponent lam = detail::seeded_exponent(m, eng, -2.0, 2.0, 1.0);
    ConeExponent mu = detail::seeded_exponent(m, eng, -2.0, 2.0, 1.0);

    // Multiplicativity and the constant shift.
    track(detail::rel(composite_power(r, lam + mu),
                      composite_power(r, lam) * composite_power(r, mu)));
    const Complex alpha(1.1, -0.4);
    track(detail::rel(composite_power(r, lam.shifted(alpha)),
                      composite_power(r, lam) *
                          std::exp(alpha / 2.0 *
                                   std::log(r.determinant()))));

    // Triangular covariance.
    Matrix t = detail::seeded_upper_triangular(m, eng);
    Matrix conj = t.transpose() * r.entries() * t;
    conj = ((conj + conj.transpose()) / 2.0).eval();
    Matrix tt = t.transpose() * t;
    tt = ((tt + tt.transpose()) / 2.0).eval();
    track(detail::rel(composite_power(PosDefMatrix(conj), lam),
                      composite_power(PosDefMatrix(tt), lam) *
                          composite_power(r, lam)));

    // Inversion and scaling laws.
    track(detail::rel(composite_power(r, lam.reversed()),
                      composite_power(star_involution(r.inverse()), -lam)));
    const double c = 0.2 + 3.0 * uniform01(eng);
    track(detail::rel(
        composite_power(PosDefMatrix(Matrix(c * r.entries())), lam),
        std::exp(lam.trace() / 2.0 * std::log(c)) * composite_power(r, lam)));

    // Route agreement and the character law.
    track(detail::rel(composite_power(r, lam),
                      composite_power_from_minors(r, lam)));
    Matrix t2 = detail::seeded_upper_triangular(m, eng);
    track(detail::rel(
        triangular_character(TriangularFactor(Matrix(t * t2)), lam),
        triangular_character(TriangularFactor(t), lam) *
            triangular_character(TriangularFactor(t2), lam)));
  }

  // Projection-volume duality across every (n, m) with n <= 6.
  double worst_dual = 0.0;
  for (int n = 2; n <= 6; ++n)
    for (int m = 1; m < n; ++m) {
      PhiloxEngine pair_eng(opt.seed, 8100 + static_cast<std::uint64_t>(10 * n + m));
      for (int trial = 0; trial < 1000; ++trial) {
        auto a = sample_haar(n, m, pair_eng);
        auto b = sample_haar(n, m, pair_eng);
        const Complex direct = projection_volume(a, b, Complex(1.0));
        const Complex dual = projection_volume(
            orthocomplement(a), orthocomplement(b), Complex(1.0));
        worst_dual = std::max(worst_dual, std::abs(direct - dual));
      }
    }

  // Determinantal homogeneity of H-polynomials.
  PhiloxEngine heng(opt.seed, 8200);
  auto p = HPolynomial::from_pairing(5, 2, 2, std::vector<int>{0, 1, 2, 3});
  for (int trial = 0; trial < 1000; ++trial) {
    Matrix x(5, 2);
    fill_standard_normal(x, heng);
    Matrix g(2, 2);
    fill_standard_normal(g, heng);
    if (std::abs(g.determinant()) < 0.05) continue;
    const Complex detg = g.determinant();
    track(detail::rel(hpoly_eval(p, Matrix(x * g)),
                      detg * detg * hpoly_eval(p, x)));
  }

  // Decomposition reconstructions.
  double worst_recon = 0.0;
  PhiloxEngine deng(opt.seed, 8300);
  for (int trial = 0; trial < 1000; ++trial) {
    Matrix x(4, 2);
    fill_standard_normal(x, deng);
    auto [v, r] = polar_decompose(x);
    worst_recon = std::max(
        worst_recon, max_abs(Matrix(v.matrix() * symmetric_sqrt(r.entries()) -
                                    x)) /
                         std::max(1.0, max_abs(x)));
    auto [u, t] = triangular_decompose(x);
    worst_recon = std::max(worst_recon,
                           max_abs(Matrix(u.matrix() * t - x)) /
                               std::max(1.0, max_abs(x)));
  }

  // Harmonicity certificates.
  double worst_harmonic = 0.0;
  PhiloxEngine leng(opt.seed, 8400);
  for (int m = 1; m <= 2; ++m)
    for (int n = 2 * m; n <= 6; ++n)
      for (int k = 1; k <= 3; ++k) {
        if (m == 1 && k % 2 != 0) continue;
        std::vector<int> pairing;
        for (int i = 0; i < 2 * m; ++i) pairing.push_back(i);
        auto hp = HPolynomial::from_pairing(n, m, k, pairing);
        for (int trial = 0; trial < 100; ++trial) {
          Matrix x(n, m);
          for (int i = 0; i < n; ++i)
            for (int j = 0; j < m; ++j) x(i, j) = 2.0 * uniform01(leng) - 1.0;
          double local = std::abs(hpoly_eval(hp, x));
          Matrix probe = x;
          const double h = 1e-3;
          for (int i = 0; i < n; ++i)
            for (int j = 0; j < m; ++j) {
              probe(i, j) = x(i, j) + h;
              local = std::max(local, std::abs(hpoly_eval(hp, probe)));
              probe(i, j) = x(i, j) - h;
              local = std::max(local, std::abs(hpoly_eval(hp, probe)));
              probe(i, j) = x(i, j);
            }
          worst_harmonic = std::max(
              worst_harmonic, std::abs(numeric_laplacian(hp, x, h)) /
                                  (1e-6 * std::max(1.0, local)));
        }
      }

  out.pass = worst < kTol && worst_dual < kTol && worst_recon < 1e-9 &&
             worst_harmonic < 1.0;
  out.detail = "algebra " + detail::fmt(worst) + ", duality " +
               detail::fmt(worst_dual) + ", reconstruction " +
               detail::fmt(worst_recon) + ", harmonicity ratio " +
               detail::fmt(worst_harmonic);
  out.wall_ms = detail::ms_since(start);
  return out;
}

inline CriterionResult criterion_classification(const AcceptanceOptions&) {
  const auto start = detail::Clock::now();
  CriterionResult out{9, "domain classification table", false, "", 0};
  struct Case {
    int n, m;
    std::vector<Complex> lambda;
    bool abs_domain, polar, existence, injective, frontier;
  };
  const Case table[] = {
      {3, 1, {Complex(0.0)}, true, false, true, false, false},
      {3, 1, {Complex(-3.0)}, false, true, false, true, false},
      {3, 1, {Complex(-2.5)}, true, false, false, true, false},
      {3, 1, {Complex(2.0)}, true, false, true, false, false},
      {3, 1, {Complex(1.0)}, true, false, true, true, false},
      {3, 1, {Complex(-5.0)}, false, true, false, true, false},
      {2, 1, {Complex(-2.0)}, false, true, false, true, false},
      {5, 2, {Complex(1.0), Complex(1.0)}, true, false, true, false, false},
      {5, 2, {Complex(0.0), Complex(0.0)}, true, false, true, false, false},
      {5, 2, {Complex(-0.5), Complex(0.5)}, true, false, true, true, false},
      {5, 2, {Complex(-4.0), Complex(0.0)}, true, false, false, false, false},
      {5, 2, {Complex(-5.0), Complex(0.0)}, false, true, false, false, false},
      {5, 2, {Complex(-6.0), Complex(1.0)}, false, false, false, true, false},
      {3, 2, {Complex(1.0), Complex(1.0)}, true, false, true, false, true},
      {3, 2, {Complex(0.5), Complex(0.5)}, true, false, true, true, false},
      {4, 2, {Complex(0.0, 1.0), Complex(0.0)}, true, false, true, false,
       false},
      {4, 2, {Complex(1.0, 1e-12), Complex(1.0)}, true, false, true, false,
       false},
      {4, 2, {Complex(-4.0 + 1e-12), Complex(0.5)}, false, true, false, true,
       false},
      {6, 3, {Complex(0.0), Complex(-1.0), Complex(-2.0)}, true, false, false,
       false, false},
      {6, 3, {Complex(3.0), Complex(2.0), Complex(1.0)}, true, false, true,
       true, false},
  };
  int mismatches = 0;
  for (const Case& c : table) {
    const DomainReport rep = classify(ConeExponent(c.lambda), c.n, c.m);
    if (rep.in_abs_domain_zeta != c.abs_domain ||
        rep.on_polar_set != c.polar ||
        rep.in_existence_domain != c.existence ||
        rep.injective != c.injective || rep.frontier != c.frontier)
      ++mismatches;
  }
  out.pass = mismatches == 0;
  out.detail = std::to_string(mismatches) + " mismatches of 20";
  out.wall_ms = detail::ms_since(start);
  return out;
}

inline std::vector<CriterionResult> run_acceptance(
    const AcceptanceOptions& opt) {
  std::vector<CriterionResult> results;
  results.push_back(criterion_average_vs_mc(opt));
  results.push_back(criterion_circle_oracle(opt));
  results.push_back(criterion_funk_hecke(opt));
  results.push_back(criterion_annihilation(opt));
  results.push_back(criterion_zeta_gaussian(opt));
  results.push_back(criterion_hecke(opt));
  results.push_back(criterion_functional_equation(opt));
  results.push_back(criterion_exact_algebra(opt));
  results.push_back(criterion_classification(opt));
  return results;
}

}  // namespace conecosine
