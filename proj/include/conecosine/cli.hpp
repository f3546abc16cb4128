#pragma once

// Command-line dispatcher. Every run prints one JSON object per line (see
// docs/report_schema.md); identical argv (including --seed) produce
// byte-identical reports apart from wall_time_ms.
//
// Exit codes: 0 success, 1 acceptance failure, 2 usage error, 3 domain
// error.

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "conecosine/acceptance.hpp"
#include "conecosine/conecosine.hpp"
#include "conecosine/report.hpp"

namespace conecosine::cli {

namespace detail {

// Exponent entries are "re" or "re+imI" tokens, comma separated.
inline Complex parse_complex_token(std::string token) {
  token.erase(std::remove_if(token.begin(), token.end(),
                             [](char c) { return c == ' '; }),
              token.end());
  if (token.empty()) throw DomainError("empty exponent entry");
  const bool has_i = token.back() == 'I' || token.back() == 'i';
  if (!has_i) return Complex(std::stod(token), 0.0);
  token.pop_back();
  // Split at the sign that starts the imaginary part; skip exponent signs.
  size_t split = std::string::npos;
  for (size_t p = token.size(); p-- > 1;) {
    if ((token[p] == '+' || token[p] == '-') && token[p - 1] != 'e' &&
        token[p - 1] != 'E') {
      split = p;
      break;
    }
  }
  if (split == std::string::npos)
    return Complex(0.0, std::stod(token));  // pure "imI"
  const double re = std::stod(token.substr(0, split));
  const double im = std::stod(token.substr(split));
  return Complex(re, im);
}

inline ConeExponent parse_exponent(const std::string& text) {
  std::vector<Complex> entries;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token.empty()) continue;
    entries.push_back(parse_complex_token(token));
  }
  if (entries.empty()) throw DomainError("no exponent entries in '" + text + "'");
  return ConeExponent(std::move(entries));
}

// Matrices come as semicolon-separated rows of comma-separated entries.
inline Matrix parse_matrix(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::stringstream ss(text);
  std::string row;
  while (std::getline(ss, row, ';')) {
    std::vector<double> entries;
    std::stringstream rs(row);
    std::string cell;
    while (std::getline(rs, cell, ',')) {
      if (!cell.empty()) entries.push_back(std::stod(cell));
    }
    if (!entries.empty()) rows.push_back(std::move(entries));
  }
  if (rows.empty()) throw DomainError("empty matrix literal");
  Matrix out(rows.size(), rows[0].size());
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows[0].size())
      throw DomainError("ragged matrix literal");
    for (size_t j = 0; j < rows[i].size(); ++j)
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          rows[i][j];
  }
  return out;
}

inline std::vector<int> parse_pairing(const std::string& text, int m) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ','))
    if (!token.empty()) out.push_back(std::stoi(token));
  if (out.empty())
    for (int i = 0; i < 2 * m; ++i) out.push_back(i);
  return out;
}

inline std::string json_bool(bool b) { return b ? "true" : "false"; }

inline std::string witnesses_json(const DomainReport& rep) {
  std::string out = "[";
  for (size_t i = 0; i < rep.witnesses.size(); ++i) {
    if (i) out += ',';
    out += "{\"j\":" + std::to_string(rep.witnesses[i].index) +
           ",\"rule\":\"" + rep.witnesses[i].rule + "\"}";
  }
  return out + "]";
}

struct Emitter {
  std::ostream* stream;
  void line(const std::string& s) { (*stream) << s << '\n'; }
};

using Clock = std::chrono::steady_clock;

}  // namespace detail

// Runs one CLI invocation; `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{
      "composite cosine transforms on Stiefel manifolds\n"
      "Exponent vectors are comma-separated entries, each 're' or 're+imI'\n"
      "(e.g. --lambda \"1.5,-0.5+0.25I\"). Matrices are semicolon-separated\n"
      "rows (e.g. --r \"2,0.5;0.5,3\"). CONECOSINE_THREADS overrides the\n"
      "Monte Carlo worker count; results do not depend on it."};
  app.require_subcommand(1);
  app.fallthrough();  // allow --out after the subcommand

  std::string out_path;
  app.add_option("--out", out_path, "write reports to a file");

  // Shared option storage; each subcommand binds the pieces it uses.
  int n = 0, m = 0, k = 0, trials = 1000;
  std::string lambda_text, r_text, y_text, pairing_text, grid_text;
  std::uint64_t seed = 0, frame_seed = 1, y_seed = 0;
  std::int64_t n_samples = 1000000;
  double beta = 1.0, y_scale = 0.5;
  bool with_mc = false, star = false, use_csv = false, quick = false,
       full = false, haar_frame = false;

  auto* c_gamma = app.add_subcommand("gamma", "cone gamma function");
  c_gamma->add_option("--m", m)->required();
  c_gamma->add_option("--lambda", lambda_text);
  std::string siegel_text;
  c_gamma->add_option("--siegel", siegel_text,
                      "evaluate the scalar Siegel gamma instead");

  auto* c_sigma = app.add_subcommand("sigma", "total Haar mass");
  c_sigma->add_option("--n", n)->required();
  c_sigma->add_option("--m", m)->required();

  auto* c_power = app.add_subcommand("power", "composite power, both routes");
  c_power->add_option("--r", r_text)->required();
  c_power->add_option("--lambda", lambda_text)->required();

  auto* c_classify = app.add_subcommand("classify", "domain membership");
  c_classify->add_option("--n", n)->required();
  c_classify->add_option("--m", m)->required();
  c_classify->add_option("--lambda", lambda_text)->required();

  auto* c_avg = app.add_subcommand("avg", "rotation-averaged kernel");
  c_avg->add_option("--n", n)->required();
  c_avg->add_option("--m", m)->required();
  c_avg->add_option("--lambda", lambda_text);
  c_avg->add_flag("--mc", with_mc, "also run the Monte Carlo estimator");
  c_avg->add_option("--N", n_samples);
  c_avg->add_option("--seed", seed);
  c_avg->add_option("--grid", grid_text, "scalar lambda grid start:stop:count");
  c_avg->add_flag("--csv", use_csv, "emit a CSV sweep instead of JSON");

  auto* c_cosine = app.add_subcommand("cosine", "transform Monte Carlo");
  c_cosine->add_option("--n", n)->required();
  c_cosine->add_option("--m", m)->required();
  c_cosine->add_option("--lambda", lambda_text)->required();
  c_cosine->add_option("--N", n_samples);
  c_cosine->add_option("--seed", seed);
  c_cosine->add_option("--k", k, "H-polynomial degree (default: f = 1)");
  c_cosine->add_option("--pairing", pairing_text);
  c_cosine->add_flag("--haar-frame", haar_frame,
                     "evaluate at a seeded Haar frame instead of the "
                     "coordinate frame");
  c_cosine->add_option("--frame-seed", frame_seed);
  bool cosine_k_given = false;

  auto* c_eigen = app.add_subcommand("eigen", "eigenvalue relation check");
  c_eigen->add_option("--n", n)->required();
  c_eigen->add_option("--m", m)->required();
  c_eigen->add_option("--k", k)->required();
  c_eigen->add_option("--lambda", lambda_text);
  c_eigen->add_option("--N", n_samples);
  c_eigen->add_option("--seed", seed);
  c_eigen->add_option("--pairing", pairing_text);
  c_eigen->add_flag("--haar-frame", haar_frame);
  c_eigen->add_option("--frame-seed", frame_seed);
  c_eigen->add_option("--grid", grid_text,
                      "multiplier sweep over a scalar lambda grid");
  c_eigen->add_flag("--csv", use_csv);

  auto* c_annihilate =
      app.add_subcommand("annihilate", "non-injectivity witness");
  c_annihilate->add_option("--n", n)->required();
  c_annihilate->add_option("--m", m)->required();
  c_annihilate->add_option("--lambda", lambda_text)->required();
  c_annihilate->add_option("--k", k)->required();
  c_annihilate->add_option("--N", n_samples);
  c_annihilate->add_option("--seed", seed);
  c_annihilate->add_option("--pairing", pairing_text);
  c_annihilate->add_flag("--haar-frame", haar_frame);
  c_annihilate->add_option("--frame-seed", frame_seed);

  auto* c_zeta = app.add_subcommand("zeta", "Gaussian zeta integral");
  c_zeta->add_option("--n", n)->required();
  c_zeta->add_option("--m", m)->required();
  c_zeta->add_option("--lambda", lambda_text)->required();
  c_zeta->add_option("--N", n_samples);
  c_zeta->add_option("--seed", seed);
  c_zeta->add_option("--beta", beta);
  c_zeta->add_flag("--star", star, "starred kernel (omega r omega)^lambda");

  auto* c_hecke = app.add_subcommand("hecke", "Hecke identity check");
  c_hecke->add_option("--n", n)->required();
  c_hecke->add_option("--m", m)->required();
  c_hecke->add_option("--k", k)->required();
  c_hecke->add_option("--y", y_text, "evaluation point as a matrix literal");
  c_hecke->add_option("--y-seed", y_seed, "or a seeded Gaussian point");
  c_hecke->add_option("--y-scale", y_scale);
  c_hecke->add_option("--N", n_samples);
  c_hecke->add_option("--seed", seed);
  c_hecke->add_option("--pairing", pairing_text);

  auto* c_funceq = app.add_subcommand("funceq", "functional equation");
  c_funceq->add_option("--n", n)->required();
  c_funceq->add_option("--m", m)->required();
  c_funceq->add_option("--lambda", lambda_text)->required();
  c_funceq->add_option("--k", k, "H-polynomial degree (default: f = 1)");
  bool funceq_k_given = false;
  c_funceq->add_option("--pairing", pairing_text);

  auto* c_duality = app.add_subcommand("duality", "projection-volume duality");
  c_duality->add_option("--n", n)->required();
  c_duality->add_option("--m", m)->required();
  c_duality->add_option("--trials", trials);
  c_duality->add_option("--seed", seed);

  auto* c_suite = app.add_subcommand("suite", "full verification battery");
  c_suite->add_flag("--quick", quick, "reduced sample counts");
  c_suite->add_flag("--full", full, "spec-scale sample counts (default)");
  std::uint64_t suite_seed = 1234;
  c_suite->add_option("--seed", suite_seed);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help() << std::flush;
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }
  cosine_k_given = c_cosine->count("--k") > 0;
  funceq_k_given = c_funceq->count("--k") > 0;

  std::ofstream file_stream;
  std::ostream* sink = &out;
  if (!out_path.empty()) {
    file_stream.open(out_path);
    if (!file_stream) {
      err << "cannot open " << out_path << "\n";
      return 2;
    }
    sink = &file_stream;
  }
  detail::Emitter emit{sink};

  const auto t0 = detail::Clock::now();
  auto elapsed_ms = [&]() {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               detail::Clock::now() - t0)
        .count();
  };

  auto param = [](const std::string& key, const std::string& value) {
    return std::pair<std::string, std::string>{key, value};
  };

  try {
    if (c_gamma->parsed()) {
      if (siegel_text.empty() && lambda_text.empty()) {
        err << "gamma needs --lambda or --siegel\n";
        return 2;
      }
      RunReport rep;
      rep.command = "gamma";
      if (!siegel_text.empty()) {
        const Complex s = detail::parse_complex_token(siegel_text);
        rep.params = {param("m", std::to_string(m)),
                      param("siegel", siegel_text)};
        rep.result.value = siegel_gamma(m, s);
      } else {
        const ConeExponent lambda = detail::parse_exponent(lambda_text);
        rep.params = {param("m", std::to_string(m)),
                      param("lambda", lambda_text)};
        if (lambda.dim() != m) throw DimensionError("lambda length != m");
        rep.result.value = gamma_omega(lambda);
      }
      rep.wall_time_ms = elapsed_ms();
      emit.line(to_json_line(rep));
      return rep.pass ? 0 : 1;
    }

    if (c_sigma->parsed()) {
      RunReport rep;
      rep.command = "sigma";
      rep.params = {param("n", std::to_string(n)), param("m", std::to_string(m))};
      rep.result.real_value = stiefel_mass(n, m);
      rep.wall_time_ms = elapsed_ms();
      emit.line(to_json_line(rep));
      return rep.pass ? 0 : 1;
    }

    if (c_power->parsed()) {
      const Matrix r = detail::parse_matrix(r_text);
      const ConeExponent lambda = detail::parse_exponent(lambda_text);
      PosDefMatrix p(r);
      RunReport rep;
      rep.command = "power";
      rep.params = {param("r", r_text), param("lambda", lambda_text)};
      const Complex via_character = composite_power(p, lambda);
      const Complex via_minors = composite_power_from_minors(p, lambda);
      rep.result.value = via_character;
      rep.result.closed_form = via_minors;
      const double rel = std::abs(via_character - via_minors) /
                         std::max({std::abs(via_character),
                                   std::abs(via_minors), 1e-300});
      rep.result.rel_err = rel;
      rep.pass = rel < 1e-9;
      rep.wall_time_ms = elapsed_ms();
      emit.line(to_json_line(rep));
      return rep.pass ? 0 : 1;
    }

    if (c_classify->parsed()) {
      const ConeExponent lambda = detail::parse_exponent(lambda_text);
      const DomainReport domain = classify(lambda, n, m);
      RunReport rep;
      rep.command = "classify";
      rep.params = {param("n", std::to_string(n)),
                    param("m", std::to_string(m)),
                    param("lambda", lambda_text)};
      rep.result.extra = {
          {"in_abs_domain_zeta", detail::json_bool(domain.in_abs_domain_zeta)},
          {"on_polar_set", detail::json_bool(domain.on_polar_set)},
          {"in_existence_domain",
           detail::json_bool(domain.in_existence_domain)},
          {"injective", detail::json_bool(domain.injective)},
          {"frontier", detail::json_bool(domain.frontier)},
          {"witnesses", detail::witnesses_json(domain)},
      };
      rep.wall_time_ms = elapsed_ms();
      emit.line(to_json_line(rep));
      return rep.pass ? 0 : 1;
    }

    if (c_avg->parsed()) {
      if (!grid_text.empty()) {
        if (!use_csv) throw DomainError("--grid requires --csv");
        double lo, hi;
        int count;
        if (std::sscanf(grid_text.c_str(), "%lf:%lf:%d", &lo, &hi, &count) !=
                3 ||
            count < 2)
          throw DomainError("grid must be start:stop:count");
        (*sink) << "lambda,re,im\n";
        for (int i = 0; i < count; ++i) {
          const double l = lo + (hi - lo) * i / (count - 1);
          const Complex v = avg_closed_form(n, m, ConeExponent::constant(m, l));
          (*sink) << l << ',' << v.real() << ',' << v.imag() << '\n';
        }
        return 0;
      }
      const ConeExponent lambda = detail::parse_exponent(lambda_text);
      RunReport rep;
      rep.command = "avg";
      rep.params = {param("n", std::to_string(n)),
                    param("m", std::to_string(m)),
                    param("lambda", lambda_text)};
      const Complex closed = avg_closed_form(n, m, lambda);
      rep.result.closed_form = closed;
      if (with_mc) {
        McConfig config;
        config.n_samples = n_samples;
        config.seed = seed;
        const McEstimate est = cosine_mc(IntegrandSpec::one(), lambda,
                                         StiefelFrame::coordinate(n, m),
                                         config);
        rep.result.value = est.value;
        rep.result.std_error = est.std_error;
        const double z = std::abs(est.value - closed) / est.std_error;
        rep.result.z_score = z;
        rep.pass = z < 3.0;
        rep.seed = seed;
        rep.n_samples = est.n_samples;
      }
      rep.wall_time_ms = elapsed_ms();
      emit.line(to_json_line(rep));
      return rep.pass ? 0 : 1;
    }

    auto make_frame = [&](int rows, int cols) {
      if (!haar_frame) return StiefelFrame::coordinate(rows, cols);
      PhiloxEngine frame_eng(frame_seed, 0);
      return sample_haar(rows, cols, frame_eng);
    };
    auto make_poly = [&](int degree) {
      return HPolynomial::from_pairing(n, m, degree,
                                       detail::parse_pairing(pairing_text, m));
    };

    if (c_cosine->parsed()) {
      const ConeExponent lambda = detail::parse_exponent(lambda_text);
      McConfig config;
      config.n_samples = n_samples;
      config.seed = seed;
      const IntegrandSpec f = cosine_k_given
                                  ? IntegrandSpec::h_polynomial(make_poly(k))
                                  : IntegrandSpec::one();
      const StiefelFrame u = make_frame(n, m);
      const McEstimate est = cosine_mc(f, lambda, u, config);
      RunReport rep;
      rep.command = "cosine";
      rep.params = {param("n", std::to_string(n)),
                    param("m", std::to_string(m)),
                    param("lambda", lambda_text),
                    param("N", std::to_string(n_samples))};
      if (cosine_k_given) rep.params.push_back(param("k", std::to_string(k)));
      rep.result.value = est.value;
      rep.result.std_error = est.std_error;
      if (!cosine_k_given) {
        const Complex closed = avg_closed_form(n, m, lambda);
        rep.result.closed_form = closed;
        const double z = std::abs(est.value - closed) / est.std_error;
        rep.result.z_score = z;
        rep.pass = z < 3.0;
      }
      rep.seed = seed;
      rep.n_samples = est.n_samples;
      rep.wall_time_ms = elapsed_ms();
      emit.line(to_json_line(rep));
      return rep.pass ? 0 : 1;
    }

    if (c_eigen->parsed()) {
      if (!grid_text.empty()) {
        if (!use_csv) throw DomainError("--grid requires --csv");
        double lo, hi;
        int count;
        if (std::sscanf(grid_text.c_str(), "%lf:%lf:%d", &lo, &hi, &count) !=
                3 ||
            count < 2)
          throw DomainError("grid must be start:stop:count");
        (*sink) << "lambda,re_mu,im_mu\n";
        for (int i = 0; i < count; ++i) {
          const double l = lo + (hi - lo) * i / (count - 1);
          const Complex mu =
              multiplier(n, m, k, ConeExponent::constant(m, l));
          (*sink) << l << ',' << mu.real() << ',' << mu.imag() << '\n';
        }
        return 0;
      }
      const ConeExponent lambda = detail::parse_exponent(lambda_text);
      McConfig config;
      config.n_samples = n_samples;
      config.seed = seed;
      const EigenResidual res =
          eigen_residual(make_poly(k), lambda, make_frame(n, m), config);
      RunReport rep;
      rep.command = "eigen";
      rep.params = {param("n", std::to_string(n)),
                    param("m", std::to_string(m)),
                    param("k", std::to_string(k)),
                    param("lambda", lambda_text),
                    param("N", std::to_string(n_samples))};
      rep.result.value = res.mc.value;
      rep.result.std_error = res.mc.std_error;
      rep.result.closed_form = res.predicted;
      rep.result.z_score = res.z_score;
      rep.pass = res.z_score < 3.0;
      rep.seed = seed;
      rep.n_samples = res.mc.n_samples;
      rep.wall_time_ms = elapsed_ms();
      emit.line(to_json_line(rep));
      return rep.pass ? 0 : 1;
    }

    if (c_annihilate->parsed()) {
      const ConeExponent lambda = detail::parse_exponent(lambda_text);
      const Complex mu = multiplier(n, m, k, lambda);
      McConfig config;
      config.n_samples = n_samples;
      config.seed = seed;
      const McEstimate est =
          cosine_mc(IntegrandSpec::h_polynomial(make_poly(k)), lambda,
                    make_frame(n, m), config);
      RunReport rep;
      rep.command = "annihilate";
      rep.params = {param("n", std::to_string(n)),
                    param("m", std::to_string(m)),
                    param("lambda", lambda_text),
                    param("k", std::to_string(k)),
                    param("N", std::to_string(n_samples))};
      rep.result.value = est.value;
      rep.result.std_error = est.std_error;
      rep.result.closed_form = Complex(0.0, 0.0);
      const double ratio = std::abs(est.value) / est.std_error;
      rep.result.z_score = ratio;
      rep.result.extra = {
          {"multiplier", conecosine::detail::json_complex(mu)}};
      rep.pass = mu == Complex(0.0, 0.0) && ratio < 3.0;
      rep.seed = seed;
      rep.n_samples = est.n_samples;
      rep.wall_time_ms = elapsed_ms();
      emit.line(to_json_line(rep));
      return rep.pass ? 0 : 1;
    }

    if (c_zeta->parsed()) {
      const ConeExponent lambda = detail::parse_exponent(lambda_text);
      McConfig config;
      config.n_samples = n_samples;
      config.seed = seed;
      const GaussianTestFunction phi{beta};
      const McEstimate est =
          star ? zeta_star_mc(IntegrandSpec::one(), lambda, phi, n, m, config)
               : zeta_mc(IntegrandSpec::one(), lambda, phi, n, m, config);
      RunReport rep;
      rep.command = "zeta";
      rep.params = {param("n", std::to_string(n)),
                    param("m", std::to_string(m)),
                    param("lambda", lambda_text),
                    param("beta", std::to_string(beta)),
                    param("N", std::to_string(n_samples))};
      if (star) rep.params.push_back(param("star", "true"));
      const Complex closed = zeta_gaussian_closed_form(n, m, lambda, beta);
      rep.result.value = est.value;
      rep.result.std_error = est.std_error;
      rep.result.closed_form = closed;
      const double z = std::abs(est.value - closed) / est.std_error;
      rep.result.z_score = z;
      rep.pass = z < 3.0;
      rep.seed = seed;
      rep.n_samples = est.n_samples;
      rep.wall_time_ms = elapsed_ms();
      emit.line(to_json_line(rep));
      return rep.pass ? 0 : 1;
    }

    if (c_hecke->parsed()) {
      Matrix y;
      if (!y_text.empty()) {
        y = detail::parse_matrix(y_text);
      } else {
        PhiloxEngine ys(y_seed, 0);
        y.resize(n, m);
        fill_standard_normal(y, ys);
        y *= y_scale;
      }
      McConfig config;
      config.n_samples = n_samples;
      config.seed = seed;
      const HeckeCheck res = hecke_check(make_poly(k), y, config);
      RunReport rep;
      rep.command = "hecke";
      rep.params = {param("n", std::to_string(n)),
                    param("m", std::to_string(m)),
                    param("k", std::to_string(k)),
                    param("N", std::to_string(n_samples))};
      rep.result.value = res.lhs.value;
      rep.result.std_error = res.lhs.std_error;
      rep.result.closed_form = res.rhs;
      rep.result.z_score = res.z_score;
      rep.pass = res.z_score < 3.0;
      rep.seed = seed;
      rep.n_samples = res.lhs.n_samples;
      rep.wall_time_ms = elapsed_ms();
      emit.line(to_json_line(rep));
      return rep.pass ? 0 : 1;
    }

    if (c_funceq->parsed()) {
      const ConeExponent lambda = detail::parse_exponent(lambda_text);
      const IntegrandSpec f = funceq_k_given
                                  ? IntegrandSpec::h_polynomial(make_poly(k))
                                  : IntegrandSpec::one();
      const FunctionalEquationCheck res =
          functional_equation_check(n, m, lambda, f);
      RunReport rep;
      rep.command = "funceq";
      rep.params = {param("n", std::to_string(n)),
                    param("m", std::to_string(m)),
                    param("lambda", lambda_text)};
      if (funceq_k_given) rep.params.push_back(param("k", std::to_string(k)));
      rep.result.value = res.lhs;
      rep.result.closed_form = res.rhs;
      rep.result.rel_err = res.rel_err;
      rep.pass = res.rel_err < 1e-9;
      rep.wall_time_ms = elapsed_ms();
      emit.line(to_json_line(rep));
      return rep.pass ? 0 : 1;
    }

    if (c_duality->parsed()) {
      PhiloxEngine eng(seed, 0);
      double worst = 0.0;
      for (int t = 0; t < trials; ++t) {
        auto a = sample_haar(n, m, eng);
        auto b = sample_haar(n, m, eng);
        worst = std::max(
            worst, std::abs(projection_volume(a, b, Complex(1.0)) -
                            projection_volume(orthocomplement(a),
                                              orthocomplement(b),
                                              Complex(1.0))));
      }
      RunReport rep;
      rep.command = "duality";
      rep.params = {param("n", std::to_string(n)),
                    param("m", std::to_string(m)),
                    param("trials", std::to_string(trials))};
      rep.result.real_value = worst;
      rep.pass = worst < 1e-10;
      rep.seed = seed;
      rep.n_samples = trials;
      rep.wall_time_ms = elapsed_ms();
      emit.line(to_json_line(rep));
      return rep.pass ? 0 : 1;
    }

    if (c_suite->parsed()) {
      AcceptanceOptions options;
      options.full = full || !quick;
      options.seed = suite_seed;
      const auto results = run_acceptance(options);
      bool all_pass = true;
      for (const auto& r : results) {
        RunReport rep;
        rep.command = "suite";
        rep.params = {param("mode", quick ? "quick" : "full"),
                      param("criterion", std::to_string(r.id))};
        rep.result.extra = {
            {"name", conecosine::detail::json_string(r.name)},
            {"detail", conecosine::detail::json_string(r.detail)}};
        rep.pass = r.pass;
        rep.seed = options.seed;
        rep.wall_time_ms = r.wall_ms;
        emit.line(to_json_line(rep));
        all_pass = all_pass && r.pass;
      }
      return all_pass ? 0 : 1;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }

  err << "no subcommand\n";
  return 2;
}

}  // namespace conecosine::cli
