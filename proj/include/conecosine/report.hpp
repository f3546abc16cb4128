#pragma once

// Newline-delimited JSON reports with a frozen field layout (see
// docs/report_schema.md). Numbers are printed with 17 significant digits so
// reports round-trip to the exact doubles; the emitter is hand-rolled to
// keep byte-identical output across runs.

#include <cstdio>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "conecosine/linalg.hpp"

namespace conecosine {

namespace detail {

inline std::string json_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

inline std::string json_string(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  out += '"';
  return out;
}

inline std::string json_complex(Complex z) {
  return "{\"re\":" + json_number(z.real()) +
         ",\"im\":" + json_number(z.imag()) + "}";
}

}  // namespace detail

// One result object; only the populated fields are emitted, in this order.
struct ReportResult {
  std::optional<Complex> value;
  std::optional<double> real_value;
  std::optional<double> std_error;
  std::optional<Complex> closed_form;
  std::optional<double> z_score;
  std::optional<double> rel_err;
  std::vector<std::pair<std::string, std::string>> extra;  // preformatted
};

struct RunReport {
  std::string command;
  std::vector<std::pair<std::string, std::string>> params;  // verbatim argv
  ReportResult result;
  std::uint64_t seed = 0;
  std::int64_t n_samples = 0;
  std::int64_t wall_time_ms = 0;
  bool pass = true;
};

inline std::string to_json_line(const RunReport& report) {
  std::string out = "{\"command\":" + detail::json_string(report.command);
  out += ",\"params\":{";
  for (size_t i = 0; i < report.params.size(); ++i) {
    if (i) out += ',';
    out += detail::json_string(report.params[i].first) + ":" +
           detail::json_string(report.params[i].second);
  }
  out += "},\"result\":{";
  bool first = true;
  auto field = [&](const std::string& key, const std::string& body) {
    if (!first) out += ',';
    first = false;
    out += detail::json_string(key) + ":" + body;
  };
  if (report.result.value) field("value", detail::json_complex(*report.result.value));
  if (report.result.real_value)
    field("value", detail::json_number(*report.result.real_value));
  if (report.result.std_error)
    field("std_error", detail::json_number(*report.result.std_error));
  if (report.result.closed_form)
    field("closed_form", detail::json_complex(*report.result.closed_form));
  if (report.result.z_score)
    field("z_score", detail::json_number(*report.result.z_score));
  if (report.result.rel_err)
    field("rel_err", detail::json_number(*report.result.rel_err));
  for (const auto& [key, body] : report.result.extra) field(key, body);
  out += "},\"seed\":" + std::to_string(report.seed);
  out += ",\"n_samples\":" + std::to_string(report.n_samples);
  out += ",\"wall_time_ms\":" + std::to_string(report.wall_time_ms);
  out += ",\"pass\":";
  out += report.pass ? "true" : "false";
  out += '}';
  return out;
}

}  // namespace conecosine
