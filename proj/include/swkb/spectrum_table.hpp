#pragma once

#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "swkb/quantizers.hpp"

namespace swkb {

/// One (m, n_theta) record comparing every quantization against l(l + 1).
struct SpectrumRow {
  int m = 0;
  int n_theta = 0;
  int l = 0;
  double lambda2_exact = 0.0;
  double lambda2_langer = 0.0;
  std::optional<double> lambda2_swkb;
  std::optional<double> lambda2_wkb;
  std::optional<double> lambda2_oracle;
  std::optional<double> err_swkb;
  std::optional<double> err_wkb;
  std::optional<double> err_oracle;
};

struct RowMethods {
  bool swkb = true;
  bool wkb = true;
};

inline SpectrumRow build_spectrum_row(int n_theta, int m, std::optional<double> oracle_value,
                                      RowMethods methods = {}, const QuantizerOptions& opts = {}) {
  const AngularProblem problem(m, n_theta);
  SpectrumRow row;
  row.m = m;
  row.n_theta = n_theta;
  row.l = problem.l();
  row.lambda2_exact = exact_lambda_squared(row.l);
  row.lambda2_langer = langer_lambda_squared(row.l);

  auto error_of = [&](double v) { return std::abs(v - row.lambda2_exact); };
  if (methods.swkb) {
    row.lambda2_swkb = quantize_swkb(n_theta, m, SwkbMode::numerical, opts).lambda_squared;
    row.err_swkb = error_of(*row.lambda2_swkb);
  }
  if (methods.wkb) {
    row.lambda2_wkb = quantize_wkb(n_theta, m, WkbMode::numerical, opts).lambda_squared;
    row.err_wkb = error_of(*row.lambda2_wkb);
  }
  if (oracle_value) {
    row.lambda2_oracle = *oracle_value;
    row.err_oracle = error_of(*oracle_value);
  }
  return row;
}

/// 12 significant digits, shortest of fixed/scientific ("%.12g").
inline std::string format_real(double value) {
  if (value == 0.0) value = 0.0;  // drop the sign of -0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

inline constexpr const char* spectrum_csv_header =
    "m,n_theta,l,lambda2_exact,lambda2_langer,lambda2_swkb,lambda2_wkb,lambda2_oracle,"
    "err_swkb,err_wkb,err_oracle";

inline void write_csv(std::ostream& os, std::span<const SpectrumRow> rows) {
  auto opt = [](const std::optional<double>& v) { return v ? format_real(*v) : std::string(); };
  os << spectrum_csv_header << '\n';
  for (const auto& r : rows) {
    os << r.m << ',' << r.n_theta << ',' << r.l << ',' << format_real(r.lambda2_exact) << ','
       << format_real(r.lambda2_langer) << ',' << opt(r.lambda2_swkb) << ',' << opt(r.lambda2_wkb)
       << ',' << opt(r.lambda2_oracle) << ',' << opt(r.err_swkb) << ',' << opt(r.err_wkb) << ','
       << opt(r.err_oracle) << '\n';
  }
}

namespace detail {

// round through the 12-digit text so the JSON carries the same digits as CSV
inline nlohmann::ordered_json json_real(double v) { return std::stod(format_real(v)); }

inline nlohmann::ordered_json json_real(const std::optional<double>& v) {
  return v ? json_real(*v) : nlohmann::ordered_json(nullptr);
}

}  // namespace detail

inline nlohmann::ordered_json to_json(const SpectrumRow& r) {
  using detail::json_real;
  return nlohmann::ordered_json{
      {"m", r.m},
      {"n_theta", r.n_theta},
      {"l", r.l},
      {"lambda2_exact", json_real(r.lambda2_exact)},
      {"lambda2_langer", json_real(r.lambda2_langer)},
      {"lambda2_swkb", json_real(r.lambda2_swkb)},
      {"lambda2_wkb", json_real(r.lambda2_wkb)},
      {"lambda2_oracle", json_real(r.lambda2_oracle)},
      {"err_swkb", json_real(r.err_swkb)},
      {"err_wkb", json_real(r.err_wkb)},
      {"err_oracle", json_real(r.err_oracle)},
  };
}

inline void write_json(std::ostream& os, std::span<const SpectrumRow> rows) {
  nlohmann::ordered_json array = nlohmann::ordered_json::array();
  for (const auto& r : rows) array.push_back(to_json(r));
  os << array.dump(2) << '\n';
}

}  // namespace swkb
