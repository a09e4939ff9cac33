#pragma once

// Command implementations behind the `swkb` tool. Data goes to `out`,
// diagnostics to `err`. Exit codes: 0 success / all checks pass,
// 1 numerical failure or failed check, 2 usage error.

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "swkb/oracle.hpp"
#include "swkb/problem.hpp"
#include "swkb/quadrature.hpp"
#include "swkb/quantizers.hpp"
#include "swkb/spectrum_table.hpp"

namespace swkb::cli {

enum ExitCode : int { ok = 0, numerical_failure = 1, usage_error = 2 };

/// Raised for flag combinations CLI11 cannot express on its own.
class usage_error_exception : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MethodSelection {
  bool swkb = false;
  bool wkb = false;
  bool oracle = false;
};

/// Parses "swkb,wkb", "all", ... ; "exact" requests the numerical oracle,
/// "langer" is accepted and always tabulated.
inline MethodSelection parse_methods(const std::string& list) {
  MethodSelection sel;
  std::stringstream ss(list);
  std::string token;
  bool any = false;
  while (std::getline(ss, token, ',')) {
    if (token.empty()) continue;
    any = true;
    if (token == "all") {
      sel = {true, true, true};
    } else if (token == "swkb") {
      sel.swkb = true;
    } else if (token == "wkb") {
      sel.wkb = true;
    } else if (token == "exact" || token == "oracle") {
      sel.oracle = true;
    } else if (token != "langer") {
      throw usage_error_exception("unknown method '" + token + "'");
    }
  }
  if (!any) throw usage_error_exception("empty --methods list");
  return sel;
}

struct SpectrumOptions {
  std::optional<int> m;
  int m_max = 2;
  int n_max = 2;
  std::string methods = "swkb,wkb";
  int grid = default_oracle_grid;
  std::string format = "csv";
};

template <class Work>
void run_parallel(std::size_t count, Work&& work) {
  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(count, 1));
  std::atomic<std::size_t> next{0};
  auto loop = [&] {
    for (std::size_t i = next++; i < count; i = next++) work(i);
  };
  std::vector<std::jthread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(loop);
  loop();
}

/// Rows in lexicographic (m, n_theta) order; row computations may run in parallel.
inline std::vector<SpectrumRow> compute_spectrum(const SpectrumOptions& opts) {
  const MethodSelection sel = parse_methods(opts.methods);
  if (opts.m && *opts.m < 0) throw usage_error_exception("--m must be >= 0");
  if (opts.m_max < 0 || opts.n_max < 0) throw usage_error_exception("--m-max and --n-max must be >= 0");
  if (sel.oracle && opts.grid < min_oracle_grid) throw usage_error_exception("--grid must be >= 50");

  std::vector<int> ms;
  if (opts.m) {
    ms.push_back(*opts.m);
  } else {
    for (int m = 0; m <= opts.m_max; ++m) ms.push_back(m);
  }

  std::map<int, std::vector<double>> oracle;
  if (sel.oracle) {
    std::vector<std::vector<double>> spectra(ms.size());
    run_parallel(ms.size(), [&](std::size_t i) {
      spectra[i] = build_discretization(OperatorKind::angular_T_form, ms[i], opts.grid)
                       .matrix.lowest_eigenvalues(std::size_t(opts.n_max) + 1);
    });
    for (std::size_t i = 0; i < ms.size(); ++i) oracle[ms[i]] = std::move(spectra[i]);
  }

  std::vector<std::pair<int, int>> cells;
  for (int m : ms) {
    for (int n = 0; n <= opts.n_max; ++n) cells.emplace_back(m, n);
  }

  std::vector<SpectrumRow> rows(cells.size());
  std::vector<std::exception_ptr> failures(cells.size());
  run_parallel(cells.size(), [&](std::size_t i) {
    const auto [m, n] = cells[i];
    try {
      std::optional<double> oracle_value;
      if (sel.oracle) oracle_value = oracle.at(m)[std::size_t(n)];
      rows[i] = build_spectrum_row(n, m, oracle_value, RowMethods{sel.swkb, sel.wkb});
    } catch (...) {
      failures[i] = std::current_exception();
    }
  });
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
  return rows;
}

inline int cmd_spectrum(const SpectrumOptions& opts, std::ostream& out) {
  const auto rows = compute_spectrum(opts);
  if (opts.format == "json") {
    write_json(out, rows);
  } else {
    write_csv(out, rows);
  }
  return ok;
}

struct VerifyOptions {
  std::string suite = "all";
  std::optional<int> m_max;
  int grid = default_oracle_grid;
  std::optional<double> tol;
};

struct CheckLine {
  std::string name;
  double measured = 0.0;
  double tolerance = 0.0;
  bool pass() const noexcept { return measured <= tolerance; }
};

inline std::string format_check(const CheckLine& c) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-40s %.6e  tol=%.1e  %s", c.name.c_str(), c.measured, c.tolerance,
                c.pass() ? "PASS" : "FAIL");
  return buf;
}

/// Max |V_-(m) - V_+(m-1) + 2m| for m in 1..m_max over `points` uniform
/// samples of [0.01, pi - 0.01].
inline double max_shape_invariance_residual(int m_max, int points = 1000) {
  const double lo = 0.01;
  const double hi = pi - 0.01;
  double worst = 0.0;
  for (int m = 1; m <= m_max; ++m) {
    for (int i = 0; i < points; ++i) {
      const double theta = lo + (hi - lo) * i / (points - 1);
      worst = std::max(worst, std::abs(shape_invariance_residual(m, theta)));
    }
  }
  return worst;
}

inline constexpr double swkb_energies[] = {0.5, 1.0, 2.0, 5.0, 10.0, 50.0};

/// Max |numerical - closed| SWKB action over the standard (E, m) table.
inline double max_swkb_action_gap(int m_max = 10) {
  double worst = 0.0;
  for (int m = 0; m <= m_max; ++m) {
    for (double e : swkb_energies) {
      worst = std::max(worst, std::abs(action_swkb(e, m).value - action_swkb_closed(e, m).value));
    }
  }
  return worst;
}

/// Max |numerical WKB action - pi (lambda - m)| for lambda - m in {0.5, 1.5, 2.5}.
inline double max_wkb_action_gap(int m_max = 10) {
  double worst = 0.0;
  for (int m = 1; m <= m_max; ++m) {
    for (double excess : {0.5, 1.5, 2.5}) {
      const double lambda = m + excess;
      worst = std::max(worst, std::abs(action_wkb(lambda, m).value - action_wkb_closed(lambda, m).value));
    }
  }
  return worst;
}

inline std::vector<CheckLine> run_verify(const VerifyOptions& opts) {
  const bool all = opts.suite == "all";
  std::vector<CheckLine> lines;

  if (all || opts.suite == "shape-invariance") {
    const int m_max = opts.m_max.value_or(20);
    if (m_max < 1) throw usage_error_exception("shape-invariance needs --m-max >= 1");
    lines.push_back({"shape-invariance m=1.." + std::to_string(m_max),
                     max_shape_invariance_residual(m_max), opts.tol.value_or(1e-9)});
  }
  if (all || opts.suite == "quadrature") {
    const double tol = opts.tol.value_or(1e-9);
    lines.push_back({"quadrature swkb numerical-vs-closed", max_swkb_action_gap(), tol});
    lines.push_back({"quadrature wkb numerical-vs-closed", max_wkb_action_gap(), tol});
  }
  if (all || opts.suite == "susy") {
    const int m_max = opts.m_max.value_or(3);
    if (m_max < 1) throw usage_error_exception("susy needs --m-max >= 1");
    if (opts.grid < min_oracle_grid) throw usage_error_exception("--grid must be >= 50");
    SusyTolerances tol;
    if (opts.tol) tol = {*opts.tol, *opts.tol, *opts.tol};
    for (int m = 1; m <= m_max; ++m) {
      const auto r = susy_checks(m, opts.grid, 6, tol);
      const std::string suffix = " m=" + std::to_string(m);
      lines.push_back({"susy ground-energy-vanishes" + suffix, r.ground_state_vanishes.measured,
                       r.ground_state_vanishes.tolerance});
      lines.push_back({"susy partner-spectra-coincide" + suffix, r.partner_spectra_coincide.measured,
                       r.partner_spectra_coincide.tolerance});
      lines.push_back({"susy spectral-shift" + suffix, r.spectral_shift.measured, r.spectral_shift.tolerance});
    }
  }
  return lines;
}

inline int cmd_verify(const VerifyOptions& opts, std::ostream& out) {
  const auto lines = run_verify(opts);
  bool all_pass = true;
  for (const auto& line : lines) {
    out << format_check(line) << '\n';
    all_pass = all_pass && line.pass();
  }
  return all_pass ? ok : numerical_failure;
}

struct ActionOptions {
  std::string method;
  int m = 0;
  std::optional<double> energy;
  std::optional<double> lambda;
  std::string path = "numerical";
};

inline int cmd_action(const ActionOptions& opts, std::ostream& out) {
  if (opts.m < 0) throw usage_error_exception("--m must be >= 0");
  double numerical = 0.0;
  double closed = 0.0;
  if (opts.method == "swkb") {
    if (!opts.energy || opts.lambda) throw usage_error_exception("swkb action takes --energy (and not --lambda)");
    if (opts.path != "closed") numerical = action_swkb(*opts.energy, opts.m).value;
    if (opts.path != "numerical") closed = action_swkb_closed(*opts.energy, opts.m).value;
  } else {
    if (!opts.lambda || opts.energy) throw usage_error_exception("wkb action takes --lambda (and not --energy)");
    if (opts.path != "closed") numerical = action_wkb(*opts.lambda, opts.m).value;
    if (opts.path != "numerical") closed = action_wkb_closed(*opts.lambda, opts.m).value;
  }

  if (opts.path == "numerical") {
    out << format_real(numerical) << '\n';
  } else if (opts.path == "closed") {
    out << format_real(closed) << '\n';
  } else {
    out << "numerical " << format_real(numerical) << '\n'
        << "closed " << format_real(closed) << '\n'
        << "gap " << format_real(numerical - closed) << '\n';
  }
  return ok;
}

/// Entry point shared by the executable and the tests.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Angular-momentum quantization: WKB (Langer), SWKB (exact) and a numerical oracle"};
  app.name("swkb");
  app.require_subcommand(1);

  std::string out_path;

  SpectrumOptions spectrum;
  int spectrum_m = -1;
  auto* sp = app.add_subcommand("spectrum", "Tabulate lambda^2 per (m, n_theta) for each method");
  auto* sp_m = sp->add_option("--m", spectrum_m, "Single azimuthal quantum number");
  auto* sp_mmax = sp->add_option("--m-max", spectrum.m_max, "Tabulate m = 0..m-max")->capture_default_str();
  sp_m->excludes(sp_mmax);
  sp->add_option("--n-max", spectrum.n_max, "Tabulate n_theta = 0..n-max")->capture_default_str();
  sp->add_option("--methods", spectrum.methods, "swkb,wkb,exact|oracle,langer or all")->capture_default_str();
  sp->add_option("--grid", spectrum.grid, "Oracle grid cells")->capture_default_str();
  sp->add_option("--format", spectrum.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sp->add_option("--out", out_path, "Write data to this file instead of stdout");

  VerifyOptions verify;
  int verify_m_max = -1;
  double verify_tol = -1.0;
  auto* vf = app.add_subcommand("verify", "Run numerical verification suites");
  vf->add_option("--suite", verify.suite, "Suite to run")
      ->check(CLI::IsMember({"shape-invariance", "susy", "quadrature", "all"}))
      ->capture_default_str();
  auto* vf_mmax = vf->add_option("--m-max", verify_m_max, "Largest m (default 20 shape-invariance, 3 susy)");
  vf->add_option("--grid", verify.grid, "Oracle grid for the susy suite")->capture_default_str();
  auto* vf_tol = vf->add_option("--tol", verify_tol, "Override the suite tolerance(s)");
  vf->add_option("--out", out_path, "Write report to this file instead of stdout");

  ActionOptions action;
  double action_energy = 0.0;
  double action_lambda = 0.0;
  auto* ac = app.add_subcommand("action", "Evaluate a single action integral");
  ac->add_option("--method", action.method, "swkb or wkb")->required()->check(CLI::IsMember({"swkb", "wkb"}));
  ac->add_option("--m", action.m, "Azimuthal quantum number")->capture_default_str();
  auto* ac_e = ac->add_option("--energy", action_energy, "E_- for the swkb action");
  auto* ac_l = ac->add_option("--lambda", action_lambda, "lambda for the wkb action");
  ac_e->excludes(ac_l);
  ac->add_option("--path", action.path, "numerical, closed or both")
      ->check(CLI::IsMember({"numerical", "closed", "both"}))
      ->capture_default_str();
  ac->add_option("--out", out_path, "Write result to this file instead of stdout");

  std::vector<const char*> argv;
  argv.push_back("swkb");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return usage_error;
  }

  std::ofstream file;
  std::ostream* data = &out;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      err << "error: cannot open '" << out_path << "' for writing\n";
      return usage_error;
    }
    data = &file;
  }

  try {
    if (sp->parsed()) {
      if (sp_m->count() > 0) spectrum.m = spectrum_m;
      return cmd_spectrum(spectrum, *data);
    }
    if (vf->parsed()) {
      if (vf_mmax->count() > 0) verify.m_max = verify_m_max;
      if (vf_tol->count() > 0) verify.tol = verify_tol;
      return cmd_verify(verify, *data);
    }
    if (ac_e->count() > 0) action.energy = action_energy;
    if (ac_l->count() > 0) action.lambda = action_lambda;
    return cmd_action(action, *data);
  } catch (const usage_error_exception& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  } catch (const swkb::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << '\n';
    return numerical_failure;
  }
}

}  // namespace swkb::cli
