// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "swkb/cli.hpp"
#include "swkb/swkb.hpp"

#ifndef SWKB_GOLDEN_DIR
#error "SWKB_GOLDEN_DIR must point at tests/golden"
#endif

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

// 1. numerical SWKB reproduces l(l+1) for 0 <= m, n <= 10
Outcome swkb_exactness() {
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (int m = 0; m <= 10; ++m) {
    for (int n = 0; n <= 10; ++n) {
      const auto r = swkb::quantize_swkb(n, m, swkb::SwkbMode::numerical);
      worst = std::max(worst, std::abs(r.lambda_squared - double(n + m) * (n + m + 1)));
    }
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {worst <= 1e-8 && seconds < 10.0,
          "max |err| = " + sci(worst) + " (tol 1e-8), " + sci(seconds) + " s (limit 10 s)"};
}

// 2. numerical WKB gives (l + 1/2)^2; Langer - exact is exactly 1/4
Outcome wkb_langer() {
  double worst = 0.0;
  bool gap_exact = true;
  for (int m = 0; m <= 10; ++m) {
    for (int n = 0; n <= 10; ++n) {
      const auto r = swkb::quantize_wkb(n, m);
      worst = std::max(worst, std::abs(r.lambda_squared - (n + m + 0.5) * (n + m + 0.5)));
      const auto row = swkb::build_spectrum_row(n, m, std::nullopt, {false, false});
      gap_exact = gap_exact && (row.lambda2_langer - row.lambda2_exact == 0.25);
    }
  }
  return {worst <= 1e-8 && gap_exact,
          "max |err| = " + sci(worst) + " (tol 1e-8), Langer gap exactly 1/4: " + (gap_exact ? "yes" : "no")};
}

// 3. numerical vs closed SWKB action over E x m table
Outcome closed_form_action() {
  const double gap = swkb::cli::max_swkb_action_gap(10);
  return {gap <= 1e-9, "max |numerical - closed| = " + sci(gap) + " (tol 1e-9)"};
}

// 4. shape invariance on 1000 points of [0.01, pi - 0.01], m = 1..20
Outcome shape_invariance() {
  const double worst = swkb::cli::max_shape_invariance_residual(20, 1000);
  return {worst <= 1e-9, "max residual = " + sci(worst) + " (tol 1e-9)"};
}

// 5. angular oracle: first 5 eigenvalues within 1e-3 at n = 4000, error ratio >= 3.5 on doubling
Outcome oracle_ground_truth() {
  const auto t0 = std::chrono::steady_clock::now();
  // below this the error is eigensolver roundoff, not discretization error
  constexpr double roundoff_floor = 1e-9;
  double worst = 0.0;
  double worst_ratio = std::numeric_limits<double>::infinity();
  int exact_modes = 0;
  for (int m = 0; m <= 3; ++m) {
    const auto base =
        swkb::build_discretization(swkb::OperatorKind::angular_T_form, m, 4000).matrix.lowest_eigenvalues(5);
    const auto fine =
        swkb::build_discretization(swkb::OperatorKind::angular_T_form, m, 8000).matrix.lowest_eigenvalues(5);
    for (int j = 0; j < 5; ++j) {
      const double exact = swkb::exact_lambda_squared(m + j);
      const double e_base = std::abs(base[j] - exact);
      const double e_fine = std::abs(fine[j] - exact);
      worst = std::max(worst, e_base);
      if (e_base <= roundoff_floor && e_fine <= roundoff_floor) {
        ++exact_modes;
        continue;
      }
      worst_ratio = std::min(worst_ratio, e_base / e_fine);
    }
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {worst <= 1e-3 && worst_ratio >= 3.5 && seconds < 30.0,
          "max |err| = " + sci(worst) + " (tol 1e-3), min doubling ratio = " + sci(worst_ratio) +
              " (need 3.5; " + std::to_string(exact_modes) + " mode(s) exact to roundoff), " + sci(seconds) +
              " s (limit 30 s)"};
}

// 6. SUSY statements (i)-(iii) for m = 1..3 at n = 4000
Outcome susy_statements() {
  double ground = 0.0, partner = 0.0, shift = 0.0;
  bool pass = true;
  for (int m = 1; m <= 3; ++m) {
    const auto r = swkb::susy_checks(m, 4000, 6);
    ground = std::max(ground, r.ground_state_vanishes.measured);
    partner = std::max(partner, r.partner_spectra_coincide.measured);
    shift = std::max(shift, r.spectral_shift.measured);
    pass = pass && r.pass();
  }
  pass = pass && ground <= 1e-3 && partner <= 5e-3 && shift <= 5e-3;
  return {pass, "|E_-^0| = " + sci(ground) + " (tol 1e-3), partner gap = " + sci(partner) +
                    " (tol 5e-3), shifted vs l(l+1) = " + sci(shift) + " (tol 5e-3)"};
}

// 7. ODE residual of sin^m at lambda^2 = m(m+1), and detection of lambda^2 + 1
Outcome ground_state_residual() {
  double worst_good = 0.0;
  double least_bad = std::numeric_limits<double>::infinity();
  for (int m = 0; m <= 5; ++m) {
    const auto g = swkb::ground_state(m);
    auto t = [&](double x) { return g.t0(x); };
    worst_good = std::max(worst_good, swkb::ode_residual(m, g.lambda0_squared(), t, 200));
    least_bad = std::min(least_bad, swkb::ode_residual(m, g.lambda0_squared() + 1.0, t, 200));
  }
  return {worst_good <= 1e-8 && least_bad >= 0.5,
          "max residual = " + sci(worst_good) + " (tol 1e-8), min perturbed residual = " + sci(least_bad) +
              " (need >= 0.5)"};
}

// 8. CLI golden file
Outcome cli_golden() {
  std::ostringstream out, err;
  const int code = swkb::cli::run(
      {"spectrum", "--m-max", "2", "--n-max", "2", "--methods", "swkb,wkb", "--format", "csv"}, out, err);
  std::ifstream in(std::string(SWKB_GOLDEN_DIR) + "/spectrum_m2_n2_swkb_wkb.csv", std::ios::binary);
  if (!in) return {false, "golden file missing"};
  std::stringstream golden;
  golden << in.rdbuf();
  const bool same = code == 0 && out.str() == golden.str();
  return {same, same ? "byte-identical to golden" : "output differs from golden (exit " + std::to_string(code) + ")"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 swkb-exactness", swkb_exactness},
      {"2 wkb-langer", wkb_langer},
      {"3 closed-form-action", closed_form_action},
      {"4 shape-invariance", shape_invariance},
      {"5 oracle-ground-truth", oracle_ground_truth},
      {"6 susy-statements", susy_statements},
      {"7 ground-state-residual", ground_state_residual},
      {"8 cli-golden", cli_golden},
  };

  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] %-26s %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
    failures += o.pass ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", int(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
