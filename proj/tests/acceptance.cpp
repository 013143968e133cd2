// Runs the ten acceptance criteria and prints one PASS/FAIL line each.

#include <chrono>
#include <cstdlib>
#include <string>

#include <fmt/core.h>

#include "contraction_oracle.hpp"
#include "psindex/index.hpp"
#include "psindex/radul.hpp"
#include "psindex/suites.hpp"
#include "psindex/wick/clifford.hpp"
#include "psindex/wick/todd.hpp"
#include "psindex/wick/weyl_word.hpp"

using namespace psindex;

namespace {

constexpr std::uint64_t kSeed = 7;
int failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail) {
  if (!pass) ++failures;
  fmt::print("criterion {:>2} {:<26} {}  {}\n", id, name, pass ? "PASS" : "FAIL", detail);
}

void print_failures(const suites::CheckResult& r) {
  for (const auto& f : r.failures) fmt::print("    {}\n", f);
}

void criterion_index() {
  const auto r = suites::check_index(kSeed);
  const double slowest = r.metrics.at("slowest_seconds");
  const bool pass = r.pass && r.trials >= 12 && slowest < 2.0;
  report(1, "index three-way", pass,
         fmt::format("cases={} integrality={:.2e} slowest={:.3f}s", r.trials, r.max_defect,
                     slowest));
  print_failures(r);
}

void criterion_generator() {
  const IndexReport r = index_report(suites::winding_symbol(1, 0, 4), suites::suite_options());
  const bool pass = r.agree && r.analytic_rounded == -1 && r.topological == -1 &&
                    r.oracle == -1 && r.analytic_general &&
                    std::lround(r.analytic_general->real()) == -1;
  report(2, "generator value", pass,
         fmt::format("analytic={:.12f} topological={} oracle={}",
                     r.analytic ? r.analytic->real() : 0.0, r.topological.value_or(0),
                     r.oracle.value_or(0)));
}

void criterion_check(int id, const std::string& name, const suites::CheckResult& r,
                     int min_trials) {
  report(id, name, r.pass && r.trials >= min_trials,
         fmt::format("trials={} max={:.2e} tol={:.0e}", r.trials, r.max_defect, r.tolerance));
  print_failures(r);
}

void criterion_q_independence() {
  const LogQ canonical = LogQ::canonical(4);
  const LogQ general = LogQ::general(suites::sample_q(4), 4);
  double worst = 0.0;
  int n = 0;
  for (const auto& c : suites::index_suite(kSeed)) {
    const ClassicalSymbol P = parametrix(c.Q, c.Q.depth());
    worst = std::max(worst, std::abs(radul(canonical, P, c.Q) - radul(general, P, c.Q)));
    ++n;
  }
  report(5, "q-independence", worst <= 1e-8,
         fmt::format("cases={} max={:.2e} tol=1e-08", n, worst));
}

void criterion_todd() {
  double worst = 0.0;
  bool pass = true;
  for (int n = 1; n <= 3; ++n) {
    const auto r = suites::check_todd(n, 20, kSeed, 6);
    pass = pass && r.pass && r.trials == 20;
    worst = std::max(worst, r.max_defect);
    print_failures(r);
  }
  const wick::EpsSeries td = wick::todd_series(Eigen::MatrixXcd::Ones(1, 1), 6);
  const double bern[] = {1.0, -0.5, 1.0 / 12, 0.0, -1.0 / 720};
  double bern_err = 0.0;
  for (int k = 0; k < 5; ++k) bern_err = std::max(bern_err, std::abs(td[k] - bern[k]));
  pass = pass && worst <= 1e-9 && bern_err <= 1e-12;
  report(7, "todd engine", pass,
         fmt::format("n=1..3 x 20 max={:.2e} tol=1e-09 bernoulli={:.2e}", worst, bern_err));
}

void criterion_contraction() {
  const std::complex<double> I(0.0, 1.0);
  double worst = 0.0;
  long pairs = 0;
  for (int n = 1; n <= 3; ++n) {
    std::vector<wick::MultiIndex> idx;
    for (int a0 = 0; a0 <= 4; ++a0)
      for (int a1 = 0; a1 <= (n > 1 ? 4 - a0 : 0); ++a1)
        for (int a2 = 0; a2 <= (n > 2 ? 4 - a0 - a1 : 0); ++a2)
          idx.push_back({a0, a1, a2, 0});
    for (const auto& a : idx)
      for (const auto& b : idx) {
        const auto brute = oracle::contract_brute({a[0], a[1], a[2]}, {b[0], b[1], b[2]});
        const wick::EpsSeries closed = wick::contract(a, b, 0);
        for (int m = 0; m <= 8; ++m) {
          std::complex<double> want = 0.0;
          if (const auto it = brute.find(m); it != brute.end()) {
            want = static_cast<double>(it->second);
            for (int e = 0; e < m; ++e) want *= I;
          }
          worst = std::max(worst, std::abs(closed[-m] - want));
        }
        ++pairs;
      }
  }
  report(8, "contraction oracle", worst <= 1e-12,
         fmt::format("pairs={} max={:.2e}", pairs, worst));
}

void criterion_supertrace() {
  bool pass = true;
  for (int n = 1; n <= 4; ++n) {
    pass = pass && wick::supertrace(wick::top_monomial(n)) ==
                       std::complex<double>(n % 2 ? -1.0 : 1.0);
    pass = pass && wick::supertrace(wick::pi_element(n)) == std::complex<double>(1.0);
  }
  report(9, "supertrace", pass && suites::check_supertrace().pass, "n=1..4 exact");
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  criterion_index();
  criterion_generator();
  criterion_check(3, "trace property", suites::check_trace(100, kSeed), 100);
  criterion_check(4, "cocycle identities", suites::check_cocycle(50, kSeed), 50);
  criterion_q_independence();
  criterion_check(6, "parametrix residual", suites::check_parametrix(kSeed), 12);
  criterion_todd();
  criterion_contraction();
  criterion_supertrace();
  criterion_check(10, "homotopy invariance", suites::check_homotopy(24, kSeed), 20);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  fmt::print("{} failed, {:.1f}s\n", failures, secs);
  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
