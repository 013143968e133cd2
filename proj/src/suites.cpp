#include "psindex/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <optional>

#include <fmt/format.h>

#include "psindex/error.hpp"
#include "psindex/oracle.hpp"
#include "psindex/radul.hpp"
#include "psindex/residue.hpp"
#include "psindex/wick/clifford.hpp"
#include "psindex/wick/todd.hpp"

namespace psindex::suites {

namespace {

constexpr double kPerturbation = 0.02;
constexpr int kPerturbationBand = 2;

CheckResult start(std::string suite, int trials, double tolerance) {
  CheckResult r;
  r.suite = std::move(suite);
  r.trials = trials;
  r.tolerance = tolerance;
  return r;
}

void finish(CheckResult& r) {
  r.pass = r.failures.empty() && r.max_defect <= r.tolerance;
}

void note_error(CheckResult& r, const std::string& where, const Error& e) {
  r.failures.push_back(
      fmt::format("{}: {}: {}", where, to_string(e.kind()), e.what()));
}

void merge(CheckResult& into, const CheckResult& r) {
  into.trials += r.trials;
  into.max_defect = std::max(into.max_defect, r.max_defect);
  for (const auto& [k, v] : r.metrics)
    into.metrics[k] = std::max(into.metrics[k], v);
  into.failures.insert(into.failures.end(), r.failures.begin(),
                       r.failures.end());
}

CoeffMatrix to_coeff_matrix(const Eigen::MatrixXcd& m) {
  CoeffMatrix c = CoeffMatrix::zero(static_cast<int>(m.rows()));
  for (int r = 0; r < m.rows(); ++r)
    for (int k = 0; k < m.cols(); ++k) c(r, k) = CoeffFn(m(r, k));
  return c;
}

// exp(t) summed until the next term is below the pruning level.
CoeffFn exp_trig(const CoeffFn& t) {
  CoeffFn sum(1.0), term(1.0);
  for (int k = 1; k < 64; ++k) {
    term = (1.0 / k) * (term * t);
    if (term.l1_norm() < kPruneTol) break;
    sum = sum + term;
  }
  return sum;
}

struct Outcome {
  std::optional<long> analytic;
  std::optional<int> topological;
  std::optional<int> oracle;
  bool agree = false;
  cplx value;
};

Outcome outcome(const ClassicalSymbol& Q, const IndexOptions& options) {
  const IndexReport r = index_report(Q, options);
  return {r.analytic_rounded, r.topological, r.oracle, r.agree,
          r.analytic.value_or(cplx(0.0))};
}

std::string describe(const Outcome& o) {
  auto show = [](const auto& v) {
    return v ? std::to_string(*v) : std::string("none");
  };
  return fmt::format("analytic={} topological={} oracle={} agree={}",
                     show(o.analytic), show(o.topological), show(o.oracle),
                     o.agree);
}

}  // namespace

CoeffFn random_trig(Rng& rng, int bandwidth, double amplitude) {
  std::uniform_real_distribution<double> u(-amplitude, amplitude);
  std::map<int, cplx> c;
  for (int k = -bandwidth; k <= bandwidth; ++k) {
    const double re = u(rng);
    const double im = u(rng);
    c[k] = cplx(re, im);
  }
  return CoeffFn::from_coeffs(std::move(c));
}

ClassicalSymbol random_symbol(Rng& rng, double order, int depth, int bandwidth,
                              double amplitude) {
  ClassicalSymbol a(order, depth);
  for (int j = 0; j < depth; ++j) {
    a.component(j).plus = random_trig(rng, bandwidth, amplitude);
    a.component(j).minus = random_trig(rng, bandwidth, amplitude);
  }
  return a;
}

ClassicalSymbol random_order_minus_one(Rng& rng, int depth, int dim,
                                       int bandwidth, double amplitude) {
  ClassicalSymbol e(0.0, depth, dim);
  for (CoeffMatrix* branch : {&e.component(1).plus, &e.component(1).minus}) {
    *branch = CoeffMatrix::zero(dim);
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c)
        (*branch)(r, c) = random_trig(rng, bandwidth, amplitude);
  }
  return e;
}

Eigen::MatrixXcd random_rational_matrix(Rng& rng, int n) {
  std::uniform_int_distribution<int> num(-8, 8), den(1, 8);
  Eigen::MatrixXcd m(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      const int p = num(rng);
      const int q = den(rng);
      m(r, c) = static_cast<double>(p) / q;
    }
  return m;
}

ClassicalSymbol winding_symbol(int a, int b, int depth) {
  return ClassicalSymbol::homogeneous(0.0, depth, CoeffFn::monomial(a),
                                      CoeffFn::monomial(b));
}

ClassicalSymbol sample_q(int depth) {
  const CoeffFn q = CoeffFn(2.0) + CoeffFn::cosine(1);
  return ClassicalSymbol::homogeneous(1.0, depth, q, q);
}

std::vector<IndexCase> index_suite(std::uint64_t seed, int depth) {
  std::vector<IndexCase> base;
  for (int w = -3; w <= 3; ++w) {
    base.push_back({fmt::format("plus_w{}", w), winding_symbol(w, 0, depth), -w});
    if (w != 0)
      base.push_back(
          {fmt::format("minus_w{}", w), winding_symbol(0, w, depth), w});
  }
  base.push_back({"block_mix",
                  block_diag(winding_symbol(1, 0, depth),
                             winding_symbol(-2, 0, depth)),
                  1});

  Rng rng(seed);
  std::vector<IndexCase> cases = base;
  for (const IndexCase& c : base)
    cases.push_back({c.name + "_perturbed",
                     c.Q + random_order_minus_one(rng, depth, c.Q.dim(),
                                                  kPerturbationBand,
                                                  kPerturbation),
                     c.expected});
  return cases;
}

std::vector<int> suite_modes() { return {16, 18, 20, 22, 24}; }

IndexOptions suite_options(int depth) {
  IndexOptions o;
  o.general_q = sample_q(depth);
  o.modes = suite_modes();
  return o;
}

CheckResult check_trace(int trials, std::uint64_t seed) {
  CheckResult r = start("trace", trials, 1e-10);
  Rng rng(seed);
  std::uniform_int_distribution<int> order(-1, 1), band(0, 3);
  double largest = 0.0;
  for (int t = 0; t < trials; ++t) {
    const ClassicalSymbol a = random_symbol(rng, order(rng), 4, band(rng));
    const ClassicalSymbol b = random_symbol(rng, order(rng), 4, band(rng));
    try {
      r.max_defect = std::max(r.max_defect, std::abs(wres(commutator(a, b))));
      largest = std::max(largest, std::abs(wres(star(a, b))));
    } catch (const Error& e) {
      note_error(r, fmt::format("trial {}", t), e);
    }
  }
  r.metrics["max_wres_product"] = largest;
  finish(r);
  return r;
}

CheckResult check_cocycle(int trials, std::uint64_t seed) {
  CheckResult r = start("cocycle", trials, 1e-10);
  Rng rng(seed);
  const LogQ canonical = LogQ::canonical(4);
  const LogQ general = LogQ::general(sample_q(4), 4);
  double antisym = 0.0, hochschild = 0.0, largest = 0.0;
  for (int t = 0; t < trials; ++t) {
    const ClassicalSymbol a0 = random_symbol(rng, 0.0, 4, 2);
    const ClassicalSymbol a1 = random_symbol(rng, 0.0, 4, 2);
    const ClassicalSymbol a2 = random_symbol(rng, 0.0, 4, 2);
    for (const LogQ* L : {&canonical, &general}) {
      try {
        antisym = std::max(antisym, std::abs(antisymmetry_defect(*L, a0, a1)));
        hochschild =
            std::max(hochschild, std::abs(hochschild_defect(*L, a0, a1, a2)));
        largest = std::max(largest, std::abs(radul(*L, a0, a1)));
      } catch (const Error& e) {
        note_error(r, fmt::format("trial {}", t), e);
      }
    }
  }
  r.max_defect = std::max(antisym, hochschild);
  r.metrics["antisymmetry"] = antisym;
  r.metrics["hochschild"] = hochschild;
  r.metrics["max_pairing"] = largest;
  finish(r);
  return r;
}

CheckResult check_todd(int dim, int trials, std::uint64_t seed, int order) {
  CheckResult r = start(fmt::format("todd_n{}", dim), trials, 1e-9);
  Rng rng(seed + static_cast<std::uint64_t>(dim));
  for (int t = 0; t < trials; ++t) {
    const Eigen::MatrixXcd R0 = random_rational_matrix(rng, dim);
    try {
      const wick::ToddReport rep = wick::verify_todd(R0, order);
      r.max_defect = std::max(r.max_defect, rep.max());
      r.metrics["exp"] = std::max(r.metrics["exp"], rep.exp_discrepancy);
      r.metrics["dx"] = std::max(r.metrics["dx"], rep.dx_discrepancy);
      r.metrics["vanishing"] = std::max(r.metrics["vanishing"], rep.vanishing_discrepancy);
      r.metrics["lemma"] = std::max(r.metrics["lemma"], rep.lemma_discrepancy);
    } catch (const Error& e) {
      note_error(r, fmt::format("trial {}", t), e);
    }
  }
  finish(r);
  return r;
}

CheckResult check_index(std::uint64_t seed) {
  const auto cases = index_suite(seed);
  CheckResult r = start("index", static_cast<int>(cases.size()), 1e-6);
  const IndexOptions options = suite_options();
  double mode_diff = 0.0, parametrix = 0.0, slowest = 0.0;
  for (const IndexCase& c : cases) {
    const auto t0 = std::chrono::steady_clock::now();
    const IndexReport rep = index_report(c.Q, options);
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
    slowest = std::max(slowest, secs);
    for (const auto& [method, msg] : rep.errors)
      r.failures.push_back(fmt::format("{}: {}: {}", c.name, method, msg));
    const auto get = [&](const char* key) {
      const auto it = rep.residuals.find(key);
      return it == rep.residuals.end() ? 0.0 : it->second;
    };
    r.max_defect = std::max(
        {r.max_defect, get("analytic_integrality"), get("general_integrality")});
    mode_diff = std::max(mode_diff, get("mode_difference"));
    parametrix = std::max(parametrix, get("parametrix"));
    const bool values_ok = rep.analytic_rounded == c.expected &&
                           rep.topological == c.expected &&
                           rep.oracle == c.expected;
    if (!rep.agree || !values_ok)
      r.failures.push_back(fmt::format(
          "{}: expected {} got {}", c.name, c.expected,
          describe(Outcome{rep.analytic_rounded, rep.topological, rep.oracle,
                           rep.agree, {}})));
  }
  r.metrics["mode_difference"] = mode_diff;
  r.metrics["parametrix"] = parametrix;
  r.metrics["slowest_seconds"] = slowest;
  finish(r);
  return r;
}

CheckResult check_parametrix(std::uint64_t seed) {
  const auto cases = index_suite(seed);
  CheckResult r = start("parametrix", static_cast<int>(cases.size()), 1e-11);
  for (const IndexCase& c : cases) {
    try {
      const Parametrix p = parametrix_with_residual(c.Q, c.Q.depth());
      r.max_defect =
          std::max({r.max_defect, p.left_residual, p.right_residual});
    } catch (const Error& e) {
      note_error(r, c.name, e);
    }
  }
  finish(r);
  return r;
}

CheckResult check_homotopy(int trials, std::uint64_t seed) {
  CheckResult r = start("homotopy", trials, 1e-6);
  Rng rng(seed);
  std::uniform_int_distribution<int> wind(-2, 2);
  const IndexOptions options = suite_options();
  const char* kinds[] = {"perturbation", "multiplier", "conjugation"};
  for (int t = 0; t < trials; ++t) {
    const int kind = t % 3;
    ClassicalSymbol before, after;
    if (kind == 0) {
      before = winding_symbol(wind(rng), wind(rng), 4);
      after = before + random_order_minus_one(rng, 4, 1, kPerturbationBand,
                                              kPerturbation);
    } else if (kind == 1) {
      before = winding_symbol(wind(rng), wind(rng), 4);
      const CoeffFn m = exp_trig(random_trig(rng, 1, 0.1));
      after = star(ClassicalSymbol::constant(m, 4), before);
    } else {
      const int a1 = wind(rng), b1 = wind(rng), a2 = wind(rng), b2 = wind(rng);
      before = block_diag(winding_symbol(a1, b1, 4), winding_symbol(a2, b2, 4));
      Eigen::MatrixXcd C = random_rational_matrix(rng, 2);
      Eigen::JacobiSVD<Eigen::MatrixXcd> svd(C);
      // Redraw until comfortably invertible.
      while (svd.singularValues()(1) < 0.25 * svd.singularValues()(0)) {
        C = random_rational_matrix(rng, 2);
        svd.compute(C);
      }
      after = star(ClassicalSymbol::constant(to_coeff_matrix(C), 4),
                   star(before, ClassicalSymbol::constant(
                                    to_coeff_matrix(C.inverse()), 4)));
    }
    const Outcome x = outcome(before, options);
    const Outcome y = outcome(after, options);
    r.max_defect = std::max(r.max_defect, std::abs(x.value - y.value));
    if (!x.agree || !y.agree || x.analytic != y.analytic ||
        x.topological != y.topological || x.oracle != y.oracle)
      r.failures.push_back(fmt::format("trial {} ({}): before {} after {}", t,
                                       kinds[kind], describe(x), describe(y)));
  }
  finish(r);
  return r;
}

CheckResult check_supertrace() {
  CheckResult r = start("supertrace", 4, 0.0);
  for (int n = 1; n <= 4; ++n) {
    const double sign = n % 2 == 0 ? 1.0 : -1.0;
    r.max_defect = std::max(
        {r.max_defect, std::abs(wick::supertrace(wick::top_monomial(n)) - sign),
         std::abs(wick::supertrace(wick::pi_element(n)) - 1.0)});
  }
  finish(r);
  return r;
}

CheckResult run_check(const std::string& suite, int trials, std::uint64_t seed) {
  auto count = [&](int fallback) { return trials > 0 ? trials : fallback; };
  if (suite == "trace") return check_trace(count(100), seed);
  if (suite == "cocycle") return check_cocycle(count(50), seed);
  if (suite == "todd") {
    CheckResult all = start("todd", 0, 1e-9);
    for (int n = 1; n <= 3; ++n) merge(all, check_todd(n, count(20), seed));
    finish(all);
    return all;
  }
  if (suite == "index") return check_index(seed);
  if (suite == "parametrix") return check_parametrix(seed);
  if (suite == "homotopy") return check_homotopy(count(24), seed);
  if (suite == "supertrace") return check_supertrace();
  throw Error(ErrorKind::InvalidArgument, "unknown suite '" + suite + "'");
}

std::vector<std::string> check_names() {
  return {"trace", "cocycle", "todd", "index", "parametrix", "homotopy",
          "supertrace"};
}

}  // namespace psindex::suites
