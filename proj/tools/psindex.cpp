// psindex: command-line driver for the symbol calculus, the index pipeline
// and the verification suites. Output is `key=value` lines; `#` lines are
// human-readable notes.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "psindex/config.hpp"
#include "psindex/error.hpp"
#include "psindex/index.hpp"
#include "psindex/oracle.hpp"
#include "psindex/radul.hpp"
#include "psindex/residue.hpp"
#include "psindex/suites.hpp"
#include "psindex/symbol.hpp"
#include "psindex/symbol_io.hpp"
#include "psindex/wick/todd.hpp"

using namespace psindex;

namespace {

constexpr int kOk = 0;
constexpr int kDisagree = 1;
constexpr int kUsage = 2;
constexpr double kRoundTripTol = 1e-14;

const char* kGrammar =
    "usage:\n"
    "  psindex star <a.sym> <b.sym> [--depth N] [--out file]\n"
    "  psindex residue <a.sym>\n"
    "  psindex radul <a0.sym> <a1.sym> [--q canonical|<q.sym>] [--depth N]\n"
    "  psindex parametrix <Q.sym> [--depth N] [--out file]\n"
    "  psindex index <Q.sym> [--method analytic|topological|oracle|all]\n"
    "                [--q canonical|<q.sym>] [--modes K,...] [--tol t]\n"
    "  psindex oracle <Q.sym> [--modes K,...] [--tol t] [--exact|--svd]\n"
    "  psindex verify-todd --dim n [--order K] [--trials T] [--seed S] [--lemma-cap c]\n"
    "  psindex check --suite <name>|all [--trials T] [--seed S]\n"
    "global: --config file, --format kv|text; PSINDEX_SEED sets the seed\n";

struct RoundTripFailure {
  std::string path;
  double drift;
};

class Out {
 public:
  explicit Out(bool text) : text_(text) {}
  void kv(const std::string& key, const std::string& value) const {
    std::cout << key << (text_ ? ": " : "=") << value << '\n';
  }
  void note(const std::string& line) const {
    std::cout << (text_ ? "" : "# ") << line << '\n';
  }
  void block(const std::string& text) const {
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) note(line);
  }

 private:
  bool text_;
};

std::string num(double x) { return fmt::format("{:.17g}", x == 0.0 ? 0.0 : x); }
std::string num(cplx z) { return num(z.real()) + "," + num(z.imag()); }
std::string flag(bool b) { return b ? "true" : "false"; }

ClassicalSymbol load_symbol(const std::string& path) {
  const ClassicalSymbol a = read_symbol_file(path);
  const ClassicalSymbol b = parse_symbol(render_symbol(a));
  const bool same_shape = a.order() == b.order() && a.depth() == b.depth() &&
                          a.dim() == b.dim();
  const double drift = same_shape ? distance(a, b) : 1.0;
  if (drift > kRoundTripTol) throw RoundTripFailure{path, drift};
  return a;
}

ClassicalSymbol limit_depth(const ClassicalSymbol& a, int depth) {
  return depth > 0 && depth < a.depth() ? truncate(a, depth) : a;
}

void write_or_note(const Out& out, const std::string& path,
                   const ClassicalSymbol& a) {
  const std::string text = render_symbol(a);
  if (path.empty()) {
    out.block(text);
    return;
  }
  std::ofstream f(path);
  if (!f) throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
  f << text;
}

std::optional<ClassicalSymbol> q_symbol(const std::string& mode) {
  if (mode == "canonical") return std::nullopt;
  return load_symbol(mode);
}

int run_check_suite(const Out& out, const std::string& name, int trials,
                    std::uint64_t seed) {
  const suites::CheckResult r = suites::run_check(name, trials, seed);
  out.kv("suite", r.suite);
  out.kv("trials", std::to_string(r.trials));
  out.kv("max_defect", num(r.max_defect));
  out.kv("tolerance", num(r.tolerance));
  for (const auto& [k, v] : r.metrics) out.kv("metric_" + k, num(v));
  for (const std::string& f : r.failures) out.note("failure: " + f);
  out.kv("pass", flag(r.pass));
  return r.pass ? kOk : kDisagree;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pseudodifferential symbols on the circle: calculus, index "
               "pipeline and verification suites"};
  app.require_subcommand(1);
  app.footer(kGrammar);

  std::string config_path;
  std::string format;
  app.add_option("--config", config_path, "key = value configuration file");
  app.add_option("--format", format, "kv or text")
      ->check(CLI::IsMember({"kv", "text"}));

  int depth = 0;
  std::string q_mode;
  std::string out_path;

  std::string a_path, b_path;
  auto* star_cmd = app.add_subcommand("star", "star product a * b");
  star_cmd->add_option("a", a_path)->required();
  star_cmd->add_option("b", b_path)->required();
  star_cmd->add_option("--depth", depth, "truncate inputs to N components");
  star_cmd->add_option("--out", out_path, "write the product to a file");

  auto* residue_cmd = app.add_subcommand("residue", "residue of a symbol");
  residue_cmd->add_option("a", a_path)->required();

  auto* radul_cmd = app.add_subcommand("radul", "cocycle c(a0, a1)");
  radul_cmd->add_option("a0", a_path)->required();
  radul_cmd->add_option("a1", b_path)->required();
  radul_cmd->add_option("--q", q_mode, "canonical or a q symbol file");
  radul_cmd->add_option("--depth", depth);

  auto* param_cmd = app.add_subcommand("parametrix", "parametrix of Q");
  param_cmd->add_option("Q", a_path)->required();
  param_cmd->add_option("--depth", depth);
  param_cmd->add_option("--out", out_path);

  std::string method = "all";
  std::string modes_text;
  std::optional<double> tol;
  auto* index_cmd = app.add_subcommand("index", "index report for Q");
  index_cmd->add_option("Q", a_path)->required();
  index_cmd->add_option("--method", method)
      ->check(CLI::IsMember({"analytic", "topological", "oracle", "all"}));
  index_cmd->add_option("--q", q_mode);
  index_cmd->add_option("--modes", modes_text, "comma-separated K list");
  index_cmd->add_option("--tol", tol);

  bool exact = false, force_svd = false;
  auto* oracle_cmd = app.add_subcommand("oracle", "truncated-mode index");
  oracle_cmd->add_option("Q", a_path)->required();
  oracle_cmd->add_option("--modes", modes_text);
  oracle_cmd->add_option("--tol", tol);
  auto* exact_flag =
      oracle_cmd->add_flag("--exact", exact, "require the exact shift count");
  oracle_cmd->add_flag("--svd", force_svd, "skip the exact shift count")
      ->excludes(exact_flag);

  int dim = 1, order = 6, trials = 0, lemma_cap = 2;
  std::optional<unsigned long long> seed;
  auto* todd_cmd = app.add_subcommand("verify-todd", "Todd identity checks");
  todd_cmd->add_option("--dim", dim)->required()->check(CLI::Range(1, 3));
  todd_cmd->add_option("--order", order)->check(CLI::Range(0, 12));
  todd_cmd->add_option("--trials", trials);
  todd_cmd->add_option("--seed", seed);
  todd_cmd->add_option("--lemma-cap", lemma_cap)->check(CLI::Range(0, 3));

  std::string suite;
  auto* check_cmd = app.add_subcommand("check", "run a verification suite");
  check_cmd->add_option("--suite", suite)->required();
  check_cmd->add_option("--trials", trials);
  check_cmd->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n' << kGrammar;
    return kUsage;
  }

  try {
    Config config;
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + config_path);
      std::stringstream ss;
      ss << in.rdbuf();
      config = parse_config(ss.str());
    }
    apply_environment(config);
    if (seed) config.seed = *seed;
    if (!format.empty()) config.format = format;
    if (!q_mode.empty()) config.q_mode = q_mode;
    if (!modes_text.empty()) config.oracle_modes = parse_int_list(modes_text);
    if (tol) config.oracle_tol = *tol;
    const Out out(config.format == "text");

    if (*star_cmd) {
      const ClassicalSymbol a = limit_depth(load_symbol(a_path), depth);
      const ClassicalSymbol b = limit_depth(load_symbol(b_path), depth);
      const ClassicalSymbol c = star(a, b);
      write_or_note(out, out_path, c);
      out.kv("order", num(c.order()));
      out.kv("depth", std::to_string(c.depth()));
      out.kv("dim", std::to_string(c.dim()));
      return kOk;
    }

    if (*residue_cmd) {
      const ClassicalSymbol a = load_symbol(a_path);
      out.kv("wres", num(wres(a)));
      out.note(fmt::format("trusted degrees {} .. {}", num(a.lowest_degree()),
                           num(a.order())));
      out.kv("window", num(a.lowest_degree()) + ".." + num(a.order()));
      return kOk;
    }

    if (*radul_cmd) {
      const int d = depth > 0 ? depth : config.depth;
      const ClassicalSymbol a0 = limit_depth(load_symbol(a_path), d);
      const ClassicalSymbol a1 = limit_depth(load_symbol(b_path), d);
      const auto q = q_symbol(config.q_mode);
      const LogQ L = q ? LogQ::general(*q, d, config.numeric) : LogQ::canonical(d);
      const cplx c = radul(L, a0, a1);
      out.kv("c", num(c));
      out.note("budget is |c(a0,a1) + c(a1,a0)|, zero for an exact cocycle");
      out.kv("budget", num(std::abs(antisymmetry_defect(L, a0, a1))));
      out.kv("q", q ? config.q_mode : "canonical");
      return kOk;
    }

    if (*param_cmd) {
      const ClassicalSymbol Q = load_symbol(a_path);
      const int d = depth > 0 ? depth : Q.depth();
      const Parametrix P = parametrix_with_residual(Q, d, config.numeric);
      write_or_note(out, out_path, P.value);
      out.kv("left_residual", num(P.left_residual));
      out.kv("right_residual", num(P.right_residual));
      return kOk;
    }

    if (*index_cmd) {
      const ClassicalSymbol Q = load_symbol(a_path);
      IndexOptions o;
      o.analytic = method == "all" || method == "analytic";
      o.topological = method == "all" || method == "topological";
      o.oracle = method == "all" || method == "oracle";
      o.general_q = q_symbol(config.q_mode);
      o.modes = config.oracle_modes;
      o.oracle_tol = config.oracle_tol;
      o.numeric = config.numeric;
      const IndexReport r = index_report(Q, o);
      if (r.analytic_rounded) out.kv("analytic", std::to_string(*r.analytic_rounded));
      if (r.topological) out.kv("topological", std::to_string(*r.topological));
      if (r.oracle) out.kv("oracle", std::to_string(*r.oracle));
      out.kv("agree", flag(r.agree));
      if (r.analytic) out.kv("analytic_value", num(*r.analytic));
      if (r.pairing) out.kv("pairing", num(*r.pairing));
      if (r.analytic_general) out.kv("analytic_general", num(*r.analytic_general));
      if (r.oracle) out.kv("oracle_exact", flag(r.oracle_exact));
      for (const auto& [k, v] : r.residuals) out.kv("residual_" + k, num(v));
      for (const auto& [k, v] : r.errors) out.kv("error_" + k, v);
      return r.agree ? kOk : kDisagree;
    }

    if (*oracle_cmd) {
      const ClassicalSymbol Q = load_symbol(a_path);
      if (exact && !is_shift_type(Q))
        throw Error(ErrorKind::InvalidArgument,
                    "--exact needs a shift-type symbol");
      if (!is_shift_type(Q) || force_svd) {
        for (const OracleSample& s :
             oracle_samples(Q, config.oracle_modes, config.oracle_tol)) {
          out.kv(fmt::format("kernel_{}", s.K), std::to_string(s.kernel));
          out.kv(fmt::format("cokernel_{}", s.K), std::to_string(s.cokernel));
          out.kv(fmt::format("d_{}", s.K), std::to_string(s.d()));
        }
      }
      const OracleResult r =
          run_oracle(Q, config.oracle_modes, config.oracle_tol, force_svd);
      out.kv("exact", flag(r.exact));
      if (r.plateau_start) out.kv("plateau_start", std::to_string(*r.plateau_start));
      out.kv("index", std::to_string(r.index));
      return kOk;
    }

    if (*todd_cmd) {
      const int count = trials > 0 ? trials : 20;
      suites::Rng rng(config.seed + static_cast<std::uint64_t>(dim));
      double worst = 0.0;
      for (int t = 0; t < count; ++t) {
        const Eigen::MatrixXcd R0 = suites::random_rational_matrix(rng, dim);
        const wick::ToddReport r = wick::verify_todd(R0, order, lemma_cap);
        out.kv(fmt::format("trial_{}", t), num(r.max()));
        worst = std::max(worst, r.max());
      }
      const bool pass = worst <= 1e-9;
      out.kv("max", num(worst));
      out.kv("pass", flag(pass));
      return pass ? kOk : kDisagree;
    }

    if (*check_cmd) {
      if (suite != "all") return run_check_suite(out, suite, trials, config.seed);
      int code = kOk;
      for (const std::string& name : suites::check_names())
        code = std::max(code, run_check_suite(out, name, trials, config.seed));
      return code;
    }
  } catch (const RoundTripFailure& f) {
    std::cout << "error=round trip of " << f.path << " drifted by "
              << num(f.drift) << '\n';
    return kDisagree;
  } catch (const Error& e) {
    std::cout << "error=" << to_string(e.kind());
    if (e.line() > 0)
      std::cout << " at line " << e.line() << ", column " << e.column();
    std::cout << ": " << e.what() << '\n';
    if (e.kind() == ErrorKind::ParseError) {
      std::cerr << kGrammar;
      return kUsage;
    }
    if (e.kind() == ErrorKind::InvalidArgument ||
        e.kind() == ErrorKind::ShapeMismatch)
      return kUsage;
    return kDisagree;
  }
  return kOk;
}
