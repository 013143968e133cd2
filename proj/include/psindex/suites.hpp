#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "psindex/index.hpp"
#include "psindex/symbol.hpp"

namespace psindex::suites {

using Rng = std::mt19937_64;

/// Trig polynomial with |k| <= bandwidth and real and imaginary parts of
/// every amplitude uniform in [-amplitude, amplitude].
CoeffFn random_trig(Rng& rng, int bandwidth, double amplitude);

/// Scalar symbol with every component and both branches random.
ClassicalSymbol random_symbol(Rng& rng, double order, int depth, int bandwidth,
                              double amplitude = 1.0);

/// Order-0 symbol whose only nonzero component has degree -1.
ClassicalSymbol random_order_minus_one(Rng& rng, int depth, int dim,
                                       int bandwidth, double amplitude);

/// n x n matrix of rationals num/den, num in [-8, 8], den in [1, 8].
Eigen::MatrixXcd random_rational_matrix(Rng& rng, int n);

/// (e^{iax}; e^{ibx}) with the given depth.
ClassicalSymbol winding_symbol(int a, int b, int depth);

/// (2 + cos x) |p|, the general-mode q of the suites.
ClassicalSymbol sample_q(int depth);

struct IndexCase {
  std::string name;
  ClassicalSymbol Q;
  int expected = 0;
};

/// Windings (e^{iwx};1) and (1;e^{iwx}) for w in -3..3, the block mix
/// diag((e^{ix};1), (e^{-2ix};1)), and each of those plus a random degree -1
/// term of bandwidth 2.
std::vector<IndexCase> index_suite(std::uint64_t seed, int depth = 4);

/// Oracle windows used with perturbed symbols.
std::vector<int> suite_modes();

/// Options used for every suite report: all methods, general q included.
IndexOptions suite_options(int depth = 4);

struct CheckResult {
  std::string suite;
  int trials = 0;
  double max_defect = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::map<std::string, double> metrics;
  std::vector<std::string> failures;
};

/// |wres(a*b - b*a)| over random pairs with orders in {-1, 0, 1}.
CheckResult check_trace(int trials, std::uint64_t seed);
/// Antisymmetry and Hochschild defects of the cocycle over random order-0
/// triples, in canonical mode and with q = (2 + cos x)|p|.
CheckResult check_cocycle(int trials, std::uint64_t seed);
/// verify_todd over random rational R0 at n = dim, series order `order`.
CheckResult check_todd(int dim, int trials, std::uint64_t seed, int order = 6);
/// Full index reports over index_suite. Metrics: integrality, mode
/// difference, parametrix residual, slowest case in seconds.
CheckResult check_index(std::uint64_t seed);
/// Two-sided parametrix residuals over index_suite.
CheckResult check_parametrix(std::uint64_t seed);
/// Index reports before and after order -1 perturbation, a zero-winding
/// multiplier and constant conjugation, cycling through the three.
CheckResult check_homotopy(int trials, std::uint64_t seed);
/// tr_s(top monomial) = (-1)^n and tr_s(Pi) = 1 for n = 1..4.
CheckResult check_supertrace();

/// Dispatches on the suite name; trials <= 0 selects the suite default.
/// Throws InvalidArgument for unknown names.
CheckResult run_check(const std::string& suite, int trials, std::uint64_t seed);
std::vector<std::string> check_names();

}  // namespace psindex::suites
