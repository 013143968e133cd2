#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "psindex/symbol.hpp"

namespace psindex {

/// Op(a) on Fourier modes |k| <= K, written into modes |k| <= K + B where B
/// is the x-bandwidth of a, so no part of the image is cut off. Rows and
/// columns are ordered (k, j) with the matrix index j running fastest.
struct QuantizedOperator {
  int K = 0;
  int B = 0;
  int dim = 1;
  Eigen::MatrixXcd matrix;
};

/// Symbol value a(x, k) at integer frequency k. For k = 0 only the degree-0
/// plus branch is used.
CoeffMatrix symbol_at(const ClassicalSymbol& a, int k);

QuantizedOperator quantize(const ClassicalSymbol& a, int K);

/// Op(a)^* on modes |k| <= K, written into modes |k| <= K + B.
QuantizedOperator quantize_adjoint(const ClassicalSymbol& a, int K);

/// Number of singular values at or below tol * sigma_max, counted against the
/// column count (so it is the numerical nullity).
int numerical_nullity(const Eigen::MatrixXcd& m, double tol);

struct OracleSample {
  int K = 0;
  int kernel = 0;
  int cokernel = 0;
  int d() const { return kernel - cokernel; }
};

struct OracleResult {
  int index = 0;
  bool exact = false;             // combinatorial path was used
  std::vector<OracleSample> samples;
  std::optional<int> plateau_start;  // first K of the plateau run
};

/// True when every component below the leading one is zero and each
/// leading branch is a generalized permutation of monomials c e^{inx}.
bool is_shift_type(const ClassicalSymbol& a);

/// Exact kernel and cokernel count for shift-type symbols.
int exact_shift_index(const ClassicalSymbol& a);

/// Numerical kernel and cokernel dimensions for each K (sorted, unique).
std::vector<OracleSample> oracle_samples(const ClassicalSymbol& a,
                                         std::vector<int> modes,
                                         double tol = 1e-8);

/// Kernel minus cokernel dimension from rank-revealing SVDs over `modes`.
/// The value at the largest K is accepted when at least the last three K
/// agree on it. Shift-type
/// symbols go through the exact count unless `force_svd`. Throws NoPlateau.
OracleResult run_oracle(const ClassicalSymbol& a, std::vector<int> modes,
                        double tol = 1e-8, bool force_svd = false);

int oracle_index(const ClassicalSymbol& a, const std::vector<int>& modes,
                 double tol = 1e-8);

}  // namespace psindex
