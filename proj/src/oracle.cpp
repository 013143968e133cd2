#include "psindex/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "psindex/error.hpp"

namespace psindex {

namespace {

int symbol_bandwidth(const ClassicalSymbol& a) {
  int b = 0;
  for (const auto& c : a.components())
    b = std::max({b, c.plus.bandwidth(), c.minus.bandwidth()});
  return b;
}

// Entry (row, col) of the full operator: coefficient (row_k - col_k) of
// a_{row_j, col_j}(., col_k).
void fill(Eigen::MatrixXcd& m, const ClassicalSymbol& a, int row_modes,
          int col_modes, bool adjoint) {
  const int dim = a.dim();
  // Op(a) is read with rows from the wide window, columns from the narrow one;
  // the adjoint swaps the roles and conjugates.
  const int out_modes = adjoint ? col_modes : row_modes;
  const int in_modes = adjoint ? row_modes : col_modes;
  for (int kin = -in_modes; kin <= in_modes; ++kin) {
    const CoeffMatrix v = symbol_at(a, kin);
    for (int jo = 0; jo < dim; ++jo)
      for (int ji = 0; ji < dim; ++ji)
        for (const auto& [s, c] : v(jo, ji).coeffs()) {
          const int kout = kin + s;
          if (std::abs(kout) > out_modes) continue;
          const int r = (kout + out_modes) * dim + jo;
          const int col = (kin + in_modes) * dim + ji;
          if (adjoint)
            m(col, r) = std::conj(c);
          else
            m(r, col) = c;
        }
  }
}

void require_bounded(const ClassicalSymbol& a) {
  if (a.order() > 1e-9)
    throw Error(ErrorKind::InvalidArgument,
                "quantization needs a symbol of order <= 0");
}

struct ShiftEntry {
  int row = 0;
  int freq = 0;
};

// One entry per column, or nothing if the branch is not a monomial
// generalized permutation.
std::optional<std::vector<ShiftEntry>> shift_pattern(const CoeffMatrix& g) {
  std::vector<ShiftEntry> out(g.dim());
  std::vector<bool> row_used(g.dim(), false);
  for (int c = 0; c < g.dim(); ++c) {
    int found = -1;
    for (int r = 0; r < g.dim(); ++r) {
      if (g(r, c).is_zero()) continue;
      if (found >= 0) return std::nullopt;
      found = r;
    }
    if (found < 0 || row_used[found]) return std::nullopt;
    const auto& coeffs = g(found, c).coeffs();
    if (coeffs.size() != 1 || std::abs(coeffs.begin()->second) <= 1e-10)
      return std::nullopt;
    row_used[found] = true;
    out[c] = {found, coeffs.begin()->first};
  }
  return out;
}

}  // namespace

CoeffMatrix symbol_at(const ClassicalSymbol& a, int k) {
  if (k == 0) {
    if (const HomComponent* h = a.at_degree(0.0)) return h->plus;
    return CoeffMatrix::zero(a.dim());
  }
  CoeffMatrix v = CoeffMatrix::zero(a.dim());
  const double ak = std::abs(k);
  for (const auto& c : a.components())
    v = v + cplx(std::pow(ak, c.degree)) * (k > 0 ? c.plus : c.minus);
  return v;
}

QuantizedOperator quantize(const ClassicalSymbol& a, int K) {
  require_bounded(a);
  QuantizedOperator q;
  q.K = K;
  q.B = symbol_bandwidth(a);
  q.dim = a.dim();
  const int rows = (2 * (K + q.B) + 1) * q.dim;
  const int cols = (2 * K + 1) * q.dim;
  q.matrix = Eigen::MatrixXcd::Zero(rows, cols);
  fill(q.matrix, a, K + q.B, K, false);
  return q;
}

QuantizedOperator quantize_adjoint(const ClassicalSymbol& a, int K) {
  require_bounded(a);
  QuantizedOperator q;
  q.K = K;
  q.B = symbol_bandwidth(a);
  q.dim = a.dim();
  const int rows = (2 * (K + q.B) + 1) * q.dim;
  const int cols = (2 * K + 1) * q.dim;
  q.matrix = Eigen::MatrixXcd::Zero(rows, cols);
  fill(q.matrix, a, K + q.B, K, true);
  return q;
}

int numerical_nullity(const Eigen::MatrixXcd& m, double tol) {
  if (m.cols() == 0) return 0;
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(m);
  const auto& s = svd.singularValues();
  const double smax = s.size() ? s(0) : 0.0;
  int rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > tol * smax) ++rank;
  return static_cast<int>(m.cols()) - rank;
}

bool is_shift_type(const ClassicalSymbol& a) {
  for (int j = 1; j < a.depth(); ++j) {
    const auto& c = a.component(j);
    if (!c.plus.is_zero() || !c.minus.is_zero()) return false;
  }
  if (degree_offset(0.0, a.order()) != 0) return false;
  return shift_pattern(a.component(0).plus) && shift_pattern(a.component(0).minus);
}

int exact_shift_index(const ClassicalSymbol& a) {
  const auto plus = shift_pattern(a.component(0).plus);
  const auto minus = shift_pattern(a.component(0).minus);
  if (!plus || !minus)
    throw Error(ErrorKind::InvalidArgument, "symbol is not of shift type");
  int reach = 0;
  for (const auto* p : {&*plus, &*minus})
    for (const auto& e : *p) reach = std::max(reach, std::abs(e.freq));
  const int K = 2 * reach + 4;
  std::map<std::pair<int, int>, int> hits;
  for (int k = -K; k <= K; ++k) {
    const auto& pattern = k >= 0 ? *plus : *minus;
    for (const auto& e : pattern) ++hits[{k + e.freq, e.row}];
  }
  int kernel = 0;
  for (const auto& [t, n] : hits) kernel += std::max(0, n - 1);
  int cokernel = 0;
  for (int t = -(K - reach); t <= K - reach; ++t)
    for (int r = 0; r < a.dim(); ++r)
      if (!hits.count({t, r})) ++cokernel;
  return kernel - cokernel;
}

OracleResult run_oracle(const ClassicalSymbol& a, std::vector<int> modes,
                        double tol, bool force_svd) {
  require_bounded(a);
  OracleResult result;
  if (!force_svd && is_shift_type(a)) {
    result.exact = true;
    result.index = exact_shift_index(a);
    return result;
  }
  result.samples = oracle_samples(a, std::move(modes), tol);
  // The plateau must include the largest window: a run of equal values that
  // later changes is a resolution artifact, not a plateau.
  const auto& v = result.samples;
  std::size_t run = v.empty() ? 0 : 1;
  while (run < v.size() && v[v.size() - 1 - run].d() == v.back().d()) ++run;
  if (run < 3)
    throw Error(ErrorKind::NoPlateau,
                "kernel minus cokernel did not stabilise over the mode list");
  result.index = v.back().d();
  result.plateau_start = v[v.size() - run].K;
  return result;
}

std::vector<OracleSample> oracle_samples(const ClassicalSymbol& a,
                                         std::vector<int> modes, double tol) {
  require_bounded(a);
  std::sort(modes.begin(), modes.end());
  modes.erase(std::unique(modes.begin(), modes.end()), modes.end());
  std::vector<OracleSample> out;
  for (const int K : modes) {
    OracleSample s;
    s.K = K;
    s.kernel = numerical_nullity(quantize(a, K).matrix, tol);
    s.cokernel = numerical_nullity(quantize_adjoint(a, K).matrix, tol);
    out.push_back(s);
  }
  return out;
}

int oracle_index(const ClassicalSymbol& a, const std::vector<int>& modes,
                 double tol) {
  return run_oracle(a, modes, tol).index;
}

}  // namespace psindex
