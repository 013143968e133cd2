#include "psindex/wick/todd.hpp"

#include <algorithm>
#include <numeric>

#include "psindex/error.hpp"
#include "psindex/wick/duhamel.hpp"

namespace psindex::wick {

namespace {

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

int permutation_sign(const std::vector<int>& perm) {
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) sign = -sign;
  return sign;
}

// All multi-indices of size <= cap in n variables.
std::vector<MultiIndex> multi_indices(int n, int cap) {
  std::vector<MultiIndex> out;
  MultiIndex m{};
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == n) {
      out.push_back(m);
      return;
    }
    for (int d = 0; d <= left; ++d) {
      m[i] = d;
      self(self, i + 1, left - d);
    }
    m[i] = 0;
  };
  rec(rec, 0, cap);
  return out;
}

cplx ipow(int k) {
  cplx r = 1.0;
  for (int i = 0; i < k; ++i) r *= cplx(0.0, 1.0);
  return r;
}

// (p . R)_i = eps sum_j p_j R0_ji as a word.
WeylWord p_dot_R(const Eigen::MatrixXcd& R0, int i, int order) {
  const int n = static_cast<int>(R0.rows());
  WeylWord w(n, order);
  for (int j = 0; j < n; ++j) {
    WordKey k;
    k.gamma[j] = 1;
    w.add_term(k, EpsSeries::monomial(1, R0(j, i), order));
  }
  return w;
}

}  // namespace

SeriesMatrix::SeriesMatrix(int n, int order)
    : n_(n), order_(order), e_(static_cast<std::size_t>(n) * n, EpsSeries(order)) {}

SeriesMatrix SeriesMatrix::identity(int n, int order) {
  SeriesMatrix m(n, order);
  for (int i = 0; i < n; ++i) m(i, i) = EpsSeries::constant(1.0, order);
  return m;
}

SeriesMatrix SeriesMatrix::scaled(const Eigen::MatrixXcd& R0, int order) {
  const int n = static_cast<int>(R0.rows());
  SeriesMatrix m(n, order);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m(r, c) = EpsSeries::monomial(1, R0(r, c), order);
  return m;
}

SeriesMatrix operator+(const SeriesMatrix& a, const SeriesMatrix& b) {
  SeriesMatrix m(a.dim(), std::min(a.order(), b.order()));
  for (int r = 0; r < a.dim(); ++r)
    for (int c = 0; c < a.dim(); ++c) m(r, c) = a(r, c) + b(r, c);
  return m;
}

SeriesMatrix operator*(const SeriesMatrix& a, const SeriesMatrix& b) {
  const int order = std::min(a.order(), b.order());
  SeriesMatrix m(a.dim(), order);
  for (int r = 0; r < a.dim(); ++r)
    for (int c = 0; c < a.dim(); ++c) {
      EpsSeries acc(order);
      for (int k = 0; k < a.dim(); ++k) acc = acc + a(r, k) * b(k, c);
      m(r, c) = acc.truncated(order);
    }
  return m;
}

SeriesMatrix operator*(cplx z, const SeriesMatrix& a) {
  SeriesMatrix m(a.dim(), a.order());
  for (int r = 0; r < a.dim(); ++r)
    for (int c = 0; c < a.dim(); ++c) m(r, c) = z * a(r, c);
  return m;
}

SeriesMatrix SeriesMatrix::inverse_unipotent() const {
  const SeriesMatrix id = identity(n_, order_);
  // this = 1 + N with N of positive valuation; 1/(1+N) = sum (-N)^k.
  SeriesMatrix N(n_, order_);
  for (int r = 0; r < n_; ++r)
    for (int c = 0; c < n_; ++c) {
      N(r, c) = (*this)(r, c) - id(r, c);
      if (N(r, c).valuation() < 1)
        throw Error(ErrorKind::InvalidArgument,
                    "Neumann inverse needs identity constant term");
    }
  const SeriesMatrix minusN = cplx(-1.0) * N;
  SeriesMatrix sum = id;
  SeriesMatrix power = id;
  for (int k = 1; k <= order_; ++k) {
    power = power * minusN;
    sum = sum + power;
  }
  return sum;
}

EpsSeries SeriesMatrix::determinant() const {
  std::vector<int> perm(n_);
  std::iota(perm.begin(), perm.end(), 0);
  EpsSeries det(order_);
  do {
    EpsSeries term = EpsSeries::constant(permutation_sign(perm), order_);
    for (int r = 0; r < n_; ++r) term = (term * (*this)(r, perm[r])).truncated(order_);
    det = det + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

SeriesMatrix todd_matrix(const Eigen::MatrixXcd& R0, int order) {
  // (e^R - 1)/R = sum R^k/(k+1)!, inverted by Neumann series.
  return matrix_series(R0, order, [](int k) { return cplx(1.0 / factorial(k + 1)); })
      .inverse_unipotent();
}

EpsSeries todd_series(const Eigen::MatrixXcd& R0, int order) {
  return todd_matrix(R0, order).determinant();
}

WeylWord todd_perturbation(const Eigen::MatrixXcd& R0, int order) {
  const int n = static_cast<int>(R0.rows());
  WeylWord s(n, order);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      WordKey k;
      k.gamma[i] = 1;
      k.beta[j] = 1;
      s.add_term(k, EpsSeries::monomial(1, R0(i, j), order));
    }
  return s;
}

namespace {

// R/(1 - e^{-R}): inverse of sum (-1)^k R^k/(k+1)!.
SeriesMatrix lemma_matrix(const Eigen::MatrixXcd& R0, int order) {
  return matrix_series(R0, order, [](int k) {
           return cplx(((k % 2) ? -1.0 : 1.0) / factorial(k + 1));
         }).inverse_unipotent();
}

WeylWord lemma_rhs_with(const Eigen::MatrixXcd& R0, const SeriesMatrix& T,
                       const EpsSeries& td, const MultiIndex& alpha,
                       const MultiIndex& beta, int order) {
  const int n = static_cast<int>(R0.rows());

  // Polynomial in p (gamma slot) and v = p - q (alpha slot, commutes with p).
  // f_j = (q.R)_j + (v.T)_j, and at v = 0 the variable q equals p.
  WeylWord product = WeylWord::constant(n, order, 1.0);
  for (int j = 0; j < n; ++j) {
    WeylWord f(n, order);
    for (int i = 0; i < n; ++i) {
      WordKey kp;
      kp.gamma[i] = 1;
      f.add_term(kp, EpsSeries::monomial(1, R0(i, j), order));
      WordKey kv;
      kv.alpha[i] = 1;
      f.add_term(kv, T(i, j));
    }
    for (int a = 0; a < alpha[j]; ++a) product = product * f;
  }
  // dp^beta at v = 0 picks beta! times the coefficient of v^beta.
  const cplx scale = wick::factorial(beta) * ipow(total(alpha));
  WeylWord out(n, order);
  for (const auto& [k, c] : product.terms()) {
    const WordKey key = WordKey::unpack(k);
    if (key.alpha != beta) continue;
    WordKey poly;
    poly.gamma = key.gamma;
    out.add_term(poly, scale * (td * c));
  }
  return out;
}

}  // namespace

WeylWord lemma_rhs(const Eigen::MatrixXcd& R0, const MultiIndex& alpha,
                  const MultiIndex& beta, int order) {
  return lemma_rhs_with(R0, lemma_matrix(R0, order), todd_series(R0, order),
                       alpha, beta, order);
}

WeylWord lemma_lhs(const WeylWord& W, const MultiIndex& alpha,
                  const MultiIndex& beta) {
  WordKey k;
  k.alpha = alpha;
  k.beta = beta;
  const WeylWord prefix =
      WeylWord::monomial(W.dim(), W.order(), k, EpsSeries::constant(1.0, W.order()));
  return contract_product(prefix, W);
}

double ToddReport::max() const {
  return std::max({exp_discrepancy, dx_discrepancy, vanishing_discrepancy,
                   lemma_discrepancy});
}

ToddReport verify_todd(const Eigen::MatrixXcd& R0, int order, int lemma_cap) {
  const int n = static_cast<int>(R0.rows());
  if (R0.cols() != n || n < 1 || n > kMaxDim)
    throw Error(ErrorKind::ShapeMismatch, "R0 must be square with 1 <= n <= 4");
  ToddReport report;
  report.todd = todd_series(R0, order);
  const WeylWord W = duhamel_exp(todd_perturbation(R0, order));
  const WeylWord td = WeylWord::monomial(n, order, WordKey{}, report.todd);

  report.exp_discrepancy = (contract(W) - td).max_abs();

  for (int i = 0; i < n; ++i) {
    // <dx_i W> = eps^{-1} <D_i W>; the eps^{-1} must be absorbed by R.
    const WeylWord lhs = contract_product(WeylWord::D(n, order, i), W);
    for (const auto& [k, c] : lhs.terms()) require_nonnegative(c.shifted(-1));
    const WeylWord rhs = cplx(0.0, 1.0) * (td * p_dot_R(R0, i, order));
    report.dx_discrepancy = std::max(report.dx_discrepancy, (lhs - rhs).max_abs());
  }

  // alpha = 0 is the Todd identity itself, checked above.
  for (const MultiIndex& a : multi_indices(n, 2)) {
    if (total(a) == 0) continue;
    WeylWord X = WeylWord::constant(n, order, 1.0);
    for (int i = 0; i < n; ++i) {
      const WeylWord factor =
          cplx(0.0, 1.0) * WeylWord::D(n, order, i) + p_dot_R(R0, i, order);
      for (int e = 0; e < a[i]; ++e) X = X * factor;
    }
    report.vanishing_discrepancy =
        std::max(report.vanishing_discrepancy, contract_product(X, W).max_abs());
  }

  const SeriesMatrix T = lemma_matrix(R0, order);
  for (const MultiIndex& a : multi_indices(n, lemma_cap))
    for (const MultiIndex& b : multi_indices(n, lemma_cap)) {
      const double d =
          (lemma_lhs(W, a, b) - lemma_rhs_with(R0, T, report.todd, a, b, order))
              .max_abs();
      report.lemma_discrepancy = std::max(report.lemma_discrepancy, d);
    }
  return report;
}

}  // namespace psindex::wick
