#pragma once

#include <vector>

#include <Eigen/Dense>

#include "psindex/wick/eps_series.hpp"
#include "psindex/wick/weyl_word.hpp"

namespace psindex::wick {

/// n x n matrix of epsilon series.
class SeriesMatrix {
 public:
  SeriesMatrix(int n, int order);
  static SeriesMatrix identity(int n, int order);
  /// eps * R0.
  static SeriesMatrix scaled(const Eigen::MatrixXcd& R0, int order);

  int dim() const { return n_; }
  int order() const { return order_; }
  const EpsSeries& operator()(int r, int c) const { return e_[r * n_ + c]; }
  EpsSeries& operator()(int r, int c) { return e_[r * n_ + c]; }

  /// Inverse by Neumann series; the constant term must be the identity.
  SeriesMatrix inverse_unipotent() const;
  EpsSeries determinant() const;

 private:
  int n_;
  int order_;
  std::vector<EpsSeries> e_;
};

SeriesMatrix operator+(const SeriesMatrix& a, const SeriesMatrix& b);
SeriesMatrix operator*(const SeriesMatrix& a, const SeriesMatrix& b);
SeriesMatrix operator*(cplx z, const SeriesMatrix& a);

/// sum_k c_k R^k for R = eps R0, c_k = weight(k).
template <typename Weight>
SeriesMatrix matrix_series(const Eigen::MatrixXcd& R0, int order, Weight weight) {
  const int n = static_cast<int>(R0.rows());
  const SeriesMatrix R = SeriesMatrix::scaled(R0, order);
  SeriesMatrix power = SeriesMatrix::identity(n, order);
  SeriesMatrix sum = weight(0) * power;
  for (int k = 1; k <= order; ++k) {
    power = power * R;
    sum = sum + weight(k) * power;
  }
  return sum;
}

/// R / (e^R - 1) for R = eps R0.
SeriesMatrix todd_matrix(const Eigen::MatrixXcd& R0, int order);
/// Td(R) = det(R / (e^R - 1)).
EpsSeries todd_series(const Eigen::MatrixXcd& R0, int order);

/// s = p . R . dp = eps sum_ij R0_ij p_i dp_j.
WeylWord todd_perturbation(const Eigen::MatrixXcd& R0, int order);

/// Right-hand side of the contraction lemma in D placeholders:
/// eps^{|alpha|} Td(R) dx^alpha dp^beta exp((i/eps)(q.R.(x-y) +
/// (p-q).R/(1-e^{-R}).(x-y))) at x=y, p=q, as a polynomial in p.
WeylWord lemma_rhs(const Eigen::MatrixXcd& R0, const MultiIndex& alpha,
                  const MultiIndex& beta, int order);

/// <D^alpha dp^beta W exp(Delta)> for W = exp(Delta + s) exp(-Delta).
WeylWord lemma_lhs(const WeylWord& W, const MultiIndex& alpha,
                  const MultiIndex& beta);

struct ToddReport {
  EpsSeries todd;
  double exp_discrepancy = 0.0;        // <W> - Td(R)
  double dx_discrepancy = 0.0;         // <dx_i W> - (i/eps) Td(R) (p.R)_i
  double vanishing_discrepancy = 0.0;  // <(i eps dx + p.R)^alpha W>, 1 <= |alpha| <= 2
  double lemma_discrepancy = 0.0;      // general alpha, beta with |.| <= lemma_cap
  double max() const;
};

/// Compares the Duhamel/contraction pipeline with the determinant formula.
/// Throws NegativeValuation if <dx_i W> keeps a negative power of eps.
ToddReport verify_todd(const Eigen::MatrixXcd& R0, int order, int lemma_cap = 2);

}  // namespace psindex::wick
