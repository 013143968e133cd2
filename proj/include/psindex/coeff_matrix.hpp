#pragma once

#include <vector>

#include "psindex/fourier.hpp"

namespace psindex {

/// Square matrix of periodic coefficient functions (row-major).
class CoeffMatrix {
 public:
  CoeffMatrix() : dim_(1), entries_(1) {}
  CoeffMatrix(const CoeffFn& scalar);  // NOLINT: 1x1 from a scalar
  CoeffMatrix(cplx scalar) : CoeffMatrix(CoeffFn(scalar)) {}  // NOLINT
  CoeffMatrix(double scalar) : CoeffMatrix(cplx(scalar)) {}  // NOLINT
  CoeffMatrix(int) = delete;  // use zero(dim) for an n x n zero matrix
  static CoeffMatrix zero(int dim);
  static CoeffMatrix identity(int dim);
  static CoeffMatrix diagonal(const std::vector<CoeffFn>& entries);

  int dim() const { return dim_; }
  const CoeffFn& operator()(int r, int c) const { return entries_[r * dim_ + c]; }
  CoeffFn& operator()(int r, int c) { return entries_[r * dim_ + c]; }

  bool is_zero() const;
  int bandwidth() const;
  double max_l1() const;  // max over entries of sum_k |c_k|

  friend bool operator==(const CoeffMatrix&, const CoeffMatrix&) = default;

 private:
  int dim_;
  std::vector<CoeffFn> entries_;
};

CoeffMatrix operator+(const CoeffMatrix& a, const CoeffMatrix& b);
CoeffMatrix operator-(const CoeffMatrix& a, const CoeffMatrix& b);
CoeffMatrix operator*(const CoeffMatrix& a, const CoeffMatrix& b);
CoeffMatrix operator*(cplx z, const CoeffMatrix& a);
CoeffMatrix dx(const CoeffMatrix& a);
CoeffMatrix dx(const CoeffMatrix& a, int order);
CoeffMatrix conjugate_transpose(const CoeffMatrix& a);
CoeffFn trace(const CoeffMatrix& a);
CoeffFn determinant(const CoeffMatrix& a);

/// Pointwise matrix inverse of an invertible matrix function. Sampled on a
/// grid, inverted point by point and transformed back; the grid is refined
/// until the residual max_l1(a b - 1) meets `policy.inverse_tol`.
/// Throws NotElliptic when min |det| <= inversion_floor or the grid
/// condition number exceeds condition_limit, BandwidthExceeded when the
/// residual target needs more than band_cap frequencies.
struct MatrixInverse {
  CoeffMatrix value;
  double residual = 0.0;
};
MatrixInverse invert(const CoeffMatrix& a, const NumericPolicy& policy = {});

}  // namespace psindex
