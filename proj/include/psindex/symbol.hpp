#pragma once

#include <utility>
#include <vector>

#include "psindex/coeff_matrix.hpp"

namespace psindex {

/// a(x,p) = plus(x) |p|^degree for p > 0 and minus(x) |p|^degree for p < 0.
struct HomComponent {
  double degree = 0.0;
  CoeffMatrix plus;
  CoeffMatrix minus;

  friend bool operator==(const HomComponent&, const HomComponent&) = default;
};

/// Truncated classical symbol: components of degrees order, order-1, ...,
/// order-depth+1. Anything of degree <= order-depth is unknown.
class ClassicalSymbol {
 public:
  ClassicalSymbol() : ClassicalSymbol(0.0, 1, 1) {}
  ClassicalSymbol(double order, int depth, int dim = 1);

  /// Order-0 symbol equal to `value` on both branches, zero below.
  static ClassicalSymbol constant(const CoeffMatrix& value, int depth);
  /// Symbol whose only nonzero component is the leading one.
  static ClassicalSymbol homogeneous(double order, int depth,
                                     const CoeffMatrix& plus,
                                     const CoeffMatrix& minus);

  double order() const { return order_; }
  int depth() const { return static_cast<int>(components_.size()); }
  int dim() const { return dim_; }
  /// Degree of the last trusted component.
  double lowest_degree() const { return order_ - depth() + 1; }

  const HomComponent& component(int j) const { return components_.at(j); }
  HomComponent& component(int j) { return components_.at(j); }
  const std::vector<HomComponent>& components() const { return components_; }

  /// Component of degree d, or nullptr when d is outside the window or not
  /// an integer shift of the order.
  const HomComponent* at_degree(double d) const;

  bool is_zero() const;
  /// Largest coefficient l1 norm over all entries of all components.
  double max_norm() const;

  friend bool operator==(const ClassicalSymbol&,
                         const ClassicalSymbol&) = default;

 private:
  double order_;
  int dim_;
  std::vector<HomComponent> components_;
};

/// Index j such that order - j == degree, or -1 if not integral.
int degree_offset(double order, double degree);

ClassicalSymbol operator+(const ClassicalSymbol& a, const ClassicalSymbol& b);
ClassicalSymbol operator-(const ClassicalSymbol& a, const ClassicalSymbol& b);
ClassicalSymbol operator*(cplx z, const ClassicalSymbol& a);

/// Branchwise conjugate transpose of every component.
ClassicalSymbol conjugate_transpose(const ClassicalSymbol& a);

/// Componentwise d/dx.
ClassicalSymbol dx(const ClassicalSymbol& a);

/// (a * b)(x,p) = sum_k (-i)^k / k! d_p^k a d_x^k b; depth min of inputs.
ClassicalSymbol star(const ClassicalSymbol& a, const ClassicalSymbol& b);
ClassicalSymbol commutator(const ClassicalSymbol& a, const ClassicalSymbol& b);

/// Keeps the first `depth` components.
ClassicalSymbol truncate(const ClassicalSymbol& a, int depth);
/// Removes the leading component (order and depth drop by one).
ClassicalSymbol drop_leading(const ClassicalSymbol& a);
/// Block diagonal sum; orders must match.
ClassicalSymbol block_diag(const ClassicalSymbol& a, const ClassicalSymbol& b);

std::pair<CoeffMatrix, CoeffMatrix> leading(const ClassicalSymbol& a);

/// Largest entry norm of a - b over the common window.
double distance(const ClassicalSymbol& a, const ClassicalSymbol& b);

struct Parametrix {
  ClassicalSymbol value;
  double left_residual = 0.0;   // max norm of value * q - 1
  double right_residual = 0.0;  // max norm of q * value - 1
};

/// Degree-by-degree inverse of an elliptic symbol modulo the window.
/// Throws NotElliptic when a leading branch is not invertible on the grid and
/// DepthExhausted when `depth` exceeds q.depth().
Parametrix parametrix_with_residual(const ClassicalSymbol& q, int depth,
                                    const NumericPolicy& policy = {});
ClassicalSymbol parametrix(const ClassicalSymbol& q, int depth,
                           const NumericPolicy& policy = {});

}  // namespace psindex
