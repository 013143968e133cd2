#pragma once

#include <complex>
#include <vector>

namespace psindex::wick {

using cplx = std::complex<double>;

/// Truncated Laurent series in epsilon: coefficients of eps^v, ..., eps^K.
/// Negative powers are allowed (contractions produce them); nothing above
/// `order()` is ever stored or read.
class EpsSeries {
 public:
  explicit EpsSeries(int order = 0) : order_(order) {}
  static EpsSeries constant(cplx c, int order);
  static EpsSeries monomial(int power, cplx c, int order);

  int order() const { return order_; }
  /// Lowest power with a nonzero coefficient; order() + 1 for zero.
  int valuation() const;
  bool is_zero() const;
  cplx operator[](int power) const;
  void add_to(int power, cplx c);
  /// this += z * a, truncated at order().
  void add_scaled(cplx z, const EpsSeries& a);

  /// Stored window: powers low() .. low() + dense().size() - 1.
  int low() const { return low_; }
  const std::vector<cplx>& dense() const { return c_; }

  /// Largest |coefficient|.
  double max_abs() const;

  /// 1 / this; requires valuation 0.
  EpsSeries inverse() const;
  /// Multiplies by eps^k; the truncation order moves with it.
  EpsSeries shifted(int k) const;
  EpsSeries truncated(int order) const;

  friend bool operator==(const EpsSeries& a, const EpsSeries& b);

 private:
  int order_;
  int low_ = 0;
  std::vector<cplx> c_;  // may hold exact zeros at either end
};

EpsSeries operator+(const EpsSeries& a, const EpsSeries& b);
EpsSeries operator-(const EpsSeries& a, const EpsSeries& b);
EpsSeries operator-(const EpsSeries& a);
/// Truncated at min(a.order() + b.valuation(), b.order() + a.valuation()).
EpsSeries operator*(const EpsSeries& a, const EpsSeries& b);
EpsSeries operator*(cplx z, const EpsSeries& a);

/// Throws NegativeValuation when a nonzero coefficient of a negative power
/// of epsilon survives.
void require_nonnegative(const EpsSeries& a);

}  // namespace psindex::wick
