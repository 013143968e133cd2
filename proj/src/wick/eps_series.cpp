#include "psindex/wick/eps_series.hpp"

#include <algorithm>
#include <cmath>

#include "psindex/error.hpp"

namespace psindex::wick {

EpsSeries EpsSeries::constant(cplx c, int order) {
  return monomial(0, c, order);
}

EpsSeries EpsSeries::monomial(int power, cplx c, int order) {
  EpsSeries s(order);
  s.add_to(power, c);
  return s;
}

int EpsSeries::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != cplx(0.0)) return low_ + static_cast<int>(i);
  return order_ + 1;
}

bool EpsSeries::is_zero() const {
  return std::all_of(c_.begin(), c_.end(),
                     [](cplx z) { return z == cplx(0.0); });
}

cplx EpsSeries::operator[](int power) const {
  const int i = power - low_;
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0.0;
  return c_[i];
}

void EpsSeries::add_to(int power, cplx c) {
  if (power > order_ || c == cplx(0.0)) return;
  if (c_.empty()) {
    low_ = power;
    c_.assign(1, c);
    return;
  }
  if (power < low_) {
    c_.insert(c_.begin(), low_ - power, cplx(0.0));
    low_ = power;
  }
  const int i = power - low_;
  if (i >= static_cast<int>(c_.size())) c_.resize(i + 1, cplx(0.0));
  c_[i] += c;
}

void EpsSeries::add_scaled(cplx z, const EpsSeries& a) {
  if (z == cplx(0.0) || a.c_.empty()) return;
  const int top = std::min(order_, a.low_ + static_cast<int>(a.c_.size()) - 1);
  if (top < a.low_) return;
  if (c_.empty()) {
    low_ = a.low_;
    c_.assign(top - low_ + 1, cplx(0.0));
  } else if (a.low_ < low_) {
    c_.insert(c_.begin(), low_ - a.low_, cplx(0.0));
    low_ = a.low_;
  }
  if (top - low_ + 1 > static_cast<int>(c_.size()))
    c_.resize(top - low_ + 1, cplx(0.0));
  for (int p = a.low_; p <= top; ++p) c_[p - low_] += z * a.c_[p - a.low_];
}

double EpsSeries::max_abs() const {
  double m = 0.0;
  for (const cplx c : c_) m = std::max(m, std::abs(c));
  return m;
}

EpsSeries EpsSeries::inverse() const {
  if (valuation() != 0)
    throw Error(ErrorKind::InvalidArgument,
                "series inverse needs a nonzero constant term");
  const cplx c0 = (*this)[0];
  EpsSeries inv(order_);
  inv.add_to(0, 1.0 / c0);
  for (int k = 1; k <= order_; ++k) {
    cplx acc = 0.0;
    for (int j = 1; j <= k; ++j) acc += (*this)[j] * inv[k - j];
    inv.add_to(k, -acc / c0);
  }
  return inv;
}

EpsSeries EpsSeries::shifted(int k) const {
  EpsSeries s(order_ + k);
  s.low_ = low_ + k;
  s.c_ = c_;
  return s;
}

EpsSeries EpsSeries::truncated(int order) const {
  EpsSeries s(std::min(order, order_));
  s.add_scaled(1.0, *this);
  return s;
}

bool operator==(const EpsSeries& a, const EpsSeries& b) {
  if (a.order() != b.order()) return false;
  const int lo = std::min(a.valuation(), b.valuation());
  for (int p = lo; p <= a.order(); ++p)
    if (a[p] != b[p]) return false;
  return true;
}

EpsSeries operator+(const EpsSeries& a, const EpsSeries& b) {
  EpsSeries s(std::min(a.order(), b.order()));
  s.add_scaled(1.0, a);
  s.add_scaled(1.0, b);
  return s;
}

EpsSeries operator-(const EpsSeries& a) { return cplx(-1.0) * a; }

EpsSeries operator-(const EpsSeries& a, const EpsSeries& b) {
  EpsSeries s(std::min(a.order(), b.order()));
  s.add_scaled(1.0, a);
  s.add_scaled(-1.0, b);
  return s;
}

EpsSeries operator*(const EpsSeries& a, const EpsSeries& b) {
  // Zero factors carry no valuation information; keep the other order.
  const int va = a.valuation(), vb = b.valuation();
  int order = std::min(a.order(), b.order());
  if (va <= a.order() && vb <= b.order())
    order = std::min(a.order() + vb, b.order() + va);
  EpsSeries s(order);
  if (va > a.order() || vb > b.order() || va + vb > order) return s;
  std::vector<cplx> out(order - (va + vb) + 1, cplx(0.0));
  for (int i = va; i <= a.order(); ++i) {
    const cplx x = a[i];
    if (x == cplx(0.0)) continue;
    for (int j = vb; i + j <= order; ++j) out[i + j - va - vb] += x * b[j];
  }
  for (std::size_t k = 0; k < out.size(); ++k)
    s.add_to(va + vb + static_cast<int>(k), out[k]);
  return s;
}

EpsSeries operator*(cplx z, const EpsSeries& a) {
  EpsSeries s(a.order());
  s.add_scaled(z, a);
  return s;
}

void require_nonnegative(const EpsSeries& a) {
  if (!a.is_zero() && a.valuation() < 0)
    throw Error(ErrorKind::NegativeValuation,
                "a negative power of epsilon survived the contraction");
}

}  // namespace psindex::wick
