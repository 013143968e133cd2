#include "psindex/radul.hpp"

#include <algorithm>
#include <cmath>

#include "psindex/error.hpp"
#include "psindex/residue.hpp"

namespace psindex {

namespace {

// Scalar symbol s promoted to s * identity of size dim.
ClassicalSymbol lift(const ClassicalSymbol& s, int dim) {
  if (dim == 1) return s;
  ClassicalSymbol out(s.order(), s.depth(), dim);
  for (int j = 0; j < s.depth(); ++j)
    for (int i = 0; i < dim; ++i) {
      out.component(j).plus(i, i) = s.component(j).plus(0, 0);
      out.component(j).minus(i, i) = s.component(j).minus(0, 0);
    }
  return out;
}

void require_positive(const CoeffFn& f, const NumericPolicy& policy) {
  const int n = next_pow2(8 * (f.bandwidth() + 1));
  for (const cplx v : sample(f, n)) {
    if (v.real() <= policy.inversion_floor ||
        std::abs(v.imag()) > 1e-12 * std::max(1.0, std::abs(v)))
      throw Error(ErrorKind::NotElliptic,
                  "leading symbol of q is not real and positive");
  }
}

ClassicalSymbol canonical_commutator(int depth, const ClassicalSymbol& a) {
  const int d = std::min(a.depth(), depth);
  ClassicalSymbol out(a.order() - 1, d, a.dim());
  for (int j = 0; j < d; ++j) {
    auto& c = out.component(j);
    for (int k = 1; k <= j + 1; ++k) {
      // (-i)^k/k! * d_p^k log|p|, with d_p^k log|p| = (-1)^{k-1}(k-1)! p^{-k}
      cplx w = (k % 2 == 1) ? 1.0 : -1.0;
      for (int i = 0; i < k; ++i) w *= cplx(0.0, -1.0);
      w /= static_cast<double>(k);
      const double minus_sign = (k % 2 == 0) ? 1.0 : -1.0;
      const HomComponent& src = a.component(j + 1 - k);
      c.plus = c.plus + w * dx(src.plus, k);
      c.minus = c.minus + (w * minus_sign) * dx(src.minus, k);
    }
  }
  return out;
}

}  // namespace

LogQ LogQ::canonical(int depth) {
  if (depth < 1) throw Error(ErrorKind::DepthExhausted, "depth must be >= 1");
  LogQ L;
  L.depth_ = depth;
  return L;
}

LogQ LogQ::general(const ClassicalSymbol& q, int depth,
                   const NumericPolicy& policy) {
  if (q.dim() != 1)
    throw Error(ErrorKind::ShapeMismatch, "q must be a scalar symbol");
  if (degree_offset(q.order(), 1.0) != 0)
    throw Error(ErrorKind::InvalidArgument, "q must have order one");
  require_positive(q.component(0).plus(0, 0), policy);
  require_positive(q.component(0).minus(0, 0), policy);
  LogQ L;
  L.depth_ = std::min(depth, q.depth());
  L.q_ = truncate(q, L.depth_);
  const ClassicalSymbol inv = parametrix(*L.q_, L.depth_, policy);
  L.qinv_.push_back(inv);
  for (int k = 2; k <= L.depth_; ++k) L.qinv_.push_back(star(L.qinv_.back(), inv));
  return L;
}

ClassicalSymbol logq_commutator(const LogQ& L, const ClassicalSymbol& a) {
  if (L.is_canonical()) return canonical_commutator(L.depth(), a);

  const int d = std::min(a.depth(), L.depth());
  if (d < 2)
    throw Error(ErrorKind::DepthExhausted,
                "general log commutator needs depth >= 2");
  const ClassicalSymbol q = lift(L.q(), a.dim());
  ClassicalSymbol out(a.order() - 1, d - 1, a.dim());
  ClassicalSymbol ak = truncate(a, d);
  for (int k = 1; k <= d - 1; ++k) {
    // The leading part of [q, ak] cancels because q is scalar.
    ak = drop_leading(commutator(q, ak));
    const double w = ((k % 2 == 1) ? 1.0 : -1.0) / k;
    out = out + w * star(ak, lift(L.inverse_powers()[k - 1], a.dim()));
  }
  return out;
}

cplx radul(const LogQ& L, const ClassicalSymbol& a0,
           const ClassicalSymbol& a1) {
  if (a0.order() > 1e-9 || a1.order() > 1e-9)
    throw Error(ErrorKind::InvalidArgument,
                "the cocycle takes symbols of order <= 0");
  return wres(star(a0, logq_commutator(L, a1)));
}

cplx hochschild_defect(const LogQ& L, const ClassicalSymbol& a0,
                       const ClassicalSymbol& a1, const ClassicalSymbol& a2) {
  return radul(L, star(a0, a1), a2) - radul(L, a0, star(a1, a2)) +
         radul(L, star(a2, a0), a1);
}

cplx antisymmetry_defect(const LogQ& L, const ClassicalSymbol& a0,
                         const ClassicalSymbol& a1) {
  return radul(L, a0, a1) + radul(L, a1, a0);
}

}  // namespace psindex
