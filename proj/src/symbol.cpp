#include "psindex/symbol.hpp"

#include <algorithm>
#include <cmath>

#include "psindex/error.hpp"

namespace psindex {

namespace {

constexpr double kDegreeTol = 1e-9;

// d (d-1) ... (d-k+1)
double falling(double d, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= d - i;
  return r;
}

cplx star_weight(int k) {
  cplx w = 1.0;
  for (int i = 1; i <= k; ++i) w *= cplx(0.0, -1.0) / static_cast<double>(i);
  return w;
}

// Accumulates (-i)^k/k! d_p^k a . d_x^k b into `out` (degree da+db-k).
void add_star_term(HomComponent& out, const HomComponent& a,
                   const HomComponent& b, int k) {
  const double f = falling(a.degree, k);
  if (f == 0.0) return;
  if (a.plus.is_zero() && a.minus.is_zero()) return;
  const cplx w = star_weight(k) * f;
  const double sign = (k % 2 == 0) ? 1.0 : -1.0;
  if (!a.plus.is_zero())
    out.plus = out.plus + w * (a.plus * dx(b.plus, k));
  if (!a.minus.is_zero())
    out.minus = out.minus + (w * sign) * (a.minus * dx(b.minus, k));
}

void require_same_dim(const ClassicalSymbol& a, const ClassicalSymbol& b) {
  if (a.dim() != b.dim())
    throw Error(ErrorKind::ShapeMismatch, "symbol matrix sizes differ");
}

}  // namespace

int degree_offset(double order, double degree) {
  const double j = order - degree;
  const double r = std::round(j);
  if (std::abs(j - r) > kDegreeTol) return -1;
  return static_cast<int>(r);
}

ClassicalSymbol::ClassicalSymbol(double order, int depth, int dim)
    : order_(order), dim_(dim) {
  if (depth < 1) throw Error(ErrorKind::DepthExhausted, "depth must be >= 1");
  components_.reserve(depth);
  for (int j = 0; j < depth; ++j)
    components_.push_back({order - j, CoeffMatrix::zero(dim), CoeffMatrix::zero(dim)});
}

ClassicalSymbol ClassicalSymbol::constant(const CoeffMatrix& value,
                                          int depth) {
  return homogeneous(0.0, depth, value, value);
}

ClassicalSymbol ClassicalSymbol::homogeneous(double order, int depth,
                                             const CoeffMatrix& plus,
                                             const CoeffMatrix& minus) {
  if (plus.dim() != minus.dim())
    throw Error(ErrorKind::ShapeMismatch, "branch matrix sizes differ");
  ClassicalSymbol s(order, depth, plus.dim());
  s.component(0).plus = plus;
  s.component(0).minus = minus;
  return s;
}

const HomComponent* ClassicalSymbol::at_degree(double d) const {
  const int j = degree_offset(order_, d);
  if (j < 0 || j >= depth()) return nullptr;
  return &components_[j];
}

bool ClassicalSymbol::is_zero() const {
  return std::all_of(components_.begin(), components_.end(),
                     [](const HomComponent& c) {
                       return c.plus.is_zero() && c.minus.is_zero();
                     });
}

double ClassicalSymbol::max_norm() const {
  double m = 0.0;
  for (const auto& c : components_)
    m = std::max({m, c.plus.max_l1(), c.minus.max_l1()});
  return m;
}

ClassicalSymbol operator+(const ClassicalSymbol& a, const ClassicalSymbol& b) {
  require_same_dim(a, b);
  if (degree_offset(a.order(), b.order()) == -1 &&
      degree_offset(b.order(), a.order()) == -1)
    throw Error(ErrorKind::InvalidArgument,
                "orders differ by a non-integer amount");
  const double top = std::max(a.order(), b.order());
  const double low = std::max(a.lowest_degree(), b.lowest_degree());
  const int depth = degree_offset(top, low) + 1;
  ClassicalSymbol out(top, depth, a.dim());
  for (int j = 0; j < depth; ++j) {
    auto& c = out.component(j);
    for (const ClassicalSymbol* s : {&a, &b}) {
      if (const HomComponent* h = s->at_degree(c.degree)) {
        c.plus = c.plus + h->plus;
        c.minus = c.minus + h->minus;
      }
    }
  }
  return out;
}

ClassicalSymbol operator-(const ClassicalSymbol& a, const ClassicalSymbol& b) {
  return a + cplx(-1.0) * b;
}

ClassicalSymbol operator*(cplx z, const ClassicalSymbol& a) {
  ClassicalSymbol out = a;
  for (int j = 0; j < out.depth(); ++j) {
    out.component(j).plus = z * a.component(j).plus;
    out.component(j).minus = z * a.component(j).minus;
  }
  return out;
}

ClassicalSymbol conjugate_transpose(const ClassicalSymbol& a) {
  ClassicalSymbol out = a;
  for (int j = 0; j < out.depth(); ++j) {
    out.component(j).plus = conjugate_transpose(a.component(j).plus);
    out.component(j).minus = conjugate_transpose(a.component(j).minus);
  }
  return out;
}

ClassicalSymbol dx(const ClassicalSymbol& a) {
  ClassicalSymbol out = a;
  for (int j = 0; j < out.depth(); ++j) {
    out.component(j).plus = dx(a.component(j).plus);
    out.component(j).minus = dx(a.component(j).minus);
  }
  return out;
}

ClassicalSymbol star(const ClassicalSymbol& a, const ClassicalSymbol& b) {
  require_same_dim(a, b);
  const int depth = std::min(a.depth(), b.depth());
  ClassicalSymbol out(a.order() + b.order(), depth, a.dim());
  for (int ja = 0; ja < depth; ++ja)
    for (int jb = 0; ja + jb < depth; ++jb)
      for (int k = 0; ja + jb + k < depth; ++k)
        add_star_term(out.component(ja + jb + k), a.component(ja),
                      b.component(jb), k);
  return out;
}

ClassicalSymbol commutator(const ClassicalSymbol& a, const ClassicalSymbol& b) {
  return star(a, b) - star(b, a);
}

ClassicalSymbol truncate(const ClassicalSymbol& a, int depth) {
  if (depth > a.depth())
    throw Error(ErrorKind::DepthExhausted, "cannot extend a truncated symbol");
  ClassicalSymbol out(a.order(), depth, a.dim());
  for (int j = 0; j < depth; ++j) out.component(j) = a.component(j);
  return out;
}

ClassicalSymbol drop_leading(const ClassicalSymbol& a) {
  if (a.depth() < 2)
    throw Error(ErrorKind::DepthExhausted, "no component left after drop");
  ClassicalSymbol out(a.order() - 1, a.depth() - 1, a.dim());
  for (int j = 0; j < out.depth(); ++j) out.component(j) = a.component(j + 1);
  return out;
}

ClassicalSymbol block_diag(const ClassicalSymbol& a, const ClassicalSymbol& b) {
  if (degree_offset(a.order(), b.order()) != 0)
    throw Error(ErrorKind::ShapeMismatch, "block orders differ");
  const int depth = std::min(a.depth(), b.depth());
  const int n = a.dim() + b.dim();
  ClassicalSymbol out(a.order(), depth, n);
  auto place = [&](CoeffMatrix& dst, const CoeffMatrix& src, int off) {
    for (int r = 0; r < src.dim(); ++r)
      for (int c = 0; c < src.dim(); ++c) dst(off + r, off + c) = src(r, c);
  };
  for (int j = 0; j < depth; ++j) {
    auto& c = out.component(j);
    place(c.plus, a.component(j).plus, 0);
    place(c.minus, a.component(j).minus, 0);
    place(c.plus, b.component(j).plus, a.dim());
    place(c.minus, b.component(j).minus, a.dim());
  }
  return out;
}

std::pair<CoeffMatrix, CoeffMatrix> leading(const ClassicalSymbol& a) {
  return {a.component(0).plus, a.component(0).minus};
}

double distance(const ClassicalSymbol& a, const ClassicalSymbol& b) {
  return (a - b).max_norm();
}

Parametrix parametrix_with_residual(const ClassicalSymbol& q, int depth,
                                    const NumericPolicy& policy) {
  if (depth > q.depth())
    throw Error(ErrorKind::DepthExhausted,
                "parametrix depth exceeds the symbol depth");
  const auto& g = q.component(0);
  const CoeffMatrix inv_plus = invert(g.plus, policy).value;
  const CoeffMatrix inv_minus = invert(g.minus, policy).value;

  ClassicalSymbol b(-q.order(), depth, q.dim());
  b.component(0).plus = inv_plus;
  b.component(0).minus = inv_minus;
  for (int j = 1; j < depth; ++j) {
    HomComponent s{b.component(j).degree + q.order(), CoeffMatrix::zero(q.dim()),
                   CoeffMatrix::zero(q.dim())};
    for (int jb = 0; jb < j; ++jb)
      for (int k = 0; jb + k <= j; ++k)
        add_star_term(s, b.component(jb), q.component(j - jb - k), k);
    b.component(j).plus = cplx(-1.0) * (s.plus * inv_plus);
    b.component(j).minus = cplx(-1.0) * (s.minus * inv_minus);
  }

  const ClassicalSymbol one =
      ClassicalSymbol::constant(CoeffMatrix::identity(q.dim()), depth);
  Parametrix result{b, 0.0, 0.0};
  result.left_residual = distance(star(b, q), one);
  result.right_residual = distance(star(q, b), one);
  return result;
}

ClassicalSymbol parametrix(const ClassicalSymbol& q, int depth,
                           const NumericPolicy& policy) {
  return parametrix_with_residual(q, depth, policy).value;
}

}  // namespace psindex
