#include "psindex/coeff_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <Eigen/Dense>

#include "psindex/error.hpp"

namespace psindex {

namespace {

void require_same_shape(const CoeffMatrix& a, const CoeffMatrix& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorKind::ShapeMismatch, "matrix dimensions differ");
  }
}

CoeffMatrix minor_of(const CoeffMatrix& a, int row, int col) {
  CoeffMatrix out = CoeffMatrix::zero(a.dim() - 1);
  for (int r = 0, rr = 0; r < a.dim(); ++r) {
    if (r == row) continue;
    for (int c = 0, cc = 0; c < a.dim(); ++c) {
      if (c == col) continue;
      out(rr, cc++) = a(r, c);
    }
    ++rr;
  }
  return out;
}

}  // namespace

CoeffMatrix CoeffMatrix::zero(int dim) {
  if (dim < 1) throw Error(ErrorKind::ShapeMismatch, "matrix dimension < 1");
  CoeffMatrix m;
  m.dim_ = dim;
  m.entries_.assign(static_cast<std::size_t>(dim) * dim, CoeffFn());
  return m;
}

CoeffMatrix::CoeffMatrix(const CoeffFn& scalar) : dim_(1), entries_{scalar} {}

CoeffMatrix CoeffMatrix::identity(int dim) {
  CoeffMatrix m = CoeffMatrix::zero(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = CoeffFn(1.0);
  return m;
}

CoeffMatrix CoeffMatrix::diagonal(const std::vector<CoeffFn>& entries) {
  CoeffMatrix m = CoeffMatrix::zero(static_cast<int>(entries.size()));
  for (int i = 0; i < m.dim(); ++i) m(i, i) = entries[i];
  return m;
}

bool CoeffMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const CoeffFn& f) { return f.is_zero(); });
}

int CoeffMatrix::bandwidth() const {
  int b = 0;
  for (const auto& f : entries_) b = std::max(b, f.bandwidth());
  return b;
}

double CoeffMatrix::max_l1() const {
  double m = 0.0;
  for (const auto& f : entries_) m = std::max(m, f.l1_norm());
  return m;
}

CoeffMatrix operator+(const CoeffMatrix& a, const CoeffMatrix& b) {
  require_same_shape(a, b);
  CoeffMatrix out = CoeffMatrix::zero(a.dim());
  for (int r = 0; r < a.dim(); ++r)
    for (int c = 0; c < a.dim(); ++c) out(r, c) = a(r, c) + b(r, c);
  return out;
}

CoeffMatrix operator-(const CoeffMatrix& a, const CoeffMatrix& b) {
  return a + cplx(-1.0) * b;
}

CoeffMatrix operator*(const CoeffMatrix& a, const CoeffMatrix& b) {
  require_same_shape(a, b);
  const int n = a.dim();
  CoeffMatrix out = CoeffMatrix::zero(n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      std::map<int, cplx> acc;
      for (int k = 0; k < n; ++k) {
        for (const auto& [k1, c1] : a(r, k).coeffs())
          for (const auto& [k2, c2] : b(k, c).coeffs()) acc[k1 + k2] += c1 * c2;
      }
      out(r, c) = CoeffFn::from_coeffs(std::move(acc));
    }
  }
  return out;
}

CoeffMatrix operator*(cplx z, const CoeffMatrix& a) {
  CoeffMatrix out = CoeffMatrix::zero(a.dim());
  for (int r = 0; r < a.dim(); ++r)
    for (int c = 0; c < a.dim(); ++c) out(r, c) = scale(a(r, c), z);
  return out;
}

CoeffMatrix dx(const CoeffMatrix& a) {
  CoeffMatrix out = CoeffMatrix::zero(a.dim());
  for (int r = 0; r < a.dim(); ++r)
    for (int c = 0; c < a.dim(); ++c) out(r, c) = dx(a(r, c));
  return out;
}

CoeffMatrix dx(const CoeffMatrix& a, int order) {
  CoeffMatrix out = a;
  for (int i = 0; i < order; ++i) out = dx(out);
  return out;
}

CoeffMatrix conjugate_transpose(const CoeffMatrix& a) {
  CoeffMatrix out = CoeffMatrix::zero(a.dim());
  for (int r = 0; r < a.dim(); ++r)
    for (int c = 0; c < a.dim(); ++c) out(c, r) = conj(a(r, c));
  return out;
}

CoeffFn trace(const CoeffMatrix& a) {
  CoeffFn t;
  for (int i = 0; i < a.dim(); ++i) t = t + a(i, i);
  return t;
}

CoeffFn determinant(const CoeffMatrix& a) {
  if (a.dim() == 1) return a(0, 0);
  CoeffFn det;
  for (int c = 0; c < a.dim(); ++c) {
    if (a(0, c).is_zero()) continue;
    const CoeffFn term = a(0, c) * determinant(minor_of(a, 0, c));
    det = (c % 2 == 0) ? det + term : det - term;
  }
  return det;
}

MatrixInverse invert(const CoeffMatrix& a, const NumericPolicy& policy) {
  const int m = a.dim();
  int n = next_pow2(4 * (a.bandwidth() + 1));
  const CoeffMatrix id = CoeffMatrix::identity(m);
  double best = std::numeric_limits<double>::infinity();
  while (true) {
    std::vector<std::vector<cplx>> grid(static_cast<std::size_t>(m) * m);
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < m; ++c) grid[r * m + c] = sample(a(r, c), n);

    std::vector<std::vector<cplx>> inv_grid(grid.size(), std::vector<cplx>(n));
    Eigen::MatrixXcd point(m, m);
    for (int j = 0; j < n; ++j) {
      for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c) point(r, c) = grid[r * m + c][j];
      const cplx det = point.determinant();
      if (std::abs(det) <= policy.inversion_floor) {
        throw Error(ErrorKind::NotElliptic,
                    "leading symbol is singular on the grid");
      }
      const Eigen::MatrixXcd inv = point.inverse();
      Eigen::JacobiSVD<Eigen::MatrixXcd> svd(point);
      const auto& s = svd.singularValues();
      if (s(0) / s(m - 1) > policy.condition_limit) {
        throw Error(ErrorKind::NotElliptic,
                    "leading symbol condition number exceeds limit");
      }
      for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c) inv_grid[r * m + c][j] = inv(r, c);
    }
    const int band = std::min(policy.band_cap, n / 2 - 1);
    MatrixInverse result{CoeffMatrix::zero(m), 0.0};
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < m; ++c)
        result.value(r, c) = from_samples(inv_grid[r * m + c], band,
                                          policy.prune_tol);
    result.residual = (a * result.value - id).max_l1();
    best = std::min(best, result.residual);
    if (result.residual <= policy.inverse_tol) return result;
    if (band >= policy.band_cap) {
      throw Error(ErrorKind::BandwidthExceeded,
                  "matrix inverse residual " + std::to_string(best) +
                      " above tolerance within bandwidth cap");
    }
    n *= 2;
  }
}

}  // namespace psindex
