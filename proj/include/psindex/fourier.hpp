#pragma once

#include <complex>
#include <map>
#include <span>
#include <vector>

#include "psindex/config.hpp"

namespace psindex {

using cplx = std::complex<double>;

inline constexpr double kPruneTol = 1e-14;

/// Smooth periodic function on the circle, stored by its finitely many
/// nonzero Fourier amplitudes: f(x) = sum_k c_k e^{ikx}.
class CoeffFn {
 public:
  CoeffFn() = default;
  CoeffFn(cplx constant);  // NOLINT: constants convert implicitly
  static CoeffFn monomial(int k, cplx amplitude = 1.0);
  static CoeffFn cosine(int k);
  static CoeffFn sine(int k);
  static CoeffFn from_coeffs(std::map<int, cplx> coeffs,
                             double prune_tol = kPruneTol);

  const std::map<int, cplx>& coeffs() const { return coeffs_; }
  cplx coeff(int k) const;
  int bandwidth() const;
  bool is_zero() const { return coeffs_.empty(); }

  cplx operator()(double x) const;
  double sup_coeff() const;   // max_k |c_k|
  double l1_norm() const;     // sum_k |c_k|, bounds max_x |f(x)|

  friend bool operator==(const CoeffFn&, const CoeffFn&) = default;

 private:
  std::map<int, cplx> coeffs_;
};

CoeffFn add(const CoeffFn& f, const CoeffFn& g, double prune_tol = kPruneTol);
CoeffFn multiply(const CoeffFn& f, const CoeffFn& g,
                 double prune_tol = kPruneTol);
CoeffFn scale(const CoeffFn& f, cplx z, double prune_tol = kPruneTol);
CoeffFn conj(const CoeffFn& f);

inline CoeffFn operator+(const CoeffFn& f, const CoeffFn& g) { return add(f, g); }
inline CoeffFn operator-(const CoeffFn& f, const CoeffFn& g) {
  return add(f, scale(g, -1.0));
}
inline CoeffFn operator-(const CoeffFn& f) { return scale(f, -1.0); }
inline CoeffFn operator*(const CoeffFn& f, const CoeffFn& g) {
  return multiply(f, g);
}
inline CoeffFn operator*(cplx z, const CoeffFn& f) { return scale(f, z); }

/// c_k -> i k c_k.
CoeffFn dx(const CoeffFn& f);
CoeffFn dx(const CoeffFn& f, int order);

/// (1/2pi) * integral over the circle, i.e. c_0.
cplx mean(const CoeffFn& f);

/// Samples on the uniform grid x_j = 2 pi j / n.
std::vector<cplx> sample(const CoeffFn& f, int n);

/// Inverse of `sample`: Fourier amplitudes of grid values, keeping
/// frequencies |k| <= band (and |k| < n/2).
CoeffFn from_samples(std::span<const cplx> values, int band,
                     double prune_tol = kPruneTol);

/// Smallest power of two >= n.
int next_pow2(int n);

/// Reciprocal with its achieved residual sum_k |(f g - 1)_k|.
struct Inverse {
  CoeffFn value;
  double residual = 0.0;
};

/// Pointwise reciprocal computed on an oversampled grid and truncated.
/// Throws NotInvertible if min |f| <= policy.inversion_floor and
/// BandwidthExceeded if `tol` cannot be met within `band_cap`.
Inverse invert(const CoeffFn& f, int band_cap, double tol,
               const NumericPolicy& policy = {});

}  // namespace psindex
