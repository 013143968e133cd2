#include "psindex/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <unsupported/Eigen/FFT>

#include "psindex/error.hpp"

namespace psindex {

namespace {

std::map<int, cplx> pruned(std::map<int, cplx> coeffs, double tol) {
  std::erase_if(coeffs, [tol](const auto& kv) { return std::abs(kv.second) < tol; });
  return coeffs;
}

}  // namespace

CoeffFn::CoeffFn(cplx constant) {
  if (std::abs(constant) >= kPruneTol) coeffs_.emplace(0, constant);
}

CoeffFn CoeffFn::monomial(int k, cplx amplitude) {
  return from_coeffs({{k, amplitude}});
}

CoeffFn CoeffFn::cosine(int k) {
  if (k == 0) return CoeffFn(1.0);
  return from_coeffs({{k, 0.5}, {-k, 0.5}});
}

CoeffFn CoeffFn::sine(int k) {
  if (k == 0) return {};
  return from_coeffs({{k, cplx(0.0, -0.5)}, {-k, cplx(0.0, 0.5)}});
}

CoeffFn CoeffFn::from_coeffs(std::map<int, cplx> coeffs, double prune_tol) {
  CoeffFn f;
  f.coeffs_ = pruned(std::move(coeffs), prune_tol);
  return f;
}

cplx CoeffFn::coeff(int k) const {
  const auto it = coeffs_.find(k);
  return it == coeffs_.end() ? cplx{} : it->second;
}

int CoeffFn::bandwidth() const {
  if (coeffs_.empty()) return 0;
  return std::max(std::abs(coeffs_.begin()->first),
                  std::abs(coeffs_.rbegin()->first));
}

cplx CoeffFn::operator()(double x) const {
  cplx sum{};
  for (const auto& [k, c] : coeffs_) sum += c * std::polar(1.0, k * x);
  return sum;
}

double CoeffFn::sup_coeff() const {
  double m = 0.0;
  for (const auto& [k, c] : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

double CoeffFn::l1_norm() const {
  double s = 0.0;
  for (const auto& [k, c] : coeffs_) s += std::abs(c);
  return s;
}

CoeffFn add(const CoeffFn& f, const CoeffFn& g, double prune_tol) {
  auto out = f.coeffs();
  for (const auto& [k, c] : g.coeffs()) out[k] += c;
  return CoeffFn::from_coeffs(std::move(out), prune_tol);
}

CoeffFn multiply(const CoeffFn& f, const CoeffFn& g, double prune_tol) {
  std::map<int, cplx> out;
  for (const auto& [k1, c1] : f.coeffs()) {
    for (const auto& [k2, c2] : g.coeffs()) out[k1 + k2] += c1 * c2;
  }
  return CoeffFn::from_coeffs(std::move(out), prune_tol);
}

CoeffFn scale(const CoeffFn& f, cplx z, double prune_tol) {
  auto out = f.coeffs();
  for (auto& [k, c] : out) c *= z;
  return CoeffFn::from_coeffs(std::move(out), prune_tol);
}

CoeffFn conj(const CoeffFn& f) {
  std::map<int, cplx> out;
  for (const auto& [k, c] : f.coeffs()) out[-k] = std::conj(c);
  return CoeffFn::from_coeffs(std::move(out), 0.0);
}

CoeffFn dx(const CoeffFn& f) {
  std::map<int, cplx> out;
  for (const auto& [k, c] : f.coeffs()) {
    if (k != 0) out[k] = cplx(0.0, k) * c;
  }
  return CoeffFn::from_coeffs(std::move(out), 0.0);
}

CoeffFn dx(const CoeffFn& f, int order) {
  CoeffFn out = f;
  for (int i = 0; i < order; ++i) out = dx(out);
  return out;
}

cplx mean(const CoeffFn& f) { return f.coeff(0); }

int next_pow2(int n) {
  int p = 1;
  while (p < n) p *= 2;
  return p;
}

std::vector<cplx> sample(const CoeffFn& f, int n) {
  std::vector<cplx> spectrum(n);
  for (const auto& [k, c] : f.coeffs()) {
    if (std::abs(k) >= (n + 1) / 2) {
      throw Error(ErrorKind::InvalidArgument, "grid too coarse for bandwidth");
    }
    spectrum[((k % n) + n) % n] += c;
  }
  Eigen::FFT<double> fft;
  fft.SetFlag(Eigen::FFT<double>::Unscaled);
  std::vector<cplx> values;
  fft.inv(values, spectrum);
  return values;
}

CoeffFn from_samples(std::span<const cplx> values, int band, double prune_tol) {
  const int n = static_cast<int>(values.size());
  std::vector<cplx> in(values.begin(), values.end());
  std::vector<cplx> spectrum;
  Eigen::FFT<double> fft;
  fft.fwd(spectrum, in);
  const int limit = std::min(band, (n - 1) / 2);
  std::map<int, cplx> out;
  for (int k = -limit; k <= limit; ++k) {
    out[k] = spectrum[((k % n) + n) % n] / static_cast<double>(n);
  }
  return CoeffFn::from_coeffs(std::move(out), prune_tol);
}

Inverse invert(const CoeffFn& f, int band_cap, double tol,
               const NumericPolicy& policy) {
  int n = next_pow2(4 * (f.bandwidth() + 1));
  const CoeffFn minus_one(-1.0);
  double best = std::numeric_limits<double>::infinity();
  while (true) {
    const auto values = sample(f, n);
    double min_abs = std::numeric_limits<double>::infinity();
    for (const auto& v : values) min_abs = std::min(min_abs, std::abs(v));
    if (min_abs <= policy.inversion_floor) {
      throw Error(ErrorKind::NotInvertible,
                  "coefficient function vanishes on the grid");
    }
    std::vector<cplx> recip(values.size());
    std::transform(values.begin(), values.end(), recip.begin(),
                   [](cplx v) { return 1.0 / v; });
    const int band = std::min(band_cap, n / 2 - 1);
    Inverse inv{from_samples(recip, band, 0.0), 0.0};
    inv.residual = add(multiply(f, inv.value, 0.0), minus_one, 0.0).l1_norm();
    best = std::min(best, inv.residual);
    if (inv.residual <= tol) {
      inv.value = CoeffFn::from_coeffs(inv.value.coeffs(), policy.prune_tol);
      inv.residual = add(multiply(f, inv.value, 0.0), minus_one, 0.0).l1_norm();
      return inv;
    }
    if (band >= band_cap) {
      throw Error(ErrorKind::BandwidthExceeded,
                  "inverse residual " + std::to_string(best) +
                      " above tolerance within bandwidth cap");
    }
    n *= 2;
  }
}

}  // namespace psindex
