#include "psindex/wick/weyl_word.hpp"

#include <algorithm>
#include <cmath>

#include "psindex/error.hpp"

namespace psindex::wick {

namespace {

constexpr int kBits = 5;

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

double falling(int n, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= n - i;
  return r;
}

void check_dim(int dim) {
  if (dim < 1 || dim > kMaxDim)
    throw Error(ErrorKind::InvalidArgument, "Weyl words support 1 <= n <= 4");
}

void check_exponents(const WordKey& k) {
  for (int i = 0; i < kMaxDim; ++i)
    if (k.gamma[i] > kMaxExponent || k.alpha[i] > kMaxExponent ||
        k.beta[i] > kMaxExponent)
      throw Error(ErrorKind::CapExceeded, "word exponent above 31");
}

// dp^beta p^gamma = sum_delta C(beta,delta) gamma!/(gamma-delta)!
//                   p^{gamma-delta} dp^{beta-delta}, one variable at a time.
void leibniz(const MultiIndex& beta, const MultiIndex& gamma, int dim, int i,
             MultiIndex& g_out, MultiIndex& b_out, double weight,
             std::vector<std::tuple<MultiIndex, MultiIndex, double>>& out) {
  if (i == dim) {
    out.emplace_back(g_out, b_out, weight);
    return;
  }
  const int m = std::min(beta[i], gamma[i]);
  for (int d = 0; d <= m; ++d) {
    g_out[i] = gamma[i] - d;
    b_out[i] = beta[i] - d;
    leibniz(beta, gamma, dim, i + 1, g_out, b_out,
            weight * binomial(beta[i], d) * falling(gamma[i], d), out);
  }
}

}  // namespace

int total(const MultiIndex& a) {
  int t = 0;
  for (const int x : a) t += x;
  return t;
}

double factorial(const MultiIndex& a) {
  double f = 1.0;
  for (const int x : a)
    for (int i = 2; i <= x; ++i) f *= i;
  return f;
}

std::uint64_t WordKey::pack() const {
  std::uint64_t key = 0;
  for (const MultiIndex* m : {&gamma, &alpha, &beta})
    for (const int x : *m) key = (key << kBits) | static_cast<std::uint64_t>(x);
  return key;
}

WordKey WordKey::unpack(std::uint64_t key) {
  WordKey k;
  for (MultiIndex* m : {&k.beta, &k.alpha, &k.gamma})
    for (int i = kMaxDim - 1; i >= 0; --i) {
      (*m)[i] = static_cast<int>(key & ((1u << kBits) - 1));
      key >>= kBits;
    }
  return k;
}

WeylWord::WeylWord(int dim, int order) : dim_(dim), order_(order) {
  check_dim(dim);
}

WeylWord WeylWord::constant(int dim, int order, cplx c) {
  return monomial(dim, order, WordKey{}, EpsSeries::constant(c, order));
}

WeylWord WeylWord::monomial(int dim, int order, const WordKey& key,
                            const EpsSeries& coeff) {
  WeylWord w(dim, order);
  w.add_term(key, coeff);
  return w;
}

WeylWord WeylWord::p(int dim, int order, int i) {
  WordKey k;
  k.gamma[i] = 1;
  return monomial(dim, order, k, EpsSeries::constant(1.0, order));
}

WeylWord WeylWord::D(int dim, int order, int i) {
  WordKey k;
  k.alpha[i] = 1;
  return monomial(dim, order, k, EpsSeries::constant(1.0, order));
}

WeylWord WeylWord::dp(int dim, int order, int i) {
  WordKey k;
  k.beta[i] = 1;
  return monomial(dim, order, k, EpsSeries::constant(1.0, order));
}

WeylWord WeylWord::laplacian(int dim, int order) {
  WeylWord w(dim, order);
  for (int i = 0; i < dim; ++i) {
    WordKey k;
    k.alpha[i] = 1;
    k.beta[i] = 1;
    w.add_term(k, EpsSeries::constant(cplx(0.0, 1.0), order));
  }
  return w;
}

EpsSeries WeylWord::coeff(const WordKey& key) const {
  const auto it = terms_.find(key.pack());
  return it == terms_.end() ? EpsSeries(order_) : it->second;
}

void WeylWord::add_term(const WordKey& key, const EpsSeries& c) {
  add_scaled(key, 1.0, c);
}

void WeylWord::add_scaled(const WordKey& key, cplx z, const EpsSeries& c) {
  check_exponents(key);
  if (z == cplx(0.0) || c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key.pack(), order_);
  it->second.add_scaled(z, c);
  if (it->second.is_zero()) terms_.erase(it);
}

double WeylWord::max_abs() const {
  double m = 0.0;
  for (const auto& [k, c] : terms_) m = std::max(m, c.max_abs());
  return m;
}

int WeylWord::max_D_degree() const {
  int d = 0;
  for (const auto& [k, c] : terms_) d = std::max(d, total(WordKey::unpack(k).alpha));
  return d;
}

WeylWord WeylWord::truncate_D(int degree) const {
  WeylWord w(dim_, order_);
  for (const auto& [k, c] : terms_)
    if (total(WordKey::unpack(k).alpha) <= degree) w.terms_.emplace(k, c);
  return w;
}

WeylWord operator+(const WeylWord& a, const WeylWord& b) {
  WeylWord w(std::max(a.dim(), b.dim()), std::min(a.order(), b.order()));
  for (const auto& [k, c] : a.terms()) w.add_term(WordKey::unpack(k), c);
  for (const auto& [k, c] : b.terms()) w.add_term(WordKey::unpack(k), c);
  return w;
}

WeylWord operator-(const WeylWord& a, const WeylWord& b) {
  return a + cplx(-1.0) * b;
}

WeylWord operator*(const WeylWord& a, const WeylWord& b) {
  const int dim = std::max(a.dim(), b.dim());
  WeylWord w(dim, std::min(a.order(), b.order()));
  std::vector<std::tuple<MultiIndex, MultiIndex, double>> split;
  for (const auto& [ka, ca] : a.terms()) {
    const WordKey x = WordKey::unpack(ka);
    for (const auto& [kb, cb] : b.terms()) {
      const WordKey y = WordKey::unpack(kb);
      const EpsSeries c = ca * cb;
      if (c.is_zero()) continue;
      split.clear();
      MultiIndex g{}, bt{};
      leibniz(x.beta, y.gamma, dim, 0, g, bt, 1.0, split);
      for (const auto& [gr, br, weight] : split) {
        WordKey out;
        for (int i = 0; i < kMaxDim; ++i) {
          out.gamma[i] = x.gamma[i] + gr[i];
          out.alpha[i] = x.alpha[i] + y.alpha[i];
          out.beta[i] = br[i] + y.beta[i];
        }
        w.add_scaled(out, weight, c);
      }
    }
  }
  return w;
}

WeylWord operator*(cplx z, const WeylWord& a) {
  WeylWord w(a.dim(), a.order());
  for (const auto& [k, c] : a.terms()) w.add_term(WordKey::unpack(k), z * c);
  return w;
}

WeylWord operator*(const EpsSeries& s, const WeylWord& a) {
  WeylWord w(a.dim(), a.order());
  for (const auto& [k, c] : a.terms()) w.add_term(WordKey::unpack(k), s * c);
  return w;
}

WeylWord commutator(const WeylWord& a, const WeylWord& b) {
  return a * b - b * a;
}

EpsSeries contract(const MultiIndex& alpha, const MultiIndex& beta, int order) {
  if (total(alpha) > kContractionCap || total(beta) > kContractionCap)
    throw Error(ErrorKind::CapExceeded, "contraction multi-index above cap");
  if (alpha != beta) return EpsSeries(order);
  const int a = total(alpha);
  cplx ipow = 1.0;
  for (int i = 0; i < a; ++i) ipow *= cplx(0.0, 1.0);
  return EpsSeries::monomial(-a, factorial(alpha) * ipow, order);
}

WeylWord contract(const WeylWord& w) {
  WeylWord out(w.dim(), w.order());
  for (const auto& [k, c] : w.terms()) {
    const WordKey key = WordKey::unpack(k);
    if (key.alpha != key.beta) continue;
    // D^alpha = eps^{|alpha|} dx^alpha cancels the (i/eps)^{|alpha|}.
    const int a = total(key.alpha);
    cplx ipow = 1.0;
    for (int i = 0; i < a; ++i) ipow *= cplx(0.0, 1.0);
    WordKey poly;
    poly.gamma = key.gamma;
    out.add_term(poly, (factorial(key.alpha) * ipow) * c);
  }
  return out;
}

WeylWord contract_product(const WeylWord& a, const WeylWord& b) {
  const int dim = std::max(a.dim(), b.dim());
  WeylWord out(dim, std::min(a.order(), b.order()));
  std::vector<std::tuple<MultiIndex, MultiIndex, double>> split;
  for (const auto& [ka, ca] : a.terms()) {
    const WordKey x = WordKey::unpack(ka);
    for (const auto& [kb, cb] : b.terms()) {
      const WordKey y = WordKey::unpack(kb);
      // Normal ordering only lowers beta, so alpha must not exceed it.
      bool reachable = true;
      for (int i = 0; i < kMaxDim; ++i)
        if (x.alpha[i] + y.alpha[i] > x.beta[i] + y.beta[i] ||
            x.alpha[i] + y.alpha[i] < y.beta[i])
          reachable = false;
      if (!reachable) continue;
      split.clear();
      MultiIndex g{}, bt{};
      leibniz(x.beta, y.gamma, dim, 0, g, bt, 1.0, split);
      EpsSeries c(out.order());
      bool have_c = false;
      for (const auto& [gr, br, weight] : split) {
        WordKey poly;
        MultiIndex alpha{};
        bool match = true;
        for (int i = 0; i < kMaxDim; ++i) {
          alpha[i] = x.alpha[i] + y.alpha[i];
          if (alpha[i] != br[i] + y.beta[i]) match = false;
          poly.gamma[i] = x.gamma[i] + gr[i];
        }
        if (!match) continue;
        if (!have_c) {
          c = ca * cb;
          have_c = true;
        }
        cplx ipow = 1.0;
        for (int i = 0; i < total(alpha); ++i) ipow *= cplx(0.0, 1.0);
        out.add_scaled(poly, weight * factorial(alpha) * ipow, c);
      }
    }
  }
  return out;
}

}  // namespace psindex::wick
