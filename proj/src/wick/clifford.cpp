#include "psindex/wick/clifford.hpp"

#include <vector>

#include "psindex/error.hpp"

namespace psindex::wick {

namespace {

// Generator code: psi^i -> i, psibar_i -> n + i. Ascending code order is the
// normal order.
struct Word {
  std::vector<int> gens;
  std::complex<double> coeff;
};

void normal_order(int n, Word w, std::map<CliffordElement::Key, std::complex<double>>& out) {
  std::vector<Word> stack{std::move(w)};
  while (!stack.empty()) {
    Word cur = std::move(stack.back());
    stack.pop_back();
    bool sorted = true;
    for (std::size_t k = 0; k + 1 < cur.gens.size(); ++k) {
      const int a = cur.gens[k];
      const int b = cur.gens[k + 1];
      if (a < b) continue;
      sorted = false;
      if (a == b) break;  // nilpotent generator: the word vanishes
      if (a >= n && b < n && a - n == b) {
        // psibar_i psi^i = 1 - psi^i psibar_i
        Word contracted = cur;
        contracted.gens.erase(contracted.gens.begin() + k,
                              contracted.gens.begin() + k + 2);
        stack.push_back(std::move(contracted));
      }
      std::swap(cur.gens[k], cur.gens[k + 1]);
      cur.coeff = -cur.coeff;
      stack.push_back(std::move(cur));
      break;
    }
    if (!sorted) continue;
    unsigned eta = 0, theta = 0;
    for (const int g : cur.gens) {
      if (g < n)
        eta |= 1u << g;
      else
        theta |= 1u << (g - n);
    }
    auto& slot = out[{eta, theta}];
    slot += cur.coeff;
  }
}

std::vector<int> gens_of(int n, unsigned eta, unsigned theta) {
  std::vector<int> g;
  for (int i = 0; i < n; ++i)
    if (eta & (1u << i)) g.push_back(i);
  for (int i = 0; i < n; ++i)
    if (theta & (1u << i)) g.push_back(n + i);
  return g;
}

void prune(std::map<CliffordElement::Key, std::complex<double>>& m) {
  for (auto it = m.begin(); it != m.end();)
    it = (it->second == std::complex<double>(0.0)) ? m.erase(it) : std::next(it);
}

}  // namespace

CliffordElement::CliffordElement(int dim) : dim_(dim) {
  if (dim < 1 || dim > 4)
    throw Error(ErrorKind::InvalidArgument, "Clifford dimension must be 1..4");
}

CliffordElement CliffordElement::constant(int dim, cplx c) {
  return monomial(dim, 0, 0, c);
}

CliffordElement CliffordElement::psi(int dim, int i) {
  return monomial(dim, 1u << i, 0);
}

CliffordElement CliffordElement::psibar(int dim, int i) {
  return monomial(dim, 0, 1u << i);
}

CliffordElement CliffordElement::monomial(int dim, unsigned eta, unsigned theta,
                                          cplx c) {
  CliffordElement e(dim);
  e.add(eta, theta, c);
  return e;
}

CliffordElement::cplx CliffordElement::coeff(unsigned eta, unsigned theta) const {
  const auto it = terms_.find({eta, theta});
  return it == terms_.end() ? cplx(0.0) : it->second;
}

void CliffordElement::add(unsigned eta, unsigned theta, cplx c) {
  const unsigned full = (1u << dim_) - 1;
  if ((eta & ~full) || (theta & ~full))
    throw Error(ErrorKind::InvalidArgument, "Clifford index out of range");
  terms_[{eta, theta}] += c;
  prune(terms_);
}

CliffordElement operator+(const CliffordElement& a, const CliffordElement& b) {
  CliffordElement out = a;
  for (const auto& [k, c] : b.terms()) out.add(k.first, k.second, c);
  return out;
}

CliffordElement operator-(const CliffordElement& a, const CliffordElement& b) {
  return a + std::complex<double>(-1.0) * b;
}

CliffordElement operator*(std::complex<double> z, const CliffordElement& a) {
  CliffordElement out(a.dim());
  for (const auto& [k, c] : a.terms()) out.add(k.first, k.second, z * c);
  return out;
}

CliffordElement operator*(const CliffordElement& a, const CliffordElement& b) {
  const int n = a.dim();
  std::map<CliffordElement::Key, std::complex<double>> acc;
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      Word w{gens_of(n, ka.first, ka.second), ca * cb};
      const auto tail = gens_of(n, kb.first, kb.second);
      w.gens.insert(w.gens.end(), tail.begin(), tail.end());
      normal_order(n, std::move(w), acc);
    }
  CliffordElement out(n);
  for (const auto& [k, c] : acc) out.add(k.first, k.second, c);
  return out;
}

std::complex<double> supertrace(const CliffordElement& c) {
  const int n = c.dim();
  const unsigned full = (1u << n) - 1;
  // Reversing n psibar's costs (-1)^{n(n-1)/2}.
  const int sign = ((n % 2) ? -1 : 1) * (((n * (n - 1) / 2) % 2) ? -1 : 1);
  return static_cast<double>(sign) * c.coeff(full, full);
}

CliffordElement top_monomial(int dim) {
  CliffordElement e = CliffordElement::constant(dim, 1.0);
  for (int i = 0; i < dim; ++i) e = e * CliffordElement::psi(dim, i);
  for (int i = dim - 1; i >= 0; --i) e = e * CliffordElement::psibar(dim, i);
  return e;
}

CliffordElement pi_element(int dim) {
  CliffordElement e = CliffordElement::constant(dim, 1.0);
  for (int i = 0; i < dim; ++i)
    e = e * CliffordElement::psibar(dim, i) * CliffordElement::psi(dim, i);
  return e;
}

}  // namespace psindex::wick
