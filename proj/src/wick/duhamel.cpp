#include "psindex/wick/duhamel.hpp"

#include <map>

#include "psindex/error.hpp"

namespace psindex::wick {

namespace {

void require_positive_valuation(const WeylWord& s) {
  for (const auto& [k, c] : s.terms())
    if (c.valuation() < 1)
      throw Error(ErrorKind::InvalidArgument,
                  "perturbation terms must carry a factor of epsilon");
}

double to_double(const Rational& r) { return boost::rational_cast<double>(r); }

}  // namespace

Rational simplex_integral(const std::vector<int>& l) {
  Rational r(1);
  long long partial = 0;
  for (std::size_t j = 0; j < l.size(); ++j) {
    partial += l[j];
    r /= partial + static_cast<long long>(j) + 1;
  }
  return r;
}

std::vector<WeylWord> conjugation_series(const WeylWord& s, int cap) {
  const WeylWord delta = WeylWord::laplacian(s.dim(), s.order());
  std::vector<WeylWord> out{s};
  while (true) {
    WeylWord next = commutator(delta, out.back());
    if (next.is_zero()) return out;
    if (static_cast<int>(out.size()) >= cap)
      throw Error(ErrorKind::CapExceeded, "ad_Delta series did not terminate");
    out.push_back(std::move(next));
  }
}

WeylWord duhamel_exp(const WeylWord& s, int cap) {
  require_positive_valuation(s);
  const int dim = s.dim();
  const int order = s.order();
  const std::vector<WeylWord> ad = conjugation_series(s, cap);

  // sigma^t(s) = sum_l t^l / l! ad^l(s). A[L] collects all products of j
  // conjugated factors whose t-exponents sum to L, already integrated.
  std::map<int, WeylWord> A;
  A.emplace(0, WeylWord::constant(dim, order, 1.0));
  WeylWord total = WeylWord::constant(dim, order, 1.0);
  for (int j = 1; j <= order; ++j) {
    std::map<int, WeylWord> next;
    for (const auto& [L, word] : A) {
      Rational lfact(1);
      for (int l = 0; l < static_cast<int>(ad.size()); ++l) {
        if (l > 0) lfact *= l;
        const Rational w = Rational(1) / (lfact * (L + l + j));
        WeylWord term = to_double(w) * (word * ad[l]);
        if (term.is_zero()) continue;
        auto it = next.find(L + l);
        if (it == next.end())
          next.emplace(L + l, std::move(term));
        else
          it->second = it->second + term;
      }
    }
    A = std::move(next);
    if (A.empty()) break;
    for (const auto& [L, word] : A) total = total + word;
  }
  return total;
}

WeylWord naive_exp(const WeylWord& s, int max_D) {
  require_positive_valuation(s);
  const int dim = s.dim();
  const int order = s.order();
  const WeylWord delta = WeylWord::laplacian(dim, order);
  auto series = [&](const WeylWord& x, int terms) {
    WeylWord sum = WeylWord::constant(dim, order, 1.0);
    WeylWord power = WeylWord::constant(dim, order, 1.0);
    for (int m = 1; m <= terms; ++m) {
      power = (cplx(1.0 / m) * (power * x)).truncate_D(max_D);
      if (power.is_zero()) break;
      sum = sum + power;
    }
    return sum;
  };
  // A word of (Delta + s)^m with a Laplacians has D-degree a and epsilon
  // order at least m - a, so m <= max_D + order suffices.
  const WeylWord left = series(delta + s, max_D + order);
  const WeylWord right = series(cplx(-1.0) * delta, max_D);
  return (left * right).truncate_D(max_D);
}

}  // namespace psindex::wick
