#pragma once

// Brute-force contraction: differentiate exp(c (x-y).(p-q)) symbolically and
// set x = y, p = q. Exact integer arithmetic throughout.

#include <array>
#include <map>
#include <utility>

namespace oracle {

// Exponents of u = x - y (first three) and v = p - q (last three).
using Mono = std::array<int, 6>;
// (monomial, power of c) -> integer coefficient.
using Poly = std::map<std::pair<Mono, int>, long long>;

inline Poly derive(const Poly& P, int var) {
  // d/du_i acts as d/du_i + c v_i on P e^{c u.v}; d/dv_i as d/dv_i + c u_i.
  const int partner = var < 3 ? var + 3 : var - 3;
  Poly out;
  for (const auto& [key, coeff] : P) {
    const auto& [mono, cpow] = key;
    if (mono[var] > 0) {
      Mono m = mono;
      --m[var];
      out[{m, cpow}] += coeff * mono[var];
    }
    Mono m = mono;
    ++m[partner];
    out[{m, cpow + 1}] += coeff;
  }
  return out;
}

// Coefficients of c^m in dx^alpha dp^beta e^{c u.v} at u = v = 0.
inline std::map<int, long long> contract_brute(const std::array<int, 3>& alpha,
                                               const std::array<int, 3>& beta) {
  Poly P;
  P[{Mono{}, 0}] = 1;
  for (int i = 0; i < 3; ++i)
    for (int e = 0; e < alpha[i]; ++e) P = derive(P, i);
  for (int i = 0; i < 3; ++i)
    for (int e = 0; e < beta[i]; ++e) P = derive(P, i + 3);
  std::map<int, long long> out;
  for (const auto& [key, coeff] : P)
    if (key.first == Mono{} && coeff != 0) out[key.second] += coeff;
  return out;
}

}  // namespace oracle
