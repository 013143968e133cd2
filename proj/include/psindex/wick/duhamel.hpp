#pragma once

#include <vector>

#include <boost/rational.hpp>

#include "psindex/wick/weyl_word.hpp"

namespace psindex::wick {

using Rational = boost::rational<long long>;

/// Integral over the simplex {t_0 + ... + t_k = 1} of
/// prod_j (t_0 + ... + t_{j-1})^{l_j}, j = 1..k, which equals
/// prod_j 1 / (l_1 + ... + l_j + j).
Rational simplex_integral(const std::vector<int>& l);

/// ad_Delta^l(s) for l = 0, 1, ... until it vanishes. Throws CapExceeded
/// when more than `cap` nonzero terms appear.
std::vector<WeylWord> conjugation_series(const WeylWord& s, int cap = 64);

/// exp(Delta + s) exp(-Delta) with Delta = i D.dp, expanded through the
/// Duhamel formula with exact simplex weights and truncated at the words'
/// epsilon order. Every term of s must carry at least one epsilon.
WeylWord duhamel_exp(const WeylWord& s, int cap = 64);

/// Same operator from the two exponential series, computed modulo words of
/// D-degree above `max_D`. Only practical for small orders.
WeylWord naive_exp(const WeylWord& s, int max_D);

}  // namespace psindex::wick
