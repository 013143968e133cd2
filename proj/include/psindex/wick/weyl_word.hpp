#pragma once

#include <array>
#include <cstdint>
#include <map>

#include "psindex/wick/eps_series.hpp"

namespace psindex::wick {

inline constexpr int kMaxDim = 4;
inline constexpr int kMaxExponent = 31;

using MultiIndex = std::array<int, kMaxDim>;

int total(const MultiIndex& a);
double factorial(const MultiIndex& a);

/// Exponents of one normal-ordered monomial p^gamma D^alpha dp^beta, where
/// p acts by left multiplication, D_i = eps d/dx^i and dp_i = d/dp_i.
struct WordKey {
  MultiIndex gamma{};
  MultiIndex alpha{};
  MultiIndex beta{};

  std::uint64_t pack() const;
  static WordKey unpack(std::uint64_t key);
};

/// Normal-ordered element of the Weyl algebra in n <= 4 variables with
/// epsilon-series coefficients truncated at order K.
///
/// The placeholder D = eps d/dx is used instead of d/dx, so the flat
/// Laplacian eps i dx.dp is i D.dp and carries no epsilon; the contraction
/// of D^alpha dp^beta is then free of negative powers.
class WeylWord {
 public:
  WeylWord(int dim, int order);

  static WeylWord constant(int dim, int order, cplx c);
  static WeylWord monomial(int dim, int order, const WordKey& key,
                           const EpsSeries& coeff);
  static WeylWord p(int dim, int order, int i);
  static WeylWord D(int dim, int order, int i);
  static WeylWord dp(int dim, int order, int i);
  /// i D.dp
  static WeylWord laplacian(int dim, int order);

  int dim() const { return dim_; }
  int order() const { return order_; }
  const std::map<std::uint64_t, EpsSeries>& terms() const { return terms_; }
  EpsSeries coeff(const WordKey& key) const;
  void add_term(const WordKey& key, const EpsSeries& c);
  /// Adds z * c at `key`, truncated at order().
  void add_scaled(const WordKey& key, cplx z, const EpsSeries& c);

  bool is_zero() const { return terms_.empty(); }
  /// Largest |coefficient| over all words and powers.
  double max_abs() const;
  /// Largest total D-degree.
  int max_D_degree() const;
  /// Drops words with total D-degree above `degree`.
  WeylWord truncate_D(int degree) const;

 private:
  int dim_;
  int order_;
  std::map<std::uint64_t, EpsSeries> terms_;
};

WeylWord operator+(const WeylWord& a, const WeylWord& b);
WeylWord operator-(const WeylWord& a, const WeylWord& b);
WeylWord operator*(const WeylWord& a, const WeylWord& b);
WeylWord operator*(cplx z, const WeylWord& a);
WeylWord operator*(const EpsSeries& s, const WeylWord& a);
WeylWord commutator(const WeylWord& a, const WeylWord& b);

inline constexpr int kContractionCap = 8;

/// <dx^alpha dp^beta exp(Delta)> for Delta = i eps dx.dp:
/// delta_{alpha beta} alpha! (i/eps)^{|alpha|}, as a series of valuation
/// -|alpha| truncated at `order`. Throws CapExceeded for |alpha| or |beta|
/// above 8.
EpsSeries contract(const MultiIndex& alpha, const MultiIndex& beta, int order);

/// Applies the contraction to a word (in D placeholders) sitting in front of
/// exp(Delta). The result is a polynomial in p, stored as a word with
/// alpha = beta = 0.
WeylWord contract(const WeylWord& w);
/// contract(a * b) without forming the product.
WeylWord contract_product(const WeylWord& a, const WeylWord& b);

}  // namespace psindex::wick
