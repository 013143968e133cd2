#pragma once

#include <optional>
#include <vector>

#include "psindex/symbol.hpp"

namespace psindex {

/// The derivation a -> [log q, a]. Canonical mode uses q = |p| and is exact;
/// general mode expands in commutators with a scalar, positive elliptic
/// order-one q and caches the powers q^{-k}.
class LogQ {
 public:
  static LogQ canonical(int depth);
  /// Throws NotElliptic unless q is scalar, of order one and has leading
  /// branches that are real and positive on the grid.
  static LogQ general(const ClassicalSymbol& q, int depth,
                      const NumericPolicy& policy = {});

  bool is_canonical() const { return !q_.has_value(); }
  int depth() const { return depth_; }
  const ClassicalSymbol& q() const { return *q_; }
  /// q^{-k} for k = 1..depth, index k-1.
  const std::vector<ClassicalSymbol>& inverse_powers() const { return qinv_; }

 private:
  LogQ() = default;
  int depth_ = 0;
  std::optional<ClassicalSymbol> q_;
  std::vector<ClassicalSymbol> qinv_;
};

/// [log q, a]. Order drops by one. Canonical mode keeps
/// min(depth(a), L.depth()) components; general mode keeps one fewer.
ClassicalSymbol logq_commutator(const LogQ& L, const ClassicalSymbol& a);

/// c(a0, a1) = wres(a0 * [log q, a1]) with the matrix trace.
cplx radul(const LogQ& L, const ClassicalSymbol& a0, const ClassicalSymbol& a1);

/// bc(a0,a1,a2) = c(a0 a1, a2) - c(a0, a1 a2) + c(a2 a0, a1).
cplx hochschild_defect(const LogQ& L, const ClassicalSymbol& a0,
                       const ClassicalSymbol& a1, const ClassicalSymbol& a2);

/// c(a0, a1) + c(a1, a0).
cplx antisymmetry_defect(const LogQ& L, const ClassicalSymbol& a0,
                         const ClassicalSymbol& a1);

}  // namespace psindex
