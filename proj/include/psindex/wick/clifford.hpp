#pragma once

#include <complex>
#include <map>
#include <utility>

namespace psindex::wick {

/// Element of the Clifford algebra generated by psi^i, psibar_i (i < n <= 4)
/// with psi psi and psibar psibar anticommuting and
/// psibar_j psi^i = delta_ij - psi^i psibar_j. Stored in the normal-ordered
/// basis psi^eta psibar^theta (ascending indices, psi's first), keyed by the
/// bit masks (eta, theta).
class CliffordElement {
 public:
  using Key = std::pair<unsigned, unsigned>;
  using cplx = std::complex<double>;

  explicit CliffordElement(int dim);
  static CliffordElement constant(int dim, cplx c);
  static CliffordElement psi(int dim, int i);
  static CliffordElement psibar(int dim, int i);
  /// Normal-ordered monomial psi^eta psibar^theta.
  static CliffordElement monomial(int dim, unsigned eta, unsigned theta,
                                  cplx c = 1.0);

  int dim() const { return dim_; }
  const std::map<Key, cplx>& terms() const { return terms_; }
  cplx coeff(unsigned eta, unsigned theta) const;
  void add(unsigned eta, unsigned theta, cplx c);

  friend bool operator==(const CliffordElement&, const CliffordElement&) = default;

 private:
  int dim_;
  std::map<Key, cplx> terms_;
};

CliffordElement operator+(const CliffordElement& a, const CliffordElement& b);
CliffordElement operator-(const CliffordElement& a, const CliffordElement& b);
CliffordElement operator*(const CliffordElement& a, const CliffordElement& b);
CliffordElement operator*(std::complex<double> z, const CliffordElement& a);

/// Graded trace: only the top monomial contributes, normalized so that
/// tr_s(psi^1 ... psi^n psibar_n ... psibar_1) = (-1)^n.
std::complex<double> supertrace(const CliffordElement& c);

/// psi^1 ... psi^n psibar_n ... psibar_1
CliffordElement top_monomial(int dim);
/// psibar_1 psi^1 psibar_2 psi^2 ... psibar_n psi^n
CliffordElement pi_element(int dim);

}  // namespace psindex::wick
