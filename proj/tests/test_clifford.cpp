#include <random>

#include <gtest/gtest.h>

#include "fock_oracle.hpp"
#include "psindex/wick/clifford.hpp"

using namespace psindex::wick;
using cplx = std::complex<double>;

namespace {

CliffordElement random_element(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  CliffordElement x(n);
  const unsigned full = (1u << n) - 1;
  for (unsigned eta = 0; eta <= full; ++eta)
    for (unsigned theta = 0; theta <= full; ++theta)
      if (u(rng) > 0.0) x.add(eta, theta, cplx(u(rng), u(rng)));
  return x;
}

double distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace

TEST(Clifford, Relations) {
  for (int n = 1; n <= 4; ++n)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const CliffordElement pi = CliffordElement::psi(n, i), pj = CliffordElement::psi(n, j);
        const CliffordElement bi = CliffordElement::psibar(n, i), bj = CliffordElement::psibar(n, j);
        EXPECT_EQ(pi * pj + pj * pi, CliffordElement(n));
        EXPECT_EQ(bi * bj + bj * bi, CliffordElement(n));
        EXPECT_EQ(bj * pi + pi * bj, CliffordElement::constant(n, i == j ? 1.0 : 0.0));
      }
}

TEST(Clifford, FockRepresentationIsHomomorphism) {
  std::mt19937_64 rng(11);
  for (int n = 1; n <= 4; ++n)
    for (int trial = 0; trial < 5; ++trial) {
      const CliffordElement x = random_element(rng, n), y = random_element(rng, n);
      EXPECT_LE(distance(oracle::fock_matrix(x * y),
                         oracle::fock_matrix(x) * oracle::fock_matrix(y)),
                1e-12);
      EXPECT_LE(distance(oracle::fock_matrix(x + y),
                         oracle::fock_matrix(x) + oracle::fock_matrix(y)),
                1e-14);
    }
}

TEST(Clifford, SupertraceMatchesFock) {
  std::mt19937_64 rng(12);
  for (int n = 1; n <= 4; ++n)
    for (int trial = 0; trial < 10; ++trial) {
      const CliffordElement x = random_element(rng, n), y = random_element(rng, n);
      EXPECT_LE(std::abs(supertrace(x) - oracle::fock_supertrace(oracle::fock_matrix(x))), 1e-12);
      const cplx z(0.5, -2.0);
      EXPECT_LE(std::abs(supertrace(x + z * y) - supertrace(x) - z * supertrace(y)), 1e-12);
    }
}

TEST(Clifford, SpecialElements) {
  for (int n = 1; n <= 4; ++n) {
    EXPECT_EQ(supertrace(CliffordElement::constant(n, 1.0)), cplx(0.0));
    EXPECT_EQ(supertrace(top_monomial(n)), cplx(n % 2 ? -1.0 : 1.0));
    EXPECT_EQ(supertrace(pi_element(n)), cplx(1.0));
    EXPECT_EQ(oracle::fock_supertrace(oracle::fock_matrix(pi_element(n))), cplx(1.0));
    EXPECT_EQ(oracle::fock_supertrace(oracle::fock_matrix(top_monomial(n))),
              cplx(n % 2 ? -1.0 : 1.0));
  }
}

TEST(Clifford, NormalOrderingIsStable) {
  // Multiplying normal-ordered monomials by 1 leaves them unchanged, and a
  // product of single generators reorders to the same element as the
  // explicit monomial with the matching sign.
  for (int n = 1; n <= 4; ++n) {
    const unsigned full = (1u << n) - 1;
    for (unsigned eta = 0; eta <= full; ++eta)
      for (unsigned theta = 0; theta <= full; ++theta) {
        const CliffordElement m = CliffordElement::monomial(n, eta, theta);
        EXPECT_EQ(m * CliffordElement::constant(n, 1.0), m);
        EXPECT_EQ(CliffordElement::constant(n, 1.0) * m, m);
        CliffordElement built = CliffordElement::constant(n, 1.0);
        for (int i = 0; i < n; ++i)
          if ((eta >> i) & 1) built = built * CliffordElement::psi(n, i);
        for (int i = 0; i < n; ++i)
          if ((theta >> i) & 1) built = built * CliffordElement::psibar(n, i);
        EXPECT_EQ(built, m);
      }
  }
}
