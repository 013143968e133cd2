#include <gtest/gtest.h>

#include "psindex/error.hpp"
#include "psindex/index.hpp"
#include "psindex/suites.hpp"

using namespace psindex;

namespace {

IndexOptions all_methods() {
  IndexOptions o;
  o.general_q = suites::sample_q(4);
  o.modes = suites::suite_modes();
  return o;
}

}  // namespace

TEST(Winding, Values) {
  for (int k = -3; k <= 3; ++k) {
    const Winding w = winding_number(CoeffFn::monomial(k, cplx(0.0, 2.0)));
    EXPECT_EQ(w.value, k);
    EXPECT_NEAR(w.quadrature, k, 1e-12);
    EXPECT_NEAR(w.unwrapped, k, 1e-12);
  }
  // 2 + e^{ix} stays away from 0 and does not wind; 0.5 + e^{ix} does.
  EXPECT_EQ(winding_number(CoeffFn(2.0) + CoeffFn::monomial(1)).value, 0);
  EXPECT_EQ(winding_number(CoeffFn(0.5) + CoeffFn::monomial(1)).value, 1);
  EXPECT_EQ(winding_number(CoeffFn::monomial(2) * (CoeffFn(3.0) + CoeffFn::cosine(1))).value, 2);
}

TEST(Winding, Vanishing) {
  try {
    winding_number(CoeffFn(1.0) + CoeffFn::cosine(1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotElliptic);
  }
}

TEST(Topological, Examples) {
  EXPECT_EQ(topological_index(ClassicalSymbol::constant(CoeffFn(1.0), 3)), 0);
  const Topological g = topological_index_detail(suites::winding_symbol(1, 0, 3));
  EXPECT_EQ(g.plus.value, 1);
  EXPECT_EQ(g.minus.value, 0);
  EXPECT_EQ(g.index, -1);
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b)
      EXPECT_EQ(topological_index(suites::winding_symbol(a, b, 3)), b - a);
  const ClassicalSymbol mix =
      block_diag(suites::winding_symbol(1, 0, 3), suites::winding_symbol(-2, 0, 3));
  EXPECT_EQ(topological_index(mix), 1);
}

TEST(Analytic, Examples) {
  const LogQ L = LogQ::canonical(4);
  EXPECT_LE(std::abs(analytic_index(ClassicalSymbol::constant(CoeffFn(1.0), 4), L)), 1e-14);
  const Analytic g = analytic_index_detail(suites::winding_symbol(1, 0, 4), L);
  EXPECT_LE(std::abs(g.index + 1.0), 1e-12);
  EXPECT_LE(std::abs(g.pairing - 1.0), 1e-12);
  const ClassicalSymbol mix =
      block_diag(suites::winding_symbol(1, 0, 4), suites::winding_symbol(-2, 0, 4));
  EXPECT_LE(std::abs(analytic_index(mix, L) - 1.0), 1e-12);
}

TEST(Analytic, WindingsAndGeneralQ) {
  const LogQ canonical = LogQ::canonical(4);
  const LogQ general = LogQ::general(suites::sample_q(4), 4);
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b) {
      const ClassicalSymbol Q = suites::winding_symbol(a, b, 4);
      EXPECT_LE(std::abs(analytic_index(Q, canonical) - cplx(b - a)), 1e-10);
      EXPECT_LE(std::abs(analytic_index(Q, general) - cplx(b - a)), 1e-8);
    }
}

TEST(Analytic, Errors) {
  const LogQ L = LogQ::canonical(4);
  const ClassicalSymbol bad = ClassicalSymbol::homogeneous(
      0.0, 4, CoeffFn(1.0) + CoeffFn::cosine(1), CoeffFn(1.0));
  try {
    analytic_index(bad, L);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotElliptic);
  }
  // Depth 1 suffices in canonical mode; general mode gives up one level.
  const ClassicalSymbol shallow = suites::winding_symbol(1, 0, 1);
  EXPECT_LE(std::abs(analytic_index(shallow, LogQ::canonical(1)) + 1.0), 1e-14);
  try {
    analytic_index(shallow, LogQ::general(suites::sample_q(1), 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DepthExhausted);
  }
}

TEST(Report, Generator) {
  const IndexReport r = index_report(suites::winding_symbol(1, 0, 4), all_methods());
  EXPECT_TRUE(r.agree);
  EXPECT_EQ(r.analytic_rounded, -1);
  EXPECT_EQ(r.topological, -1);
  EXPECT_EQ(r.oracle, -1);
  EXPECT_TRUE(r.oracle_exact);
  EXPECT_LE(std::abs(r.pairing.value() - 1.0), 1e-12);
  EXPECT_LE(std::abs(r.analytic_general.value() + 1.0), 1e-8);
  EXPECT_TRUE(r.errors.empty());
}

TEST(Report, PerturbationDoesNotChangeIndex) {
  suites::Rng rng(17);
  for (int w = -2; w <= 2; ++w) {
    const ClassicalSymbol Q = suites::winding_symbol(0, w, 4);
    const ClassicalSymbol Qp = Q + suites::random_order_minus_one(rng, 4, 1, 2, 0.02);
    const IndexReport a = index_report(Q, all_methods());
    const IndexReport b = index_report(Qp, all_methods());
    EXPECT_TRUE(a.agree && b.agree);
    EXPECT_EQ(a.analytic_rounded, b.analytic_rounded);
    EXPECT_EQ(a.oracle, b.oracle);
    EXPECT_FALSE(b.oracle_exact);
    EXPECT_LE(std::abs(*a.analytic - *b.analytic), 1e-10);
  }
}

TEST(Report, NonEllipticIsRecorded) {
  const ClassicalSymbol bad = ClassicalSymbol::homogeneous(
      0.0, 4, CoeffFn(1.0) + CoeffFn::cosine(1), CoeffFn(1.0));
  const IndexReport r = index_report(bad, all_methods());
  EXPECT_FALSE(r.agree);
  ASSERT_TRUE(r.errors.count("analytic"));
  EXPECT_EQ(r.errors.at("analytic").rfind("NotElliptic", 0), 0u);
  EXPECT_EQ(r.errors.at("topological").rfind("NotElliptic", 0), 0u);
  EXPECT_FALSE(r.analytic.has_value());
}

TEST(Report, Additivity) {
  const LogQ L = LogQ::canonical(4);
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b) {
      const ClassicalSymbol q1 = suites::winding_symbol(a, 0, 4);
      const ClassicalSymbol q2 = suites::winding_symbol(0, b, 4);
      const cplx sum = analytic_index(block_diag(q1, q2), L);
      EXPECT_LE(std::abs(sum - analytic_index(q1, L) - analytic_index(q2, L)), 1e-12);
      EXPECT_EQ(topological_index(block_diag(q1, q2)),
                topological_index(q1) + topological_index(q2));
    }
}

TEST(Report, MethodSelection) {
  IndexOptions o;
  o.analytic = false;
  o.oracle = false;
  const IndexReport r = index_report(suites::winding_symbol(2, 0, 4), o);
  EXPECT_FALSE(r.analytic.has_value());
  EXPECT_FALSE(r.oracle.has_value());
  EXPECT_EQ(r.topological, -2);
  EXPECT_TRUE(r.agree);
}
