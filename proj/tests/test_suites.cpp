#include <gtest/gtest.h>

#include "psindex/error.hpp"
#include "psindex/suites.hpp"
#include "psindex/symbol_io.hpp"

using namespace psindex;

TEST(Suites, GeneratorsAreDeterministic) {
  suites::Rng a(5), b(5);
  EXPECT_EQ(render_symbol(suites::random_symbol(a, 0.0, 3, 2)),
            render_symbol(suites::random_symbol(b, 0.0, 3, 2)));
  const auto m1 = suites::random_rational_matrix(a, 3);
  const auto m2 = suites::random_rational_matrix(b, 3);
  EXPECT_EQ(m1, m2);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      EXPECT_EQ(m1(i, j).imag(), 0.0);
      EXPECT_LE(std::abs(m1(i, j).real()), 8.0);
    }
}

TEST(Suites, IndexSuiteShape) {
  const auto cases = suites::index_suite(3);
  EXPECT_EQ(cases.size(), 28u);
  int perturbed = 0;
  for (const auto& c : cases) {
    EXPECT_EQ(c.Q.order(), 0.0);
    EXPECT_EQ(topological_index(c.Q), c.expected) << c.name;
    if (c.Q.component(1).plus.max_l1() > 0.0) ++perturbed;
  }
  EXPECT_EQ(perturbed, 14);
  EXPECT_EQ(render_symbol(suites::index_suite(3)[20].Q), render_symbol(cases[20].Q));
}

TEST(Suites, SmallRuns) {
  for (const std::string name : {"trace", "cocycle", "homotopy"}) {
    const auto r = suites::run_check(name, 3, 9);
    EXPECT_EQ(r.trials, 3) << name;
    EXPECT_TRUE(r.pass) << name;
    EXPECT_TRUE(r.failures.empty()) << name;
    const auto again = suites::run_check(name, 3, 9);
    EXPECT_EQ(r.max_defect, again.max_defect) << name;
  }
  const auto todd = suites::check_todd(2, 2, 9);
  EXPECT_TRUE(todd.pass);
  EXPECT_TRUE(suites::check_supertrace().pass);
}

TEST(Suites, UnknownName) {
  try {
    suites::run_check("nope", 1, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidArgument);
  }
  EXPECT_EQ(suites::check_names().size(), 7u);
}
