#include <cstdlib>

#include <gtest/gtest.h>

#include "psindex/config.hpp"
#include "psindex/error.hpp"
#include "psindex/suites.hpp"
#include "psindex/symbol_io.hpp"

using namespace psindex;

namespace {

Error parse_failure(std::string_view text) {
  try {
    parse_symbol(text);
  } catch (const Error& e) {
    return e;
  }
  ADD_FAILURE() << "no error for:\n" << text;
  return Error(ErrorKind::InvalidArgument, "none");
}

}  // namespace

TEST(Parse, Generator) {
  const ClassicalSymbol a =
      parse_symbol("order 0\ndepth 3\ncomponent 0\nplus: exp(i*1*x)\nminus: 1");
  EXPECT_EQ(a, suites::winding_symbol(1, 0, 3));
}

TEST(Parse, CommentsAndBlankLines) {
  const ClassicalSymbol a = parse_symbol(
      "# generator\n\norder 0   # header\ndepth 3\ncomponent 0\n"
      "plus: exp(i*1*x)  # p > 0\nminus: 1\n");
  EXPECT_EQ(a, suites::winding_symbol(1, 0, 3));
}

TEST(Parse, Expressions) {
  EXPECT_EQ(parse_coeff_expr("2 + cos(1*x)"), CoeffFn(2.0) + CoeffFn::cosine(1));
  EXPECT_EQ(parse_coeff_expr("exp(-i*3*x)"), CoeffFn::monomial(-3));
  EXPECT_EQ(parse_coeff_expr("(1 + i)*sin(2*x)"),
            cplx(1.0, 1.0) * CoeffFn::sine(2));
  EXPECT_EQ(parse_coeff_expr("-0.5*i"), CoeffFn(cplx(0.0, -0.5)));
  EXPECT_EQ(parse_coeff_expr("2.5e-3"), CoeffFn(2.5e-3));
  EXPECT_EQ(parse_coeff_expr("exp(i*x)"), CoeffFn::monomial(1));
  EXPECT_EQ(parse_coeff_expr("cos(1*x)*cos(1*x) - 0.5"),
            0.5 * CoeffFn::cosine(2));
}

TEST(Parse, Matrix) {
  const ClassicalSymbol a = parse_symbol(
      "order 0\ndepth 2\nmatrix 2\ncomponent 0\n"
      "plus: [ exp(i*1*x) , 0 ; 0.5 , 1 ]\nminus: [ 1 , 0 ; 0 , 1 ]\n"
      "component 1\nplus: [ 0 , i ; 0 , 0 ]\nminus: [ 0 , 0 ; 0 , 0 ]\n");
  EXPECT_EQ(a.dim(), 2);
  EXPECT_EQ(a.component(0).plus.dim(), 2);
  EXPECT_EQ(a.component(0).plus(0, 0), CoeffFn::monomial(1));
  EXPECT_EQ(a.component(0).plus(1, 0), CoeffFn(0.5));
  EXPECT_EQ(a.component(1).plus(0, 1), CoeffFn(cplx(0.0, 1.0)));
  const ClassicalSymbol b = parse_symbol(render_symbol(a));
  EXPECT_EQ(distance(a, b), 0.0);
  EXPECT_EQ(b.dim(), 2);
}

TEST(Parse, RoundTripRandom) {
  suites::Rng rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const ClassicalSymbol a =
        suites::random_symbol(rng, trial % 3 - 1.0, 4, trial % 4);
    const ClassicalSymbol b = parse_symbol(render_symbol(a));
    EXPECT_EQ(a.order(), b.order());
    EXPECT_EQ(a.depth(), b.depth());
    EXPECT_LE(distance(a, b), 1e-14);
  }
}

TEST(Parse, ErrorsCarryLineAndColumn) {
  const Error degree = parse_failure("order 0\ndepth 3\ncomponent x\nplus: 1\nminus: 1");
  EXPECT_EQ(degree.kind(), ErrorKind::ParseError);
  EXPECT_EQ(degree.line(), 3);

  const Error paren = parse_failure("order 0\ndepth 4\ncomponent 0\nplus: exp(i*1*x\nminus: 1");
  EXPECT_EQ(paren.kind(), ErrorKind::ParseError);
  EXPECT_EQ(paren.line(), 4);
  EXPECT_EQ(paren.column(), 16);

  const Error order = parse_failure("order zero\ndepth 3\n");
  EXPECT_EQ(order.line(), 1);

  const Error range = parse_failure("order 0\ndepth 2\ncomponent 2\nplus: 1\nminus: 1");
  EXPECT_EQ(range.line(), 3);

  const Error shape = parse_failure(
      "order 0\ndepth 1\nmatrix 2\ncomponent 0\nplus: [ 1 , 0 ]\nminus: [ 1 , 0 ; 0 , 1 ]");
  EXPECT_EQ(shape.kind(), ErrorKind::ParseError);
  EXPECT_EQ(shape.line(), 5);

  const Error junk = parse_failure("order 0\ndepth 1\ncomponent 0\nplus: 1 $ 2\nminus: 1");
  EXPECT_EQ(junk.line(), 4);
}

TEST(Config, DefaultsAndOverrides) {
  const Config d = parse_config("");
  EXPECT_EQ(d.depth, 4);
  EXPECT_EQ(d.oracle_tol, 1e-8);
  EXPECT_EQ(d.oracle_modes, (std::vector<int>{8, 12, 16, 20}));
  EXPECT_EQ(d.q_mode, "canonical");
  EXPECT_EQ(d.seed, 7u);
  EXPECT_EQ(d.numeric.prune_tol, 1e-14);
  EXPECT_EQ(d.numeric.inversion_floor, 1e-10);

  const Config c = parse_config(
      "depth = 6\noracle_modes = 16, 20, 24  # wider\nseed = 99\nformat = text\n");
  EXPECT_EQ(c.depth, 6);
  EXPECT_EQ(c.oracle_modes, (std::vector<int>{16, 20, 24}));
  EXPECT_EQ(c.seed, 99u);
  EXPECT_EQ(c.format, "text");
}

TEST(Config, RejectsUnknownKeys) {
  try {
    parse_config("depth = 4\ncolour = blue\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParseError);
    EXPECT_EQ(e.line(), 2);
  }
  EXPECT_THROW(parse_config("format = yaml"), Error);
  EXPECT_THROW(parse_config("depth = 0"), Error);
}

TEST(Config, EnvironmentSeed) {
  Config c;
  ::setenv("PSINDEX_SEED", "1234", 1);
  apply_environment(c);
  ::unsetenv("PSINDEX_SEED");
  EXPECT_EQ(c.seed, 1234u);
}
