#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "psindex/coeff_matrix.hpp"
#include "psindex/error.hpp"
#include "psindex/fourier.hpp"

using namespace psindex;

namespace {

CoeffFn random_fn(std::mt19937_64& rng, int band) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::map<int, cplx> c;
  for (int k = -band; k <= band; ++k) {
    const double re = u(rng);
    c[k] = cplx(re, u(rng));
  }
  return CoeffFn::from_coeffs(c);
}

double sup_diff(const CoeffFn& f, const CoeffFn& g) { return (f - g).sup_coeff(); }

// Direct O(n^2) DFT of grid samples; no FFT involved.
std::map<int, cplx> naive_dft(const std::vector<cplx>& v, int band) {
  const int n = static_cast<int>(v.size());
  std::map<int, cplx> c;
  for (int k = -band; k <= band; ++k) {
    cplx acc = 0.0;
    for (int j = 0; j < n; ++j)
      acc += v[j] * std::polar(1.0, -2.0 * std::numbers::pi * k * j / n);
    c[k] = acc / static_cast<double>(n);
  }
  return c;
}

}  // namespace

TEST(CoeffFn, AddExamples) {
  const CoeffFn two_cos = CoeffFn::monomial(1) + CoeffFn::monomial(-1);
  EXPECT_EQ(two_cos.coeffs(), (std::map<int, cplx>{{-1, 1.0}, {1, 1.0}}));
  const CoeffFn f = CoeffFn(2.0) + CoeffFn::cosine(1);
  EXPECT_EQ(f + CoeffFn(), f);
  const CoeffFn g = f - CoeffFn::cosine(1);
  EXPECT_EQ(g, CoeffFn(2.0));
  EXPECT_EQ(g.bandwidth(), 0);
}

TEST(CoeffFn, PruningBelowThreshold) {
  const CoeffFn f = CoeffFn::from_coeffs({{0, 1.0}, {3, 1e-15}, {4, 1e-13}});
  EXPECT_EQ(f.bandwidth(), 4);
  EXPECT_EQ(f.coeff(3), cplx(0.0));
  EXPECT_EQ(f.coeffs().size(), 2u);
}

TEST(CoeffFn, MultiplyExamples) {
  EXPECT_EQ(CoeffFn::monomial(1) * CoeffFn::monomial(1), CoeffFn::monomial(2));
  const CoeffFn f = CoeffFn(2.0) + CoeffFn::cosine(1);
  EXPECT_EQ(f * CoeffFn(1.0), f);
  const CoeffFn c2 = CoeffFn::cosine(1) * CoeffFn::cosine(1);
  EXPECT_LE(sup_diff(c2, CoeffFn(0.5) + 0.5 * CoeffFn::cosine(2)), 1e-16);
}

TEST(CoeffFn, MultiplyMatchesGridProduct) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const CoeffFn f = random_fn(rng, 1 + trial % 4);
    const CoeffFn g = random_fn(rng, 1 + trial % 3);
    const int band = f.bandwidth() + g.bandwidth();
    const int n = 2 * band + 3;
    std::vector<cplx> v(n);
    for (int j = 0; j < n; ++j) {
      const double x = 2.0 * std::numbers::pi * j / n;
      v[j] = f(x) * g(x);
    }
    const auto expected = naive_dft(v, band);
    const CoeffFn h = f * g;
    EXPECT_LE(h.bandwidth(), band);
    for (const auto& [k, c] : expected) EXPECT_NEAR(std::abs(h.coeff(k) - c), 0.0, 1e-13);
  }
}

TEST(CoeffFn, RingProperties) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const CoeffFn f = random_fn(rng, 3), g = random_fn(rng, 3), h = random_fn(rng, 3);
    EXPECT_LE(sup_diff(f * g, g * f), 1e-12);
    EXPECT_LE(sup_diff((f * g) * h, f * (g * h)), 1e-12);
    EXPECT_LE(sup_diff(dx(f * g), dx(f) * g + f * dx(g)), 1e-12);
    EXPECT_EQ(mean(dx(f)), cplx(0.0));
  }
}

TEST(CoeffFn, Derivative) {
  EXPECT_EQ(dx(CoeffFn::monomial(3)), CoeffFn::monomial(3, cplx(0.0, 3.0)));
  EXPECT_TRUE(dx(CoeffFn(4.0)).is_zero());
  EXPECT_LE(sup_diff(dx(CoeffFn::cosine(1)), -CoeffFn::sine(1)), 1e-16);
  EXPECT_EQ(dx(CoeffFn::monomial(2), 3), CoeffFn::monomial(2, cplx(0.0, -8.0)));
}

TEST(CoeffFn, Mean) {
  EXPECT_EQ(mean(CoeffFn(3.0)), cplx(3.0));
  EXPECT_EQ(mean(CoeffFn::monomial(1)), cplx(0.0));
  EXPECT_EQ(mean(CoeffFn(2.0) + CoeffFn::cosine(1)), cplx(2.0));
}

TEST(CoeffFn, SampleRoundTrip) {
  std::mt19937_64 rng(11);
  const CoeffFn f = random_fn(rng, 5);
  const auto v = sample(f, 32);
  for (int j = 0; j < 32; ++j)
    EXPECT_NEAR(std::abs(v[j] - f(2.0 * std::numbers::pi * j / 32)), 0.0, 1e-13);
  EXPECT_LE(sup_diff(from_samples(v, 5), f), 1e-14);
}

TEST(CoeffFn, Inverse) {
  EXPECT_EQ(invert(CoeffFn(2.0), 96, 1e-13).value, CoeffFn(0.5));
  EXPECT_LE(sup_diff(invert(CoeffFn::monomial(1), 96, 1e-13).value,
                     CoeffFn::monomial(-1)),
            1e-15);
  const CoeffFn f = CoeffFn(2.0) + CoeffFn::cosine(1);
  const Inverse inv = invert(f, 96, 1e-13);
  EXPECT_LE(inv.residual, 1e-12);
  EXPECT_LE(sup_diff(f * inv.value, CoeffFn(1.0)), 1e-12);
  // 1 / (2 + cos x) has amplitudes (sqrt 3 - 2)^|k| / sqrt 3.
  for (int k = 0; k < 6; ++k)
    EXPECT_NEAR(inv.value.coeff(k).real(),
                std::pow(std::sqrt(3.0) - 2.0, k) / std::sqrt(3.0), 1e-13);
}

TEST(CoeffFn, InverseErrors) {
  const CoeffFn vanishing = CoeffFn(1.0) + CoeffFn::cosine(1);
  try {
    invert(vanishing, 96, 1e-13);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotInvertible);
  }
  const CoeffFn nearly = CoeffFn(1.0001) + CoeffFn::cosine(1);
  try {
    invert(nearly, 16, 1e-13);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BandwidthExceeded);
  }
}

TEST(CoeffMatrix, InverseAndDeterminant) {
  CoeffMatrix a = CoeffMatrix::zero(2);
  a(0, 0) = CoeffFn(2.0) + CoeffFn::cosine(1);
  a(0, 1) = CoeffFn::monomial(1, 0.3);
  a(1, 0) = CoeffFn(0.2);
  a(1, 1) = CoeffFn::monomial(-1);
  const MatrixInverse inv = invert(a);
  EXPECT_LE(inv.residual, 1e-13);
  EXPECT_LE((a * inv.value - CoeffMatrix::identity(2)).max_l1(), 1e-12);
  EXPECT_LE((inv.value * a - CoeffMatrix::identity(2)).max_l1(), 1e-12);
  const CoeffFn det = determinant(a);
  EXPECT_LE(sup_diff(det, a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0)), 1e-15);
  EXPECT_EQ(trace(CoeffMatrix::identity(3)), CoeffFn(3.0));
}

TEST(CoeffMatrix, SingularIsNotElliptic) {
  CoeffMatrix a = CoeffMatrix::zero(2);
  a(0, 0) = CoeffFn(1.0);
  a(0, 1) = CoeffFn(2.0);
  a(1, 0) = CoeffFn(0.5);
  a(1, 1) = CoeffFn(1.0);
  try {
    invert(a);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotElliptic);
  }
}
