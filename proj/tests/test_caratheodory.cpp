#include <gtest/gtest.h>

#include <cmath>

#include "hankel/caratheodory.hpp"

using namespace hankel;

namespace {

CaratheodorySequence<Complex> constant_sequence(double v, int n) {
  return CaratheodorySequence<Complex>::from(std::vector<Complex>(static_cast<std::size_t>(n), Complex(v, 0.0)));
}

}  // namespace

TEST(Herglotz, PointMass) {
  const auto s = herglotz_coeffs(AtomicMeasure{{{0.0, 1.0}}}, 8);
  for (int n = 1; n <= 8; ++n) EXPECT_NEAR(std::abs(s[n] - Complex(2.0, 0.0)), 0.0, 1e-15);
}

TEST(Herglotz, CubeRoots) {
  const auto s = herglotz_coeffs(AtomicMeasure{{{0.0, 1.0 / 3}, {kTwoPi / 3, 1.0 / 3}, {2 * kTwoPi / 3, 1.0 / 3}}}, 6);
  const double expect[] = {0, 0, 2, 0, 0, 2};
  for (int n = 1; n <= 6; ++n) EXPECT_NEAR(std::abs(s[n] - Complex(expect[n - 1], 0.0)), 0.0, 1e-14) << n;
}

TEST(Herglotz, SymmetricPair) {
  const double t = 0.7;
  const auto s = herglotz_coeffs(AtomicMeasure{{{t, 0.5}, {kTwoPi - t, 0.5}}}, 6);
  for (int n = 1; n <= 6; ++n) EXPECT_NEAR(std::abs(s[n] - Complex(2 * std::cos(n * t), 0.0)), 0.0, 1e-13);
}

// Atoms at 1 and ±i, weights 1/2, 1/4, 1/4: p_n = 1 + cos(nπ/2).
TEST(Herglotz, ExactRationalMeasure) {
  RationalMeasure m{{{Rational(0), make_rational(1, 2)}, {Rational(1), make_rational(1, 4)}, {Rational(-1), make_rational(1, 4)}}};
  ASSERT_TRUE(m.valid());
  const auto s = herglotz_coeffs(m, 4);
  EXPECT_EQ(s[1], ComplexRational(Rational(1)));
  EXPECT_EQ(s[2], ComplexRational(Rational(0)));
  EXPECT_EQ(s[3], ComplexRational(Rational(1)));
  EXPECT_EQ(s[4], ComplexRational(Rational(2)));
  const auto f = herglotz_coeffs(m.to_float(), 4);
  for (int n = 1; n <= 4; ++n) EXPECT_NEAR(std::abs(f[n] - to_complex(s[n])), 0.0, 1e-14);
}

TEST(Herglotz, IndexOutOfRange) {
  const auto s = constant_sequence(2.0, 3);
  EXPECT_THROW(s[4], std::out_of_range);
  EXPECT_THROW(s[0], std::out_of_range);
}

TEST(LZ, PEqualsTwo) {
  LZParams<Complex> prm{Complex(2, 0), Complex(0.3, 0.4), Complex(-0.5, 0.1), Complex(0, 1)};
  const auto t = lz_expand(prm);
  EXPECT_NEAR(std::abs(t.p2 - 2.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(t.p3 - 2.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(t.p4 - 2.0), 0.0, 1e-15);
}

TEST(LZ, ExactSubstitutions) {
  using C = ComplexRational;
  LZParams<C> a{C(0), C(0), C(1), C(0)};
  auto t = lz_expand(a);
  EXPECT_EQ(t.p2, C(0));
  EXPECT_EQ(t.p3, C(2));
  EXPECT_EQ(t.p4, C(0));
  LZParams<C> b{C(0), C(1), C(0), C(0)};
  t = lz_expand(b);
  EXPECT_EQ(t.p2, C(2));
  EXPECT_EQ(t.p3, C(0));
  EXPECT_EQ(t.p4, C(2));
}

TEST(LZ, DomainErrors) {
  EXPECT_THROW(lz_expand(LZParams<Complex>{Complex(2.5, 0), 0.0, 0.0, 0.0}), std::domain_error);
  EXPECT_THROW(lz_expand(LZParams<Complex>{Complex(1, 0), Complex(1.1, 0), 0.0, 0.0}), std::domain_error);
  EXPECT_THROW(lz_expand(LZParams<Complex>{Complex(1, 0.1), 0.0, 0.0, 0.0}), std::domain_error);
}

TEST(Toeplitz, Examples) {
  auto r = toeplitz_validate(constant_sequence(2.0, 6));
  EXPECT_TRUE(r.valid);
  EXPECT_NEAR(r.min_eigenvalue, 0.0, 1e-12);
  r = toeplitz_validate(constant_sequence(0.0, 6));
  EXPECT_TRUE(r.valid);
  EXPECT_NEAR(r.min_eigenvalue, 2.0, 1e-12);
  EXPECT_FALSE(toeplitz_validate(CaratheodorySequence<Complex>::from({Complex(3.0, 0.0)})).valid);
}

TEST(Toeplitz, SampledMeasuresAndLZAreValid) {
  Rng rng = make_rng(5);
  for (int i = 0; i < 10000; ++i) {
    const auto s = herglotz_coeffs(sample_random(rng, 6), 6);
    ASSERT_TRUE(toeplitz_validate(s).valid) << i;
    for (int n = 1; n <= 6; ++n) ASSERT_LE(std::abs(s[n]), 2.0 + 1e-12);
  }
  for (int i = 0; i < 10000; ++i) ASSERT_TRUE(toeplitz_validate(lz_sequence(sample_lz(rng))).valid) << i;
}

TEST(Sampling, Deterministic) {
  const AtomicMeasure a = sample_random(99, 6), b = sample_random(99, 6);
  ASSERT_EQ(a.atoms.size(), b.atoms.size());
  for (std::size_t i = 0; i < a.atoms.size(); ++i) {
    EXPECT_EQ(a.atoms[i].angle, b.atoms[i].angle);
    EXPECT_EQ(a.atoms[i].weight, b.atoms[i].weight);
  }
  EXPECT_TRUE(a.valid());
  const auto l1 = sample_lz(4), l2 = sample_lz(4);
  EXPECT_EQ(l1.gamma, l2.gamma);
  EXPECT_TRUE(l1.valid());
  EXPECT_THROW(sample_random(1, 0), std::invalid_argument);
}

TEST(Sampling, AtomCountsCoverRange) {
  Rng rng = make_rng(1);
  std::vector<int> seen(7, 0);
  for (int i = 0; i < 600; ++i) ++seen[sample_random(rng, 6).atoms.size()];
  for (int k = 1; k <= 6; ++k) EXPECT_GT(seen[static_cast<std::size_t>(k)], 50);
}

TEST(Rotation, MakesP1RealNonnegative) {
  Rng rng = make_rng(3);
  for (int i = 0; i < 100; ++i) {
    const AtomicMeasure m = sample_random(rng, 5);
    const auto before = herglotz_coeffs(m, 4);
    const auto after = herglotz_coeffs(rotate_to_real_p1(m), 4);
    EXPECT_NEAR(after[1].imag(), 0.0, 1e-12);
    EXPECT_GE(after[1].real(), -1e-12);
    for (int n = 1; n <= 4; ++n) EXPECT_NEAR(std::abs(after[n]), std::abs(before[n]), 1e-12);
  }
}

TEST(Lemma2, Examples) {
  const auto two = constant_sequence(2.0, 4);
  auto r = lemma2_margins(two, 0.5, 1, 1);
  EXPECT_NEAR(r.product.lhs, 0.0, 1e-15);
  EXPECT_EQ(r.product.rhs, 2.0);
  r = lemma2_margins(two, 2.0, 1, 1);
  EXPECT_NEAR(r.cubic.lhs, 4.0, 1e-15);
  EXPECT_NEAR(r.cubic.rhs, 4.0 * std::sqrt(2.0), 1e-12);
  const auto cube = herglotz_coeffs(AtomicMeasure{{{0.0, 1.0 / 3}, {kTwoPi / 3, 1.0 / 3}, {2 * kTwoPi / 3, 1.0 / 3}}}, 4);
  r = lemma2_margins(cube, 1.0, 1, 2);
  EXPECT_NEAR(r.product.lhs, 2.0, 1e-12);
  EXPECT_EQ(r.product.rhs, 2.0);
  EXPECT_THROW(lemma2_margins(two, 1.0, 2, 3), std::out_of_range);
}

TEST(Lemma2, RandomMarginsNonnegative) {
  Rng rng = make_rng(8);
  const double mus[] = {0, 0.25, 0.5, 0.75, 1, 4.0 / 3, 1.5, 2, 4, 5};
  for (int i = 0; i < 5000; ++i) {
    const auto s = herglotz_coeffs(sample_random(rng, 6), 6);
    for (double mu : mus) ASSERT_GE(lemma2_margins(s, mu, 1 + i % 3, 1 + (i / 3) % 3).min_slack(), -1e-9);
  }
}
