#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "hankel/functionals.hpp"

using namespace hankel;
using CR = ComplexRational;

namespace {

CaratheodorySequence<CR> exact_sequence(std::vector<long> p) {
  std::vector<CR> v;
  for (long x : p) v.emplace_back(x);
  return CaratheodorySequence<CR>::from(v);
}

CoeffVector<CR> series_oracle(const CaratheodorySequence<CR>& s, int order) {
  TruncatedSeries<CR> p = s.as_series(order);
  return CoeffVector<CR>::from_series(starlike_from_caratheodory(p, cardioid_phi<CR>(order), order));
}

// Leibniz formula over all permutations.
template <class T>
T leibniz_det(const CoeffVector<T>& c, int q, int n) {
  std::vector<int> perm(static_cast<std::size_t>(q));
  std::iota(perm.begin(), perm.end(), 0);
  T det(0);
  do {
    int inversions = 0;
    for (int i = 0; i < q; ++i)
      for (int j = i + 1; j < q; ++j)
        if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inversions;
    T term(1);
    for (int i = 0; i < q; ++i) term = term * c[n + i + perm[static_cast<std::size_t>(i)]];
    det = inversions % 2 ? det - term : det + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

const CaratheodorySequence<CR> kKoebe = exact_sequence({2, 2, 2, 2, 2, 2});
const CaratheodorySequence<CR> kCube = exact_sequence({0, 0, 2, 0, 0, 2});
const CaratheodorySequence<CR> kZero = exact_sequence({0, 0, 0, 0, 0, 0});

}  // namespace

TEST(CoeffsWp, Examples) {
  const auto k = coeffs_wp(kKoebe);
  EXPECT_EQ(k[2], CR(1));
  EXPECT_EQ(k[3], CR(1));
  EXPECT_EQ(k[4], CR(make_rational(5, 6)));
  EXPECT_EQ(k[5], CR(make_rational(5, 8)));
  const auto c = coeffs_wp(kCube);
  for (int n : {2, 3, 5, 6}) EXPECT_EQ(c[n], CR(0)) << n;
  EXPECT_EQ(c[4], CR(make_rational(1, 3)));
  EXPECT_EQ(c[7], CR(make_rational(2, 9)));
  const auto z = coeffs_wp(kZero);
  for (int n = 2; n <= 7; ++n) EXPECT_EQ(z[n], CR(0));
}

TEST(CoeffsWp, NeedsSixTerms) {
  EXPECT_THROW(coeffs_wp(exact_sequence({1, 1, 1})), std::invalid_argument);
  EXPECT_THROW(coeffs_wp(kZero)[8], std::out_of_range);
}

TEST(CoeffsWp, MatchesSeriesOracleExactly) {
  Rng rng = make_rng(2024);
  for (int i = 0; i < 200; ++i) {
    const auto s = herglotz_coeffs(sample_rational_measure(rng, 5), 6);
    const auto a = coeffs_wp(s);
    const auto b = series_oracle(s, 7);
    for (int n = 2; n <= 7; ++n) ASSERT_EQ(a[n], b[n]) << "sample " << i << " a_" << n;
  }
}

TEST(CoeffsWp, MatchesSeriesOracleFloat) {
  Rng rng = make_rng(77);
  for (int i = 0; i < 200; ++i) {
    const auto s = herglotz_coeffs(sample_random(rng, 6), 6);
    const auto a = coeffs_wp(s);
    const auto f = CoeffVector<Complex>::from_series(starlike_from_caratheodory(s.as_series(7), cardioid_phi<Complex>(7), 7));
    for (int n = 2; n <= 7; ++n) ASSERT_LT(std::abs(a[n] - f[n]), 1e-10);
  }
}

TEST(Hankel, ExtremalValues) {
  const auto c = coeffs_wp(kCube);
  EXPECT_EQ(hankel_det(c, 3, 1), CR(make_rational(-1, 9)));
  EXPECT_EQ(h3_expanded(c), CR(make_rational(-1, 9)));
  const auto d = h4_decomposition(c);
  EXPECT_EQ(d.q3, CR(make_rational(-1, 27)));
  EXPECT_EQ(d.h4, CR(make_rational(-1, 81)));
  EXPECT_EQ(hankel_det(c, 4, 1), d.h4);
}

TEST(Hankel, KoebeSampleAndIdentity) {
  EXPECT_EQ(h3_expanded(coeffs_wp(kKoebe)), CR(make_rational(-1, 36)));
  const auto d = h4_decomposition(coeffs_wp(kZero));
  EXPECT_EQ(d.h3, CR(0));
  EXPECT_EQ(d.q1, CR(0));
  EXPECT_EQ(d.q2, CR(0));
  EXPECT_EQ(d.q3, CR(0));
  EXPECT_EQ(d.h4, CR(0));
}

TEST(Hankel, ArgumentChecks) {
  const auto c = coeffs_wp(kKoebe);
  EXPECT_THROW(hankel_det(c, 0, 1), std::invalid_argument);
  EXPECT_THROW(hankel_det(c, 4, 2), std::out_of_range);
}

TEST(Hankel, DeterminantMatchesLeibniz) {
  Rng rng = make_rng(31);
  for (int i = 0; i < 100; ++i) {
    const auto c = coeffs_wp(herglotz_coeffs(sample_rational_measure(rng, 4), 6));
    ASSERT_EQ(hankel_det(c, 2, 2), leibniz_det(c, 2, 2));
    ASSERT_EQ(hankel_det(c, 3, 1), leibniz_det(c, 3, 1));
    ASSERT_EQ(h3_expanded(c), leibniz_det(c, 3, 1));
    const auto d = h4_decomposition(c);
    ASSERT_EQ(d.h4, leibniz_det(c, 4, 1));
  }
}

TEST(Hankel, PrintedQ3DiffersFromCofactor) {
  Rng rng = make_rng(5);
  int differ = 0;
  for (int i = 0; i < 40; ++i) {
    const auto c = coeffs_wp(herglotz_coeffs(sample_rational_measure(rng, 4), 6));
    if (q3_printed(c) != h4_decomposition(c).q3) ++differ;
  }
  EXPECT_GT(differ, 0);
}

TEST(MaMinda, KoebeGenerator) {
  const auto r = maminda_coeffs(MindaPhi<Rational>::koebe(), Rational(2), Rational(2), Rational(2));
  EXPECT_EQ(r.a2, 2);
  EXPECT_EQ(r.a3, 3);
}

TEST(MaMinda, CardioidMatchesCoeffsWp) {
  Rng rng = make_rng(12);
  for (int i = 0; i < 50; ++i) {
    const auto s = herglotz_coeffs(sample_rational_measure(rng, 4), 6);
    const auto a = coeffs_wp(s);
    const MindaPhi<CR> phi{CR(1), CR(1), CR(make_rational(1, 2))};
    const auto r = maminda_coeffs(phi, s[1], s[2], s[3]);
    ASSERT_EQ(r.a2, a[2]);
    ASSERT_EQ(r.a3, a[3]);
    const auto rec = coeffs_from_b(std::vector<CR>{r.b1, r.b2, r.b3});
    ASSERT_EQ(rec[2], a[2]);
    ASSERT_EQ(rec[3], a[3]);
    ASSERT_EQ(rec[4], a[4]);
  }
}

TEST(MaMinda, ZeroC1) {
  const MindaPhi<Rational> phi{Rational(3), Rational(5), Rational(7)};
  const auto r = maminda_coeffs(phi, Rational(0), make_rational(1, 2), Rational(1));
  EXPECT_EQ(r.a2, 0);
  EXPECT_EQ(r.a3, make_rational(3, 8));
}

TEST(Nfold, Examples) {
  const auto z = coeffs_wp(kZero);
  EXPECT_EQ(nfold_h3(z, 2), CR(0));
  EXPECT_EQ(nfold_h3(z, 3), CR(0));
  const auto k = coeffs_wp(kKoebe);
  EXPECT_EQ(nfold_h3(k, 2), CR(make_rational(1, 16)));
  EXPECT_EQ(nfold_h3(k, 3), CR(make_rational(-1, 9)));
  EXPECT_THROW(nfold_h3(k, 4), std::invalid_argument);
}

TEST(Nfold, MatchesSeriesOracle) {
  Rng rng = make_rng(404);
  for (int i = 0; i < 100; ++i) {
    const auto s = herglotz_coeffs(sample_rational_measure(rng, 4), 6);
    const auto f = starlike_from_caratheodory(s.as_series(7), cardioid_phi<CR>(7), 7);
    const auto c = CoeffVector<CR>::from_series(f);
    for (int fold : {2, 3}) {
      const auto g = CoeffVector<CR>::from_series(nfold_root(f, fold).truncated(5));
      ASSERT_EQ(nfold_h3(c, fold), h3_expanded(g)) << "fold " << fold;
    }
  }
}

TEST(NfoldBounds, Generators) {
  const auto card = MindaPhi<Rational>::cardioid();
  const auto koebe = MindaPhi<Rational>::koebe();
  EXPECT_EQ(twofold_bound(card), make_rational(1, 24));
  EXPECT_EQ(threefold_bound(card), make_rational(1, 9));
  EXPECT_EQ(twofold_bound(koebe), make_rational(1, 6));
  EXPECT_EQ(threefold_bound(koebe), make_rational(4, 9));
}

TEST(NfoldBounds, SeamContinuity) {
  // (9/4)B1^2 = 2(B2 + B1^2 - B1) at B1 = 2, B2 = 5/2.
  const Rational b1 = 2, b2 = make_rational(5, 2);
  const Rational core = b2 - Rational(9) * b1 * b1 / 8 + b1 * b1;
  EXPECT_EQ(core / 6, b1 / 6);
  EXPECT_EQ(twofold_bound(MindaPhi<Rational>{b1, b2, Rational(0)}), Rational(b1 / 4 * b1 / 6));
  // Second seam: (9/4)B1^2 = 2(B2 + B1^2 + B1) at B1 = 4, B2 = -2.
  const Rational c1 = 4, c2 = -2;
  const Rational core2 = c2 - Rational(9) * c1 * c1 / 8 + c1 * c1;
  EXPECT_EQ(-core2 / 6, c1 / 6);
  const double eps = 1e-9;
  const double left = twofold_bound(MindaPhi<double>{4.0, -2.0 - eps, 0.0});
  const double right = twofold_bound(MindaPhi<double>{4.0, -2.0 + eps, 0.0});
  EXPECT_NEAR(left, right, 1e-8);
}

TEST(NfoldBounds, StarlikeVariant) {
  EXPECT_THROW(twofold_bound_starlike(MindaPhi<Rational>{Rational(0), Rational(1), Rational(0)}), std::domain_error);
  EXPECT_GT(twofold_bound_starlike(MindaPhi<Rational>::cardioid()), 0);
}
