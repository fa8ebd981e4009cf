#pragma once

// Coefficient functionals of starlike functions f(z) = z + a_2 z^2 + ...
// with z f'/f subordinate to a Ma-Minda generator φ.

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "hankel/caratheodory.hpp"
#include "hankel/scalar.hpp"
#include "hankel/series.hpp"

namespace hankel {

// a_n stored at index n (index 0 holds f(0) = 0, a_1 = 1), matching the
// series layout so a CoeffVector can be read off a TruncatedSeries directly.
template <class T>
struct CoeffVector {
  std::vector<T> a{T(0), T(1)};

  int max_index() const noexcept { return static_cast<int>(a.size()) - 1; }
  const T& operator[](int n) const {
    if (n < 1 || n > max_index()) throw std::out_of_range("coefficient a_" + std::to_string(n) + " not available");
    return a[static_cast<std::size_t>(n)];
  }

  static CoeffVector from_series(const TruncatedSeries<T>& f) {
    CoeffVector c;
    c.a = f.coeffs();
    return c;
  }
  static CoeffVector from(std::vector<T> a2_onward) {
    CoeffVector c;
    c.a.insert(c.a.end(), a2_onward.begin(), a2_onward.end());
    return c;
  }
};

// a_2 .. a_7 for φ(z) = 1 + z e^z in terms of p_1 .. p_6.
template <class C>
CoeffVector<C> coeffs_wp(const CaratheodorySequence<C>& s) {
  if (s.size() < 6) throw std::invalid_argument("coeffs_wp needs p_1 .. p_6");
  const C& p1 = s[1];
  const C& p2 = s[2];
  const C& p3 = s[3];
  const C& p4 = s[4];
  const C& p5 = s[5];
  const C& p6 = s[6];
  const C p1_2 = p1 * p1;
  const C p1_3 = p1_2 * p1;
  const C p1_4 = p1_3 * p1;
  const C p1_5 = p1_4 * p1;
  const C p1_6 = p1_5 * p1;

  CoeffVector<C> c;
  c.a.resize(8, C(0));
  c.a[2] = p1 / C(2);
  c.a[3] = (p2 + p1_2 / C(2)) / C(4);
  c.a[4] = (p3 + C(3) * p1 * p2 / C(4)) / C(6);
  c.a[5] = (p1_4 / C(48) + p2 * p2 / C(4) + C(2) * p1 * p3 / C(3) - p1_2 * p2 / C(8) + p4) / C(8);
  c.a[6] = (-p1_5 / C(240) + C(19) * p1_3 * p2 / C(480) - C(7) * p1 * p2 * p2 / C(80) - p1_2 * p3 / C(15) +
            p2 * p3 / C(6) + p1 * p4 / C(4) + C(2) * p5 / C(5)) /
           C(4);
  c.a[7] = (C(17) * p1_6 / C(11520) - C(37) * p1_4 * p2 / C(1920) + C(29) * p1_2 * p2 * p2 / C(480) -
            p2 * p2 * p2 / C(32) + C(13) * p1_3 * p3 / C(360) - p1 * p2 * p3 / C(6) + p3 * p3 / C(18) -
            p1_2 * p4 / C(16) + p2 * p4 / C(8) + p1 * p5 / C(5) + p6 / C(3)) /
           C(4);
  return c;
}

// ---- Hankel determinants ---------------------------------------------------

namespace detail {
// Laplace expansion along the first row; division-free, so exact payloads
// stay exact. Sizes here are tiny (q <= 8).
template <class T>
T laplace_det(const std::vector<std::vector<T>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  T det(0);
  for (std::size_t col = 0; col < n; ++col) {
    if (is_zero(m[0][col])) continue;
    std::vector<std::vector<T>> minor;
    minor.reserve(n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<T> row;
      row.reserve(n - 1);
      for (std::size_t c = 0; c < n; ++c)
        if (c != col) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    const T term = m[0][col] * laplace_det(minor);
    if (col % 2 == 0)
      det = det + term;
    else
      det = det - term;
  }
  return det;
}
}  // namespace detail

// H_q(n) = det [a_{n+i+j}]_{i,j=0}^{q-1}.
template <class T>
T hankel_det(const CoeffVector<T>& c, int q, int n) {
  if (q < 1 || n < 1) throw std::invalid_argument("hankel_det needs q, n >= 1");
  const int top = n + 2 * q - 2;
  if (top > c.max_index()) throw std::out_of_range("hankel_det H_" + std::to_string(q) + "(" + std::to_string(n) + ") needs a_" + std::to_string(top));
  std::vector<std::vector<T>> m(static_cast<std::size_t>(q), std::vector<T>(static_cast<std::size_t>(q)));
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = c[n + i + j];
  return detail::laplace_det(m);
}

// Expanded third Hankel determinant 2a2a3a4 + a3(a5 - a3^2) - a4^2 - a2^2 a5.
template <class T>
T h3_expanded(const CoeffVector<T>& c) {
  const T &a2 = c[2], &a3 = c[3], &a4 = c[4], &a5 = c[5];
  return T(2) * a2 * a3 * a4 + a3 * (a5 - a3 * a3) - a4 * a4 - a2 * a2 * a5;
}

template <class T>
struct H4Decomposition {
  T q1, q2, q3;
  T h3;
  T h4;
};

// H_4(1) = a7 H_3(1) - a6 Q1 + a5 Q2 - a4 Q3 (cofactors along the last row).
template <class T>
H4Decomposition<T> h4_decomposition(const CoeffVector<T>& c) {
  const T &a2 = c[2], &a3 = c[3], &a4 = c[4], &a5 = c[5], &a6 = c[6], &a7 = c[7];
  H4Decomposition<T> d;
  d.q1 = a3 * (a2 * a5 - a3 * a4) - a4 * (a5 - a2 * a4) + a6 * (a3 - a2 * a2);
  d.q2 = a3 * (a3 * a5 - a4 * a4) - a5 * (a5 - a2 * a4) + a6 * (a4 - a2 * a3);
  d.q3 = a4 * (a3 * a5 - a4 * a4) - a5 * (a2 * a5 - a3 * a4) + a6 * (a2 * a4 - a3 * a3);
  d.h3 = h3_expanded(c);
  d.h4 = a7 * d.h3 - a6 * d.q1 + a5 * d.q2 - a4 * d.q3;
  return d;
}

// Q3 in its typeset form, with a6(a4 - a2 a3) as the last term. Kept
// only for discrepancy reporting; it does not reproduce the 4x4 determinant.
template <class T>
T q3_printed(const CoeffVector<T>& c) {
  const T &a2 = c[2], &a3 = c[3], &a4 = c[4], &a5 = c[5], &a6 = c[6];
  return a4 * (a3 * a5 - a4 * a4) - a5 * (a2 * a5 - a3 * a4) + a6 * (a4 - a2 * a3);
}

// ---- generic Ma-Minda generator ----------------------------------------------

template <class T>
struct MindaPhi {
  T b1{1}, b2{1}, b3{0};

  static MindaPhi cardioid() { return {T(1), T(1), T(1) / T(2)}; }  // 1 + z e^z
  static MindaPhi koebe() { return {T(2), T(2), T(2)}; }            // (1+z)/(1-z)
};

template <class T>
struct MindaCoeffs {
  T b1, b2, b3;  // coefficients of z f'/f
  T a2, a3;
};

// c1..c3 are the coefficients of the Caratheodory function p_1 with
// z f'/f = φ((p_1 - 1)/(p_1 + 1)).
template <class T>
MindaCoeffs<T> maminda_coeffs(const MindaPhi<T>& phi, const T& c1, const T& c2, const T& c3) {
  const T &B1 = phi.b1, &B2 = phi.b2, &B3 = phi.b3;
  MindaCoeffs<T> r;
  r.b1 = B1 * c1 / T(2);
  r.b2 = ((B2 - B1) * c1 * c1 + T(2) * B1 * c2) / T(4);
  r.b3 = ((B1 - T(2) * B2 + B3) * c1 * c1 * c1 + T(4) * (B2 - B1) * c1 * c2 + T(4) * B1 * c3) / T(8);
  r.a2 = r.b1;
  r.a3 = ((B1 * B1 - B1 + B2) * c1 * c1 + T(2) * B1 * c2) / T(8);
  return r;
}

// a_n from (n-1) a_n = Σ_{k=1}^{n-1} b_k a_{n-k}.
template <class T>
CoeffVector<T> coeffs_from_b(const std::vector<T>& b_from_1) {
  CoeffVector<T> c;
  const int nmax = static_cast<int>(b_from_1.size()) + 1;
  c.a.resize(static_cast<std::size_t>(nmax) + 1, T(0));
  for (int n = 2; n <= nmax; ++n) {
    T acc(0);
    for (int k = 1; k <= n - 1; ++k) acc = acc + b_from_1[static_cast<std::size_t>(k - 1)] * c.a[static_cast<std::size_t>(n - k)];
    c.a[static_cast<std::size_t>(n)] = acc / T(n - 1);
  }
  return c;
}

// ---- n-fold symmetric transforms ----------------------------------------------

// H_3(1) of the n-fold symmetrization (f(z^n))^{1/n}, from the coefficients
// of f:  3-fold: -β4^2 with β4 = a2/3;  2-fold: α3(α5 - α3^2) with
// α3 = a2/2, α5 = a3/2 - a2^2/8.
template <class T>
T nfold_h3(const CoeffVector<T>& c, int fold) {
  const T& a2 = c[2];
  if (fold == 3) {
    const T beta4 = a2 / T(3);
    return -(beta4 * beta4);
  }
  if (fold == 2) {
    const T& a3 = c[3];
    const T alpha3 = a2 / T(2);
    const T alpha5 = a3 / T(2) - a2 * a2 / T(8);
    return alpha3 * (alpha5 - alpha3 * alpha3);
  }
  throw std::invalid_argument("nfold_h3 supports fold 2 or 3");
}

// B1^2 / 9.
template <class R>
R threefold_bound(const MindaPhi<R>& phi) {
  return phi.b1 * phi.b1 / R(9);
}

namespace detail {
template <class R>
R abs_real(const R& x) {
  return x < R(0) ? R(-x) : x;
}
}  // namespace detail

// Three-case bound as typeset: (|B1|/4) times
//   (1/6)(B2 - (9/8)B1^2 + B1^2)   if (9/4)B1^2 <= 2(B2 + B1^2 - B1),
//   B1/6                           if 2(B2 + B1^2 - B1) <= (9/4)B1^2 <= 2(B2 + B1^2 + B1),
//   (1/6)(-B2 + (9/8)B1^2 - B1^2)  if 2(B2 + B1^2 + B1) <= (9/4)B1^2.
// Closed conditions; ties go to the middle case.
template <class R>
R twofold_bound(const MindaPhi<R>& phi) {
  const R &B1 = phi.b1, &B2 = phi.b2;
  const R lhs = R(9) * B1 * B1 / R(4);
  const R lo = R(2) * (B2 + B1 * B1 - B1);
  const R hi = R(2) * (B2 + B1 * B1 + B1);
  const R fs_core = B2 - R(9) * B1 * B1 / R(8) + B1 * B1;
  R v;
  if (lo <= lhs && lhs <= hi) v = B1 / R(6);
  else if (lhs < lo) v = fs_core / R(6);
  else v = -fs_core / R(6);
  return detail::abs_real(B1) / R(4) * v;
}

// Same construction using the starlike-class Fekete-Szego bound for
// |a3 - μ a2^2| at μ = 3/4:
//   (1/2)(B2 - (3/2)B1^2 + B1^2) if μ <= σ1, B1/2 if σ1 <= μ <= σ2, negated first form if μ >= σ2,
// with σ1 = (B2 - B1 + B1^2)/(2B1^2), σ2 = (B2 + B1 + B1^2)/(2B1^2). Requires B1 > 0.
template <class R>
R twofold_bound_starlike(const MindaPhi<R>& phi) {
  const R &B1 = phi.b1, &B2 = phi.b2;
  if (!(B1 > R(0))) throw std::domain_error("twofold_bound_starlike needs B1 > 0");
  const R mu = R(3) / R(4);
  const R s1 = (B2 - B1 + B1 * B1) / (R(2) * B1 * B1);
  const R s2 = (B2 + B1 + B1 * B1) / (R(2) * B1 * B1);
  const R core = B2 - R(2) * mu * B1 * B1 + B1 * B1;
  R v;
  if (s1 <= mu && mu <= s2) v = B1 / R(2);
  else if (mu < s1) v = core / R(2);
  else v = -core / R(2);
  return B1 / R(4) * v;
}

}  // namespace hankel
