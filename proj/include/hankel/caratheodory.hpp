#pragma once

// Coefficient sequences of the Caratheodory class P (p(0) = 1, Re p > 0).
//
// Members are realized through atomic Herglotz measures,
//   p(z) = Σ_k λ_k (1 + z e^{-i t_k}) / (1 - z e^{-i t_k}),  p_n = 2 Σ_k λ_k e^{-i n t_k},
// and validated through the trigonometric moment condition: the Hermitian
// Toeplitz matrices [p_{k-j}] (p_0 = 2) are positive semidefinite.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hankel/scalar.hpp"
#include "hankel/series.hpp"

namespace hankel {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Atom {
  double angle = 0.0;   // t_k in [0, 2π)
  double weight = 0.0;  // λ_k >= 0
};

struct AtomicMeasure {
  std::vector<Atom> atoms;

  // Weights nonnegative and summing to one within `tol`.
  bool valid(double tol = 1e-12) const {
    if (atoms.empty()) return false;
    double total = 0.0;
    for (const auto& a : atoms) {
      if (!(a.weight >= 0.0) || !std::isfinite(a.angle)) return false;
      total += a.weight;
    }
    return std::abs(total - 1.0) <= tol;
  }
};

// Atom at the rational point ((1 - s^2) + 2is)/(1 + s^2) = e^{it}, t = 2 atan(s).
// s = ∞ (the point -1) is not representable; use the float measure for it.
struct RationalAtom {
  Rational tan_half;
  Rational weight;

  ComplexRational point() const {
    const Rational s2 = tan_half * tan_half;
    const Rational den = 1 + s2;
    return {Rational((1 - s2) / den), Rational(2 * tan_half / den)};
  }
  double angle() const {
    const double t = 2.0 * std::atan(tan_half.get_d());
    return t < 0.0 ? t + kTwoPi : t;
  }
};

struct RationalMeasure {
  std::vector<RationalAtom> atoms;

  bool valid() const {
    if (atoms.empty()) return false;
    Rational total(0);
    for (const auto& a : atoms) {
      if (sgn(a.weight) < 0) return false;
      total += a.weight;
    }
    return total == 1;
  }

  AtomicMeasure to_float() const {
    AtomicMeasure m;
    for (const auto& a : atoms) m.atoms.push_back({a.angle(), a.weight.get_d()});
    return m;
  }
};

// p_1 .. p_N of a member of P. Index 0 holds p(0) = 1 so the storage doubles
// as the Taylor series of p; the Toeplitz diagonal uses 2 = 2 p(0).
template <class C>
struct CaratheodorySequence {
  std::vector<C> p{C(1)};

  int size() const noexcept { return static_cast<int>(p.size()) - 1; }
  const C& operator[](int n) const {
    if (n < 1 || n > size()) throw std::out_of_range("Caratheodory coefficient index " + std::to_string(n) + " out of range");
    return p[static_cast<std::size_t>(n)];
  }
  TruncatedSeries<C> as_series(int order) const {
    std::vector<C> c(p.begin(), p.begin() + std::min<std::ptrdiff_t>(order + 1, static_cast<std::ptrdiff_t>(p.size())));
    return TruncatedSeries<C>(std::move(c), order);
  }

  static CaratheodorySequence from(std::vector<C> coeffs_from_p1) {
    CaratheodorySequence s;
    s.p.insert(s.p.end(), coeffs_from_p1.begin(), coeffs_from_p1.end());
    return s;
  }
};

// ---- Herglotz coefficients ------------------------------------------------

inline CaratheodorySequence<Complex> herglotz_coeffs(const AtomicMeasure& m, int n_max) {
  CaratheodorySequence<Complex> s;
  s.p.assign(static_cast<std::size_t>(n_max) + 1, Complex(0.0, 0.0));
  s.p[0] = Complex(1.0, 0.0);
  for (const auto& a : m.atoms) {
    for (int n = 1; n <= n_max; ++n) s.p[static_cast<std::size_t>(n)] += 2.0 * a.weight * std::polar(1.0, -n * a.angle);
  }
  return s;
}

inline CaratheodorySequence<ComplexRational> herglotz_coeffs(const RationalMeasure& m, int n_max) {
  CaratheodorySequence<ComplexRational> s;
  s.p.assign(static_cast<std::size_t>(n_max) + 1, ComplexRational(0));
  s.p[0] = ComplexRational(1);
  for (const auto& a : m.atoms) {
    const ComplexRational u_bar = conj(a.point());
    ComplexRational pw(1);
    const ComplexRational w(Rational(2 * a.weight));
    for (int n = 1; n <= n_max; ++n) {
      pw *= u_bar;
      s.p[static_cast<std::size_t>(n)] += w * pw;
    }
  }
  return s;
}

// Rotate the measure so that p_1 becomes real and nonnegative; |p_n| and the
// modulus of every Hankel functional are unchanged.
inline AtomicMeasure rotate_to_real_p1(const AtomicMeasure& m) {
  const Complex p1 = herglotz_coeffs(m, 1).p[1];
  if (std::abs(p1) == 0.0) return m;
  // p_1 = 2Σλ e^{-it}; shifting t -> t + θ multiplies p_1 by e^{-iθ}.
  const double theta = std::arg(p1);
  AtomicMeasure r = m;
  for (auto& a : r.atoms) {
    a.angle = std::fmod(a.angle + theta, kTwoPi);
    if (a.angle < 0.0) a.angle += kTwoPi;
  }
  return r;
}

// ---- Libera-Zlotkiewicz parametrization -----------------------------------

// p in [0, 2] (stored in the complex payload with zero imaginary part);
// gamma, eta, rho in the closed unit disk.
template <class C>
struct LZParams {
  C p{0};
  C gamma{0};
  C eta{0};
  C rho{0};

  bool valid() const {
    using R = real_of_t<C>;
    if (!is_zero(imag_part(p))) return false;
    const R pr = real_part(p);
    if (pr < R(0) || pr > R(2)) return false;
    return abs2(gamma) <= R(1) && abs2(eta) <= R(1) && abs2(rho) <= R(1);
  }
};

template <class C>
struct LZTriple {
  C p2, p3, p4;
};

template <class C>
LZTriple<C> lz_expand(const LZParams<C>& prm) {
  if (!prm.valid()) throw std::domain_error("LZ parameters outside [0,2] x closed unit polydisk");
  const C& p = prm.p;
  const C& g = prm.gamma;
  const C& e = prm.eta;
  const C& r = prm.rho;
  const C p2 = p * p;
  const C w = C(4) - p2;                     // 4 - p^2
  const C one_g = C(1) - C(abs2(g));         // 1 - |γ|^2
  const C one_e = C(1) - C(abs2(e));         // 1 - |η|^2

  LZTriple<C> t;
  t.p2 = (p2 + g * w) / C(2);
  t.p3 = (p2 * p + C(2) * p * w * g - p * w * g * g + C(2) * w * one_g * e) / C(4);
  t.p4 = (p2 * p2 + w * g * (p2 * (g * g - C(3) * g + C(3)) + C(4) * g) -
          C(4) * w * one_g * (p * (g - C(1)) * e + conj(g) * e * e - one_e * r)) /
         C(8);
  return t;
}

template <class C>
CaratheodorySequence<C> lz_sequence(const LZParams<C>& prm) {
  const auto t = lz_expand(prm);
  return CaratheodorySequence<C>::from({prm.p, t.p2, t.p3, t.p4});
}

// ---- Toeplitz validation ---------------------------------------------------

struct ToeplitzReport {
  bool valid = false;
  double min_eigenvalue = 0.0;
};

inline constexpr double kPsdTolerance = 1e-9;

inline ToeplitzReport toeplitz_validate(const CaratheodorySequence<Complex>& s, double tol = kPsdTolerance) {
  const int n = s.size();
  Eigen::MatrixXcd t(n + 1, n + 1);
  for (int j = 0; j <= n; ++j) {
    for (int k = 0; k <= n; ++k) {
      const int d = k - j;
      if (d == 0) t(j, k) = 2.0;
      else if (d > 0) t(j, k) = s.p[static_cast<std::size_t>(d)];
      else t(j, k) = std::conj(s.p[static_cast<std::size_t>(-d)]);
    }
  }
  double min_ev = INFINITY;
  for (int m = 0; m <= n; ++m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(t.topLeftCorner(m + 1, m + 1), Eigen::EigenvaluesOnly);
    min_ev = std::min(min_ev, es.eigenvalues().minCoeff());
  }
  return {min_ev >= -tol, min_ev};
}

template <class C>
ToeplitzReport toeplitz_validate(const CaratheodorySequence<C>& s, double tol = kPsdTolerance) {
  CaratheodorySequence<Complex> f;
  f.p.clear();
  for (const auto& v : s.p) f.p.push_back(to_complex(v));
  return toeplitz_validate(f, tol);
}

// ---- Lemma-2 style coefficient inequalities --------------------------------

struct MarginCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  double slack() const { return rhs - lhs; }
};

struct MarginReport {
  MarginCheck coefficient;  // max_n |p_n| against 2
  MarginCheck product;      // |p_{n+k} - μ p_n p_k| against 2 or 2|2μ-1|
  MarginCheck cubic;        // |p_1^3 - μ p_3| against 2|μ-4| or 2μ sqrt(μ/(μ-1))
  double min_slack() const { return std::min({coefficient.slack(), product.slack(), cubic.slack()}); }
};

inline double product_bound(double mu) { return (mu >= 0.0 && mu <= 1.0) ? 2.0 : 2.0 * std::abs(2.0 * mu - 1.0); }

inline double cubic_bound(double mu) {
  return mu <= 4.0 / 3.0 ? 2.0 * std::abs(mu - 4.0) : 2.0 * mu * std::sqrt(mu / (mu - 1.0));
}

inline MarginReport lemma2_margins(const CaratheodorySequence<Complex>& s, double mu, int n, int k) {
  if (n < 1 || k < 1 || n + k > s.size()) throw std::out_of_range("lemma2_margins: need 1 <= n, k and n + k <= N");
  if (s.size() < 3) throw std::out_of_range("lemma2_margins: cubic check needs p_3");
  MarginReport r;
  double mx = 0.0;
  for (int i = 1; i <= s.size(); ++i) mx = std::max(mx, std::abs(s[i]));
  r.coefficient = {mx, 2.0};
  r.product = {std::abs(s[n + k] - mu * s[n] * s[k]), product_bound(mu)};
  r.cubic = {std::abs(s[1] * s[1] * s[1] - mu * s[3]), cubic_bound(mu)};
  return r;
}

// ---- sampling --------------------------------------------------------------

using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0) { return Rng(splitmix64(seed ^ splitmix64(stream))); }

// Atom count uniform in 1..max_atoms, angles uniform, weights flat Dirichlet.
inline AtomicMeasure sample_random(Rng& rng, int max_atoms) {
  if (max_atoms < 1) throw std::invalid_argument("max_atoms must be >= 1");
  std::uniform_int_distribution<int> count(1, max_atoms);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  std::exponential_distribution<double> gamma1(1.0);
  AtomicMeasure m;
  const int k = count(rng);
  double total = 0.0;
  for (int i = 0; i < k; ++i) {
    const double t = angle(rng);
    const double w = gamma1(rng);
    m.atoms.push_back({t, w});
    total += w;
  }
  for (auto& a : m.atoms) a.weight /= total;
  return m;
}

inline AtomicMeasure sample_random(std::uint64_t seed, int max_atoms) {
  Rng rng = make_rng(seed);
  return sample_random(rng, max_atoms);
}

// Uniform point of the closed unit disk (radius = sqrt(uniform)).
inline Complex sample_disk(Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double r = std::sqrt(u(rng));
  const double t = kTwoPi * u(rng);
  return std::polar(r, t);
}

inline LZParams<Complex> sample_lz(Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, 2.0);
  LZParams<Complex> prm;
  prm.p = Complex(u(rng), 0.0);
  prm.gamma = sample_disk(rng);
  prm.eta = sample_disk(rng);
  prm.rho = sample_disk(rng);
  return prm;
}

inline LZParams<Complex> sample_lz(std::uint64_t seed) {
  Rng rng = make_rng(seed, 1);
  return sample_lz(rng);
}

// Rational-point measure: tan(t/2) = a/b with |a| <= 9, 1 <= b <= 9, integer
// weights 1..9 normalized. Coefficients of these measures are exact.
inline RationalMeasure sample_rational_measure(Rng& rng, int max_atoms) {
  if (max_atoms < 1) throw std::invalid_argument("max_atoms must be >= 1");
  std::uniform_int_distribution<int> count(1, max_atoms);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  std::uniform_int_distribution<int> wt(1, 9);
  RationalMeasure m;
  const int k = count(rng);
  long total = 0;
  std::vector<long> w;
  for (int i = 0; i < k; ++i) {
    m.atoms.push_back({make_rational(num(rng), den(rng)), Rational(0)});
    w.push_back(wt(rng));
    total += w.back();
  }
  for (int i = 0; i < k; ++i) m.atoms[static_cast<std::size_t>(i)].weight = make_rational(w[static_cast<std::size_t>(i)], total);
  return m;
}

}  // namespace hankel
