#pragma once

// Algebraic objects of the |H_3(1)| <= 1/9 argument for φ(z) = 1 + z e^z:
// the 9216-scaled H_3 polynomial in p_1..p_4, its Libera-Zlotkiewicz form
// ν1 + ν2 η + ν3 η^2 + φ ρ, the majorant B(p, x, y) on the cuboid
// V = [0,2] x [0,1] x [0,1], and the typeset face/edge restrictions.
//
// Every evaluator is a template over the payload so the same expression
// serves exact rationals, doubles, and outward-rounded intervals.

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hankel/caratheodory.hpp"
#include "hankel/interval.hpp"
#include "hankel/scalar.hpp"

namespace hankel {

template <class T>
T sq(const T& x) {
  return x * x;
}
inline Interval sq(const Interval& x) { return sqr(x); }
template <class U, class V>
Rational sq(const __gmp_expr<U, V>& x) {
  const Rational r(x);
  return r * r;
}

// ---- H_3 as a polynomial in p_1..p_4 ---------------------------------------

// 9216 H_3(1), expanded exactly from the Hankel determinant and the a_2..a_5
// formulas. Verified against the determinant oracle in the test suite.
inline constexpr std::string_view kH3PolyCorrected =
    "-21p^6 + 60p^4p2 + 96p^3p3 - 144p^2p2^2 - 144p^2p4 + 192p p2 p3 - 72p2^3 + 288p2p4 - 256p3^2";

// The polynomial as typeset, including the duplicated p^2 p4 monomial.
inline constexpr std::string_view kH3PolyPrinted =
    "3p^6 - 12p^4p2 + 96p^3p3 - 192p p2 p3 - 144p^2p2^2 + 144p^2p4 + 72p2^3 - 256p3^2 + 288p^2p4";

template <class C>
C h3_poly(const C& p, const C& p2, const C& p3, const C& p4) {
  const C pp = p * p;
  const C s = C(-21) * pp * pp * pp + C(60) * pp * pp * p2 + C(96) * pp * p * p3 - C(144) * pp * p2 * p2 -
              C(144) * pp * p4 + C(192) * p * p2 * p3 - C(72) * p2 * p2 * p2 + C(288) * p2 * p4 - C(256) * p3 * p3;
  return s / C(9216);
}

template <class C>
C h3_poly_printed(const C& p, const C& p2, const C& p3, const C& p4) {
  const C pp = p * p;
  const C s = C(3) * pp * pp * pp - C(12) * pp * pp * p2 + C(96) * pp * p * p3 - C(192) * p * p2 * p3 -
              C(144) * pp * p2 * p2 + C(144) * pp * p4 + C(72) * p2 * p2 * p2 - C(256) * p3 * p3 + C(288) * pp * p4;
  return s / C(9216);
}

template <class C>
C h3_poly(const CaratheodorySequence<C>& s) {
  return h3_poly(s[1], s[2], s[3], s[4]);
}

// ---- LZ-substituted form ------------------------------------------------------

template <class C>
struct NuTerms {
  C nu1, nu2, nu3, phi;  // all scaled by 9216
};

// ν2 carries p γ^2 (the typeset display has 10 p γ^2; exact substitution
// gives coefficient 1). ν1, ν3 and φ are as typeset.
template <class C>
NuTerms<C> nu_terms(const LZParams<C>& prm, bool printed_nu2 = false) {
  const C& p = prm.p;
  const C& g = prm.gamma;
  const C w = C(4) - p * p;
  const C w2 = w * w;
  const C pp = p * p;
  const C g2 = g * g;
  const C one_g = C(1) - C(abs2(g));
  const C one_e = C(1) - C(abs2(prm.eta));
  NuTerms<C> t;
  t.nu1 = C(-4) * pp * pp * pp - C(25) * pp * g2 * w2 - C(5) * pp * g2 * g * w2 + C(2) * pp * g2 * g2 * w2 +
          C(5) * pp * pp * g * w + C(36) * g2 * g * w2 - C(16) * pp * pp * g2 * w;
  const C k = printed_nu2 ? C(10) : C(1);
  t.nu2 = C(8) * one_g * w * (C(4) * pp * p - w * (p * g + k * p * g2));
  t.nu3 = C(-8) * one_g * w2 * (C(8) + C(abs2(g)));
  t.phi = C(72) * one_g * w2 * one_e * g;
  return t;
}

template <class C>
C h3_lz(const LZParams<C>& prm) {
  if (!prm.valid()) throw std::domain_error("LZ parameters outside [0,2] x closed unit polydisk");
  const NuTerms<C> t = nu_terms(prm);
  return (t.nu1 + t.nu2 * prm.eta + t.nu3 * prm.eta * prm.eta + t.phi * prm.rho) / C(9216);
}

// ---- the majorant B(p, x, y) ----------------------------------------------------

struct CuboidPoint {
  double p = 0.0;
  double x = 0.0;
  double y = 0.0;

  bool in_cuboid() const { return p >= 0.0 && p <= 2.0 && x >= 0.0 && x <= 1.0 && y >= 0.0 && y <= 1.0; }
};

// Integer constants of b1..b4 as typeset. Tests mutate a field to check that
// certification notices a wrong surface.
struct BoundCoefficients {
  // b1 = c_p6 p^6 + c_p2x2 p^2x^2w^2 + c_p2x3 p^2x^3w^2 + c_p2x4 p^2x^4w^2
  //      + c_p4x p^4 x w + c_x3 x^3 w^2 + c_p4x2 p^4 x^2 w,  w = 4 - p^2
  long c_p6 = 4, c_p2x2 = 25, c_p2x3 = 5, c_p2x4 = 2, c_p4x = 5, c_x3 = 36, c_p4x2 = 16;
  // b2 = b2_lead (1-x^2) w (b2_p3 p^3 + w (b2_px p x + b2_px2 p x^2))
  long b2_lead = 8, b2_p3 = 4, b2_px = 1, b2_px2 = 10;
  // b3 = b3_lead (1-x^2) w^2 (b3_shift + x^2)
  long b3_lead = 8, b3_shift = 8;
  // b4 = b4_lead (1-x^2) w^2 x
  long b4_lead = 72;
  long scale = 9216;
};

inline const BoundCoefficients kPrintedBound{};

template <class T>
struct BTerms {
  T b1, b2, b3, b4;
};

template <class T>
BTerms<T> b_terms(const T& p, const T& x, const BoundCoefficients& k = kPrintedBound) {
  const T pp = sq(p);
  const T xx = sq(x);
  const T w = T(4) - pp;
  const T w2 = sq(w);
  const T one_x = T(1) - xx;
  const T p4 = sq(pp);
  BTerms<T> t;
  t.b1 = T(k.c_p6) * pp * p4 + T(k.c_p2x2) * pp * xx * w2 + T(k.c_p2x3) * pp * xx * x * w2 +
         T(k.c_p2x4) * pp * sq(xx) * w2 + T(k.c_p4x) * p4 * x * w + T(k.c_x3) * xx * x * w2 + T(k.c_p4x2) * p4 * xx * w;
  t.b2 = T(k.b2_lead) * one_x * w * (T(k.b2_p3) * pp * p + w * (T(k.b2_px) * p * x + T(k.b2_px2) * p * xx));
  t.b3 = T(k.b3_lead) * one_x * w2 * (T(k.b3_shift) + xx);
  t.b4 = T(k.b4_lead) * one_x * w2 * x;
  return t;
}

template <class T>
T bound_B(const T& p, const T& x, const T& y, const BoundCoefficients& k = kPrintedBound) {
  const BTerms<T> t = b_terms(p, x, k);
  const T yy = sq(y);
  return (t.b1 + t.b2 * y + t.b3 * yy + t.b4 * (T(1) - yy)) / T(k.scale);
}

inline double bound_B(const CuboidPoint& pt, const BoundCoefficients& k = kPrintedBound) {
  if (!pt.in_cuboid()) throw std::domain_error("point outside the cuboid [0,2]x[0,1]x[0,1]");
  return bound_B<double>(pt.p, pt.x, pt.y, k);
}

// ---- faces and edges ---------------------------------------------------------------

enum class Target { B, D1, D2, D3, D4, D5, C1, C2, C3, C4, C5 };

inline constexpr std::array<Target, 11> kAllTargets = {Target::B,  Target::D1, Target::D2, Target::D3,
                                                      Target::D4, Target::D5, Target::C1, Target::C2,
                                                      Target::C3, Target::C4, Target::C5};

struct TargetInfo {
  std::string_view name;
  std::string_view description;
  // Closed domain in (p, x, y); fixed coordinates have lo == hi.
  std::array<std::array<double, 2>, 3> domain;
  // Coordinates the typeset formula depends on (subdivision only splits these).
  std::array<bool, 3> active;
  // Which (p, x, y) coordinates the restrict() parameters fill, in order.
  std::array<int, 2> param_axes;
  int arity;
};

inline const TargetInfo& info(Target t) {
  static const std::array<TargetInfo, 11> table = {{
      {"B", "B(p,x,y) on V", {{{0, 2}, {0, 1}, {0, 1}}}, {true, true, true}, {0, 1}, 3},
      {"d1", "face p=0: B(0,x,y)", {{{0, 0}, {0, 1}, {0, 1}}}, {false, true, true}, {1, 2}, 2},
      {"d2", "face x=0: B(p,0,y)", {{{0, 2}, {0, 0}, {0, 1}}}, {true, false, true}, {0, 2}, 2},
      {"d3", "face x=1: B(p,1,y)", {{{0, 2}, {1, 1}, {0, 1}}}, {true, false, false}, {0, 2}, 2},
      {"d4", "face y=0: B(p,x,0)", {{{0, 2}, {0, 1}, {0, 0}}}, {true, true, false}, {0, 1}, 2},
      {"d5", "face y=1: B(p,x,1)", {{{0, 2}, {0, 1}, {1, 1}}}, {true, true, false}, {0, 1}, 2},
      {"c1", "edge x=0,y=0: B(p,0,0)", {{{0, 2}, {0, 0}, {0, 0}}}, {true, false, false}, {0, -1}, 1},
      {"c2", "edge x=0,y=1: B(p,0,1)", {{{0, 2}, {0, 0}, {1, 1}}}, {true, false, false}, {0, -1}, 1},
      {"c3", "edges x=1,y=0|1: B(p,1,y)", {{{0, 2}, {1, 1}, {0, 0}}}, {true, false, false}, {0, -1}, 1},
      {"c4", "edge p=0,y=1: B(0,x,1)", {{{0, 0}, {0, 1}, {1, 1}}}, {false, true, false}, {1, -1}, 1},
      {"c5", "edge p=0,y=0: B(0,x,0)", {{{0, 0}, {0, 1}, {0, 0}}}, {false, true, false}, {1, -1}, 1},
  }};
  return table[static_cast<std::size_t>(t)];
}

inline std::optional<Target> parse_target(std::string_view name) {
  for (Target t : kAllTargets)
    if (info(t).name == name) return t;
  return std::nullopt;
}

// The typeset restricted functions, in their typeset algebraic form. For the
// cuboid target B this is bound_B itself.
template <class T>
T evaluate_target(Target t, const T& p, const T& x, const T& y, const BoundCoefficients& k = kPrintedBound) {
  switch (t) {
    case Target::B:
      return bound_B(p, x, y, k);
    case Target::D1: {
      const T xx = sq(x);
      const T yy = sq(y);
      return (T(9) * xx * x + T(2) * (T(1) - xx) * ((T(8) + xx) * yy + T(9) * x * (T(1) - yy))) / T(144);
    }
    case Target::D2:
      return sq(sq(p) * p + T(16) * y - T(4) * sq(p) * y) / T(2304);
    case Target::D3:
    case Target::C3: {
      const T pp = sq(p);
      return (T(576) + T(224) * pp - T(136) * sq(pp) + T(15) * sq(pp) * pp) / T(9216);
    }
    case Target::D4: {
      const T pp = sq(p), p4 = sq(pp), p6 = p4 * pp;
      const T xx = sq(x), x3 = xx * x, x4 = sq(xx);
      return (T(4) * p4 * x * (T(23) - T(34) * x - T(19) * xx - T(4) * x3) +
              p6 * (T(4) - T(5) * x + T(9) * xx + T(5) * x3 + T(2) * x4) + T(576) * x * (T(2) - xx) +
              T(16) * pp * x * (T(-36) + T(25) * x + T(23) * xx + T(2) * x3)) /
             T(9216);
    }
    case Target::D5: {
      const T pp = sq(p), p3 = pp * p, p4 = sq(pp), p5 = p4 * p, p6 = p4 * pp;
      const T xx = sq(x), x3 = xx * x, x4 = sq(xx);
      return (T(4) * p4 * (T(16) + T(5) * x - T(48) * xx - x3 - T(6) * x4) -
              T(8) * p5 * (T(4) - x - T(14) * xx + x3 + T(10) * x4) +
              p6 * (T(4) - T(5) * x + T(9) * xx + T(5) * x3 + T(2) * x4) +
              T(16) * pp * (T(-32) + T(53) * xx - T(13) * x3 + T(6) * x4) +
              T(128) * p * x * (T(1) + T(10) * x - xx - T(10) * x3) + T(64) * (T(16) - T(14) * xx + T(9) * x3 - T(2) * x4) +
              T(64) * p3 * (T(2) - x - T(12) * xx + x3 + T(10) * x4)) /
             T(9216);
    }
    case Target::C1:
      return T(4) * sq(sq(p)) * sq(p) / T(9216);
    case Target::C2:
      return sq(T(16) - T(4) * sq(p) + sq(p) * p) / T(2304);
    case Target::C4: {
      const T xx = sq(x);
      return (T(8) - T(7) * xx - sq(xx)) / T(72);
    }
    case Target::C5:
      return x * (T(1) - sq(x)) / T(8);
  }
  throw std::invalid_argument("unknown target");
}

// Embed restrict() parameters into the cuboid.
inline CuboidPoint embed(Target t, double a, double b = 0.0) {
  const TargetInfo& ti = info(t);
  std::array<double, 3> c = {ti.domain[0][0], ti.domain[1][0], ti.domain[2][0]};
  if (ti.param_axes[0] >= 0) c[static_cast<std::size_t>(ti.param_axes[0])] = a;
  if (ti.arity >= 2 && ti.param_axes[1] >= 0) c[static_cast<std::size_t>(ti.param_axes[1])] = b;
  return {c[0], c[1], c[2]};
}

inline bool in_domain(Target t, const CuboidPoint& pt) {
  const auto& d = info(t).domain;
  const double v[3] = {pt.p, pt.x, pt.y};
  for (int i = 0; i < 3; ++i)
    if (v[i] < d[static_cast<std::size_t>(i)][0] || v[i] > d[static_cast<std::size_t>(i)][1]) return false;
  return true;
}

// Typeset restriction at face/edge parameters: d1(x,y), d2(p,y), d3(p), d4(p,x),
// d5(p,x), c1..c3(p), c4(x), c5(x).
inline double restrict(Target t, double a, double b = 0.0) {
  if (t == Target::B) throw std::invalid_argument("restrict: B is not a face or edge");
  const CuboidPoint pt = embed(t, a, b);
  if (!in_domain(t, pt)) throw std::domain_error("restrict: parameters outside the face/edge");
  return evaluate_target<double>(t, pt.p, pt.x, pt.y);
}

inline double restrict(std::string_view name, double a, double b = 0.0) {
  const auto t = parse_target(name);
  if (!t || *t == Target::B) throw std::invalid_argument("unknown face/edge identifier '" + std::string(name) + "'");
  return restrict(*t, a, b);
}

template <class T>
T restrict_exact(Target t, const T& a, const T& b = T(0)) {
  const TargetInfo& ti = info(t);
  std::array<T, 3> c = {T(static_cast<long>(ti.domain[0][0])), T(static_cast<long>(ti.domain[1][0])),
                        T(static_cast<long>(ti.domain[2][0]))};
  if (ti.param_axes[0] >= 0) c[static_cast<std::size_t>(ti.param_axes[0])] = a;
  if (ti.arity >= 2 && ti.param_axes[1] >= 0) c[static_cast<std::size_t>(ti.param_axes[1])] = b;
  return evaluate_target<T>(t, c[0], c[1], c[2]);
}

}  // namespace hankel
