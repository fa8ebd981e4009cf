#pragma once

// Closed intervals [lo, hi] of doubles with outward rounding.
//
// Each endpoint operation is computed in round-to-nearest and then corrected
// with an error-free transformation (TwoSum for +/-, fma residual for * and
// /): the endpoint moves one ulp outward only when the rounded result lies on
// the wrong side of the exact one. Exact operations stay exact, so degenerate
// boxes evaluate to degenerate intervals whenever the arithmetic allows it.

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "hankel/scalar.hpp"

namespace hankel {

namespace rounding {

inline double next_down(double x) { return std::nextafter(x, -std::numeric_limits<double>::infinity()); }
inline double next_up(double x) { return std::nextafter(x, std::numeric_limits<double>::infinity()); }

// s = fl(a + b); returns s adjusted to a lower (dir < 0) or upper bound.
inline double add(double a, double b, int dir) {
  const double s = a + b;
  if (!std::isfinite(s)) return s;
  const double bb = s - a;
  const double err = (a - (s - bb)) + (b - bb);  // exact: a + b = s + err
  if (dir < 0 && err < 0.0) return next_down(s);
  if (dir > 0 && err > 0.0) return next_up(s);
  return s;
}

inline double mul(double a, double b, int dir) {
  const double p = a * b;
  if (!std::isfinite(p)) return p;
  const double err = std::fma(a, b, -p);  // exact: a * b = p + err
  if (dir < 0 && err < 0.0) return next_down(p);
  if (dir > 0 && err > 0.0) return next_up(p);
  return p;
}

inline double div(double a, double b, int dir) {
  const double q = a / b;
  if (!std::isfinite(q)) return q;
  // a - q b is exact via fma; its sign relative to b tells the side.
  const double r = std::fma(-q, b, a);
  const bool exact_above = (r > 0.0) == (b > 0.0);  // a/b > q
  if (r == 0.0) return q;
  if (dir < 0 && !exact_above) return next_down(q);
  if (dir > 0 && exact_above) return next_up(q);
  return q;
}

inline double from_rational(const Rational& q, int dir) {
  const double d = q.get_d();
  const int c = cmp(Rational(d), q);
  if (c == 0) return d;
  if (dir < 0) return c < 0 ? d : next_down(d);
  return c > 0 ? d : next_up(d);
}

}  // namespace rounding

class Interval {
 public:
  constexpr Interval() = default;
  Interval(double v) : lo_(v), hi_(v) {}  // NOLINT(implicit): integer and double literals
  Interval(int v) : lo_(v), hi_(v) {}     // NOLINT(implicit)
  Interval(long v) : lo_(static_cast<double>(v)), hi_(static_cast<double>(v)) {  // NOLINT(implicit)
    if (static_cast<long>(lo_) != v) *this = Interval(Rational(v));
  }
  Interval(double lo, double hi) : lo_(lo), hi_(hi) {
    if (!(lo <= hi)) throw std::invalid_argument("interval with lo > hi");
  }
  explicit Interval(const Rational& q) : lo_(rounding::from_rational(q, -1)), hi_(rounding::from_rational(q, +1)) {}

  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }
  double width() const noexcept { return hi_ - lo_; }
  double mid() const noexcept { return lo_ + 0.5 * (hi_ - lo_); }
  bool contains(double x) const noexcept { return lo_ <= x && x <= hi_; }
  bool contains(const Interval& o) const noexcept { return lo_ <= o.lo_ && o.hi_ <= hi_; }
  bool degenerate() const noexcept { return lo_ == hi_; }

  friend Interval operator+(const Interval& a, const Interval& b) {
    return raw(rounding::add(a.lo_, b.lo_, -1), rounding::add(a.hi_, b.hi_, +1));
  }
  friend Interval operator-(const Interval& a, const Interval& b) {
    return raw(rounding::add(a.lo_, -b.hi_, -1), rounding::add(a.hi_, -b.lo_, +1));
  }
  friend Interval operator-(const Interval& a) { return raw(-a.hi_, -a.lo_); }

  friend Interval operator*(const Interval& a, const Interval& b) {
    const double c[4][2] = {{a.lo_, b.lo_}, {a.lo_, b.hi_}, {a.hi_, b.lo_}, {a.hi_, b.hi_}};
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (const auto& e : c) {
      lo = std::min(lo, rounding::mul(e[0], e[1], -1));
      hi = std::max(hi, rounding::mul(e[0], e[1], +1));
    }
    return raw(lo, hi);
  }

  // Division by an interval not containing zero.
  friend Interval operator/(const Interval& a, const Interval& b) {
    if (b.lo_ <= 0.0 && b.hi_ >= 0.0) throw std::domain_error("interval division by an interval containing zero");
    const double c[4][2] = {{a.lo_, b.lo_}, {a.lo_, b.hi_}, {a.hi_, b.lo_}, {a.hi_, b.hi_}};
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (const auto& e : c) {
      lo = std::min(lo, rounding::div(e[0], e[1], -1));
      hi = std::max(hi, rounding::div(e[0], e[1], +1));
    }
    return raw(lo, hi);
  }

  Interval& operator+=(const Interval& o) { return *this = *this + o; }
  Interval& operator-=(const Interval& o) { return *this = *this - o; }
  Interval& operator*=(const Interval& o) { return *this = *this * o; }

  friend bool operator==(const Interval& a, const Interval& b) { return a.lo_ == b.lo_ && a.hi_ == b.hi_; }

  friend Interval hull(const Interval& a, const Interval& b) { return raw(std::min(a.lo_, b.lo_), std::max(a.hi_, b.hi_)); }

  friend std::ostream& operator<<(std::ostream& os, const Interval& x) { return os << '[' << x.lo_ << ", " << x.hi_ << ']'; }

 private:
  static Interval raw(double lo, double hi) {
    Interval r;
    r.lo_ = lo;
    r.hi_ = hi;
    return r;
  }
  double lo_ = 0.0;
  double hi_ = 0.0;
};

// Tight square: the range of x^2, not x*x (which overestimates when 0 ∈ x).
inline Interval sqr(const Interval& x) {
  const double a = std::abs(x.lo());
  const double b = std::abs(x.hi());
  const double mx = std::max(a, b);
  const double mn = (x.lo() <= 0.0 && x.hi() >= 0.0) ? 0.0 : std::min(a, b);
  return {rounding::mul(mn, mn, -1), rounding::mul(mx, mx, +1)};
}

inline Interval ipow(const Interval& x, unsigned e) {
  if (e == 0) return Interval(1);
  if (e % 2 == 0) return ipow(sqr(x), e / 2);
  return x * ipow(x, e - 1);
}

}  // namespace hankel
