#pragma once

// Scalar payloads shared by every module: exact rationals (GMP), exact
// complex rationals, and the double / std::complex<double> float mode.

#include <cmath>
#include <complex>
#include <ostream>
#include <stdexcept>
#include <string>
#include <type_traits>

#include <gmpxx.h>

namespace hankel {

using Rational = mpq_class;
using Complex = std::complex<double>;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// a + bi with exact rational parts.
struct ComplexRational {
  Rational re;
  Rational im;

  ComplexRational() : re(0), im(0) {}
  ComplexRational(int v) : re(v), im(0) {}        // NOLINT(implicit)
  ComplexRational(long v) : re(v), im(0) {}       // NOLINT(implicit)
  ComplexRational(Rational r) : re(std::move(r)), im(0) {}  // NOLINT(implicit)
  ComplexRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  ComplexRational& operator+=(const ComplexRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  ComplexRational& operator-=(const ComplexRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  ComplexRational& operator*=(const ComplexRational& o) {
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  ComplexRational& operator/=(const ComplexRational& o) {
    Rational den = o.re * o.re + o.im * o.im;
    if (sgn(den) == 0) throw std::domain_error("complex rational division by zero");
    Rational r = (re * o.re + im * o.im) / den;
    Rational i = (im * o.re - re * o.im) / den;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  friend ComplexRational operator+(ComplexRational a, const ComplexRational& b) { return a += b; }
  friend ComplexRational operator-(ComplexRational a, const ComplexRational& b) { return a -= b; }
  friend ComplexRational operator*(ComplexRational a, const ComplexRational& b) { return a *= b; }
  friend ComplexRational operator/(ComplexRational a, const ComplexRational& b) { return a /= b; }
  friend ComplexRational operator-(const ComplexRational& a) { return {Rational(-a.re), Rational(-a.im)}; }
  friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const ComplexRational& a, const ComplexRational& b) { return !(a == b); }
  friend std::ostream& operator<<(std::ostream& os, const ComplexRational& z) {
    os << z.re.get_str();
    if (sgn(z.im) != 0) os << (sgn(z.im) > 0 ? "+" : "-") << Rational(abs(z.im)).get_str() << "i";
    return os;
  }
};

// ---- traits -------------------------------------------------------------

template <class T>
struct scalar_traits;

template <>
struct scalar_traits<double> {
  using real_type = double;
  static constexpr bool exact = false;
  static constexpr bool complex = false;
};
template <>
struct scalar_traits<Complex> {
  using real_type = double;
  static constexpr bool exact = false;
  static constexpr bool complex = true;
};
template <>
struct scalar_traits<Rational> {
  using real_type = Rational;
  static constexpr bool exact = true;
  static constexpr bool complex = false;
};
template <>
struct scalar_traits<ComplexRational> {
  using real_type = Rational;
  static constexpr bool exact = true;
  static constexpr bool complex = true;
};

template <class T>
using real_of_t = typename scalar_traits<T>::real_type;

template <class T>
inline constexpr bool is_exact_v = scalar_traits<T>::exact;

inline bool is_zero(double x) { return x == 0.0; }
inline bool is_zero(const Complex& x) { return x == Complex(0.0, 0.0); }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(const ComplexRational& x) { return sgn(x.re) == 0 && sgn(x.im) == 0; }

inline double conj(double x) { return x; }
inline Complex conj(const Complex& x) { return std::conj(x); }
inline Rational conj(const Rational& x) { return x; }
inline ComplexRational conj(const ComplexRational& x) { return {x.re, Rational(-x.im)}; }

inline double abs2(double x) { return x * x; }
inline double abs2(const Complex& x) { return std::norm(x); }
inline Rational abs2(const Rational& x) { return x * x; }
inline Rational abs2(const ComplexRational& x) { return x.re * x.re + x.im * x.im; }

inline double real_part(double x) { return x; }
inline double real_part(const Complex& x) { return x.real(); }
inline Rational real_part(const Rational& x) { return x; }
inline Rational real_part(const ComplexRational& x) { return x.re; }

inline double imag_part(double) { return 0.0; }
inline double imag_part(const Complex& x) { return x.imag(); }
inline Rational imag_part(const Rational&) { return Rational(0); }
inline Rational imag_part(const ComplexRational& x) { return x.im; }

inline Complex to_complex(double x) { return {x, 0.0}; }
inline Complex to_complex(const Complex& x) { return x; }
inline Complex to_complex(const Rational& x) { return {x.get_d(), 0.0}; }
inline Complex to_complex(const ComplexRational& x) { return {x.re.get_d(), x.im.get_d()}; }

inline double to_double(double x) { return x; }
inline double to_double(const Rational& x) { return x.get_d(); }

// Rational → double correctly rounded (get_d truncates toward zero).
inline double rational_to_double_nearest(const Rational& q) {
  double d = q.get_d();
  double up = std::nextafter(d, INFINITY);
  double dn = std::nextafter(d, -INFINITY);
  Rational best_err = abs(Rational(q - Rational(d)));
  double best = d;
  for (double c : {up, dn}) {
    Rational e = abs(Rational(q - Rational(c)));
    if (e < best_err) {
      best_err = e;
      best = c;
    }
  }
  return best;
}

// Exact integer power by repeated squaring; works for every payload.
template <class T>
T ipow(T base, unsigned e) {
  T result(1);
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

// "n" for integers, "n/d" otherwise.
inline std::string to_fraction_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace hankel
