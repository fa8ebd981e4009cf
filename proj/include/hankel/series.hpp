#pragma once

// Truncated formal power series c_0 + c_1 z + ... + c_N z^N.
//
// Every binary operation truncates at the smaller of the two orders, so the
// result is exactly the truncation of the untruncated operation. The payload
// is any field type from scalar.hpp; exact payloads make the series an
// independent oracle for closed-form coefficient formulas.

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hankel/scalar.hpp"

namespace hankel {

class SeriesError : public std::domain_error {
 public:
  enum class Kind { Singular, Domain, Branch };
  SeriesError(Kind kind, const std::string& what) : std::domain_error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

inline constexpr int kDefaultOrder = 16;

template <class T>
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order = kDefaultOrder) : c_(static_cast<std::size_t>(checked(order)) + 1, T(0)) {}

  TruncatedSeries(std::vector<T> coeffs, int order) : c_(std::move(coeffs)) {
    c_.resize(static_cast<std::size_t>(checked(order)) + 1, T(0));
  }

  static TruncatedSeries constant(const T& v, int order) {
    TruncatedSeries s(order);
    s.c_[0] = v;
    return s;
  }
  static TruncatedSeries identity(int order) {
    TruncatedSeries s(order);
    if (order >= 1) s.c_[1] = T(1);
    return s;
  }

  int order() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const T& operator[](int n) const { return c_.at(static_cast<std::size_t>(n)); }
  T& operator[](int n) { return c_.at(static_cast<std::size_t>(n)); }
  const std::vector<T>& coeffs() const noexcept { return c_; }

  // Coefficient of z^n, zero beyond the truncation degree.
  T coeff(int n) const { return n >= 0 && n <= order() ? c_[static_cast<std::size_t>(n)] : T(0); }

  TruncatedSeries truncated(int order) const {
    std::vector<T> v(c_.begin(), c_.begin() + std::min<std::ptrdiff_t>(order + 1, static_cast<std::ptrdiff_t>(c_.size())));
    return TruncatedSeries(std::move(v), order);
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.c_ == b.c_; }
  friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) { return !(a == b); }

 private:
  static int checked(int order) {
    if (order < 0) throw std::invalid_argument("series order must be non-negative");
    return order;
  }
  std::vector<T> c_;
};

namespace detail {
template <class T>
int common_order(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
  return std::min(a.order(), b.order());
}
}  // namespace detail

template <class T>
TruncatedSeries<T> operator+(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
  const int n = detail::common_order(a, b);
  TruncatedSeries<T> r(n);
  for (int i = 0; i <= n; ++i) r[i] = a[i] + b[i];
  return r;
}

template <class T>
TruncatedSeries<T> operator-(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
  const int n = detail::common_order(a, b);
  TruncatedSeries<T> r(n);
  for (int i = 0; i <= n; ++i) r[i] = a[i] - b[i];
  return r;
}

template <class T>
TruncatedSeries<T> operator-(const TruncatedSeries<T>& a) {
  TruncatedSeries<T> r(a.order());
  for (int i = 0; i <= a.order(); ++i) r[i] = -a[i];
  return r;
}

template <class T>
TruncatedSeries<T> scale(const TruncatedSeries<T>& a, const T& k) {
  TruncatedSeries<T> r(a.order());
  for (int i = 0; i <= a.order(); ++i) r[i] = a[i] * k;
  return r;
}

template <class T>
TruncatedSeries<T> operator*(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
  const int n = detail::common_order(a, b);
  TruncatedSeries<T> r(n);
  for (int i = 0; i <= n; ++i) {
    if (is_zero(a[i])) continue;
    for (int j = 0; i + j <= n; ++j) r[i + j] = r[i + j] + a[i] * b[j];
  }
  return r;
}

template <class T>
TruncatedSeries<T> operator/(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
  if (is_zero(b[0])) throw SeriesError(SeriesError::Kind::Singular, "series division by a series with zero constant term");
  const int n = detail::common_order(a, b);
  TruncatedSeries<T> q(n);
  for (int i = 0; i <= n; ++i) {
    T acc = a[i];
    for (int k = 1; k <= i; ++k) acc = acc - b[k] * q[i - k];
    q[i] = acc / b[0];
  }
  return q;
}

// Multiply by z^k (k may be negative: divide by z^{-k}, which requires the
// low coefficients to vanish). Order is preserved.
template <class T>
TruncatedSeries<T> shift(const TruncatedSeries<T>& a, int k) {
  TruncatedSeries<T> r(a.order());
  for (int i = 0; i <= a.order(); ++i) {
    const int j = i + k;
    if (j < 0) {
      if (!is_zero(a[i])) throw SeriesError(SeriesError::Kind::Domain, "shift would drop a nonzero low-order coefficient");
      continue;
    }
    if (j <= a.order()) r[j] = a[i];
  }
  return r;
}

template <class T>
TruncatedSeries<T> differentiate(const TruncatedSeries<T>& a) {
  TruncatedSeries<T> r(a.order());
  for (int i = 1; i <= a.order(); ++i) r[i - 1] = a[i] * T(i);
  return r;
}

// Antiderivative with zero constant of integration.
template <class T>
TruncatedSeries<T> integrate(const TruncatedSeries<T>& a) {
  TruncatedSeries<T> r(a.order());
  for (int i = 0; i + 1 <= a.order(); ++i) r[i + 1] = a[i] / T(i + 1);
  return r;
}

// exp via e' = s' e; needs s(0) = 0.
template <class T>
TruncatedSeries<T> exp(const TruncatedSeries<T>& s) {
  if (!is_zero(s[0])) throw SeriesError(SeriesError::Kind::Domain, "exp requires a zero constant term");
  const int n = s.order();
  TruncatedSeries<T> e(n);
  e[0] = T(1);
  for (int m = 1; m <= n; ++m) {
    T acc(0);
    for (int k = 1; k <= m; ++k) acc = acc + T(k) * s[k] * e[m - k];
    e[m] = acc / T(m);
  }
  return e;
}

// log via l' = s'/s; needs s(0) = 1.
template <class T>
TruncatedSeries<T> log(const TruncatedSeries<T>& s) {
  if (s[0] != T(1)) throw SeriesError(SeriesError::Kind::Domain, "log requires constant term 1");
  const int n = s.order();
  TruncatedSeries<T> l(n);
  for (int m = 1; m <= n; ++m) {
    T acc = T(m) * s[m];
    for (int k = 1; k < m; ++k) acc = acc - T(k) * l[k] * s[m - k];
    l[m] = acc / T(m);
  }
  return l;
}

// outer(inner(z)) by Horner; inner must vanish at 0.
template <class T>
TruncatedSeries<T> compose(const TruncatedSeries<T>& outer, const TruncatedSeries<T>& inner) {
  if (!is_zero(inner[0])) throw SeriesError(SeriesError::Kind::Domain, "composition requires inner(0) = 0");
  const int n = detail::common_order(outer, inner);
  TruncatedSeries<T> r = TruncatedSeries<T>::constant(outer[n], n);
  const TruncatedSeries<T> in = inner.truncated(n);
  for (int k = n - 1; k >= 0; --k) {
    r = r * in;
    r[0] = r[0] + outer[k];
  }
  return r;
}

// Principal (1/n)-th power of a series with constant term 1.
template <class T>
TruncatedSeries<T> root(const TruncatedSeries<T>& g, int n) {
  if (n < 1) throw std::invalid_argument("root index must be >= 1");
  if (g[0] != T(1)) throw SeriesError(SeriesError::Kind::Branch, "principal root needs constant term 1");
  if (n == 1) return g;
  const T inv = T(1) / T(n);
  return exp(scale(log(g), inv));
}

// n-fold symmetrization (f(z^n))^{1/n} = z (g(z^n))^{1/n}, g(w) = f(w)/w.
// Only exponents congruent to 1 mod n survive.
template <class T>
TruncatedSeries<T> nfold_root(const TruncatedSeries<T>& f, int n) {
  if (n < 1) throw std::invalid_argument("fold must be >= 1");
  if (!is_zero(f[0])) throw SeriesError(SeriesError::Kind::Domain, "f must vanish at the origin");
  if (f.order() < 1 || f[1] != T(1)) throw SeriesError(SeriesError::Kind::Branch, "f(z)/z must have constant term 1");
  const int order = f.order();
  const TruncatedSeries<T> g = root(shift(f, -1), n);
  TruncatedSeries<T> r(order);
  for (int k = 0; 1 + n * k <= order; ++k) r[1 + n * k] = g[k];
  return r;
}

// compose_root: outer∘inner, then optionally the n-fold root of the result.
template <class T>
TruncatedSeries<T> compose_root(const TruncatedSeries<T>& outer, const TruncatedSeries<T>& inner, int fold = 0) {
  TruncatedSeries<T> c = compose(outer, inner);
  return fold > 0 ? nfold_root(c, fold) : c;
}

// ---- generators ------------------------------------------------------------

// φ(w) = 1 + w e^w, coefficients 1, 1, 1, 1/2!, 1/3!, ...
template <class T>
TruncatedSeries<T> cardioid_phi(int order = kDefaultOrder) {
  TruncatedSeries<T> s(order);
  s[0] = T(1);
  T fact(1);
  for (int n = 1; n <= order; ++n) {
    if (n >= 2) fact = fact * T(n - 1);
    s[n] = T(1) / fact;
  }
  return s;
}

// φ(w) = (1+w)/(1-w) = 1 + 2w + 2w^2 + ...
template <class T>
TruncatedSeries<T> koebe_phi(int order = kDefaultOrder) {
  TruncatedSeries<T> s(order);
  s[0] = T(1);
  for (int n = 1; n <= order; ++n) s[n] = T(2);
  return s;
}

// φ(w) = 1 + B1 w + B2 w^2 + B3 w^3 (higher coefficients zero).
template <class T>
TruncatedSeries<T> minda_phi(const T& b1, const T& b2, const T& b3, int order = kDefaultOrder) {
  TruncatedSeries<T> s(order);
  s[0] = T(1);
  if (order >= 1) s[1] = b1;
  if (order >= 2) s[2] = b2;
  if (order >= 3) s[3] = b3;
  return s;
}

// f = z exp(∫_0^z (φ(ω(t)) - 1)/t dt) with ω = (p-1)/(p+1), so that
// z f'/f = φ∘ω. Truncated at degree N.
template <class T>
TruncatedSeries<T> starlike_from_caratheodory(const TruncatedSeries<T>& p, const TruncatedSeries<T>& phi, int order) {
  if (p[0] != T(1)) throw SeriesError(SeriesError::Kind::Domain, "Caratheodory function must satisfy p(0) = 1");
  if (phi[0] != T(1)) throw SeriesError(SeriesError::Kind::Domain, "generator must satisfy phi(0) = 1");
  const TruncatedSeries<T> pp = p.truncated(order);
  const TruncatedSeries<T> one = TruncatedSeries<T>::constant(T(1), order);
  const TruncatedSeries<T> omega = (pp - one) / (pp + one);
  TruncatedSeries<T> g = compose(phi.truncated(order), omega);
  g[0] = g[0] - T(1);
  const TruncatedSeries<T> log_f_over_z = integrate(shift(g, -1));
  return shift(exp(log_f_over_z), 1);
}

// z exp((e^{z^3} - 1)/3).
template <class T = Rational>
TruncatedSeries<T> extremal_series(int order) {
  if (order < 1) throw std::invalid_argument("extremal series needs order >= 1");
  TruncatedSeries<T> inner(order);
  T fact(1);
  for (int k = 1; 3 * k <= order; ++k) {
    fact = fact * T(k);
    inner[3 * k] = T(1) / (T(3) * fact);
  }
  return shift(exp(inner), 1);
}

}  // namespace hankel
