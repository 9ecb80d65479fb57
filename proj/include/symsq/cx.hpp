// Minimal complex type usable with any real scalar (std::complex is only
// specified for the builtin floating types).
#pragma once

#include <ostream>

#include "symsq/numeric.hpp"

namespace symsq {

template <class R>
struct Cx {
  R re{}, im{};

  Cx() = default;
  Cx(R r) : re(std::move(r)), im(R(0)) {}  // NOLINT: implicit by design
  Cx(R r, R i) : re(std::move(r)), im(std::move(i)) {}
  static Cx i() { return Cx(R(0), R(1)); }

  Cx operator-() const { return Cx(-re, -im); }
  Cx& operator+=(const Cx& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Cx& operator-=(const Cx& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Cx& operator*=(const Cx& o) {
    R r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = r;
    return *this;
  }
  Cx& operator*=(const R& s) {
    re *= s;
    im *= s;
    return *this;
  }
  Cx& operator/=(const Cx& o) {
    *this = *this / o;
    return *this;
  }
  Cx& operator/=(const R& s) {
    re /= s;
    im /= s;
    return *this;
  }

  friend Cx operator+(Cx a, const Cx& b) { return a += b; }
  friend Cx operator-(Cx a, const Cx& b) { return a -= b; }
  friend Cx operator*(Cx a, const Cx& b) { return a *= b; }
  friend Cx operator*(Cx a, const R& s) { return a *= s; }
  friend Cx operator*(const R& s, Cx a) { return a *= s; }
  friend Cx operator/(Cx a, const R& s) { return a /= s; }
  // Smith's algorithm keeps intermediate magnitudes tame.
  friend Cx operator/(const Cx& a, const Cx& b) {
    using std::fabs;
    R abr = b.re < R(0) ? -b.re : b.re;
    R abi = b.im < R(0) ? -b.im : b.im;
    if (abr >= abi) {
      R r = b.im / b.re;
      R d = b.re + b.im * r;
      return Cx((a.re + a.im * r) / d, (a.im - a.re * r) / d);
    }
    R r = b.re / b.im;
    R d = b.re * r + b.im;
    return Cx((a.re * r + a.im) / d, (a.im * r - a.re) / d);
  }
  friend Cx operator/(const R& s, const Cx& b) { return Cx(s) / b; }
  friend bool operator==(const Cx& a, const Cx& b) { return a.re == b.re && a.im == b.im; }

  friend std::ostream& operator<<(std::ostream& os, const Cx& z) {
    return os << "(" << to_double(z.re) << (to_double(z.im) < 0 ? "" : "+") << to_double(z.im)
              << "i)";
  }
};

template <class R>
inline Cx<R> conj(const Cx<R>& z) {
  return Cx<R>(z.re, -z.im);
}
template <class R>
inline R norm(const Cx<R>& z) {
  return z.re * z.re + z.im * z.im;
}
template <class R>
inline R abs(const Cx<R>& z) {
  using std::hypot;
  return hypot(z.re, z.im);
}
template <class R>
inline R arg(const Cx<R>& z) {
  using std::atan2;
  return atan2(z.im, z.re);
}

template <class R>
inline Cx<R> exp(const Cx<R>& z) {
  using std::cos;
  using std::exp;
  using std::sin;
  R m = exp(z.re);
  return Cx<R>(m * cos(z.im), m * sin(z.im));
}

template <class R>
inline Cx<R> log(const Cx<R>& z) {
  using std::log;
  return Cx<R>(log(abs(z)), arg(z));
}

template <class R>
inline Cx<R> sqrt(const Cx<R>& z) {
  using std::sqrt;
  R m = abs(z);
  if (m == R(0)) return Cx<R>(R(0), R(0));
  // principal branch via half-angle
  R u = sqrt((m + z.re) / R(2));
  R v = sqrt((m - z.re) / R(2));
  if (z.im < R(0)) v = -v;
  return Cx<R>(u, v);
}

template <class R>
inline Cx<R> pow(const Cx<R>& z, const Cx<R>& w) {
  return exp(w * log(z));
}
template <class R>
inline Cx<R> pow(const Cx<R>& z, const R& p) {
  return exp(log(z) * p);
}
// x^w for real x > 0: avoids the atan2 in log().
template <class R>
inline Cx<R> pow_real_base(const R& x, const Cx<R>& w) {
  using std::log;
  return exp(w * log(x));
}
template <class R>
inline Cx<R> pow(const R& x, const Cx<R>& w) {
  return x > R(0) ? pow_real_base(x, w) : exp(w * log(Cx<R>(x)));
}

template <class R>
inline Cx<R> sin(const Cx<R>& z) {
  using std::cos;
  using std::cosh;
  using std::sin;
  using std::sinh;
  return Cx<R>(sin(z.re) * cosh(z.im), cos(z.re) * sinh(z.im));
}
template <class R>
inline Cx<R> cos(const Cx<R>& z) {
  using std::cos;
  using std::cosh;
  using std::sin;
  using std::sinh;
  return Cx<R>(cos(z.re) * cosh(z.im), -sin(z.re) * sinh(z.im));
}
template <class R>
inline Cx<R> sinh(const Cx<R>& z) {
  using std::cos;
  using std::cosh;
  using std::sin;
  using std::sinh;
  return Cx<R>(sinh(z.re) * cos(z.im), cosh(z.re) * sin(z.im));
}
template <class R>
inline Cx<R> cosh(const Cx<R>& z) {
  using std::cos;
  using std::cosh;
  using std::sin;
  using std::sinh;
  return Cx<R>(cosh(z.re) * cos(z.im), sinh(z.re) * sin(z.im));
}

template <class R>
inline bool isfinite(const Cx<R>& z) {
  using std::isfinite;
  return isfinite(to_double(z.re)) && isfinite(to_double(z.im));
}

using Cxd = Cx<double>;

}  // namespace symsq
