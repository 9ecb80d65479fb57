// Scalar layer: the library is generic over a real type `R`, instantiated
// with plain `double` or with the MPFR-backed `BigFloat` (runtime precision).
#pragma once

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/mpfr.hpp>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

namespace symsq {

using BigFloat = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                               boost::multiprecision::et_off>;

template <class R>
inline constexpr bool is_bigfloat_v = std::is_same_v<R, BigFloat>;

// Working decimal digits of the active instantiation.
template <class R>
inline int working_digits() {
  if constexpr (is_bigfloat_v<R>)
    return static_cast<int>(BigFloat::default_precision());
  else
    return std::numeric_limits<R>::digits10;
}

template <class R>
inline R machine_eps() {
  if constexpr (is_bigfloat_v<R>) {
    BigFloat e = 1;
    int bits = static_cast<int>(BigFloat::default_precision() * 3.3219280948873623) + 4;
    return ldexp(e, -bits + 1);
  } else {
    return std::numeric_limits<R>::epsilon();
  }
}

// RAII bump of the global BigFloat precision (no-op for double code paths).
class ScopedPrecision {
 public:
  explicit ScopedPrecision(int digits)
      : saved_(static_cast<int>(BigFloat::default_precision())) {
    if (digits > 0) BigFloat::default_precision(static_cast<unsigned>(digits));
  }
  ~ScopedPrecision() { BigFloat::default_precision(static_cast<unsigned>(saved_)); }
  ScopedPrecision(const ScopedPrecision&) = delete;
  ScopedPrecision& operator=(const ScopedPrecision&) = delete;

 private:
  int saved_;
};

template <class R>
inline R pi_v() {
  return boost::math::constants::pi<R>();
}

template <class R>
inline double to_double(const R& x) {
  if constexpr (is_bigfloat_v<R>)
    return x.template convert_to<double>();
  else
    return static_cast<double>(x);
}

template <class R>
inline R from_string(const std::string& s) {
  if constexpr (is_bigfloat_v<R>)
    return BigFloat(s);
  else
    return static_cast<R>(std::stod(s));
}

// log|Gamma|-free overflow guard: largest safe exponent for exp().
template <class R>
inline R max_exp_arg() {
  if constexpr (is_bigfloat_v<R>)
    return R(1e9);
  else
    return R(700);
}

inline double sqr(double x) { return x * x; }
template <class R>
inline R sqr(const R& x) {
  return x * x;
}

}  // namespace symsq
