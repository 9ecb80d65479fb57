// Real-argument Airy Ai: Maclaurin series with precision escalation for the
// cancellation on the negative axis, classical asymptotic expansions beyond.
#pragma once

#include <cmath>

#include "symsq/cx.hpp"
#include "symsq/precision.hpp"
#include "symsq/specfun/gamma.hpp"

namespace symsq::specfun {

namespace detail {

// u_k = Gamma(3k+1/2) / (54^k k! Gamma(k+1/2))
template <class R>
R airy_u(int k) {
  R num = gamma(Cx<R>(R(3 * k) + R(1) / R(2))).re;
  R den = gamma(Cx<R>(R(k) + R(1) / R(2))).re;
  R p(1);
  for (int j = 1; j <= k; ++j) p *= R(54) * R(j);
  return num / (p * den);
}

template <class R>
R airy_series_at(const R& x) {
  using std::log;
  // Ai(x) = c1 f(x) - c2 g(x)
  R third = R(1) / R(3);
  R c1 = R(1) / (pow(R(3), R(2) / R(3)) * gamma(Cx<R>(R(2) / R(3))).re);
  R c2 = R(1) / (pow(R(3), third) * gamma(Cx<R>(third)).re);
  R f(1), g = x, tf(1), tg = x;
  const R eps = machine_eps<R>();
  for (int k = 1; k < 100000; ++k) {
    tf *= x * x * x / (R(3 * k) * R(3 * k - 1));
    tg *= x * x * x / (R(3 * k) * R(3 * k + 1));
    f += tf;
    g += tg;
    R m = tf < R(0) ? -tf : tf;
    R fa = f < R(0) ? -f : f;
    if (k > 3 && m < eps * (fa + R(1))) break;
  }
  return c1 * f - c2 * g;
}

}  // namespace detail

template <class R>
R airy_ai(const R& x, const PrecisionContext& ctx = {}) {
  using std::cos;
  using std::exp;
  using std::fabs;
  using std::log;
  using std::pow;
  using std::sin;
  using std::sqrt;
  const int wd = working_digits<R>();
  const double xd = to_double(x);
  // asymptotics become admissible once e^(-2 xi) underflows the target
  const double x_switch = std::pow(0.75 * (wd + 4) * std::log(10.0), 2.0 / 3.0);

  if (std::fabs(xd) <= x_switch) {
    // cancellation on the negative side ~ exp((2/3)|x|^(3/2))
    double lost = std::max(0.0, 0.6667 * std::pow(std::fabs(xd), 1.5) / std::log(10.0));
    double need = -std::log10(ctx.target_rel_error) + 2;
    if (wd - lost >= need) return detail::airy_series_at(x);
    int digits = static_cast<int>(need + lost) + 8;
    ScopedPrecision prec(digits);
    BigFloat xb(to_double(x));
    if constexpr (is_bigfloat_v<R>) {
      xb = BigFloat(x);
      xb.precision(digits);
    }
    BigFloat v = detail::airy_series_at(xb);
    if constexpr (is_bigfloat_v<R>) {
      R out(v);
      out.precision(wd);
      return out;
    } else {
      return to_double(v);
    }
  }

  const int kmax = std::max(6, wd);
  if (xd > 0) {
    R xi = R(2) / R(3) * sqrt(x) * x;
    R acc(0), prev(1e308);
    R xik(1), sign(1);
    for (int k = 0; k <= kmax; ++k) {
      R term = sign * detail::airy_u<R>(k) / xik;
      R tm = term < R(0) ? -term : term;
      if (k > 2 && tm > prev) break;  // asymptotic series turned
      acc += term;
      prev = tm;
      xik *= xi;
      sign = -sign;
    }
    return exp(-xi) / (R(2) * sqrt(pi_v<R>()) * pow(x, R(1) / R(4))) * acc;
  }
  // negative axis: oscillatory form
  R ax = -x;
  R xi = R(2) / R(3) * sqrt(ax) * ax;
  R c(0), s(0), prev(1e308);
  R xik(1);
  for (int k = 0; 2 * k + 1 <= kmax; ++k) {
    R sign = (k % 2 == 0) ? R(1) : R(-1);
    R u2k = detail::airy_u<R>(2 * k);
    R term_c = sign * u2k / xik;
    xik *= xi;
    R u2k1 = detail::airy_u<R>(2 * k + 1);
    R term_s = sign * u2k1 / xik;
    xik *= xi;
    R tm = term_c < R(0) ? -term_c : term_c;
    if (k > 1 && tm > prev) break;
    c += term_c;
    s += term_s;
    prev = tm;
  }
  R ph = xi - pi_v<R>() / R(4);
  return (cos(ph) * c + sin(ph) * s) / (sqrt(pi_v<R>()) * pow(ax, R(1) / R(4)));
}

}  // namespace symsq::specfun
