// Large-r main terms for the two hypergeometric families appearing in the
// r-integrals: the oscillatory regime (argument away from 1) and the
// Airy/turning-point regime for F2(r, alpha, y) near y = 1 - alpha^2.
#pragma once

#include <cmath>

#include "symsq/cx.hpp"
#include "symsq/precision.hpp"
#include "symsq/specfun/airy.hpp"
#include "symsq/specfun/hyp2f1.hpp"

namespace symsq::specfun {

// Large spectral parameter r with ratio alpha = t/r in (0,1).
template <class R>
struct OscParams {
  R r;
  R alpha;
  R t;  // = alpha * r

  OscParams(R r_, R alpha_) : r(std::move(r_)), alpha(std::move(alpha_)), t(r * alpha) {
    if (!(r > R(0))) throw DomainError("OscParams: r must be positive");
    if (!(alpha > R(0)) || !(alpha < R(1))) throw DomainError("OscParams: alpha in (0,1)");
  }

  bool regime_ok() const { return to_double(alpha * r) >= 10.0; }
};

template <class T>
struct Asympt {
  T value;
  bool regime_ok = true;
};

// F2(r, alpha, x) = Gamma(1/4-it+ir) Gamma(1/4-it-ir) / Gamma(1/2)
//                   * 2F1(1/4-it+ir, 1/4-it-ir, 1/2; x)
template <class R>
Cx<R> f2_eval(const OscParams<R>& p, const R& x, const PrecisionContext& ctx = {}) {
  if (!(x >= R(0)) || !(x < R(1))) throw DomainError("f2_eval: requires 0 <= x < 1");
  R quarter = R(1) / R(4);
  Cx<R> a(quarter, p.r - p.t);
  Cx<R> b(quarter, -p.r - p.t);
  Cx<R> pref = gamma(a, ctx) * gamma(b, ctx) / gamma(Cx<R>(R(1) / R(2)), ctx);
  if (x == R(0)) return pref;
  return pref * gauss_2f1(a, b, Cx<R>(R(1) / R(2)), x, ctx);
}

// Oscillatory main term of 2F1(1/4+ir(1-alpha), 3/4+ir(1-alpha), 1+2ir; z),
// 0 < z < 1. Correction coefficients beyond the main term are opaque; the
// truncation is the main term for every admissible n_terms.
template <class R>
Asympt<Cx<R>> asympt_2f1_osc(const OscParams<R>& p, const R& z, int n_terms = 1) {
  using std::log;
  using std::sqrt;
  if (!(z > R(0)) || !(z < R(1))) throw DomainError("asympt_2f1_osc: requires 0 < z < 1");
  if (n_terms < 1) throw DomainError("asympt_2f1_osc: n_terms >= 1");
  R s = sqrt(R(1) - (R(1) - p.alpha * p.alpha) * z);
  R l1 = log(R(2)) - p.alpha * log(R(1) + p.alpha) - log(R(1) + s) +
         p.alpha * log(p.alpha + s);
  Cx<R> phase = exp(Cx<R>(R(0), R(2) * p.r * l1));
  R amp = R(1) / sqrt(s);  // (1-(1-a^2)z)^(-1/4)
  Asympt<Cx<R>> out{phase * amp, p.regime_ok()};
  return out;
}

enum class TurningRegime { below, near, above };

template <class R>
struct TurningPointData {
  R y;
  R zeta_hat;
  R a0;  // below the turning point
  R a1;  // above the turning point
  TurningRegime regime;
};

// zeta_hat(y) with the decay/oscillation actions a0, a1; switches to the
// leading Taylor forms inside a precision-scaled window around y = 1-alpha^2
// where the closed forms lose all their digits to cancellation.
template <class R>
TurningPointData<R> turning_point_data(const OscParams<R>& p, const R& y) {
  using std::atan;
  using std::fabs;
  using std::log;
  using std::pow;
  using std::sqrt;
  if (!(y > R(0)) || !(y < R(1))) throw DomainError("turning_point_data: requires 0 < y < 1");
  const R a = p.alpha;
  const R a2 = a * a;
  const R tp = R(1) - a2;
  const R delta = y - tp;
  TurningPointData<R> out;
  out.y = y;
  out.a0 = R(0);
  out.a1 = R(0);

  const double eps = to_double(machine_eps<R>());
  const double rel = std::fabs(to_double(delta / a2));
  const double near_window = std::pow(eps, 0.4);

  auto cbrt_pow23 = [](const R& v) { return pow(v, R(2) / R(3)); };

  if (rel < near_window) {
    out.regime = TurningRegime::near;
    // zeta_hat ~ delta * (2 a^3 sqrt(1-a^2))^(-2/3) on both sides
    R slope = pow(R(2) * a * a2 * sqrt(tp), -R(2) / R(3));
    out.zeta_hat = delta * slope;
    if (delta < R(0))
      out.a0 = tp * pow(-delta, R(3) / R(2)) / (R(3) * a2 * pow(y, R(3) / R(2)));
    else if (delta > R(0))
      out.a1 = pow(delta, R(3) / R(2)) / (R(3) * a2 * sqrt(tp));
    return out;
  }

  if (delta < R(0)) {
    out.regime = TurningRegime::below;
    R root = sqrt(-delta);  // sqrt(1 - a^2 - y)
    R sy = sqrt(y);
    out.a0 = pi_v<R>() * (R(1) - a) / R(2) - atan(sy / root) + a * atan(a * sy / root);
    out.zeta_hat = -cbrt_pow23(R(3) * out.a0 / (R(2) * a));
  } else {
    out.regime = TurningRegime::above;
    R root = sqrt(delta);  // sqrt(y - 1 + a^2)
    R sy = sqrt(y);
    out.a1 = a * log(a * sy + root) - log(sy + root) - a / R(2) * log(R(1) - y) +
             (R(1) - a) / R(2) * log(tp);
    out.zeta_hat = cbrt_pow23(R(3) * out.a1 / (R(2) * a));
  }
  return out;
}

// Airy-type main term for F2(r, alpha, y) around the turning point, with the
// cosine and pure-decay regimes emerging from the Airy asymptotics.
template <class R>
Asympt<Cx<R>> asympt_f2_airy(const OscParams<R>& p, const R& y,
                             const PrecisionContext& ctx = {}) {
  using std::exp;
  using std::log;
  using std::pow;
  using std::sqrt;
  if (!(y > R(0)) || !(y < R(1))) throw DomainError("asympt_f2_airy: requires 0 < y < 1");
  const R a = p.alpha;
  const R a2 = a * a;
  auto tp = turning_point_data(p, y);

  // l2 = alpha log(1-y) - 2 alpha log r + (1-alpha)log(1-alpha) - (1+alpha)log(1+alpha) + 2 alpha
  R l2 = a * log(R(1) - y) - R(2) * a * log(p.r) + (R(1) - a) * log(R(1) - a) -
         (R(1) + a) * log(R(1) + a) + R(2) * a;

  R denom = y - R(1) + a2;
  R ratio;
  if (tp.regime == TurningRegime::near)
    ratio = pow(R(2) * a * a2 * sqrt(R(1) - a2), -R(2) / R(3));
  else
    ratio = tp.zeta_hat / denom;  // positive on both sides

  R two_ra = R(2) * p.r * a;
  R airy_arg = -pow(two_ra, R(2) / R(3)) * tp.zeta_hat;
  R ai = airy_ai(airy_arg, ctx);

  R amp = pow(R(2), R(3) / R(2)) * pi_v<R>() * exp(-pi_v<R>() * p.r * a) /
          pow(two_ra, R(1) / R(3)) * pow(a2 * ratio, R(1) / R(4)) * ai;
  Cx<R> val = exp(Cx<R>(R(0), p.r * l2)) * amp;
  return {val, p.regime_ok()};
}

}  // namespace symsq::specfun
