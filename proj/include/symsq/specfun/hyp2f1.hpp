// Gauss hypergeometric function for complex parameters and real argument
// z < 1: direct series on [0, 1/2), connection to 1-z on [1/2, 1), Pfaff map
// for z < 0. Series cancellation is measured and the evaluation retried at
// boosted precision when the working type cannot absorb it.
#pragma once

#include <cmath>

#include "symsq/cx.hpp"
#include "symsq/precision.hpp"
#include "symsq/specfun/gamma.hpp"

namespace symsq::specfun {

namespace detail {

template <class R>
struct SeriesOutcome {
  Cx<R> sum;
  double lost_digits;  // log10(max |term| / |sum|)
  bool converged;
};

template <class R>
SeriesOutcome<R> hyp2f1_raw_series(const Cx<R>& a, const Cx<R>& b, const Cx<R>& c, const R& z,
                                   double tol) {
  using std::fabs;
  using std::log10;
  Cx<R> term(R(1)), sum(R(1));
  R max_mag(1);
  const double az = std::fabs(to_double(z));
  const double ratio_bound = az + (1.0 - az) / 4.0;
  const R eps = machine_eps<R>();
  long k = 0;
  for (; k < 2'000'000; ++k) {
    Cx<R> factor = (a + Cx<R>(R(k))) * (b + Cx<R>(R(k))) /
                   ((c + Cx<R>(R(k))) * Cx<R>(R(k + 1)));
    term *= factor * z;
    sum += term;
    R tm = abs(term);
    if (tm > max_mag) max_mag = tm;
    // geometric-tail-aware stop once the term ratio has settled below 1
    double fr = to_double(abs(factor)) * az;
    if (fr < 1.0 && to_double(tm) * ratio_bound / (1.0 - ratio_bound) <
                        std::max(tol, to_double(eps)) * std::max(to_double(abs(sum)), 1e-300))
      break;
  }
  SeriesOutcome<R> out;
  out.sum = sum;
  R s = abs(sum);
  out.lost_digits = (s > R(0)) ? std::max(0.0, to_double(log(max_mag / s)) / std::log(10.0))
                               : working_digits<R>() * 1.0;
  out.converged = k < 2'000'000;
  return out;
}

// Series with automatic precision escalation; result rounded back to R.
template <class R>
Cx<R> hyp2f1_series(const Cx<R>& a, const Cx<R>& b, const Cx<R>& c, const R& z,
                    const PrecisionContext& ctx) {
  auto first = hyp2f1_raw_series(a, b, c, z, ctx.target_rel_error);
  if (!first.converged) throw BudgetError("hyp2f1: series did not converge");
  double have = working_digits<R>() - first.lost_digits;
  double need = -std::log10(ctx.target_rel_error) + 2;
  if (have >= need) return first.sum;

  // escalate: redo in BigFloat with headroom for the observed cancellation
  int digits = static_cast<int>(need + first.lost_digits) + 8;
  ScopedPrecision prec(digits);
  Cx<BigFloat> A(BigFloat(to_double(a.re)), BigFloat(to_double(a.im)));
  Cx<BigFloat> B(BigFloat(to_double(b.re)), BigFloat(to_double(b.im)));
  Cx<BigFloat> C(BigFloat(to_double(c.re)), BigFloat(to_double(c.im)));
  BigFloat Z(to_double(z));
  if constexpr (is_bigfloat_v<R>) {
    // keep full input precision on the retry
    A = Cx<BigFloat>(BigFloat(a.re), BigFloat(a.im));
    B = Cx<BigFloat>(BigFloat(b.re), BigFloat(b.im));
    C = Cx<BigFloat>(BigFloat(c.re), BigFloat(c.im));
    Z = BigFloat(z);
    A.re.precision(digits), A.im.precision(digits);
    B.re.precision(digits), B.im.precision(digits);
    C.re.precision(digits), C.im.precision(digits);
    Z.precision(digits);
  }
  auto second = hyp2f1_raw_series(A, B, C, Z, ctx.target_rel_error);
  if (!second.converged) throw BudgetError("hyp2f1: escalated series did not converge");
  if (working_digits<BigFloat>() - second.lost_digits < need - 1)
    throw BudgetError("hyp2f1: cancellation exceeded escalation headroom");
  if constexpr (is_bigfloat_v<R>) {
    Cx<R> out(R(second.sum.re), R(second.sum.im));
    out.re.precision(working_digits<R>());
    out.im.precision(working_digits<R>());
    return out;
  } else {
    return Cx<R>(to_double(second.sum.re), to_double(second.sum.im));
  }
}

template <class R>
bool is_near_integer(const Cx<R>& w, long& n) {
  using std::floor;
  double re = to_double(w.re), im = to_double(w.im);
  double r = std::floor(re + 0.5);
  n = static_cast<long>(r);
  return std::fabs(im) < 1e-12 && std::fabs(re - r) < 1e-12;
}

// Degenerate connection c - a - b = m (integer >= 0), 1/2 <= z < 1.
template <class R>
Cx<R> hyp2f1_degenerate(const Cx<R>& a, const Cx<R>& b, long m, const R& z,
                        const PrecisionContext& ctx) {
  using std::log;
  const Cx<R> c = a + b + Cx<R>(R(static_cast<int>(m)));
  const R w = R(1) - z;
  const R logw = log(w);
  const R eps = machine_eps<R>();
  Cx<R> total(R(0));

  if (m > 0) {
    // finite part: Gamma(m) Gamma(c) / (Gamma(a+m) Gamma(b+m)) * sum_{k<m}
    Cx<R> pref = gamma(Cx<R>(R(static_cast<int>(m))), ctx) * gamma(c, ctx) /
                 (gamma(a + Cx<R>(R(static_cast<int>(m))), ctx) *
                  gamma(b + Cx<R>(R(static_cast<int>(m))), ctx));
    Cx<R> term(R(1));
    Cx<R> fin(R(0));
    for (long k = 0; k < m; ++k) {
      fin += term;
      term *= (a + Cx<R>(R(k))) * (b + Cx<R>(R(k))) /
              (Cx<R>(R(k + 1)) * Cx<R>(R(1 - static_cast<int>(m) + k))) * w;
    }
    total += pref * fin;
  }
  // log part: -(-w)^m Gamma(c)/(Gamma(a)Gamma(b)) sum_k ...
  Cx<R> pref2 = gamma(c, ctx) / (gamma(a, ctx) * gamma(b, ctx));
  Cx<R> am = a + Cx<R>(R(static_cast<int>(m)));
  Cx<R> bm = b + Cx<R>(R(static_cast<int>(m)));
  Cx<R> term(R(1));
  // k! (k+m)! normalization at k=0 is 1/m!
  for (long j = 2; j <= m; ++j) term /= R(static_cast<long>(j));
  Cx<R> acc(R(0));
  Cx<R> psi_k1 = digamma(Cx<R>(R(1)));
  Cx<R> psi_km1 = digamma(Cx<R>(R(static_cast<int>(m) + 1)));
  Cx<R> psi_a = digamma(am);
  Cx<R> psi_b = digamma(bm);
  for (long k = 0; k < 100000; ++k) {
    Cx<R> bracket = Cx<R>(logw) - psi_k1 - psi_km1 + psi_a + psi_b;
    Cx<R> piece = term * bracket;
    acc += piece;
    if (k > 2 && abs(piece) < eps * abs(acc)) break;
    term *= (am + Cx<R>(R(k))) * (bm + Cx<R>(R(k))) /
            (Cx<R>(R(k + 1)) * Cx<R>(R(static_cast<int>(m) + static_cast<long>(k) + 1))) * w;
    psi_k1 += Cx<R>(R(1)) / Cx<R>(R(k + 1));
    psi_km1 += Cx<R>(R(1)) / Cx<R>(R(static_cast<int>(m) + static_cast<long>(k) + 1));
    psi_a += Cx<R>(R(1)) / (am + Cx<R>(R(k)));
    psi_b += Cx<R>(R(1)) / (bm + Cx<R>(R(k)));
  }
  R wm(1);
  for (long j = 0; j < m; ++j) wm *= w;
  R sign = (m % 2 == 0) ? R(1) : R(-1);
  total -= sign * wm * pref2 * acc;
  return total;
}

}  // namespace detail

// 2F1(a, b; c; z) for real z < 1.
template <class R>
Cx<R> gauss_2f1(const Cx<R>& a, const Cx<R>& b, const Cx<R>& c, const R& z,
                const PrecisionContext& ctx = {}) {
  long n = 0;
  if (detail::is_near_integer(c, n) && n <= 0)
    throw PoleError("gauss_2f1: c is a nonpositive integer");
  if (!(z < R(1))) throw DomainError("gauss_2f1: requires real z < 1");

  if (z < R(0)) {
    // Pfaff: (1-z)^(-a) 2F1(a, c-b; c; z/(z-1)), mapped argument in (0,1)
    R zz = z / (z - R(1));
    Cx<R> pref = pow_real_base(R(1) - z, -a);
    return pref * gauss_2f1(a, c - b, c, zz, ctx);
  }
  if (z < R(1) / R(2)) return detail::hyp2f1_series(a, b, c, z, ctx);

  // connection to argument 1-z
  Cx<R> cab = c - a - b;
  long m = 0;
  if (detail::is_near_integer(cab, m)) {
    if (m >= 0) return detail::hyp2f1_degenerate(a, b, m, z, ctx);
    // Euler transform flips the sign of m
    Cx<R> v = detail::hyp2f1_degenerate(c - a, c - b, -m, z, ctx);
    return pow_real_base(R(1) - z, cab) * v;
  }
  R w = R(1) - z;
  Cx<R> t1 = gamma(c, ctx) * gamma(cab, ctx) / (gamma(c - a, ctx) * gamma(c - b, ctx)) *
             detail::hyp2f1_series(a, b, Cx<R>(R(1)) - cab, w, ctx);
  Cx<R> t2 = pow_real_base(w, cab) * gamma(c, ctx) * gamma(-cab, ctx) /
             (gamma(a, ctx) * gamma(b, ctx)) *
             detail::hyp2f1_series(c - a, c - b, Cx<R>(R(1)) + cab, w, ctx);
  return t1 + t2;
}

}  // namespace symsq::specfun
