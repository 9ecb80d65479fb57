#pragma once

#include <cmath>

#include "symsq/cx.hpp"
#include "symsq/precision.hpp"
#include "symsq/specfun/bernoulli.hpp"

namespace symsq::specfun {

namespace detail {

// Euler-Maclaurin tail starting at N+a: (N+a)^(1-s)/(s-1) + (N+a)^(-s)/2 + corrections.
template <class R>
Cx<R> em_tail(const Cx<R>& s, const R& base, int max_bern) {
  using std::log;
  const auto bern = bernoulli_even<R>(max_bern);
  R logb = log(base);
  Cx<R> binv_s = exp(-s * logb);  // base^-s
  Cx<R> res = binv_s * base / (s - Cx<R>(R(1))) + binv_s / R(2);
  // sum_k B_2k/(2k)! * s(s+1)...(s+2k-2) * base^(-s-2k+1)
  Cx<R> poch = s;                       // rising factorial, 1 factor so far
  Cx<R> bpow = binv_s / base;           // base^(-s-2k+1) at k=1
  R fact = R(2);                        // (2k)!
  const R tol = machine_eps<R>();
  R prev_mag = R(0);
  for (size_t k = 1; k <= bern.size(); ++k) {
    Cx<R> term = Cx<R>(bern[k - 1] / fact) * poch * bpow;
    res += term;
    R mag = abs(term);
    if (mag < tol * abs(res)) return res;
    if (k > 3 && prev_mag != R(0) && mag > prev_mag)
      throw BudgetError("euler-maclaurin: divergent correction series (N too small)");
    prev_mag = mag;
    poch *= (s + Cx<R>(R(2 * k - 1))) * (s + Cx<R>(R(2 * k)));
    bpow /= base * base;
    fact *= R(2 * k + 1) * R(2 * k + 2);
  }
  return res;
}

}  // namespace detail

// Riemann zeta on C \ {1} by Euler-Maclaurin, good for moderate |Im s|.
template <class R>
Cx<R> zeta(const Cx<R>& s, const PrecisionContext& ctx = {}) {
  (void)ctx;
  using std::fabs;
  if (fabs(to_double(s.re) - 1.0) < 1e-14 && fabs(to_double(s.im)) < 1e-14)
    throw PoleError("zeta: pole at s = 1");
  const int wd = working_digits<R>();
  int N = std::max({12, static_cast<int>(0.6 * wd) + 4,
                    static_cast<int>(0.7 * std::fabs(to_double(s.im)))});
  const int max_bern = std::max(10, static_cast<int>(0.8 * wd) + 8);
  for (int attempt = 0; attempt < 5; ++attempt) {
    try {
      Cx<R> head(R(0));
      using std::log;
      for (int n = 1; n < N; ++n) head += exp(-s * log(R(n)));
      return head + detail::em_tail(s, R(N), max_bern);
    } catch (const BudgetError&) {
      N *= 2;
    }
  }
  throw BudgetError("zeta: Euler-Maclaurin failed to converge");
}

template <class R>
Cx<R> zeta(const R& x, const PrecisionContext& ctx = {}) {
  return zeta(Cx<R>(x), ctx);
}

// Hurwitz zeta(s, a) for a > 0, same scheme with shifted base.
template <class R>
Cx<R> hurwitz_zeta(const Cx<R>& s, const R& a, const PrecisionContext& ctx = {}) {
  (void)ctx;
  if (!(a > R(0))) throw DomainError("hurwitz_zeta: a must be positive");
  using std::fabs;
  if (fabs(to_double(s.re) - 1.0) < 1e-14 && fabs(to_double(s.im)) < 1e-14)
    throw PoleError("hurwitz_zeta: pole at s = 1");
  const int wd = working_digits<R>();
  int N = std::max({12, static_cast<int>(0.6 * wd) + 4,
                    static_cast<int>(0.7 * std::fabs(to_double(s.im)))});
  const int max_bern = std::max(10, static_cast<int>(0.8 * wd) + 8);
  for (int attempt = 0; attempt < 5; ++attempt) {
    try {
      Cx<R> head(R(0));
      using std::log;
      for (int n = 0; n < N; ++n) head += exp(-s * log(R(n) + a));
      return head + detail::em_tail(s, R(N) + a, max_bern);
    } catch (const BudgetError&) {
      N *= 2;
    }
  }
  throw BudgetError("hurwitz_zeta: Euler-Maclaurin failed to converge");
}

}  // namespace symsq::specfun
