#pragma once

#include <cmath>
#include <map>
#include <vector>

#include "symsq/numeric.hpp"

namespace symsq::specfun {

// B_2, B_4, ..., B_2K through the tangent-number triangle (Knuth/Buckholtz).
// The triangle only adds positive integers, so it is computed exactly at a
// temporarily boosted precision and rounded to the working one.
template <class R>
inline std::vector<R> bernoulli_even(int K) {
  static thread_local std::map<int, std::vector<R>> cache_by_digits;
  const int wd = working_digits<R>();
  auto& cached = cache_by_digits[wd];
  if (static_cast<int>(cached.size()) >= K) return cached;

  // digits of T_K ~ 2^(2K+1) (2K-1)! / pi^(2K)
  double digits_needed = 0.30103 * (2.0 * K + 1) + std::lgamma(2.0 * K) / std::log(10.0) -
                         2.0 * K * 0.4971498726941338 + 15;
  std::vector<R> result;
  {
    ScopedPrecision boost_prec(is_bigfloat_v<R> ? std::max<int>(wd, (int)digits_needed + 10) : 0);
    std::vector<R> t(static_cast<size_t>(K) + 1, R(0));
    t[1] = R(1);
    for (int k = 2; k <= K; ++k) t[k] = R(k - 1) * t[k - 1];
    for (int k = 2; k <= K; ++k)
      for (int j = k; j <= K; ++j) t[j] = R(j - k) * t[j - 1] + R(j - k + 2) * t[j];
    result.resize(K);
    R four_k = R(1);
    for (int k = 1; k <= K; ++k) {
      four_k *= R(4);
      R b = R(2 * k) * t[k] / (four_k * (four_k - R(1)));
      result[k - 1] = (k % 2 == 1) ? b : -b;  // B_2 > 0, B_4 < 0, ...
    }
  }
  if constexpr (is_bigfloat_v<R>) {
    for (auto& b : result) b.precision(wd);  // round down to working precision
  }
  cached = result;
  return cached;
}

}  // namespace symsq::specfun
