// Panel-adaptive Gauss-Legendre quadrature with outward marching on infinite
// ranges. Serial evaluation order, so results are reproducible run to run.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "symsq/cx.hpp"
#include "symsq/precision.hpp"

namespace symsq::oscint {

template <class R>
struct QuadratureResult {
  Cx<R> value{};
  R abs_error_estimate{};
  std::int64_t evaluations = 0;
  bool converged = true;
};

// Budget exhaustion carries the partial result (double precision summary).
class QuadratureBudgetError : public BudgetError {
 public:
  QuadratureBudgetError(const std::string& what, double re, double im, double err,
                        std::int64_t evals)
      : BudgetError(what), value_re(re), value_im(im), abs_error(err), evaluations(evals) {}
  double value_re, value_im, abs_error;
  std::int64_t evaluations;
};

// Interval endpoints; infinite ends flagged explicitly.
template <class R>
struct Interval {
  R a{}, b{};
  bool a_finite = true, b_finite = true;
  static Interval finite(R a, R b) { return {std::move(a), std::move(b), true, true}; }
  static Interval right_infinite(R a) { return {std::move(a), R(0), true, false}; }
  static Interval left_infinite(R b) { return {R(0), std::move(b), false, true}; }
  static Interval whole_line() { return {R(0), R(0), false, false}; }
};

namespace detail {

// Gauss-Legendre nodes/weights on [-1,1] by Newton iteration, cached per precision.
template <class R>
inline const std::pair<std::vector<R>, std::vector<R>>& gl_rule(int n) {
  static thread_local std::map<std::pair<int, int>, std::pair<std::vector<R>, std::vector<R>>>
      cache;
  auto key = std::make_pair(working_digits<R>(), n);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  using std::cos;
  std::vector<R> x(n), w(n);
  const R one(1), two(2);
  for (int i = 0; i < n; ++i) {
    R xi = R(cos(pi_v<double>() * (4.0 * i + 3.0) / (4.0 * n + 2.0)));
    for (int iter = 0; iter < 200; ++iter) {
      // P_n(xi) and P'_n(xi) by recurrence
      R p0(1), p1 = xi;
      for (int k = 2; k <= n; ++k) {
        R p2 = (R(2 * k - 1) * xi * p1 - R(k - 1) * p0) / R(k);
        p0 = p1;
        p1 = p2;
      }
      R dp = R(n) * (xi * p1 - p0) / (xi * xi - one);
      R dx = p1 / dp;
      xi -= dx;
      if (dx < machine_eps<R>() * R(4) && dx > -machine_eps<R>() * R(4)) break;
    }
    R p0(1), p1 = xi;
    for (int k = 2; k <= n; ++k) {
      R p2 = (R(2 * k - 1) * xi * p1 - R(k - 1) * p0) / R(k);
      p0 = p1;
      p1 = p2;
    }
    R dp = R(n) * (xi * p1 - p0) / (xi * xi - one);
    x[i] = xi;
    w[i] = two / ((one - xi * xi) * dp * dp);
  }
  return cache.emplace(key, std::make_pair(std::move(x), std::move(w))).first->second;
}

template <class R>
struct PanelEval {
  Cx<R> value;
  R l1;  // integral of |f|, used as the cancellation-aware scale
};

template <class R, class F>
PanelEval<R> gl_panel(F&& f, const R& a, const R& b, int n, std::int64_t& evals) {
  const auto& [x, w] = gl_rule<R>(n);
  const R half = (b - a) / R(2), mid = (a + b) / R(2);
  Cx<R> acc(R(0));
  R l1(0);
  for (int i = 0; i < n; ++i) {
    Cx<R> fx = f(mid + half * x[i]);
    acc += w[i] * fx;
    l1 += w[i] * abs(fx);
  }
  ++evals;  // counted per panel pass below
  evals += n - 1;
  return {acc * half, l1 * half};
}

template <class R, class F>
void adaptive_rec(F&& f, const R& a, const R& b, const R& tol_abs, int depth,
                  QuadratureResult<R>& out, R& l1, std::int64_t max_evals) {
  auto coarse = gl_panel(f, a, b, 15, out.evaluations);
  auto fine = gl_panel(f, a, b, 31, out.evaluations);
  R diff = abs(fine.value - coarse.value);
  // roundoff floor: the two rules cannot agree better than eps * |f| mass
  R floor = machine_eps<R>() * fine.l1 * R(48);
  if (diff <= tol_abs || diff <= floor || depth >= 36) {
    out.value += fine.value;
    out.abs_error_estimate += diff;
    l1 += fine.l1;
    if (depth >= 36 && diff > tol_abs && diff > floor * R(8)) out.converged = false;
    return;
  }
  if (out.evaluations > max_evals) {
    out.value += fine.value;
    out.abs_error_estimate += diff;
    l1 += fine.l1;
    out.converged = false;
    return;
  }
  R mid = (a + b) / R(2);
  adaptive_rec(f, a, mid, tol_abs / R(2), depth + 1, out, l1, max_evals);
  adaptive_rec(f, mid, b, tol_abs / R(2), depth + 1, out, l1, max_evals);
}

}  // namespace detail

// Smooth integrand, decaying toward any infinite endpoint.
// |value - true| <= max(tol * |value|, tol * L1-mass) with the estimate reported.
template <class R, class F>
QuadratureResult<R> integrate_decaying(F&& f, const Interval<R>& iv, const R& tol,
                                       std::int64_t max_evals = 4'000'000) {
  QuadratureResult<R> out;
  R l1(0);

  auto run_finite = [&](const R& a, const R& b) {
    // bootstrap absolute target from a coarse pass
    auto probe = detail::gl_panel(f, a, b, 15, out.evaluations);
    R scale = probe.l1;
    R tol_abs = tol * (scale + R(1) / R(1'000'000)) / R(4);
    detail::adaptive_rec(f, a, b, tol_abs, 0, out, l1, max_evals);
  };

  auto march = [&](const R& start, int dir) {
    // growing panels until two consecutive ones are negligible
    R w(1), x0 = start;
    int quiet = 0;
    // seed the absolute target from the first panel's mass
    auto probe = detail::gl_panel(f, dir > 0 ? start : start - R(1),
                                  dir > 0 ? start + R(1) : start, 15, out.evaluations);
    R seed = probe.l1;
    for (int k = 0; k < 300; ++k) {
      R x1 = x0 + R(dir) * w;
      QuadratureResult<R> piece;
      R piece_l1(0);
      R tol_abs = tol * (l1 + seed + R(1) / R(1'000'000'000)) / R(16);
      if (dir > 0)
        detail::adaptive_rec(f, x0, x1, tol_abs, 0, piece, piece_l1, max_evals);
      else
        detail::adaptive_rec(f, x1, x0, tol_abs, 0, piece, piece_l1, max_evals);
      out.value += piece.value;
      out.abs_error_estimate += piece.abs_error_estimate;
      out.evaluations = piece.evaluations + out.evaluations;
      if (!piece.converged) out.converged = false;
      l1 += piece_l1;
      if (piece_l1 <= tol * l1 / R(100))
        ++quiet;
      else
        quiet = 0;
      if (quiet >= 2) return;
      x0 = x1;
      if (w < R(1 << 20)) w *= R(2);
      if (out.evaluations > max_evals) {
        out.converged = false;
        return;
      }
    }
    out.converged = false;
  };

  if (iv.a_finite && iv.b_finite) {
    run_finite(iv.a, iv.b);
  } else if (iv.a_finite && !iv.b_finite) {
    march(iv.a, +1);
  } else if (!iv.a_finite && iv.b_finite) {
    march(iv.b, -1);
  } else {
    march(R(0), +1);
    march(R(0), -1);
  }

  if (!out.converged)
    throw QuadratureBudgetError("integrate_decaying: node budget exhausted",
                                to_double(out.value.re), to_double(out.value.im),
                                to_double(out.abs_error_estimate), out.evaluations);
  return out;
}

// Oscillatory integrand g(x) * exp(i * omega * phase(x)). Splits at supplied
// stationary points, then pre-partitions each piece into ~sqrt(omega) panels
// before the adaptive pass.
template <class R, class G, class P>
QuadratureResult<R> integrate_oscillatory(G&& g, P&& phase, const R& omega, const Interval<R>& iv,
                                          const R& tol, std::vector<R> stationary_points = {},
                                          std::int64_t max_evals = 8'000'000) {
  if (!(omega > R(0))) throw DomainError("integrate_oscillatory: omega must be positive");
  auto f = [&](const R& x) -> Cx<R> {
    R ph = omega * phase(x);
    using std::cos;
    using std::sin;
    return g(x) * Cx<R>(cos(ph), sin(ph));
  };
  if (!iv.a_finite || !iv.b_finite) return integrate_decaying(f, iv, tol, max_evals);

  std::vector<R> cuts{iv.a, iv.b};
  for (const auto& s : stationary_points)
    if (s > iv.a && s < iv.b) cuts.push_back(s);
  std::sort(cuts.begin(), cuts.end());

  int pre = std::max(1, std::min(512, static_cast<int>(std::sqrt(to_double(omega)))));
  QuadratureResult<R> out;
  R l1(0);
  // probe for scale
  auto probe = detail::gl_panel(f, iv.a, iv.b, 15, out.evaluations);
  R tol_abs = tol * (probe.l1 + R(1) / R(1'000'000)) / R(4 * pre);
  for (size_t c = 0; c + 1 < cuts.size(); ++c) {
    R lo = cuts[c], hi = cuts[c + 1];
    for (int j = 0; j < pre; ++j) {
      R a = lo + (hi - lo) * R(j) / R(pre);
      R b = lo + (hi - lo) * R(j + 1) / R(pre);
      detail::adaptive_rec(f, a, b, tol_abs, 0, out, l1, max_evals);
    }
  }
  if (!out.converged)
    throw QuadratureBudgetError("integrate_oscillatory: node budget exhausted",
                                to_double(out.value.re), to_double(out.value.im),
                                to_double(out.abs_error_estimate), out.evaluations);
  return out;
}

// (1/(2 pi i)) Integral over Re z = a of f(z) dz; the integrand must decay
// along the line (Gaussian-type envelopes in practice).
template <class R, class F>
QuadratureResult<R> integrate_vertical_line(F&& f, const R& a, const R& tol,
                                            std::int64_t max_evals = 4'000'000) {
  auto g = [&](const R& v) -> Cx<R> { return f(Cx<R>(a, v)); };
  auto res = integrate_decaying(g, Interval<R>::whole_line(), tol, max_evals);
  R inv_2pi = R(1) / (R(2) * pi_v<R>());
  res.value *= inv_2pi;
  res.abs_error_estimate *= inv_2pi;
  return res;
}

}  // namespace symsq::oscint
