#pragma once

// Adaptive Gauss-Legendre integration on finite and semi-infinite intervals
// with algebraic endpoint singularities.

#include <algorithm>
#include <array>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <cstdio>
#include <limits>
#include <numbers>
#include <string>
#include <type_traits>
#include <vector>

#include "frabessel/errors.hpp"
#include "frabessel/eval_result.hpp"

namespace frabessel {

// Integrand behaves like (x-a)^left near a and (b-x)^right near b.
template <std::floating_point Scalar>
struct EndpointExponents {
  Scalar left{0};
  Scalar right{0};
};

// Distances of an abscissa from the two ends of the original interval,
// computed without cancellation. Integrands that accept a second argument of
// this type receive them.
template <std::floating_point Scalar>
struct Offsets {
  Scalar from_left;
  Scalar from_right;
};

template <std::floating_point Scalar>
struct IntegrationOptions {
  Scalar abs_tol{Scalar(1e-10)};
  Scalar rel_tol{0};
  std::size_t max_panels{std::size_t{1} << 14};
};

namespace detail {

inline constexpr int kPanelPoints = 10;

template <std::floating_point Scalar>
struct PanelRule {
  std::array<Scalar, kPanelPoints> nodes{};
  std::array<Scalar, kPanelPoints> weights{};
};

template <std::floating_point Scalar>
PanelRule<Scalar> make_panel_rule() {
  PanelRule<Scalar> rule;
  constexpr int n = kPanelPoints;
  for (int i = 0; i < n; ++i) {
    Scalar x = std::cos(std::numbers::pi_v<Scalar> * (Scalar(i) + Scalar(0.75)) /
                        (Scalar(n) + Scalar(0.5)));
    Scalar p0 = 1, p1 = x;
    for (int iter = 0; iter < 100; ++iter) {
      p0 = 1;
      p1 = x;
      for (int k = 2; k <= n; ++k) {
        const Scalar p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      const Scalar dp = n * (x * p1 - p0) / (x * x - 1);
      const Scalar dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) <= 2 * std::numeric_limits<Scalar>::epsilon()) break;
    }
    p0 = 1;
    p1 = x;
    for (int k = 2; k <= n; ++k) {
      const Scalar p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    const Scalar dp = n * (x * p1 - p0) / (x * x - 1);
    rule.nodes[i] = x;
    rule.weights[i] = 2 / ((1 - x * x) * dp * dp);
  }
  return rule;
}

template <std::floating_point Scalar>
const PanelRule<Scalar>& panel_rule() {
  static const PanelRule<Scalar> rule = make_panel_rule<Scalar>();
  return rule;
}

template <typename F, typename Scalar>
Scalar call_integrand(F& f, Scalar x, Offsets<Scalar> off) {
  if constexpr (std::is_invocable_v<F&, Scalar, Offsets<Scalar>>)
    return static_cast<Scalar>(f(x, off));
  else
    return static_cast<Scalar>(f(x));
}

template <std::floating_point Scalar>
std::string format_location(Scalar x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", static_cast<double>(x));
  return buf;
}

// Integrates g(segment, t) over t in [0,1] for every segment, refining the
// panel with the largest error estimate first. The estimate of a panel is the
// difference between its single-rule value and the sum over its two halves.
template <std::floating_point Scalar, typename G>
BasicEvalResult<Scalar> adaptive_unit(G& g, int segments, const IntegrationOptions<Scalar>& opts) {
  struct Panel {
    Scalar lo, hi, left, right, error;
    int seg;
  };
  const auto& rule = panel_rule<Scalar>();
  std::size_t evals = 0;

  auto rule_sum = [&](int seg, Scalar lo, Scalar hi) {
    const Scalar c = (lo + hi) / 2, h = (hi - lo) / 2;
    Scalar s = 0;
    for (int i = 0; i < kPanelPoints; ++i) s += rule.weights[i] * g(seg, c + h * rule.nodes[i]);
    evals += kPanelPoints;
    return s * h;
  };
  auto make = [&](int seg, Scalar lo, Scalar hi, Scalar coarse) {
    const Scalar mid = (lo + hi) / 2;
    const Scalar l = rule_sum(seg, lo, mid), r = rule_sum(seg, mid, hi);
    return Panel{lo, hi, l, r, std::abs(coarse - (l + r)), seg};
  };
  auto by_error = [](const Panel& a, const Panel& b) { return a.error < b.error; };

  std::vector<Panel> heap, frozen;
  Scalar total = 0, err = 0;
  for (int seg = 0; seg < segments; ++seg) {
    Panel p = make(seg, 0, 1, rule_sum(seg, 0, 1));
    total += p.left + p.right;
    err += p.error;
    heap.push_back(p);
  }
  std::make_heap(heap.begin(), heap.end(), by_error);
  auto target = [&] { return std::max(opts.abs_tol, opts.rel_tol * std::abs(total)); };

  std::size_t panels = heap.size();
  while (err > target() && !heap.empty()) {
    if (panels >= opts.max_panels)
      throw AccuracyError("adaptive integration: panel budget exhausted", double(total), double(err));
    std::pop_heap(heap.begin(), heap.end(), by_error);
    const Panel p = heap.back();
    heap.pop_back();
    const Scalar mid = (p.lo + p.hi) / 2;
    if (!(p.lo < mid && mid < p.hi) || p.hi - p.lo < 64 * std::numeric_limits<Scalar>::epsilon()) {
      frozen.push_back(p);
      continue;
    }
    const Panel a = make(p.seg, p.lo, mid, p.left);
    const Panel b = make(p.seg, mid, p.hi, p.right);
    total += (a.left + a.right + b.left + b.right) - (p.left + p.right);
    err += a.error + b.error - p.error;
    heap.push_back(a);
    std::push_heap(heap.begin(), heap.end(), by_error);
    heap.push_back(b);
    std::push_heap(heap.begin(), heap.end(), by_error);
    ++panels;
  }

  total = 0;
  err = 0;
  for (const auto* list : {&heap, &frozen})
    for (const Panel& p : *list) {
      total += p.left + p.right;
      err += p.error;
    }
  if (err > target())
    throw AccuracyError("adaptive integration: tolerance not reached", double(total), double(err));
  return {total, err, "adaptive_gauss_legendre", evals};
}

}  // namespace detail

/// Integral of f over [a, b]. An endpoint with a negative exponent e is
/// handled by the substitution x - a = h t^{1/(1+e)}, which leaves a bounded
/// integrand. The estimated error is at most max(abs_tol, rel_tol |value|).
template <std::floating_point Scalar, typename F>
BasicEvalResult<Scalar> integrate_finite(F&& f, Scalar a, Scalar b, EndpointExponents<Scalar> exps,
                                         const IntegrationOptions<Scalar>& opts) {
  if (a == b) return {0, 0, "adaptive_gauss_legendre", 0};
  if (!(a < b)) throw DomainError("integrate_finite: requires a < b");
  if (!(exps.left > -1 && exps.right > -1))
    throw DomainError("integrate_finite: endpoint exponents must exceed -1");
  if (!(opts.abs_tol > 0 || opts.rel_tol > 0))
    throw DomainError("integrate_finite: tolerance must be positive");

  const Scalar len = b - a, h = len / 2;
  const Scalar pl = exps.left < 0 ? 1 / (1 + exps.left) : Scalar(1);
  const Scalar pr = exps.right < 0 ? 1 / (1 + exps.right) : Scalar(1);
  auto g = [&](int seg, Scalar t) -> Scalar {
    const Scalar p = seg == 0 ? pl : pr;
    const Scalar tp = p == 1 ? t : std::pow(t, p);
    const Scalar s = h * tp;
    const Scalar jac = p == 1 ? h : h * p * tp / t;
    Scalar x;
    Offsets<Scalar> off;
    if (seg == 0) {
      x = a + s;
      off = {s, len - s};
    } else {
      x = b - s;
      off = {len - s, s};
    }
    const Scalar v = detail::call_integrand(f, x, off);
    if (!std::isfinite(v))
      throw EvaluationError("non-finite integrand value at x = " + detail::format_location(x), double(x));
    return v * jac;
  };
  return detail::adaptive_unit<Scalar>(g, 2, opts);
}

template <std::floating_point Scalar, typename F>
BasicEvalResult<Scalar> integrate_finite(F&& f, Scalar a, Scalar b, EndpointExponents<Scalar> exps,
                                         Scalar tol) {
  IntegrationOptions<Scalar> opts;
  opts.abs_tol = tol;
  return integrate_finite(std::forward<F>(f), a, b, exps, opts);
}

/// Integral of f over [a, inf). The piece [a, a + scale] is treated like a
/// finite interval with left exponent `left_exp`; the remainder is mapped onto
/// [0,1) by y = a + scale + scale s/(1-s). Offsets carry y - a and +inf.
template <std::floating_point Scalar, typename F>
BasicEvalResult<Scalar> integrate_semi_infinite(F&& f, Scalar a, Scalar left_exp, Scalar scale,
                                                const IntegrationOptions<Scalar>& opts) {
  if (!(left_exp > -1)) throw DomainError("integrate_semi_infinite: left exponent must exceed -1");
  if (!(scale > 0)) throw DomainError("integrate_semi_infinite: scale must be positive");
  constexpr Scalar inf = std::numeric_limits<Scalar>::infinity();
  const Scalar p = left_exp < 0 ? 1 / (1 + left_exp) : Scalar(1);
  auto g = [&](int seg, Scalar t) -> Scalar {
    Scalar d, jac;
    if (seg == 0) {
      const Scalar tp = p == 1 ? t : std::pow(t, p);
      d = scale * tp;
      jac = p == 1 ? scale : scale * p * tp / t;
    } else {
      const Scalar u = 1 - t;
      d = scale + scale * t / u;
      jac = scale / (u * u);
    }
    const Scalar x = a + d;
    const Scalar v = detail::call_integrand(f, x, Offsets<Scalar>{d, inf});
    if (!std::isfinite(v))
      throw EvaluationError("non-finite integrand value at x = " + detail::format_location(x), double(x));
    // far in the tail the Jacobian can overflow while v underflows to zero
    return v == 0 ? Scalar(0) : v * jac;
  };
  auto r = detail::adaptive_unit<Scalar>(g, 2, opts);
  r.method = "adaptive_gauss_legendre_semi_infinite";
  return r;
}

}  // namespace frabessel
