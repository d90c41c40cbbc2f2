#pragma once

// Gauss-Laguerre rules and the integration helpers built on them.

#include <Eigen/Core>

#include <cmath>
#include <concepts>
#include <limits>
#include <string>
#include <type_traits>
#include <vector>

#include "frabessel/adaptive.hpp"
#include "frabessel/errors.hpp"
#include "frabessel/eval_result.hpp"
#include "frabessel/specfun.hpp"

namespace frabessel {

/// Nodes and weights of an n-point Gauss rule for the weight x^a e^{-x} on
/// (0, inf). Immutable once built.
template <std::floating_point Scalar>
class QuadratureRule {
 public:
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  QuadratureRule(Vector nodes, Vector weights, Vector scaled_weights, Scalar exponent)
      : nodes_(std::move(nodes)),
        weights_(std::move(weights)),
        scaled_weights_(std::move(scaled_weights)),
        exponent_(exponent) {}

  Eigen::Index order() const noexcept { return nodes_.size(); }
  const Vector& nodes() const noexcept { return nodes_; }
  const Vector& weights() const noexcept { return weights_; }
  // w_i e^{y_i}
  const Vector& scaled_weights() const noexcept { return scaled_weights_; }
  Scalar exponent() const noexcept { return exponent_; }

  /// sum_i w_i h(y_i), the approximation of int_0^inf x^a e^{-x} h(x) dx.
  template <typename H>
  Scalar apply(H&& h) const {
    Scalar s = 0;
    for (Eigen::Index i = 0; i < order(); ++i) {
      const Scalar v = h(nodes_[i]);
      if (!std::isfinite(v))
        throw EvaluationError("non-finite sample at node " + detail::format_location(nodes_[i]),
                              double(nodes_[i]));
      s += weights_[i] * v;
    }
    return s;
  }

 private:
  Vector nodes_;
  Vector weights_;
  Vector scaled_weights_;
  Scalar exponent_;
};

namespace detail {

// L_m^{(a)}(x) and L_{m-1}^{(a)}(x).
template <std::floating_point Scalar>
std::pair<Scalar, Scalar> laguerre_pair(int m, Scalar x, Scalar a) {
  Scalar prev = 1, cur = 1 + a - x;
  for (int j = 1; j < m; ++j) {
    const Scalar next = ((2 * j + 1 + a - x) * cur - (j + a) * prev) / (j + 1);
    prev = cur;
    cur = next;
  }
  return {cur, prev};
}

// Root of L_m^{(a)} inside (lo, hi), where the polynomial changes sign.
template <std::floating_point Scalar>
Scalar laguerre_root(int m, Scalar a, Scalar lo, Scalar hi) {
  const Scalar f_lo = laguerre_pair(m, lo, a).first;
  const Scalar f_hi = laguerre_pair(m, hi, a).first;
  if (!(f_lo * f_hi < 0)) throw Error("gauss_laguerre_rule: failed to bracket a Laguerre root");
  Scalar x = (lo + hi) / 2;
  for (int iter = 0; iter < 200; ++iter) {
    const auto [l, lm1] = laguerre_pair(m, x, a);
    if (l == 0) return x;
    if ((l > 0) == (f_lo > 0))
      lo = x;
    else
      hi = x;
    const Scalar dl = (m * l - (m + a) * lm1) / x;
    Scalar xn = x - l / dl;
    if (!(xn > lo && xn < hi)) xn = (lo + hi) / 2;
    if (std::abs(xn - x) <= 4 * std::numeric_limits<Scalar>::epsilon() * x) return xn;
    x = xn;
  }
  return x;
}

}  // namespace detail

/// n-point Gauss-Laguerre rule for the weight x^a e^{-x}, 1 <= n <= 128.
/// Roots are found degree by degree: the roots of L_{m-1} bracket those of L_m.
/// Weights: Gamma(n+a+1)/n! * y_i / ((n+1)^2 L_{n+1}^{(a)}(y_i)^2).
/// The construction runs in long double and rounds at the end.
template <std::floating_point Scalar>
QuadratureRule<Scalar> gauss_laguerre_rule(int n, Scalar exponent = 0) {
  using Wide = std::conditional_t<(sizeof(Scalar) < sizeof(long double)), long double, Scalar>;
  if (n < 1 || n > 128) throw DomainError("gauss_laguerre_rule: order must satisfy 1 <= n <= 128");
  if (!(exponent > -1) || !std::isfinite(exponent))
    throw DomainError("gauss_laguerre_rule: exponent must exceed -1");
  const Wide a = exponent;
  std::vector<Wide> roots{1 + a};
  for (int m = 2; m <= n; ++m) {
    std::vector<Wide> next(m);
    for (int i = 0; i < m; ++i) {
      const Wide lo = i == 0 ? Wide(0) : roots[i - 1];
      Wide hi;
      if (i < m - 1) {
        hi = roots[i];
      } else {
        const Wide sign_lo = detail::laguerre_pair(m, lo, a).first;
        Wide step = std::max<Wide>(1, lo - (m > 2 ? roots[m - 3] : Wide(0)));
        hi = lo + step;
        int tries = 0;
        while (detail::laguerre_pair(m, hi, a).first * sign_lo > 0) {
          step *= 2;
          hi = lo + step;
          if (++tries > 60) throw Error("gauss_laguerre_rule: failed to bracket the largest root");
        }
      }
      next[i] = detail::laguerre_root(m, a, lo, hi);
    }
    roots = std::move(next);
  }

  typename QuadratureRule<Scalar>::Vector nodes(n), weights(n), scaled(n);
  const Wide log_norm = std::lgamma(n + a + 1) - std::lgamma(Wide(n) + 1) - 2 * std::log(Wide(n + 1));
  for (int i = 0; i < n; ++i) {
    const Wide y = roots[i];
    const Wide l_next = laguerre_poly(static_cast<unsigned>(n + 1), y, a);
    const Wide log_w = log_norm + std::log(y) - 2 * std::log(std::abs(l_next));
    nodes[i] = static_cast<Scalar>(y);
    weights[i] = static_cast<Scalar>(std::exp(log_w));
    scaled[i] = static_cast<Scalar>(std::exp(log_w + y));
  }
  return QuadratureRule<Scalar>(std::move(nodes), std::move(weights), std::move(scaled), a);
}

/// int_0^inf g(y) dy by sum_i w_i e^{y_i} y_i^{-a} g(y_i). When a companion
/// rule (normally of order n-2) is given, the error estimate is the difference
/// between the two sums.
template <std::floating_point Scalar, typename G>
BasicEvalResult<Scalar> integrate_laguerre(G&& g, const QuadratureRule<Scalar>& rule,
                                           const QuadratureRule<Scalar>* companion = nullptr) {
  auto sum = [&](const QuadratureRule<Scalar>& r) {
    Scalar s = 0;
    for (Eigen::Index i = 0; i < r.order(); ++i) {
      const Scalar y = r.nodes()[i];
      const Scalar v = g(y);
      if (!std::isfinite(v))
        throw EvaluationError("non-finite sample at node " + detail::format_location(y), double(y));
      const Scalar w = r.exponent() == 0 ? r.scaled_weights()[i] : r.scaled_weights()[i] * std::pow(y, -r.exponent());
      s += w * v;
    }
    return s;
  };
  BasicEvalResult<Scalar> out;
  out.value = sum(rule);
  out.method = "gauss_laguerre";
  out.evaluations = static_cast<std::size_t>(rule.order());
  if (companion != nullptr) {
    out.error = std::abs(out.value - sum(*companion));
    out.evaluations += static_cast<std::size_t>(companion->order());
  } else {
    out.error = std::numeric_limits<Scalar>::quiet_NaN();
  }
  return out;
}

}  // namespace frabessel
