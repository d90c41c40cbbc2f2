#pragma once

// Scalar special functions: gamma, Pochhammer, Bessel J/I and the normalized
// j_nu, Gauss 2F1, Kummer 1F1 and Laguerre polynomials.

#include <cmath>
#include <vector>
#include <concepts>
#include <limits>
#include <numbers>
#include <optional>
#include <string>

#include "frabessel/adaptive.hpp"
#include "frabessel/errors.hpp"

namespace frabessel {

template <std::floating_point Scalar>
class BesselOrder {
 public:
  explicit BesselOrder(Scalar nu) : nu_(nu) {
    if (!(nu >= Scalar(-0.5)) || !std::isfinite(nu))
      throw DomainError("Bessel order nu must be a finite value >= -1/2");
  }
  Scalar value() const noexcept { return nu_; }

 private:
  Scalar nu_;
};

// Arguments of 2F1(a, b; c; z). When 1 - z is known more accurately than the
// difference 1 - z itself, pass it in one_minus_z.
template <std::floating_point Scalar>
struct HyperParams {
  Scalar a{0};
  Scalar b{0};
  Scalar c{1};
  Scalar z{0};
  std::optional<Scalar> one_minus_z{};
};

namespace detail {

inline constexpr int kSeriesCap = 10000;

template <std::floating_point Scalar>
constexpr Scalar series_tol() {
  return std::min<Scalar>(Scalar(1e-16), std::numeric_limits<Scalar>::epsilon());
}

template <std::floating_point Scalar>
bool is_nonpositive_integer(Scalar x) {
  return x <= 0 && x == std::floor(x);
}

// sum_k (s)^k / (k! (nu+1)_k); the entire series behind j_nu and i_nu with
// s = -x^2/4 and s = x^2/4 respectively.
template <std::floating_point Scalar>
Scalar bessel_power_series(Scalar nu, Scalar s) {
  Scalar term = 1, sum = 1;
  for (int k = 1; k < kSeriesCap; ++k) {
    term *= s / (k * (nu + k));
    sum += term;
    if (std::abs(term) <= series_tol<Scalar>() * std::abs(sum)) return sum;
  }
  throw AccuracyError("Bessel series: term cap reached", double(sum), double(std::abs(term)));
}

// e^{-x} I_nu(x) sqrt(2 pi x) from the large-argument expansion.
template <std::floating_point Scalar>
Scalar bessel_i_asymptotic(Scalar nu, Scalar x) {
  const Scalar mu = 4 * nu * nu;
  Scalar term = 1, sum = 1;
  for (int k = 1; k < 200; ++k) {
    const Scalar next = -term * (mu - Scalar(2 * k - 1) * Scalar(2 * k - 1)) / (8 * k * x);
    if (std::abs(next) >= std::abs(term)) break;
    term = next;
    sum += term;
    if (std::abs(term) <= series_tol<Scalar>() * std::abs(sum)) break;
  }
  return sum;
}

}  // namespace detail

/// Gamma function; raises DomainError on the poles 0, -1, -2, ...
template <std::floating_point Scalar>
Scalar gamma_fn(Scalar x) {
  if (std::isnan(x) || detail::is_nonpositive_integer(x))
    throw DomainError("gamma_fn: pole at non-positive integer argument");
  return std::tgamma(x);
}

/// Rising factorial (a)_k = a (a+1) ... (a+k-1), (a)_0 = 1.
template <std::floating_point Scalar>
Scalar pochhammer(Scalar a, unsigned k) {
  Scalar p = 1;
  for (unsigned i = 0; i < k; ++i) p *= a + Scalar(i);
  return p;
}

/// j_nu(x) = 2^nu Gamma(nu+1) x^{-nu} J_nu(x), with j_nu(0) = 1.
template <std::floating_point Scalar>
Scalar normalized_bessel_j(BesselOrder<Scalar> order, Scalar x) {
  if (!(x >= 0)) throw DomainError("normalized_bessel_j: requires x >= 0");
  const Scalar nu = order.value();
  if (x == 0) return 1;
  if (nu == Scalar(0.5)) return std::sin(x) / x;
  if (nu == Scalar(-0.5)) return std::cos(x);
  if (x <= 4) return detail::bessel_power_series(nu, -x * x / 4);
  Scalar jnu;
  if (nu >= 0) {
    jnu = std::cyl_bessel_j(nu, x);
  } else {
    const Scalar mu = -nu, pi = std::numbers::pi_v<Scalar>;
    jnu = std::cos(mu * pi) * std::cyl_bessel_j(mu, x) - std::sin(mu * pi) * std::cyl_neumann(mu, x);
  }
  return std::exp2(nu) * std::tgamma(nu + 1) * std::pow(x, -nu) * jnu;
}

/// e^{-x} I_nu(x).
template <std::floating_point Scalar>
Scalar modified_bessel_i_scaled(BesselOrder<Scalar> order, Scalar x) {
  if (!(x >= 0)) throw DomainError("modified_bessel_i: requires x >= 0");
  const Scalar nu = order.value();
  if (x == 0) {
    if (nu == 0) return 1;
    if (nu > 0) return 0;
    throw DomainError("modified_bessel_i: I_nu(0) is infinite for nu < 0");
  }
  if (x <= 20)
    return std::exp(nu * std::log(x / 2) - std::lgamma(nu + 1) - x) *
           detail::bessel_power_series(nu, x * x / 4);
  return detail::bessel_i_asymptotic(nu, x) / std::sqrt(2 * std::numbers::pi_v<Scalar> * x);
}

/// Modified Bessel function I_nu(x). Raises DomainError when e^x overflows;
/// modified_bessel_i_scaled covers that range.
template <std::floating_point Scalar>
Scalar modified_bessel_i(BesselOrder<Scalar> order, Scalar x) {
  if (x > std::log(std::numeric_limits<Scalar>::max()))
    throw DomainError("modified_bessel_i: overflow, use modified_bessel_i_scaled");
  if (x > 0 && x <= 20)
    return std::exp(order.value() * std::log(x / 2) - std::lgamma(order.value() + 1)) *
           detail::bessel_power_series(order.value(), x * x / 4);
  return modified_bessel_i_scaled(order, x) * std::exp(x);
}

/// e^{-x} i_nu(x) for the normalized i_nu(x) = Gamma(nu+1) (x/2)^{-nu} I_nu(x)
/// = 0F1(; nu+1; x^2/4), finite for every x >= 0.
template <std::floating_point Scalar>
Scalar normalized_bessel_i_scaled(BesselOrder<Scalar> order, Scalar x) {
  if (!(x >= 0)) throw DomainError("normalized_bessel_i: requires x >= 0");
  const Scalar nu = order.value();
  if (x <= 20) return std::exp(-x) * detail::bessel_power_series(nu, x * x / 4);
  return std::exp(std::lgamma(nu + 1) - nu * std::log(x / 2)) * detail::bessel_i_asymptotic(nu, x) /
         std::sqrt(2 * std::numbers::pi_v<Scalar> * x);
}

/// Hypergeometric series summed term by term; throws AccuracyError when the
/// cap is reached. Terminates exactly when a or b is a non-positive integer.
template <std::floating_point Scalar>
Scalar hypergeometric_2f1_series(Scalar a, Scalar b, Scalar c, Scalar z) {
  Scalar term = 1, sum = 1;
  for (int k = 0; k < detail::kSeriesCap; ++k) {
    term *= (a + k) * (b + k) / ((c + k) * (k + 1)) * z;
    sum += term;
    if (term == 0 || std::abs(term) <= detail::series_tol<Scalar>() * std::abs(sum)) return sum;
  }
  throw AccuracyError("gauss_2f1: series term cap reached", double(sum), double(std::abs(term)));
}

/// Euler integral
///   Gamma(c)/(Gamma(b)Gamma(c-b)) int_0^1 t^{b-1}(1-t)^{c-b-1}(1-tz)^{-a} dt,
/// valid for 0 < b < c and z <= 1 (at z = 1 also c - a - b > 0).
template <std::floating_point Scalar>
Scalar hypergeometric_2f1_euler(const HyperParams<Scalar>& p, Scalar rel_tol = Scalar(1e-13)) {
  const Scalar a = p.a, b = p.b, c = p.c, z = p.z;
  const Scalar omz = p.one_minus_z.value_or(1 - z);
  if (!(b > 0 && c > b)) throw DomainError("gauss_2f1: Euler integral requires 0 < b < c");
  if (omz < 0) throw DomainError("gauss_2f1: Euler integral requires z <= 1");
  if (omz == 0 && !(c - a - b > 0))
    throw DomainError("gauss_2f1: divergent at z = 1 since c - a - b <= 0");
  // In u = 1 - t the factor (1-z + z u)^{-a} varies on the scale w = (1-z)/z,
  // so [0, 1] is cut at w, 2w, 4w, ... and each piece is smooth inside.
  IntegrationOptions<Scalar> opts;
  opts.abs_tol = std::numeric_limits<Scalar>::min();
  opts.rel_tol = rel_tol;
  const Scalar w = z > 0 ? omz / z : Scalar(1);
  std::vector<Scalar> knots{0};
  if (w > 0)
    for (Scalar k = w; k < Scalar(0.5); k *= 2) knots.push_back(k);
  knots.push_back(1);
  Scalar sum = 0;
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    const Scalar lo = knots[i], hi = knots[i + 1];
    auto integrand = [&](Scalar, Offsets<Scalar> off) {
      const Scalar u = lo + off.from_left, t = (1 - hi) + off.from_right;
      return std::pow(t, b - 1) * std::pow(u, c - b - 1) * std::pow(omz + z * u, -a);
    };
    Scalar left = i == 0 ? c - b - 1 : Scalar(0);
    if (i == 0 && omz == 0) left -= a;  // c - a - b > 0 keeps this above -1
    const Scalar right = i + 2 == knots.size() ? b - 1 : Scalar(0);
    sum += integrate_finite(integrand, lo, hi, EndpointExponents<Scalar>{std::min(left, Scalar(0)), std::min(right, Scalar(0))}, opts).value;
  }
  return std::exp(std::lgamma(c) - std::lgamma(b) - std::lgamma(c - b)) * sum;
}

/// Gauss hypergeometric function 2F1(a, b; c; z) for real z <= 1.
/// Series for |z| <= 0.9, Pfaff transformation below -0.9, Euler integral on
/// (0.9, 1]. Polynomial cases are summed exactly for any z.
template <std::floating_point Scalar>
Scalar gauss_2f1(const HyperParams<Scalar>& p) {
  const Scalar a = p.a, b = p.b, c = p.c, z = p.z;
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) || !std::isfinite(z))
    throw DomainError("gauss_2f1: non-finite parameter");
  if (detail::is_nonpositive_integer(c)) throw DomainError("gauss_2f1: c must not be 0, -1, -2, ...");
  if (z == 0) return 1;
  if (detail::is_nonpositive_integer(a) || detail::is_nonpositive_integer(b))
    return hypergeometric_2f1_series(a, b, c, z);
  const Scalar omz = p.one_minus_z.value_or(1 - z);
  if (omz < 0) throw DomainError("gauss_2f1: z > 1 is not supported");
  if (std::abs(z) <= Scalar(0.9)) return hypergeometric_2f1_series(a, b, c, z);
  if (z < 0) {
    HyperParams<Scalar> q{a, c - b, c, z / (z - 1), 1 / omz};
    return std::pow(omz, -a) * gauss_2f1(q);
  }
  if (omz == 0 && !(c - a - b > 0))
    throw DomainError("gauss_2f1: divergent at z = 1 since c - a - b <= 0");
  if (b > 0 && c > b) return hypergeometric_2f1_euler(p);
  if (a > 0 && c > a) return hypergeometric_2f1_euler(HyperParams<Scalar>{b, a, c, z, omz});
  throw DomainError("gauss_2f1: no continuation for 0.9 < z <= 1 unless 0 < b < c or 0 < a < c");
}

/// Confluent hypergeometric function 1F1(a; b; z). Negative arguments go
/// through Kummer's transformation so that the summed terms share one sign.
template <std::floating_point Scalar>
Scalar kummer_1f1(Scalar a, Scalar b, Scalar z) {
  if (detail::is_nonpositive_integer(b)) throw DomainError("kummer_1f1: b must not be 0, -1, -2, ...");
  if (z == 0) return 1;
  if (z < 0 && !detail::is_nonpositive_integer(a)) return std::exp(z) * kummer_1f1(b - a, b, -z);
  Scalar term = 1, sum = 1;
  for (int k = 0; k < detail::kSeriesCap; ++k) {
    const Scalar ratio = (a + k) / ((b + k) * (k + 1)) * z;
    term *= ratio;
    sum += term;
    if (term == 0) return sum;
    if (std::abs(ratio) < 1 && std::abs(term) <= detail::series_tol<Scalar>() * std::abs(sum)) return sum;
  }
  throw AccuracyError("kummer_1f1: series term cap reached", double(sum), double(std::abs(term)));
}

/// Generalized Laguerre polynomial L_k^{(alpha)}(x) by the three-term
/// recurrence; alpha = 0 gives the ordinary L_k.
template <std::floating_point Scalar>
Scalar laguerre_poly(unsigned k, Scalar x, Scalar alpha = 0) {
  if (k == 0) return 1;
  Scalar prev = 1, cur = 1 + alpha - x;
  for (unsigned j = 1; j < k; ++j) {
    const Scalar next = ((2 * j + 1 + alpha - x) * cur - (j + alpha) * prev) / (j + 1);
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace frabessel
