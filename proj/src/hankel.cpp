#include "frabessel/hankel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "frabessel/errors.hpp"
#include "frabessel/quadrature.hpp"
#include "frabessel/specfun.hpp"

namespace frabessel {

HankelIndex::HankelIndex(double gamma) : gamma_(gamma), inverse_prefactor_(0) {
  if (!(gamma > 0) || !std::isfinite(gamma)) throw DomainError("Hankel index gamma must be positive and finite");
  const double g = std::tgamma((gamma + 1) / 2);
  inverse_prefactor_ = std::exp2(1 - gamma) / (g * g);
}

namespace {

// int_0^inf f(t) j_nu(t s) t^gamma dt
EvalResult transform(const TestFunction& f, double s, const HankelIndex& idx, int n, const char* name) {
  if (!(s >= 0) || !std::isfinite(s)) throw DomainError(std::string(name) + ": requires a finite argument >= 0");
  if (n < 1) throw DomainError(std::string(name) + ": order n must be positive");
  if (f.is_zero()) return {0.0, 0.0, "zero", 0};
  const double g = idx.gamma(), sigma = f.origin_power();
  if (!(g + sigma > -1))
    throw DomainError(std::string(name) + ": f(x) x^gamma is not integrable at the origin");
  const BesselOrder<double> order(idx.bessel_order());
  const Decay& d = f.decay();

  double exponent, factor;
  std::function<double(double)> node_value;
  if (d.kind == Decay::Kind::gaussian && d.rate > 0) {
    const double c = d.rate;
    exponent = (g + sigma - 1) / 2;
    factor = 0.5 * std::pow(c, -(g + sigma + 1) / 2);
    // Far nodes of a high-order rule sit where f is below double resolution;
    // an f that is itself computed by quadrature returns noise there, so
    // samples are clamped to the declared envelope. The envelope describes
    // large arguments only, so t < 1 is left alone.
    node_value = [&, c](double u) {
      const double t = std::sqrt(u / c);
      double v = f(t);
      if (t >= 1) v = std::clamp(v, -f.envelope(t), f.envelope(t));
      const double core = v * (sigma == 0 ? 1.0 : std::pow(t, -sigma));
      return std::exp(u) * core * normalized_bessel_j(order, t * s);
    };
  } else if (d.kind == Decay::Kind::power && d.rate > g + 1) {
    exponent = g + sigma;
    factor = 1.0;
    node_value = [&](double t) {
      const double core = sigma == 0 ? f(t) : f(t) * std::pow(t, -sigma);
      return std::exp(t) * core * normalized_bessel_j(order, t * s);
    };
  } else {
    throw DomainError(std::string(name) + ": f(x) x^gamma must be absolutely integrable (decay metadata)");
  }

  const auto rule = gauss_laguerre_rule<double>(n, exponent);
  EvalResult r;
  r.value = factor * rule.apply(node_value);
  r.evaluations = static_cast<std::size_t>(n);
  if (n >= 3) {
    const auto companion = gauss_laguerre_rule<double>(n - 2, exponent);
    r.error = std::abs(r.value - factor * companion.apply(node_value));
    r.evaluations += static_cast<std::size_t>(n - 2);
  } else {
    r.error = std::numeric_limits<double>::quiet_NaN();
  }
  r.method = "gauss_laguerre[n=" + std::to_string(n) + "]";
  return r;
}

}  // namespace

EvalResult hankel_forward(const TestFunction& f, double xi, HankelIndex idx, int n) {
  return transform(f, xi, idx, n, "hankel_forward");
}

EvalResult hankel_inverse(const TestFunction& big_f, double x, HankelIndex idx, int n) {
  EvalResult r = transform(big_f, x, idx, n, "hankel_inverse");
  r.value *= idx.inverse_prefactor();
  r.error *= idx.inverse_prefactor();
  return r;
}

}  // namespace frabessel
