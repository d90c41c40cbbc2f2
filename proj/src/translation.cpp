#include "frabessel/translation.hpp"

#include <cmath>
#include <numbers>

#include "frabessel/adaptive.hpp"
#include "frabessel/errors.hpp"
#include "frabessel/specfun.hpp"

namespace frabessel {

GammaWeight::GammaWeight(double gamma) : gamma_(gamma) {
  if (!(gamma >= 0) || !std::isfinite(gamma)) throw DomainError("gamma must be a finite value >= 0");
}

double GammaWeight::normalization() const {
  if (degenerate()) throw DomainError("C(gamma) is defined for gamma > 0 only");
  return std::tgamma((gamma_ + 1) / 2) / (std::sqrt(std::numbers::pi) * std::tgamma(gamma_ / 2));
}

double translate_gaussian(double x, double y, GammaWeight gamma) {
  if (gamma.degenerate()) throw DomainError("translate_gaussian: requires gamma > 0");
  if (!(x >= 0 && y >= 0)) throw DomainError("translate_gaussian: requires x, y >= 0");
  const double d = x - y;
  return std::exp(-d * d) * normalized_bessel_i_scaled(BesselOrder<double>(gamma.bessel_order()), 2 * x * y);
}

double translate_power(double p, double x, double y, GammaWeight gamma) {
  if (gamma.degenerate()) throw DomainError("translate_power: requires gamma > 0");
  if (!(x >= 0 && y >= 0 && x + y > 0)) throw DomainError("translate_power: requires x, y >= 0 and x + y > 0");
  if (p == 0) return 1.0;
  if (y == 0) return std::pow(x, p);
  if (x == 0) return std::pow(y, p);
  const double s = x + y, q = (x - y) / s;
  const double g = gamma.value();
  HyperParams<double> hp{-p / 2, g / 2, g, 4 * x * y / (s * s), q * q};
  return std::pow(s, p) * gauss_2f1(hp);
}

namespace {

EvalResult by_trig(const TestFunction& f, double x, double y, double g, double tol) {
  const double c = GammaWeight(g).normalization();
  const double d = x - y, xy4 = 4 * x * y;
  auto integrand = [&](double, Offsets<double> o) {
    const double h = std::sin(o.from_left / 2);
    const double arg = std::sqrt(d * d + xy4 * h * h);
    const double sn = std::sin(std::min(o.from_left, o.from_right));
    return f(arg) * std::pow(sn, g - 1);
  };
  IntegrationOptions<double> opts;
  opts.abs_tol = tol / c;
  auto r = integrate_finite(integrand, 0.0, std::numbers::pi, EndpointExponents<double>{g - 1, g - 1}, opts);
  return {c * r.value, c * r.error, "trig", r.evaluations};
}

EvalResult by_unit_interval(const TestFunction& f, double x, double y, double g, double tol) {
  const double c = std::exp2(g - 1) * GammaWeight(g).normalization();
  const double d = x - y, xy4 = 4 * x * y;
  auto integrand = [&](double, Offsets<double> o) {
    const double arg = std::sqrt(d * d + xy4 * o.from_right);
    return f(arg) * std::pow(o.from_left * o.from_right, g / 2 - 1);
  };
  IntegrationOptions<double> opts;
  opts.abs_tol = tol / c;
  auto r = integrate_finite(integrand, 0.0, 1.0, EndpointExponents<double>{g / 2 - 1, g / 2 - 1}, opts);
  return {c * r.value, c * r.error, "unit_interval", r.evaluations};
}

EvalResult by_kernel(const TestFunction& f, double x, double y, double g, double tol) {
  const double c = std::exp2(g) * GammaWeight(g).normalization() * std::pow(4 * x * y, 1 - g);
  const double d = std::abs(x - y), s = x + y;
  auto integrand = [&](double z, Offsets<double> o) {
    return z * f(z) * std::pow(o.from_left * (z + d) * o.from_right * (s + z), g / 2 - 1);
  };
  IntegrationOptions<double> opts;
  opts.abs_tol = tol / c;
  const double left = d > 0 ? g / 2 - 1 : g - 1;
  auto r = integrate_finite(integrand, d, s, EndpointExponents<double>{left, g / 2 - 1}, opts);
  return {c * r.value, c * r.error, "kernel", r.evaluations};
}

}  // namespace

EvalResult translate(const TestFunction& f, double x, double y, GammaWeight gamma, TranslationMethod method,
                     double tol) {
  if (!(x >= 0 && y >= 0) || !std::isfinite(x) || !std::isfinite(y))
    throw DomainError("translate: requires finite x, y >= 0");
  if (!(tol > 0)) throw DomainError("translate: tol must be positive");
  if (y == 0) return {f(x), 0.0, "identity", 1};
  if (x == 0) return {f(y), 0.0, "identity", 1};
  if (gamma.degenerate()) return {(f(x + y) + f(x - y)) / 2, 0.0, "arithmetic_mean", 2};

  const double g = gamma.value();
  switch (method) {
    case TranslationMethod::closed_form_auto:
      switch (f.kind()) {
        case TestFunction::Kind::gaussian: {
          const double r = std::sqrt(f.param());
          return {translate_gaussian(r * x, r * y, gamma), 0.0, "closed_form_gaussian", 1};
        }
        case TestFunction::Kind::power:
          return {translate_power(f.param(), x, y, gamma), 0.0, "closed_form_power", 1};
        case TestFunction::Kind::constant:
          return {f.param(), 0.0, "closed_form_constant", 0};
        case TestFunction::Kind::bessel_j:
          if (f.param() == gamma.bessel_order()) return {f(x) * f(y), 0.0, "product_formula", 2};
          break;
        case TestFunction::Kind::custom:
          break;
      }
      return by_kernel(f, x, y, g, tol);
    case TranslationMethod::trig:
      return by_trig(f, x, y, g, tol);
    case TranslationMethod::unit_interval:
      return by_unit_interval(f, x, y, g, tol);
    case TranslationMethod::kernel:
      return by_kernel(f, x, y, g, tol);
  }
  throw DomainError("translate: unknown method");
}

}  // namespace frabessel
