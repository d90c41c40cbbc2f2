#include "frabessel/test_function.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "frabessel/errors.hpp"
#include "frabessel/specfun.hpp"

namespace frabessel {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw DomainError(std::string(what) + " must be finite");
}

}  // namespace

double Decay::envelope(double r) const {
  switch (kind) {
    case Kind::none:
      return kInf;
    case Kind::bounded:
      return scale;
    case Kind::gaussian:
      return scale * std::exp(-rate * r * r);
    case Kind::power:
      return r > 0 ? scale * std::pow(r, -rate) : kInf;
  }
  return kInf;
}

TestFunction TestFunction::gaussian(double rate) {
  require_finite(rate, "gaussian rate");
  if (!(rate > 0)) throw DomainError("gaussian rate must be positive");
  return TestFunction(Kind::gaussian, "gaussian", rate, 1.0, Decay::gaussian(rate), 0.0);
}

TestFunction TestFunction::bessel_j(double nu, double scale) {
  require_finite(scale, "bessel_j scale");
  BesselOrder<double> order(nu);
  if (!(scale > 0)) throw DomainError("bessel_j scale must be positive");
  Decay d;
  if (nu <= 0.5) {
    // x |J_nu(x)|^2 <= 2/pi for |nu| <= 1/2
    const double p = nu + 0.5;
    d = p == 0 ? Decay::bounded(1.0)
               : Decay::power(p, std::exp2(nu) * std::tgamma(nu + 1) * std::sqrt(2 / std::numbers::pi) *
                                     std::pow(scale, -p));
  } else {
    // |J_nu(s)| <= 0.7858 s^{-1/3} for nu > 0, s > 0
    const double p = nu + 1.0 / 3.0;
    d = Decay::power(p, 0.7858 * std::exp2(nu) * std::tgamma(nu + 1) * std::pow(scale, -p));
  }
  (void)order;
  return TestFunction(Kind::bessel_j, "bessel_j", nu, scale, d, 0.0);
}

TestFunction TestFunction::power(double p) {
  require_finite(p, "power exponent");
  Decay d = p < 0 ? Decay::power(-p) : (p == 0 ? Decay::bounded(1.0) : Decay::none());
  return TestFunction(Kind::power, "power", p, 1.0, d, p);
}

TestFunction TestFunction::constant(double c) {
  require_finite(c, "constant value");
  return TestFunction(Kind::constant, c == 0 ? "zero" : "constant", c, 1.0, Decay::bounded(std::abs(c)), 0.0);
}

TestFunction TestFunction::custom(std::string name, std::function<double(double)> f, Decay decay,
                                  double origin_power, std::function<double(double, double)> bessel_op) {
  if (!f) throw DomainError("custom test function needs a callable");
  TestFunction t(Kind::custom, std::move(name), 0.0, 1.0, decay, origin_power);
  t.fn_ = std::move(f);
  t.op_ = std::move(bessel_op);
  return t;
}

double TestFunction::operator()(double x) const {
  const double r = std::abs(x);
  switch (kind_) {
    case Kind::gaussian:
      return std::exp(-param_ * r * r);
    case Kind::bessel_j:
      return normalized_bessel_j(BesselOrder<double>(param_), scale_ * r);
    case Kind::power:
      return std::pow(r, param_);
    case Kind::constant:
      return param_;
    case Kind::custom:
      return fn_(r);
  }
  return std::numeric_limits<double>::quiet_NaN();
}

std::optional<double> TestFunction::bessel_power(int m, double x, double gamma) const {
  if (m < 0) throw DomainError("bessel_power: m must be non-negative");
  const double r = std::abs(x);
  if (m == 0) return (*this)(r);
  switch (kind_) {
    case Kind::gaussian: {
      // f = Q(u) e^{-a u} with u = x^2, and B = 4u d^2/du^2 + 2(1+gamma) d/du
      const double a = param_;
      std::vector<double> q{1.0};
      for (int step = 0; step < m; ++step) {
        const std::size_t n = q.size();
        std::vector<double> d1(n, 0.0), d2(n, 0.0), out(n + 1, 0.0);
        for (std::size_t k = 1; k < n; ++k) d1[k - 1] = k * q[k];
        for (std::size_t k = 2; k < n; ++k) d2[k - 2] = k * (k - 1.0) * q[k];
        for (std::size_t k = 0; k < n; ++k) {
          const double inner = d2[k] - 2 * a * d1[k] + a * a * q[k];
          out[k + 1] += 4 * inner;
          out[k] += 2 * (1 + gamma) * (d1[k] - a * q[k]);
        }
        q = std::move(out);
      }
      const double u = r * r;
      double poly = 0;
      for (std::size_t k = q.size(); k-- > 0;) poly = poly * u + q[k];
      return poly * std::exp(-a * u);
    }
    case Kind::power: {
      double c = 1, p = param_;
      for (int step = 0; step < m; ++step) {
        c *= p * (p - 1 + gamma);
        p -= 2;
      }
      return c == 0 ? 0.0 : c * std::pow(r, p);
    }
    case Kind::bessel_j: {
      // B j_mu(s x) = -s^2 [ j_mu(s x) + (gamma - 2mu - 1)/(2(mu+1)) j_{mu+1}(s x) ]
      const double nu = param_, s2 = scale_ * scale_;
      std::vector<double> c{1.0};
      for (int step = 0; step < m; ++step) {
        std::vector<double> out(c.size() + 1, 0.0);
        for (std::size_t k = 0; k < c.size(); ++k) {
          const double mu = nu + k;
          out[k] -= s2 * c[k];
          out[k + 1] -= s2 * c[k] * (gamma - 2 * mu - 1) / (2 * (mu + 1));
        }
        c = std::move(out);
      }
      double v = 0;
      for (std::size_t k = 0; k < c.size(); ++k)
        if (c[k] != 0) v += c[k] * normalized_bessel_j(BesselOrder<double>(nu + k), scale_ * r);
      return v;
    }
    case Kind::constant:
      return 0.0;
    case Kind::custom:
      if (m == 1 && op_) return op_(r, gamma);
      return std::nullopt;
  }
  return std::nullopt;
}

double TestFunction::bessel_op(double x, double gamma, double h) const {
  if (auto v = bessel_power(1, x, gamma)) return *v;
  return bessel_op_fd([this](double s) { return (*this)(s); }, x, gamma, h);
}

TestFunction bessel_op_of_gaussian(double gamma) {
  if (!(gamma >= 0) || !std::isfinite(gamma)) throw DomainError("gamma must be a finite value >= 0");
  const auto g = TestFunction::gaussian();
  // |4u - k| e^{-u/10} <= max(k, 40/e) for u = x^2 >= 0
  const double k = 2 * (gamma + 1);
  const Decay decay = Decay::gaussian(0.9, std::max(k, 14.8));
  return TestFunction::custom(
      "bessel_op_gaussian", [g, gamma](double x) { return *g.bessel_power(1, x, gamma); }, decay, 0.0,
      [g, gamma](double x, double gm) {
        if (gm != gamma) throw DomainError("bessel_op_gaussian: gamma mismatch");
        return *g.bessel_power(2, x, gamma);
      });
}

double bessel_op_fd(const std::function<double(double)>& g, double x, double gamma, double h) {
  const double r = std::abs(x);
  auto f = [&](double s) { return g(std::abs(s)); };
  const double f0 = f(r), fp1 = f(r + h), fm1 = f(r - h), fp2 = f(r + 2 * h), fm2 = f(r - 2 * h);
  const double d2 = (-fp2 + 16 * fp1 - 30 * f0 + 16 * fm1 - fm2) / (12 * h * h);
  if (r == 0) return (1 + gamma) * d2;
  const double d1 = (-fp2 + 8 * fp1 - 8 * fm1 + fm2) / (12 * h);
  return d2 + gamma / r * d1;
}

}  // namespace frabessel
