#include "frabessel/fracbessel.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <vector>

#include "frabessel/adaptive.hpp"
#include "frabessel/errors.hpp"
#include "frabessel/quadrature.hpp"
#include "frabessel/specfun.hpp"

namespace frabessel {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInternalTranslationTol = 1e-12;
// the middle t-integral costs work proportional to its length
constexpr double kMaxCutoff = 1e7;

bool is_integer(double v) { return v == std::floor(v); }

// Substitution scales u = lambda * c * y^2 tried by the Gauss-Laguerre scheme.
std::array<double, 16> laguerre_scales() {
  std::array<double, 16> s{};
  for (int k = 0; k < 16; ++k) s[k] = std::pow(0.25, k / 15.0);
  return s;
}

double gaussian_rate(const TestFunction& f) {
  return f.decay().kind == Decay::Kind::gaussian ? f.decay().rate : 0.0;
}

// Characteristic length of f, used to place quadrature split points.
double decay_length(const TestFunction& f) {
  const double c = gaussian_rate(f);
  return c > 0 ? 3 / std::sqrt(c) : 1.0;
}

void require_integrable(const TestFunction& f, double alpha, const char* who) {
  const Decay& d = f.decay();
  if (d.kind == Decay::Kind::gaussian) return;
  if (d.kind == Decay::Kind::power && d.rate > 2 * alpha) return;
  throw DomainError(std::string(who) + ": f must decay like a Gaussian or like x^{-p} with p > 2 alpha");
}

// (x+y)^{2alpha-gamma-1} 2F1((gamma+1)/2 - alpha, gamma/2; gamma; 4xy/(x+y)^2), with d = |x - y|
// passed separately so that 1 - z = (d/(x+y))^2 keeps full precision.
double potential_kernel(double x, double y, double d, double alpha, double g) {
  const double s = x + y;
  if (g == 0) return (std::pow(s, 2 * alpha - 1) + std::pow(d, 2 * alpha - 1)) / 2;
  const double q = d / s;
  HyperParams<double> hp{(g + 1) / 2 - alpha, g / 2, g, 4 * x * y / (s * s), q * q};
  return std::pow(s, 2 * alpha - g - 1) * gauss_2f1(hp);
}

// exponent of the y = x singularity of the kernel
double diagonal_exponent(double alpha) {
  if (alpha < 0.5) return 2 * alpha - 1;
  if (alpha == 0.5) return -0.25;  // logarithmic
  return 0.0;
}

EvalResult potential_by_kernel(const TestFunction& f, double x, double alpha, double g, double pref,
                               double tol) {
  IntegrationOptions<double> opts;
  opts.abs_tol = tol / (2 * pref);
  const double s = f.origin_power();
  if (x == 0) {
    auto h = [&](double y) { return f(y) * std::pow(y, 2 * alpha - 1); };
    auto r = integrate_semi_infinite(h, 0.0, std::min(0.0, 2 * alpha - 1 + s), decay_length(f), opts);
    return {pref * r.value, pref * r.error, "kernel", r.evaluations};
  }
  const double e = diagonal_exponent(alpha);
  auto inner = [&](double y, Offsets<double> o) {
    return f(y) * potential_kernel(x, y, o.from_right, alpha, g) * std::pow(y, g);
  };
  auto outer = [&](double y, Offsets<double> o) {
    return f(y) * potential_kernel(x, y, o.from_left, alpha, g) * std::pow(y, g);
  };
  auto a = integrate_finite(inner, 0.0, x, EndpointExponents<double>{std::min(0.0, g + s), e}, opts);
  auto b = integrate_semi_infinite(outer, x, e, decay_length(f), opts);
  return {pref * (a.value + b.value), pref * (a.error + b.error), "kernel", a.evaluations + b.evaluations};
}

EvalResult potential_by_translation(const TestFunction& f, double x, double alpha, GammaWeight gamma,
                                    double pref, double tol) {
  IntegrationOptions<double> opts;
  opts.abs_tol = tol / pref;
  auto h = [&](double y) {
    return translate(f, x, y, gamma, TranslationMethod::closed_form_auto, kInternalTranslationTol).value *
           std::pow(y, 2 * alpha - 1);
  };
  const double left = 2 * alpha - 1 + (x == 0 ? f.origin_power() : 0.0);
  auto r = integrate_semi_infinite(h, 0.0, std::min(0.0, left), x + decay_length(f), opts);
  return {pref * r.value, pref * r.error, "translation", r.evaluations};
}

struct LaguerreCandidate {
  double value;
  double diff;
  const char* form;
  double lambda;
};

// Both integral forms as Gauss-Laguerre sums at orders n and n - 2.
EvalResult potential_by_laguerre(const TestFunction& f, double x, double alpha, GammaWeight gamma, double pref,
                                 int n) {
  const double g = gamma.value();
  const int m = std::max(1, n - 2);
  const bool gauss = gaussian_rate(f) > 0;
  const double c = gauss ? gaussian_rate(f) : 1.0;

  auto translated = [&](double y) {
    return translate(f, x, y, gamma, TranslationMethod::closed_form_auto, kInternalTranslationTol).value;
  };
  auto kernel_term = [&](double y) { return f(y) * potential_kernel(x, y, std::abs(x - y), alpha, g); };

  // u = lambda c y^2:  y^{2alpha-1} dy = (lambda c)^{-alpha}/2 u^{alpha-1} du,
  //                    y^gamma dy = (lambda c)^{-(gamma+1)/2}/2 u^{(gamma-1)/2} du
  // u = lambda y:      y^{2alpha-1} dy = lambda^{-2alpha} u^{2alpha-1} du,  y^gamma dy = lambda^{-gamma-1} u^gamma du
  const double pot_exp = gauss ? alpha - 1 : 2 * alpha - 1;
  const double dri_exp = gauss ? (g - 1) / 2 : g;
  auto y_of = [&](double u, double lam) { return gauss ? std::sqrt(u / (lam * c)) : u / lam; };
  auto pot_factor = [&](double lam) {
    return gauss ? std::pow(lam * c, -alpha) / 2 : std::pow(lam, -2 * alpha);
  };
  auto dri_factor = [&](double lam) {
    return gauss ? std::pow(lam * c, -(g + 1) / 2) / 2 : std::pow(lam, -g - 1);
  };

  const auto pot_n = gauss_laguerre_rule<double>(n, pot_exp), pot_m = gauss_laguerre_rule<double>(m, pot_exp);
  const auto dri_n = gauss_laguerre_rule<double>(n, dri_exp), dri_m = gauss_laguerre_rule<double>(m, dri_exp);

  std::vector<LaguerreCandidate> cands;
  std::size_t evals = 0;
  for (double lam : laguerre_scales()) {
    auto h = [&](double u) { return std::exp(u) * translated(y_of(u, lam)); };
    const double qn = pot_factor(lam) * pot_n.apply(h);
    const double qm = pot_factor(lam) * pot_m.apply(h);
    cands.push_back({qn, std::abs(qn - qm), "translation", lam});
    evals += n + m;
  }
  {
    // the direct kernel form at the natural scale only
    const double lam = 1 / c;
    auto h = [&](double u) { return std::exp(u) * kernel_term(y_of(u, lam)); };
    const double qn = dri_factor(lam) * dri_n.apply(h);
    const double qm = dri_factor(lam) * dri_m.apply(h);
    cands.push_back({qn, std::abs(qn - qm), "kernel", lam});
    evals += n + m;
  }
  const auto best = std::min_element(cands.begin(), cands.end(),
                                     [](const auto& a, const auto& b) { return a.diff < b.diff; });
  std::ostringstream method;
  method << "gauss_laguerre[n=" << n << ",form=" << best->form << ",lambda=" << best->lambda << "]";
  // two rules agreeing to the last bit still carry rounding error
  const double rounding = 8 * n * std::numeric_limits<double>::epsilon() * std::abs(pref * best->value);
  return {pref * best->value, std::max(pref * best->diff, rounding), method.str(), evals};
}

int first_active_power(double alpha) { return static_cast<int>(std::floor(alpha)) + 1; }

// sum_k (-1)^k C_l^k k^{2m}
double moment_sum(DiffOrder l, int m) {
  double s = 0;
  for (int k = 1; k <= l.value(); ++k) s += (k % 2 ? -1.0 : 1.0) * l.binomial(k) * std::pow(double(k), 2 * m);
  return s;
}

double bessel_power_any(const TestFunction& f, int m, double x, double g) {
  if (auto v = f.bessel_power(m, x, g)) return *v;
  if (m == 1) return f.bessel_op(x, g);
  std::function<double(double)> inner = [&f, m, g](double s) { return bessel_power_any(f, m - 1, s, g); };
  return bessel_op_fd(inner, x, g, 1e-2);
}

// int_{t}^{inf} env(k s - x) s^{-1-2alpha} ds summed over k = 1..l with weights C_l^k
double tail_bound(const TestFunction& f, double x, double t, DiffOrder l, double alpha) {
  IntegrationOptions<double> opts;
  opts.abs_tol = 0;
  opts.rel_tol = 1e-3;
  double total = 0;
  for (int k = 1; k <= l.value(); ++k) {
    auto h = [&](double s) { return f.envelope(k * s - x) * std::pow(s, -1 - 2 * alpha); };
    total += l.binomial(k) * integrate_semi_infinite(h, t, 0.0, t, opts).value;
  }
  return total;
}

}  // namespace

FracOrder FracOrder::potential(double alpha, GammaWeight gamma) {
  if (!std::isfinite(alpha) || !(alpha > 0 && alpha < (gamma.value() + 1) / 2))
    throw DomainError("potential order must satisfy 0 < alpha < (gamma + 1)/2");
  return FracOrder(alpha, OrderRole::potential, false);
}

FracOrder FracOrder::derivative(double alpha, bool experimental) {
  if (!std::isfinite(alpha) || !(alpha > 0)) throw DomainError("derivative order must be positive");
  if (experimental) {
    if (is_integer(alpha)) throw DomainError("derivative order must not be an integer");
  } else if (!(alpha < 1)) {
    throw DomainError("derivative order must satisfy 0 < alpha < 1");
  }
  return FracOrder(alpha, OrderRole::derivative, experimental);
}

DiffOrder::DiffOrder(int l) : l_(l) {
  if (l < 1) throw DomainError("difference order must be >= 1");
}

DiffOrder DiffOrder::for_order(double alpha) {
  if (!(alpha > 0) || !std::isfinite(alpha)) throw DomainError("difference order needs alpha > 0");
  return DiffOrder(2 * static_cast<int>(std::floor(alpha)) + 1);
}

double DiffOrder::binomial(int k) const {
  if (k < 0 || k > l_) return 0.0;
  double c = 1;
  for (int i = 1; i <= k; ++i) c = c * (l_ - k + i) / i;
  return c;
}

PotentialScheme PotentialScheme::gauss_laguerre(int n) {
  if (n < 2 || n > 128) throw DomainError("gauss_laguerre scheme needs 2 <= n <= 128");
  return {Tag::gauss_laguerre, n};
}

double potential_prefactor(double alpha, GammaWeight gamma) {
  const double h = (gamma.value() + 1) / 2;
  return std::exp2(1 - 2 * alpha) * gamma_fn(h - alpha) / (gamma_fn(h) * gamma_fn(alpha));
}

EvalResult riesz_b_potential(const TestFunction& f, double x, FracOrder alpha, GammaWeight gamma,
                             PotentialScheme scheme, double tol) {
  const double a = alpha.value(), g = gamma.value();
  if (alpha.role() != OrderRole::potential) throw DomainError("riesz_b_potential: needs a potential order");
  if (!(a < (g + 1) / 2)) throw DomainError("riesz_b_potential: requires alpha < (gamma + 1)/2");
  if (!(x >= 0) || !std::isfinite(x)) throw DomainError("riesz_b_potential: requires finite x >= 0");
  if (!(tol > 0)) throw DomainError("riesz_b_potential: tol must be positive");
  if (f.is_zero()) return {0.0, 0.0, "zero", 0};
  require_integrable(f, a, "riesz_b_potential");
  if (f.origin_power() + g <= -1) throw DomainError("riesz_b_potential: f y^gamma is not integrable at 0");

  const double pref = potential_prefactor(a, gamma);
  switch (scheme.tag) {
    case PotentialScheme::Tag::kernel:
      return potential_by_kernel(f, x, a, g, pref, tol);
    case PotentialScheme::Tag::translation:
      return potential_by_translation(f, x, a, gamma, pref, tol);
    case PotentialScheme::Tag::gauss_laguerre:
      if (scheme.n < 2 || scheme.n > 128) throw DomainError("gauss_laguerre scheme needs 2 <= n <= 128");
      return potential_by_laguerre(f, x, a, gamma, pref, scheme.n);
  }
  throw DomainError("riesz_b_potential: unknown scheme");
}

double gen_finite_difference(const TestFunction& f, double x, double t, DiffOrder l, GammaWeight gamma) {
  if (!(x >= 0 && t >= 0)) throw DomainError("gen_finite_difference: requires x, t >= 0");
  double s = f(x);
  for (int k = 1; k <= l.value(); ++k) {
    const double tk =
        translate(f, x, k * t, gamma, TranslationMethod::closed_form_auto, kInternalTranslationTol).value;
    s += (k % 2 ? -1.0 : 1.0) * l.binomial(k) * tk;
  }
  return s;
}

double norm_const_d(DiffOrder l, FracOrder alpha, GammaWeight gamma) {
  const double a = alpha.value();
  const double sn = std::sin(a * kPi);
  if (is_integer(a) || sn == 0) throw DomainError("norm_const_d: sin(alpha pi) = 0");
  const double h = (gamma.value() + 1) / 2;
  double sum = 0;
  for (int k = 1; k <= l.value(); ++k) sum += (k % 2 ? 1.0 : -1.0) * l.binomial(k) * std::pow(double(k), 2 * a);
  return kPi * gamma_fn(h) / (std::exp2(2 * a + 1) * gamma_fn(h + a) * gamma_fn(0.5 + a)) * sum / sn;
}

double taylor_delsarte_phi(int k, double y, GammaWeight gamma) {
  if (k < 0) throw DomainError("taylor_delsarte_phi: k must be >= 0");
  const double h = (gamma.value() + 1) / 2;
  return std::exp(std::lgamma(h) - std::lgamma(k + 1.0) - std::lgamma(h + k)) * std::pow(y / 2, 2 * k);
}

EvalResult frac_derivative(const TestFunction& f, double x, FracOrder alpha, GammaWeight gamma,
                           const DerivativeOptions& opts) {
  const double a = alpha.value(), g = gamma.value();
  if (alpha.role() != OrderRole::derivative) throw DomainError("frac_derivative: needs a derivative order");
  if (!(x >= 0) || !std::isfinite(x)) throw DomainError("frac_derivative: requires finite x >= 0");
  if (!(opts.t_split > 0) || !std::isfinite(opts.t_split)) throw DomainError("frac_derivative: t_split must be > 0");
  if (opts.t_max && !(*opts.t_max > opts.t_split)) throw DomainError("frac_derivative: t_max must exceed t_split");
  if (!(opts.tol > 0)) throw DomainError("frac_derivative: tol must be positive");
  if (f.kind() == TestFunction::Kind::constant) return {0.0, 0.0, "constant", 0};
  if (f.decay().kind == Decay::Kind::none) throw DomainError("frac_derivative: f must be bounded");

  const DiffOrder l = DiffOrder::for_order(a);
  const double d = norm_const_d(l, alpha, gamma);
  const double budget = opts.tol * std::abs(d);
  const double ts = opts.t_split;

  // [0, ts]: D(t) = sum_m S_m c_m t^{2m} B^m f(x), c_m = phi_m(t)/t^{2m}
  const int m0 = first_active_power(a);
  double small = 0, last = 0;
  const bool analytic = f.bessel_power(m0 + 1, x, g).has_value();
  for (int m = m0; m < m0 + (analytic ? 8 : 3); ++m) {
    const double cm = taylor_delsarte_phi(m, 1.0, gamma);
    const double term =
        moment_sum(l, m) * cm * bessel_power_any(f, m, x, g) * std::pow(ts, 2 * m - 2 * a) / (2 * m - 2 * a);
    small += term;
    last = term;
    if (m > m0 && std::abs(term) < budget / 100) break;
  }
  const double small_err = std::abs(last);

  // tail: the k = 0 term of D is f(x), the rest is bounded by the envelope
  double tmax;
  double tail_err;
  if (opts.t_max) {
    tmax = *opts.t_max;
    tail_err = tail_bound(f, x, tmax, l, a);
    if (tail_err > budget)
      throw AccuracyError("frac_derivative: tail bound exceeds tol at the given t_max", std::numeric_limits<double>::quiet_NaN(), tail_err / std::abs(d));
  } else {
    tmax = std::max({10.0, 4 * (x + 1), 2 * ts});
    tail_err = tail_bound(f, x, tmax, l, a);
    while (tail_err > budget / 10) {
      tmax *= 2;
      if (tmax > kMaxCutoff)
        throw AccuracyError("frac_derivative: f decays too slowly for the requested tol",
                            std::numeric_limits<double>::quiet_NaN(), tail_err / std::abs(d));
      tail_err = tail_bound(f, x, tmax, l, a);
    }
  }
  const double tail = f(x) * std::pow(tmax, -2 * a) / (2 * a);

  // [ts, tmax] in chunks: geometric up to length 64, uniform after
  std::vector<double> knots{ts};
  for (double len = ts; knots.back() < tmax;) {
    knots.push_back(std::min(tmax, knots.back() + len));
    len = std::min(2 * len, 64.0);
  }
  const std::size_t chunks = knots.size() - 1;
  IntegrationOptions<double> io;
  io.abs_tol = budget / 2 / chunks;
  auto h = [&](double t) { return gen_finite_difference(f, x, t, l, gamma) * std::pow(t, -1 - 2 * a); };
  double middle = 0, middle_err = 0;
  std::size_t evals = 0;
  for (std::size_t i = 0; i < chunks; ++i) {
    auto r = integrate_finite(h, knots[i], knots[i + 1], EndpointExponents<double>{0, 0}, io);
    middle += r.value;
    middle_err += r.error;
    evals += r.evaluations;
  }

  const double value = (small + middle + tail) / d;
  const double err = (small_err + middle_err + tail_err) / std::abs(d);
  if (err > opts.tol)
    throw AccuracyError("frac_derivative: error estimate exceeds tol", value, err);
  std::ostringstream method;
  method << "taylor_delsarte+adaptive[t_split=" << ts << ",t_max=" << tmax << "]";
  return {value, err, method.str(), evals};
}

EvalResult riesz_classical(const TestFunction& f, double x, FracOrder alpha, double tol) {
  const double a = alpha.value();
  if (alpha.role() != OrderRole::potential || !(a < 0.5))
    throw DomainError("riesz_classical: requires a potential order 0 < alpha < 1/2");
  if (!std::isfinite(x)) throw DomainError("riesz_classical: x must be finite");
  if (!(tol > 0)) throw DomainError("riesz_classical: tol must be positive");
  if (f.is_zero()) return {0.0, 0.0, "zero", 0};
  require_integrable(f, a, "riesz_classical");

  const double k = 1 / (2 * gamma_fn(2 * a) * std::cos(a * kPi));
  IntegrationOptions<double> opts;
  opts.abs_tol = tol / k;
  auto h = [&](double s) { return (f(x + s) + f(x - s)) * std::pow(s, 2 * a - 1); };
  auto r = integrate_semi_infinite(h, 0.0, 2 * a - 1, std::abs(x) + decay_length(f), opts);
  return {k * r.value, k * r.error, "classical", r.evaluations};
}

}  // namespace frabessel
