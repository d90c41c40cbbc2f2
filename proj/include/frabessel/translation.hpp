#pragma once

#include "frabessel/eval_result.hpp"
#include "frabessel/test_function.hpp"

namespace frabessel {

/// The parameter gamma >= 0 of B_gamma = D^2 + (gamma/x) D.
class GammaWeight {
 public:
  explicit GammaWeight(double gamma);

  double value() const noexcept { return gamma_; }
  bool degenerate() const noexcept { return gamma_ == 0.0; }
  /// C(gamma) = Gamma((gamma+1)/2) / (sqrt(pi) Gamma(gamma/2)); throws for gamma = 0.
  double normalization() const;
  /// nu = (gamma - 1)/2
  double bessel_order() const noexcept { return (gamma_ - 1) / 2; }

 private:
  double gamma_;
};

enum class TranslationMethod { trig, unit_interval, kernel, closed_form_auto };

inline constexpr double kDefaultTranslationTol = 1e-10;

/// Generalized translation T^y_x f(x) of an even function.
///   trig:          C int_0^pi f(sqrt(x^2 + y^2 - 2xy cos phi)) sin^{gamma-1} phi dphi
///   unit_interval: 2^{gamma-1} C int_0^1 f((x+y) sqrt(1 - 4xyz/(x+y)^2)) (z(1-z))^{gamma/2-1} dz
///   kernel:        2^gamma C (4xy)^{1-gamma} int_{|x-y|}^{x+y} z f(z) [(z^2-(x-y)^2)((x+y)^2-z^2)]^{gamma/2-1} dz
/// gamma = 0 always gives (f(x+y) + f(x-y))/2. closed_form_auto uses the
/// closed forms for Gaussians, powers, constants and j_{(gamma-1)/2}, and the
/// kernel representation otherwise.
EvalResult translate(const TestFunction& f, double x, double y, GammaWeight gamma,
                     TranslationMethod method = TranslationMethod::closed_form_auto,
                     double tol = kDefaultTranslationTol);

/// T^y_x x^p = (x+y)^p 2F1(-p/2, gamma/2; gamma; 4xy/(x+y)^2), gamma > 0.
double translate_power(double p, double x, double y, GammaWeight gamma);

/// T^y_x e^{-x^2} = Gamma((gamma+1)/2) (xy)^{(1-gamma)/2} e^{-x^2-y^2} I_{(gamma-1)/2}(2xy),
/// evaluated through the scaled normalized i_nu so that it stays finite for
/// xy -> 0 and for large xy. gamma > 0.
double translate_gaussian(double x, double y, GammaWeight gamma);

}  // namespace frabessel
