#pragma once

#include "frabessel/eval_result.hpp"
#include "frabessel/test_function.hpp"

namespace frabessel {

/// Index gamma > 0 of the Hankel transform with kernel j_{(gamma-1)/2}(x xi)
/// and measure x^gamma dx.
class HankelIndex {
 public:
  explicit HankelIndex(double gamma);

  double gamma() const noexcept { return gamma_; }
  double bessel_order() const noexcept { return (gamma_ - 1) / 2; }
  /// 2^{1-gamma} / Gamma((gamma+1)/2)^2
  double inverse_prefactor() const noexcept { return inverse_prefactor_; }

 private:
  double gamma_;
  double inverse_prefactor_;
};

inline constexpr int kDefaultHankelOrder = 48;

/// H[f](xi) = int_0^inf f(x) j_{(gamma-1)/2}(x xi) x^gamma dx by an n-point
/// Gauss-Laguerre sum. For Gaussian decay e^{-c x^2} the sum runs in u = c x^2
/// with the weight u^{(gamma+s-1)/2} e^{-u}, where f ~ x^s at the origin; for
/// power decay it runs in x with the weight x^{gamma+s} e^{-x}. The error
/// estimate compares orders n and n-2.
EvalResult hankel_forward(const TestFunction& f, double xi, HankelIndex idx, int n = kDefaultHankelOrder);

/// H^{-1}[F](x) = 2^{1-gamma}/Gamma((gamma+1)/2)^2 int_0^inf j_{(gamma-1)/2}(x xi) F(xi) xi^gamma dxi.
EvalResult hankel_inverse(const TestFunction& big_f, double x, HankelIndex idx, int n = kDefaultHankelOrder);

}  // namespace frabessel
