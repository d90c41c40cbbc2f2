#pragma once

// Fractional powers of the Bessel operator: Riesz B-potentials (negative
// powers) and Bessel-Riesz derivatives (positive powers).

#include <optional>

#include "frabessel/eval_result.hpp"
#include "frabessel/test_function.hpp"
#include "frabessel/translation.hpp"

namespace frabessel {

enum class OrderRole { potential, derivative };

/// Fractional order alpha with the window that goes with its role:
/// potentials need 0 < alpha < (gamma+1)/2, derivatives 0 < alpha < 1
/// (any non-integer alpha > 0 when `experimental` is set).
class FracOrder {
 public:
  static FracOrder potential(double alpha, GammaWeight gamma);
  static FracOrder derivative(double alpha, bool experimental = false);

  double value() const noexcept { return alpha_; }
  OrderRole role() const noexcept { return role_; }
  bool experimental() const noexcept { return experimental_; }

 private:
  FracOrder(double alpha, OrderRole role, bool experimental)
      : alpha_(alpha), role_(role), experimental_(experimental) {}

  double alpha_;
  OrderRole role_;
  bool experimental_;
};

/// Order l of the generalized finite difference.
class DiffOrder {
 public:
  explicit DiffOrder(int l);
  /// l = 2 floor(alpha) + 1
  static DiffOrder for_order(double alpha);

  int value() const noexcept { return l_; }
  double binomial(int k) const;

 private:
  int l_;
};

struct PotentialScheme {
  enum class Tag { kernel, translation, gauss_laguerre };
  Tag tag{Tag::kernel};
  int n{10};

  static PotentialScheme kernel() { return {Tag::kernel, 10}; }
  static PotentialScheme translation() { return {Tag::translation, 10}; }
  static PotentialScheme gauss_laguerre(int n = 10);
};

inline constexpr double kDefaultPotentialTol = 1e-10;
inline constexpr double kDefaultDerivativeTol = 1e-6;

/// 2^{1-2alpha} Gamma((gamma+1)/2 - alpha) / (Gamma((gamma+1)/2) Gamma(alpha))
double potential_prefactor(double alpha, GammaWeight gamma);

/// Riesz B-potential (B_gamma)^{-alpha} f at x >= 0.
///   kernel:      prefactor * int f(y) (x+y)^{2alpha-gamma-1} 2F1((gamma+1)/2-alpha, gamma/2; gamma; 4xy/(x+y)^2) y^gamma dy,
///                split at y = x; for gamma = 0 the kernel is ((x+y)^{2alpha-1} + |x-y|^{2alpha-1})/2.
///   translation: prefactor * int (T^y_x f)(x) y^{2alpha-1} dy.
///   gauss_laguerre: n-node Gauss-Laguerre sums of both integrals after the
///                substitution u = lambda c y^2 (c the Gaussian decay rate,
///                or u = lambda y for power decay) over a fixed set of
///                lambda; the sum whose orders n and n-2 agree best is
///                returned, with that difference as the error estimate.
/// `tol` is the absolute target of the adaptive schemes.
EvalResult riesz_b_potential(const TestFunction& f, double x, FracOrder alpha, GammaWeight gamma,
                             PotentialScheme scheme = PotentialScheme::kernel(), double tol = kDefaultPotentialTol);

/// sum_{k=0}^{l} (-1)^k C_l^k T^{kt}_x f(x)
double gen_finite_difference(const TestFunction& f, double x, double t, DiffOrder l, GammaWeight gamma);

/// d_{l,gamma}(alpha) = pi Gamma((gamma+1)/2) / (2^{2alpha+1} Gamma((1+gamma)/2+alpha) Gamma(1/2+alpha))
///                      * sum_k (-1)^{k+1} C_l^k k^{2alpha} / sin(alpha pi)
double norm_const_d(DiffOrder l, FracOrder alpha, GammaWeight gamma);

/// phi_k(y) = Gamma((gamma+1)/2) / (k! Gamma((gamma+1)/2 + k)) (y/2)^{2k}
double taylor_delsarte_phi(int k, double y, GammaWeight gamma);

struct DerivativeOptions {
  double t_split{0.1};
  std::optional<double> t_max{};  // chosen from the tail bound when empty
  double tol{kDefaultDerivativeTol};
};

/// Bessel-Riesz derivative (1/d_{l,gamma}(alpha)) int_0^inf (generalized difference)(t) t^{-1-2alpha} dt.
/// [0, t_split]: Taylor-Delsarte expansion in powers of B_gamma f(x),
/// integrated term by term. [t_split, t_max]: adaptive quadrature.
/// (t_max, inf): the f(x) term exactly, the translated terms bounded by the
/// decay envelope of f.
EvalResult frac_derivative(const TestFunction& f, double x, FracOrder alpha, GammaWeight gamma,
                           const DerivativeOptions& opts = {});

/// Classical one-dimensional Riesz potential
/// 1/(2 Gamma(2alpha) cos(alpha pi)) int_R f(y) |y - x|^{2alpha-1} dy, 0 < alpha < 1/2.
EvalResult riesz_classical(const TestFunction& f, double x, FracOrder alpha, double tol = kDefaultPotentialTol);

}  // namespace frabessel
