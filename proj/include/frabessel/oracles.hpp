#pragma once

// Closed-form reference values for the two worked examples and the
// published tables that go with them.

#include <optional>
#include <string_view>
#include <vector>

namespace frabessel {

struct OracleSpec {
  enum class Name { gaussian_potential, j_derivative_gamma2 };
  Name name;
  double alpha;
  double gamma;

  /// Throws DomainError outside the parameter window of the oracle.
  static OracleSpec gaussian_potential(double alpha, double gamma);
  static OracleSpec j_derivative_gamma2(double alpha);

  double operator()(double x) const;
};

/// Gamma((gamma+1)/2 - alpha) / (2^{2alpha} Gamma((gamma+1)/2)) e^{-x^2} 1F1(alpha, (gamma+1)/2; x^2),
/// the potential of e^{-x^2}; 0 < alpha < (gamma+1)/2, x >= 0.
double oracle_gaussian_potential(double x, double alpha, double gamma);

/// 2^{2alpha} Gamma(3/2+alpha) Gamma(1/2+alpha) / (Gamma(3/2) Gamma(2alpha+2))
double oracle_j_derivative_coefficient(double alpha);

/// Derivative of order alpha of j_{1/2}(x) = sin x / x at gamma = 2:
/// coefficient times sin x / x (the coefficient itself at x = 0).
double oracle_j_derivative_gamma2(double x, double alpha);

struct Example1Row {
  double x, exact, abs_error;
};

struct Example2Row {
  double x, published_numeric, exact, published_abs_error;
};

/// Published tables (potential of e^{-x^2} at alpha = 0.7, gamma = 0.5, and
/// derivative of j_{1/2} at alpha = 0.2, gamma = 2), dot-decimal CSV text.
std::string_view example1_csv();
std::string_view example2_csv();

const std::vector<Example1Row>& example1_table();
const std::vector<Example2Row>& example2_table();

}  // namespace frabessel
