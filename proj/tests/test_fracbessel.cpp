#include <cmath>
#include <numbers>

#include "doctest.h"
#include "frabessel/errors.hpp"
#include "frabessel/fracbessel.hpp"
#include "frabessel/hankel.hpp"
#include "frabessel/oracles.hpp"
#include "frabessel/specfun.hpp"

using namespace frabessel;

namespace {

constexpr double kPi = std::numbers::pi;

double potential(const TestFunction& f, double x, double alpha, double gamma, PotentialScheme s) {
  const GammaWeight g(gamma);
  return riesz_b_potential(f, x, FracOrder::potential(alpha, g), g, s).value;
}

// j_nu with nu = (gamma-1)/2 is an eigenfunction: D j = lambda j with
// lambda = M(-2alpha) sum_k (-1)^k C_l^k k^{2alpha} / d_{l,gamma}(alpha), where
// M(s) = 2^{s-1} Gamma(h) Gamma(s/2) / Gamma(h - s/2), h = (gamma+1)/2, is the
// continued Mellin transform of j_nu.
double eigenvalue(double a, double gm, bool experimental = false) {
  const DiffOrder l = DiffOrder::for_order(a);
  const double h = (gm + 1) / 2;
  const double m = std::exp2(-2 * a - 1) * std::tgamma(h) * std::tgamma(-a) / std::tgamma(h + a);
  double sum = 0;
  for (int k = 1; k <= l.value(); ++k) sum += (k % 2 ? -1.0 : 1.0) * l.binomial(k) * std::pow(double(k), 2 * a);
  return m * sum / norm_const_d(l, FracOrder::derivative(a, experimental), GammaWeight(gm));
}

}  // namespace

TEST_CASE("FracOrder and DiffOrder windows") {
  CHECK_NOTHROW(FracOrder::potential(0.7, GammaWeight(0.5)));
  CHECK_THROWS_AS(FracOrder::potential(0.75, GammaWeight(0.5)), DomainError);
  CHECK_THROWS_AS(FracOrder::potential(0.0, GammaWeight(0.5)), DomainError);
  CHECK_THROWS_AS(FracOrder::derivative(1.0), DomainError);
  CHECK_THROWS_AS(FracOrder::derivative(1.0, true), DomainError);
  CHECK(FracOrder::derivative(1.3, true).experimental());
  CHECK(DiffOrder::for_order(0.4).value() == 1);
  CHECK(DiffOrder::for_order(1.4).value() == 3);
  CHECK(DiffOrder(4).binomial(2) == 6.0);
  CHECK(DiffOrder(4).binomial(5) == 0.0);
  CHECK_THROWS_AS(DiffOrder(0), DomainError);
  CHECK_THROWS_AS(PotentialScheme::gauss_laguerre(1), DomainError);
}

TEST_CASE("riesz_b_potential examples") {
  const auto g = TestFunction::gaussian();
  const auto lag = PotentialScheme::gauss_laguerre(10);
  CHECK(std::abs(potential(g, 0.2, 0.7, 0.5, lag) - 6.0047675) <= 5e-8);
  CHECK(std::abs(potential(g, 4.0, 0.7, 0.5, lag) - 4.952825466) <= 5e-8);
  CHECK(std::abs(potential(g, 1.0, 0.9, 2.0, PotentialScheme::kernel()) - oracle_gaussian_potential(1, 0.9, 2)) <=
        1e-6);
  CHECK(potential(TestFunction::zero(), 1.0, 0.7, 0.5, PotentialScheme::kernel()) == 0.0);
}

TEST_CASE("riesz_b_potential preconditions") {
  const GammaWeight g(0.5);
  const auto a = FracOrder::potential(0.7, g);
  CHECK_THROWS_AS(riesz_b_potential(TestFunction::gaussian(), -1.0, a, g), DomainError);
  CHECK_THROWS_AS(riesz_b_potential(TestFunction::one(), 1.0, a, g), DomainError);
  CHECK_THROWS_AS(riesz_b_potential(TestFunction::power(-1.0), 1.0, a, g), DomainError);
  // order built for a wider window than the gamma it is used with
  CHECK_THROWS_AS(riesz_b_potential(TestFunction::gaussian(), 1.0, FracOrder::potential(1.2, GammaWeight(2)), g),
                  DomainError);
  CHECK_THROWS_AS(riesz_b_potential(TestFunction::gaussian(), 1.0, FracOrder::derivative(0.5), g), DomainError);
}

TEST_CASE("Gauss-Laguerre potential against the closed form") {
  const auto g = TestFunction::gaussian();
  for (const auto& row : example1_table()) {
    const double v = potential(g, row.x, 0.7, 0.5, PotentialScheme::gauss_laguerre(10));
    INFO("x=" << row.x);
    CHECK(std::abs(v - oracle_gaussian_potential(row.x, 0.7, 0.5)) <= 5e-8);
  }
}

TEST_CASE("schemes agree") {
  const auto g = TestFunction::gaussian();
  for (double x : {0.2, 1.0, 2.0}) {
    const double k = potential(g, x, 0.7, 0.5, PotentialScheme::kernel());
    const double t = potential(g, x, 0.7, 0.5, PotentialScheme::translation());
    const double l = potential(g, x, 0.7, 0.5, PotentialScheme::gauss_laguerre(24));
    INFO("x=" << x);
    CHECK(std::abs(k - t) <= 1e-6);
    CHECK(std::abs(k - l) <= 1e-6);
    CHECK(std::abs(t - l) <= 1e-6);
  }
}

TEST_CASE("kernel scheme across the order window") {
  // alpha < 1/2 has an integrable singularity at y = x, alpha = 1/2 a logarithmic one
  const auto g = TestFunction::gaussian();
  for (double gm : {0.5, 2.0})
    for (double a : {0.2, 0.5, 0.7, 1.1})
      for (double x : {0.0, 0.5, 1.5}) {
        if (!(a < (gm + 1) / 2)) continue;
        INFO("gamma=" << gm << " alpha=" << a << " x=" << x);
        CHECK(std::abs(potential(g, x, a, gm, PotentialScheme::kernel()) - oracle_gaussian_potential(x, a, gm)) <=
              1e-8);
        CHECK(std::abs(potential(g, x, a, gm, PotentialScheme::translation()) -
                       oracle_gaussian_potential(x, a, gm)) <= 1e-8);
      }
}

TEST_CASE("potential scales with the Gaussian rate") {
  // f(sqrt(c) x) maps to c^{-alpha} (I f)(sqrt(c) x)
  const double c = 2.5, a = 0.6, gm = 1.5;
  const auto f = TestFunction::gaussian(c);
  for (double x : {0.3, 1.0}) {
    const double want = std::pow(c, -a) * oracle_gaussian_potential(std::sqrt(c) * x, a, gm);
    CHECK(std::abs(potential(f, x, a, gm, PotentialScheme::kernel()) - want) <= 1e-8);
  }
}

TEST_CASE("alpha = 1 inverts the Bessel operator up to sign") {
  // I^1 B f = -f: B_gamma is negative on decaying functions, I^1 is the
  // inverse of -B_gamma
  const double gm = 2.5;
  const auto bf = bessel_op_of_gaussian(gm);
  const auto g = TestFunction::gaussian();
  for (double x : {0.5, 1.0, 2.0}) {
    INFO("x=" << x);
    CHECK(std::abs(potential(bf, x, 1.0, gm, PotentialScheme::kernel()) + g(x)) <= 1e-6);
    CHECK(std::abs(potential(bf, x, 1.0, gm, PotentialScheme::translation()) + g(x)) <= 1e-6);
  }
}

TEST_CASE("Hankel spectral check") {
  const double a = 0.7, gm = 0.5;
  const HankelIndex idx(gm);
  const auto g = TestFunction::gaussian();
  const auto multiplied = TestFunction::custom(
      "spectral", [&](double t) { return std::pow(t, -2 * a) * hankel_forward(g, t, idx).value; },
      Decay::gaussian(0.25, 1.0), -2 * a);
  for (double x : {0.2, 1.0}) {
    const double h = hankel_inverse(multiplied, x, idx).value;
    INFO("x=" << x);
    CHECK(std::abs(h - potential(g, x, a, gm, PotentialScheme::kernel())) <= 1e-3);
  }
}

TEST_CASE("gen_finite_difference") {
  const auto g = TestFunction::gaussian();
  CHECK(gen_finite_difference(g, 1.3, 0.0, DiffOrder(1), GammaWeight(2)) == 0.0);
  CHECK(std::abs(gen_finite_difference(g, 1.0, 0.5, DiffOrder(1), GammaWeight(2)) -
                 (std::exp(-1.0) - translate_gaussian(1.0, 0.5, GammaWeight(2)))) <= 1e-15);
  CHECK(gen_finite_difference(TestFunction::one(), 0.4, 1.7, DiffOrder(2), GammaWeight(1.5)) == 0.0);
}

TEST_CASE("norm_const_d") {
  const auto d = [](int l, double a, double gm) {
    return norm_const_d(DiffOrder(l), FracOrder::derivative(a), GammaWeight(gm));
  };
  // direct evaluation with tgamma, sum = 1 for l = 1
  const double a = 0.2;
  const double want = kPi * std::tgamma(1.5) / (std::pow(2, 2 * a + 1) * std::tgamma(1.5 + a) * std::tgamma(0.5 + a)) /
                      std::sin(a * kPi);
  CHECK(std::abs(d(1, 0.2, 2) - want) <= 1e-14);
  CHECK(std::abs(d(1, 0.2, 2) - 1.5215) <= 5e-4);  // approximate value, the direct formula gives 1.521772
  CHECK(std::abs(d(1, 0.5, 1) - std::sqrt(kPi) / 2) <= 1e-15);
  CHECK(std::abs(d(2, 0.2, 2) - want * (2 - std::pow(2, 0.4))) <= 1e-14);
  // integer orders are poles; FracOrder already refuses them
  CHECK_THROWS_AS(FracOrder::derivative(2.0, true), DomainError);
}

TEST_CASE("taylor_delsarte_phi") {
  CHECK(taylor_delsarte_phi(0, 3.7, GammaWeight(1.2)) == doctest::Approx(1.0).epsilon(1e-15));
  for (double gm : {0.0, 0.5, 2.0})
    CHECK(std::abs(taylor_delsarte_phi(1, 1.3, GammaWeight(gm)) - 1.3 * 1.3 / (2 * (gm + 1))) <= 1e-15);
  CHECK(std::abs(taylor_delsarte_phi(2, 2.0, GammaWeight(1)) - 0.25) <= 1e-15);
}

TEST_CASE("frac_derivative examples") {
  const GammaWeight g(2);
  const auto j = TestFunction::bessel_j(0.5);
  const auto a = FracOrder::derivative(0.2);
  CHECK(std::abs(frac_derivative(j, 0.01, a, g).value - 1.41372) <= 2e-3);
  CHECK(std::abs(frac_derivative(j, 3.2, a, g).value + 0.02579) <= 2e-3);
  CHECK(frac_derivative(TestFunction::constant(3.0), 1.0, a, g).value == 0.0);
  CHECK_THROWS_AS(frac_derivative(j, 1.0, FracOrder::potential(0.2, g), g), DomainError);
  DerivativeOptions bad;
  bad.t_split = 1.0;
  bad.t_max = 0.5;
  CHECK_THROWS_AS(frac_derivative(j, 1.0, a, g, bad), DomainError);
  DerivativeOptions short_tail;
  short_tail.t_max = 20.0;
  CHECK_THROWS_AS(frac_derivative(j, 1.0, a, g, short_tail), AccuracyError);
}

TEST_CASE("frac_derivative against the closed form") {
  const GammaWeight g(2);
  const auto j = TestFunction::bessel_j(0.5);
  for (double a : {0.2, 0.5, 0.8})
    for (double x : {0.0, 0.7, 2.5, 6.0}) {
      const auto r = frac_derivative(j, x, FracOrder::derivative(a), g);
      INFO("alpha=" << a << " x=" << x << " error=" << r.error);
      CHECK(std::abs(r.value - oracle_j_derivative_gamma2(x, a)) <= 2e-6);
      CHECK(r.error <= kDefaultDerivativeTol);
    }
}

TEST_CASE("eigenvalue oracle reproduces the gamma = 2 coefficient") {
  for (double a : {0.2, 0.5, 0.8})
    CHECK(std::abs(eigenvalue(a, 2.0) / oracle_j_derivative_coefficient(a) - 1) <= 1e-12);
}

TEST_CASE("frac_derivative of j_nu for other gamma") {
  const auto check = [](double gm, double a, double x) {
    const GammaWeight g(gm);
    const auto j = TestFunction::bessel_j(g.bessel_order());
    INFO("gamma=" << gm << " alpha=" << a << " x=" << x);
    CHECK(std::abs(frac_derivative(j, x, FracOrder::derivative(a), g).value - eigenvalue(a, gm) * j(x)) <= 2e-6);
  };
  for (double gm : {1.0, 3.0})
    for (double a : {0.3, 0.7})
      for (double x : {0.4, 3.0}) check(gm, a, x);
  check(0.5, 0.7, 1.0);
  // j_{-1/4} decays like x^{-1/4}: the tail bound would need t_max near 1e8
  const GammaWeight g(0.5);
  CHECK_THROWS_AS(frac_derivative(TestFunction::bessel_j(g.bessel_order()), 1.0, FracOrder::derivative(0.3), g),
                  AccuracyError);
}

TEST_CASE("frac_derivative of a Gaussian") {
  // e^{-x^2} = int of j_nu(xi x) against a Gaussian spectral density, so
  // D e^{-x^2} = -Gamma(-alpha)/(2 d) e^{-x^2} 1F1(-alpha, (gamma+1)/2; x^2)
  const auto f = TestFunction::gaussian();
  for (double gm : {1.0, 2.0})
    for (double a : {0.2, 0.4, 0.9})
      for (double x : {0.0, 0.5, 1.5, 3.0}) {
        const GammaWeight g(gm);
        const double d = norm_const_d(DiffOrder(1), FracOrder::derivative(a), g);
        const double want = -std::tgamma(-a) / (2 * d) * std::exp(-x * x) * kummer_1f1(-a, (gm + 1) / 2, x * x);
        INFO("gamma=" << gm << " alpha=" << a << " x=" << x);
        CHECK(std::abs(frac_derivative(f, x, FracOrder::derivative(a), g).value - want) <= 2e-6);
      }
}

TEST_CASE("doubling t_max stays within the error estimate") {
  const GammaWeight g(2);
  const auto j = TestFunction::bessel_j(0.5);
  const auto a = FracOrder::derivative(0.2);
  for (double x : {0.3, 4.0}) {
    const auto r = frac_derivative(j, x, a, g);
    const auto pos = r.method.find("t_max=");
    REQUIRE(pos != std::string::npos);
    DerivativeOptions o;
    o.t_max = 2 * std::stod(r.method.substr(pos + 6));
    const auto r2 = frac_derivative(j, x, a, g, o);
    INFO("x=" << x);
    CHECK(std::abs(r2.value - r.value) < r.error);
  }
}

TEST_CASE("custom functions use finite differences near t = 0") {
  const auto f = TestFunction::custom("gauss", [](double x) { return std::exp(-x * x); }, Decay::gaussian(1.0));
  const auto g = TestFunction::gaussian();
  const GammaWeight gm(1.5);
  const auto a = FracOrder::derivative(0.3);
  CHECK(std::abs(frac_derivative(f, 0.8, a, gm).value - frac_derivative(g, 0.8, a, gm).value) <= 1e-6);
}

TEST_CASE("experimental orders above one") {
  const GammaWeight gm(2);
  const auto j = TestFunction::bessel_j(0.5);
  for (double a : {1.3, 1.7})
    for (double x : {0.5, 2.0}) {
      const auto r = frac_derivative(j, x, FracOrder::derivative(a, true), gm);
      INFO("alpha=" << a << " x=" << x);
      CHECK(std::abs(r.value - eigenvalue(a, 2.0, true) * j(x)) <= 2e-6);
    }
}

TEST_CASE("riesz_classical") {
  const auto g = TestFunction::gaussian();
  for (double a : {0.2, 0.3, 0.4})
    for (double x : {0.0, 0.3, 1.2}) {
      const double c = riesz_classical(g, x, FracOrder::potential(a, GammaWeight(0))).value;
      INFO("alpha=" << a << " x=" << x);
      CHECK(std::abs(c - potential(g, x, a, 0.0, PotentialScheme::translation())) <= 1e-6);
      CHECK(std::abs(c - potential(g, x, a, 0.0, PotentialScheme::kernel())) <= 1e-6);
    }
  CHECK(riesz_classical(TestFunction::zero(), 0.5, FracOrder::potential(0.3, GammaWeight(0))).value == 0.0);
  // 2 int_0^inf e^{-y^2} y^{-0.4} dy = Gamma(0.3)
  const double want = std::tgamma(0.3) / (2 * std::tgamma(0.6) * std::cos(0.3 * kPi));
  CHECK(std::abs(riesz_classical(g, 0.0, FracOrder::potential(0.3, GammaWeight(0))).value - want) <= 1e-9);
  CHECK_THROWS_AS(riesz_classical(g, 0.0, FracOrder::potential(0.6, GammaWeight(1))), DomainError);
}
