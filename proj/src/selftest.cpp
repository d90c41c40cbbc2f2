#include "frabessel/selftest.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>

#include "frabessel/errors.hpp"
#include "frabessel/fracbessel.hpp"
#include "frabessel/hankel.hpp"
#include "frabessel/oracles.hpp"
#include "frabessel/quadrature.hpp"
#include "frabessel/run.hpp"
#include "frabessel/specfun.hpp"
#include "frabessel/translation.hpp"

namespace frabessel {

namespace {

constexpr double kPi = std::numbers::pi;

// A check returns an empty string on success, otherwise the offending case.
using Check = std::function<std::string()>;

class Suite {
 public:
  explicit Suite(std::string name) { report_.name = std::move(name); }

  void check(const std::string& name, const Check& body) {
    std::string detail;
    try {
      detail = body();
    } catch (const std::exception& e) {
      detail = std::string("threw: ") + e.what();
    }
    if (detail.empty()) {
      ++report_.passed;
      return;
    }
    if (report_.failed++ == 0) report_.first_failure = name + ": " + detail;
  }

  SuiteReport report() const { return report_; }

 private:
  SuiteReport report_;
};

template <typename... Args>
std::string describe(Args&&... args) {
  std::ostringstream s;
  s.precision(10);
  (s << ... << args);
  return s.str();
}

// empty when |got - want| <= tol
std::string near(double got, double want, double tol, const std::string& where) {
  const double e = std::abs(got - want);
  if (e <= tol) return {};
  return describe(where, " got ", got, " want ", want, " |diff| ", e, " > ", tol);
}

std::string rel_near(double got, double want, double tol, const std::string& where) {
  return near(got, want, tol * std::abs(want), where);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return {};
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

double potential(const TestFunction& f, double x, double a, double gm, PotentialScheme s) {
  const GammaWeight g(gm);
  return riesz_b_potential(f, x, FracOrder::potential(a, g), g, s).value;
}

const double kGrid[] = {0.6, 1.2, 1.8, 2.4, 3.0};

void specfun_suite(Suite& s) {
  s.check("doubling formula", [] {
    for (int i = 0; i <= 98; ++i) {
      const double x = 0.1 + 0.05 * i;
      const double rhs = std::pow(2.0, 2 * x - 1) / std::sqrt(kPi) * gamma_fn(x) * gamma_fn(x + 0.5);
      if (auto e = rel_near(gamma_fn(2 * x), rhs, 1e-12, describe("x=", x)); !e.empty()) return e;
    }
    return std::string();
  });
  s.check("j is an eigenfunction of the Bessel operator", [] {
    const double h = 1e-4;
    for (double nu : {0.0, 0.5, 1.0, 1.5})
      for (double xi : {0.5, 1.0, 2.0}) {
        const double gm = 2 * nu + 1;
        auto f = [&](double x) { return normalized_bessel_j(BesselOrder(nu), std::abs(x) * xi); };
        for (int i = 0; i <= 20; ++i) {
          const double x = 0.5 * i;
          const double bf = x == 0 ? (1 + gm) * 2 * (f(h) - f(0)) / (h * h)
                                   : (f(x + h) - 2 * f(x) + f(x - h)) / (h * h) + gm / x * (f(x + h) - f(x - h)) / (2 * h);
          if (auto e = near(bf, -xi * xi * f(x), 1e-5, describe("nu=", nu, " xi=", xi, " x=", x)); !e.empty()) return e;
        }
      }
    return std::string();
  });
  s.check("2F1 series and Euler paths agree", [] {
    const double params[][3] = {{0.3, 0.5, 1.5}, {-0.7, 0.25, 0.5}, {1.2, 0.4, 2.1}, {0.55, 1.0, 2.0}};
    for (const auto& p : params)
      for (int i = 0; i <= 13; ++i) {
        const double z = 0.5 + 0.03 * i;
        const double ser = hypergeometric_2f1_series(p[0], p[1], p[2], z);
        const double eul = hypergeometric_2f1_euler(HyperParams<double>{p[0], p[1], p[2], z});
        if (auto e = rel_near(eul, ser, 1e-9, describe("a=", p[0], " b=", p[1], " c=", p[2], " z=", z)); !e.empty())
          return e;
      }
    return std::string();
  });
  s.check("terminating 2F1", [] {
    const double b = 0.7, c = 1.9;
    for (double z : {-3.0, -0.5, 0.2, 0.95, 1.0})
      if (auto e = near(gauss_2f1(HyperParams<double>{-1, b, c, z}), 1 - b / c * z,
                        4 * std::numeric_limits<double>::epsilon(), describe("z=", z));
          !e.empty())
        return e;
    return std::string();
  });
  s.check("Kummer 1F1(a; a; z) = e^z", [] {
    for (double a : {0.3, 0.8, 2.5})
      for (double z : {-7.0, -1.0, 0.5, 1.3, 6.0})
        if (auto e = rel_near(kummer_1f1(a, a, z), std::exp(z), 1e-13, describe("a=", a, " z=", z)); !e.empty()) return e;
    return std::string();
  });
  s.check("Laguerre orthogonality", [] {
    const auto rule = gauss_laguerre_rule<double>(64);
    for (unsigned m = 0; m <= 8; ++m)
      for (unsigned n = 0; n <= 8; ++n) {
        const double v = rule.apply([&](double x) { return laguerre_poly(m, x) * laguerre_poly(n, x); });
        if (auto e = near(v, m == n ? 1.0 : 0.0, 1e-10, describe("m=", m, " n=", n)); !e.empty()) return e;
      }
    return std::string();
  });
}

void quadrature_suite(Suite& s) {
  s.check("two-point rule", [] {
    const auto r = gauss_laguerre_rule<double>(2);
    const double q = std::sqrt(2.0);
    for (auto e : {near(r.nodes()[0], 2 - q, 1e-12, "node 0"), near(r.nodes()[1], 2 + q, 1e-12, "node 1"),
                   near(r.weights()[0], (2 + q) / 4, 1e-12, "weight 0"), near(r.weights()[1], (2 - q) / 4, 1e-12, "weight 1")})
      if (!e.empty()) return e;
    return std::string();
  });
  s.check("polynomial exactness", [] {
    for (int n = 1; n <= 20; ++n) {
      const auto r = gauss_laguerre_rule<double>(n);
      for (int d = 0; d <= 2 * n - 1; ++d) {
        const double v = integrate_laguerre([&](double y) { return std::pow(y, d) * std::exp(-y); }, r).value;
        if (auto e = rel_near(v, std::tgamma(d + 1.0), 1e-11, describe("n=", n, " d=", d)); !e.empty()) return e;
      }
    }
    return std::string();
  });
  s.check("error decreases with order", [] {
    double prev = std::numeric_limits<double>::infinity();
    for (int n : {4, 6, 8, 10}) {
      const auto r = gauss_laguerre_rule<double>(n);
      const double e =
          std::abs(integrate_laguerre([](double y) { return std::exp(-y * y); }, r).value - std::sqrt(kPi) / 2);
      if (!(e < prev)) return describe("n=", n, " error ", e, " not below ", prev);
      prev = e;
    }
    return std::string();
  });
  s.check("integrate_finite is affine invariant", [] {
    using E = EndpointExponents<double>;
    const double tol = 1e-10;
    auto f = [](double z) { return std::pow(z, -0.3) * std::cos(3 * z); };
    const double ref = integrate_finite(f, 0.0, 2.0, E{-0.3, 0}, tol).value;
    for (double shift : {-5.0, 0.5, 100.0})
      for (double scale : {0.25, 3.0}) {
        auto g = [&](double u, Offsets<double> o) {
          return std::pow(o.from_left / scale, -0.3) * std::cos(3 * (u - shift) / scale) / scale;
        };
        const double v = integrate_finite(g, shift, shift + 2 * scale, E{-0.3, 0}, tol).value;
        if (auto e = near(v, ref, 10 * tol, describe("shift=", shift, " scale=", scale)); !e.empty()) return e;
      }
    return std::string();
  });
}

TestFunction lorentzian() {
  return TestFunction::custom("lorentzian", [](double x) { return 1 / (1 + x * x); }, Decay::power(2.0));
}

void translation_suite(Suite& s) {
  s.check("representation equivalence and symmetry", [] {
    for (const auto& f : {TestFunction::gaussian(), lorentzian()})
      for (double gm : {0.5, 1.0, 2.0, 3.5})
        for (double x : kGrid)
          for (double y : kGrid) {
            const GammaWeight g(gm);
            const std::string where = describe(f.name(), " gamma=", gm, " x=", x, " y=", y);
            const double a = translate(f, x, y, g, TranslationMethod::trig).value;
            const double b = translate(f, x, y, g, TranslationMethod::unit_interval).value;
            const double c = translate(f, x, y, g, TranslationMethod::kernel).value;
            const double c_swapped = translate(f, y, x, g, TranslationMethod::kernel).value;
            for (auto e : {near(a, b, 1e-8, where + " trig/unit"), near(a, c, 1e-8, where + " trig/kernel"),
                           near(b, c, 1e-8, where + " unit/kernel"), near(c, c_swapped, 1e-9, where + " symmetry")})
              if (!e.empty()) return e;
          }
    return std::string();
  });
  s.check("product formula", [] {
    for (double gm : {0.5, 1.0, 2.0, 3.5})
      for (double xi : {0.5, 1.0, 2.0}) {
        const GammaWeight g(gm);
        const auto j = TestFunction::bessel_j(g.bessel_order(), xi);
        for (double x : kGrid)
          for (double y : kGrid) {
            const double t = translate(j, x, y, g, TranslationMethod::kernel).value;
            if (auto e = near(t, j(x) * j(y), 1e-7, describe("gamma=", gm, " xi=", xi, " x=", x, " y=", y)); !e.empty())
              return e;
          }
      }
    return std::string();
  });
  s.check("self-adjointness", [] {
    const auto f = TestFunction::gaussian(1.0), h = TestFunction::gaussian(2.0);
    for (double gm : {0.5, 2.0}) {
      const GammaWeight g(gm);
      // y^gamma dy = 1/2 u^{(gamma-1)/2} du with u = y^2
      const auto rule = gauss_laguerre_rule<double>(64, (gm - 1) / 2);
      for (double x : {0.5, 1.0, 2.0}) {
        const double lhs = 0.5 * rule.apply([&](double u) {
          const double y = std::sqrt(u);
          return std::exp(u) * translate(f, x, y, g).value * h(y);
        });
        const double rhs = 0.5 * rule.apply([&](double u) {
          const double y = std::sqrt(u);
          return std::exp(u) * f(y) * translate(h, x, y, g).value;
        });
        if (auto e = near(lhs, rhs, 1e-7, describe("gamma=", gm, " x=", x)); !e.empty()) return e;
      }
    }
    return std::string();
  });
  s.check("gamma = 0 is the arithmetic mean", [] {
    const auto f = lorentzian();
    for (double x : kGrid)
      for (double y : kGrid)
        for (auto m : {TranslationMethod::trig, TranslationMethod::kernel, TranslationMethod::closed_form_auto}) {
          const double v = translate(f, x, y, GammaWeight(0.0), m).value;
          if (v != (f(x + y) + f(x - y)) / 2) return describe("x=", x, " y=", y, " got ", v);
        }
    return std::string();
  });
}

void hankel_suite(Suite& s) {
  s.check("round trip", [] {
    const auto g = TestFunction::gaussian();
    for (double gm : {0.5, 2.0}) {
      const HankelIndex idx(gm);
      const auto forward = TestFunction::custom(
          "forward", [&](double t) { return hankel_forward(g, t, idx).value; }, Decay::gaussian(0.25));
      for (double x : {0.25, 0.5, 1.0, 2.0})
        if (auto e = near(hankel_inverse(forward, x, idx).value, g(x), 1e-4, describe("gamma=", gm, " x=", x));
            !e.empty())
          return e;
    }
    return std::string();
  });
  s.check("spectral check against the potential", [] {
    const double a = 0.7, gm = 0.5;
    const HankelIndex idx(gm);
    const auto g = TestFunction::gaussian();
    const auto multiplied = TestFunction::custom(
        "spectral", [&](double t) { return std::pow(t, -2 * a) * hankel_forward(g, t, idx).value; },
        Decay::gaussian(0.25, 1.0), -2 * a);
    for (double x : {0.2, 1.0})
      if (auto e = near(hankel_inverse(multiplied, x, idx).value, potential(g, x, a, gm, PotentialScheme::kernel()),
                        1e-3, describe("x=", x));
          !e.empty())
        return e;
    return std::string();
  });
}

void fracbessel_suite(Suite& s) {
  const auto g = TestFunction::gaussian();
  s.check("scheme agreement", [&] {
    for (double x : {0.2, 1.0, 2.0}) {
      const double k = potential(g, x, 0.7, 0.5, PotentialScheme::kernel());
      const double t = potential(g, x, 0.7, 0.5, PotentialScheme::translation());
      const double l = potential(g, x, 0.7, 0.5, PotentialScheme::gauss_laguerre(24));
      const std::string where = describe("x=", x);
      for (auto e : {near(k, t, 1e-6, where + " kernel/translation"), near(k, l, 1e-6, where + " kernel/laguerre"),
                     near(t, l, 1e-6, where + " translation/laguerre")})
        if (!e.empty()) return e;
    }
    return std::string();
  });
  s.check("closed-form match of the Gaussian potential", [&] {
    for (const auto& row : example1_table())
      if (auto e = near(potential(g, row.x, 0.7, 0.5, PotentialScheme::gauss_laguerre(10)),
                        oracle_gaussian_potential(row.x, 0.7, 0.5), 5e-8, describe("x=", row.x));
          !e.empty())
        return e;
    return std::string();
  });
  // I^1 B f = -f for decaying f, so the check compares against -e^{-x^2}
  s.check("alpha = 1 inverts the Bessel operator up to sign", [&] {
    const double gm = 2.5;
    const auto bf = bessel_op_of_gaussian(gm);
    for (double x : {0.5, 1.0, 2.0})
      if (auto e = near(potential(bf, x, 1.0, gm, PotentialScheme::kernel()), -g(x), 1e-6, describe("x=", x)); !e.empty())
        return e;
    return std::string();
  });
  s.check("derivative matches the j oracle", [] {
    const GammaWeight gm(2);
    const auto j = TestFunction::bessel_j(0.5);
    for (const auto& row : example2_table()) {
      const double want = oracle_j_derivative_gamma2(row.x, 0.2);
      const double got = frac_derivative(j, row.x, FracOrder::derivative(0.2), gm).value;
      if (auto e = rel_near(got, want, 1e-3, describe("x=", row.x)); !e.empty()) return e;
    }
    return std::string();
  });
  s.check("doubling t_max stays within the error estimate", [] {
    const GammaWeight gm(2);
    const auto j = TestFunction::bessel_j(0.5);
    const auto a = FracOrder::derivative(0.2);
    for (double x : {0.3, 4.0}) {
      const auto r = frac_derivative(j, x, a, gm);
      const auto pos = r.method.find("t_max=");
      if (pos == std::string::npos) return describe("x=", x, " no t_max in ", r.method);
      DerivativeOptions o;
      o.t_max = 2 * std::stod(r.method.substr(pos + 6));
      const auto r2 = frac_derivative(j, x, a, gm, o);
      if (!(std::abs(r2.value - r.value) < r.error))
        return describe("x=", x, " change ", std::abs(r2.value - r.value), " >= estimate ", r.error);
    }
    return std::string();
  });
  s.check("gamma = 0 matches the classical Riesz potential", [&] {
    for (double a : {0.2, 0.3, 0.4})
      for (double x : {0.0, 0.3, 1.2}) {
        const double c = riesz_classical(g, x, FracOrder::potential(a, GammaWeight(0))).value;
        if (auto e = near(potential(g, x, a, 0.0, PotentialScheme::translation()), c, 1e-6, describe("alpha=", a, " x=", x));
            !e.empty())
          return e;
      }
    return std::string();
  });
}

void oracles_suite(Suite& s) {
  s.check("coefficient consistency", [] {
    for (double a : {0.1, 0.2, 0.35, 0.6, 0.9}) {
      const double d = norm_const_d(DiffOrder(1), FracOrder::derivative(a), GammaWeight(2));
      const double other = kPi * std::cos(a * kPi) / (std::tgamma(2 * a + 2) * std::sin(2 * kPi * a)) / d;
      if (auto e = rel_near(other, oracle_j_derivative_coefficient(a), 1e-12, describe("alpha=", a)); !e.empty()) return e;
    }
    return std::string();
  });
  s.check("Gaussian oracle matches the published exact column", [] {
    // the column is printed to 9 decimals
    for (const auto& row : example1_table())
      if (auto e = near(oracle_gaussian_potential(row.x, 0.7, 0.5), row.exact, 5e-10 + 1e-12, describe("x=", row.x));
          !e.empty())
        return e;
    return std::string();
  });
}

void golden_suite(Suite& s, const std::string& data_dir) {
  for (const auto& [name, embedded] : {std::pair{std::string("example1.csv"), example1_csv()},
                                       std::pair{std::string("example2.csv"), example2_csv()}}) {
    const std::string path = data_dir + "/" + name;
    s.check("published table " + name, [&] {
      return read_file(path) == embedded ? std::string() : describe("golden file ", path, " differs from the embedded table");
    });
  }
  const std::pair<std::string, RunConfig> tables[] = {{"example1_table.csv", example1_config()},
                                                      {"example2_table.csv", example2_config()}};
  for (const auto& [name, cfg] : tables) {
    const std::string path = golden_path(data_dir, name);
    s.check("table " + name, [&] {
      std::ostringstream out;
      write_table(cfg, compute_table(cfg), out);
      const std::string want = read_file(path);
      if (want.empty()) return describe("golden file ", path, " is missing or empty");
      const std::string got = out.str();
      if (got == want) return std::string();
      std::istringstream a(got), b(want);
      std::string la, lb;
      for (int line = 1;; ++line) {
        const bool ha = static_cast<bool>(std::getline(a, la)), hb = static_cast<bool>(std::getline(b, lb));
        if (!ha || !hb || la != lb)
          return describe("golden file ", path, " differs at line ", line, ": computed '", ha ? la : "<eof>", "' stored '",
                          hb ? lb : "<eof>", "'");
      }
    });
  }
}

using SuiteFn = void (*)(Suite&, const std::string&);

const std::pair<const char*, SuiteFn> kSuites[] = {
    {"specfun", [](Suite& s, const std::string&) { specfun_suite(s); }},
    {"quadrature", [](Suite& s, const std::string&) { quadrature_suite(s); }},
    {"translation", [](Suite& s, const std::string&) { translation_suite(s); }},
    {"hankel", [](Suite& s, const std::string&) { hankel_suite(s); }},
    {"fracbessel", [](Suite& s, const std::string&) { fracbessel_suite(s); }},
    {"oracles", [](Suite& s, const std::string&) { oracles_suite(s); }},
    {"golden", golden_suite},
};

}  // namespace

std::vector<std::string> selftest_suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : kSuites) names.emplace_back(name);
  return names;
}

std::string golden_path(const std::string& data_dir, const std::string& name) { return data_dir + "/golden/" + name; }

std::vector<SuiteReport> run_selftest(const std::optional<std::string>& suite, const std::string& data_dir) {
  bool known = !suite;
  for (const auto& [name, fn] : kSuites) known = known || *suite == name;
  if (!known) {
    std::string list;
    for (const auto& n : selftest_suite_names()) list += (list.empty() ? "" : ", ") + n;
    throw DomainError("unknown suite '" + *suite + "' (" + list + ")");
  }
  std::vector<SuiteReport> reports;
  for (const auto& [name, fn] : kSuites) {
    if (suite && *suite != name) continue;
    Suite s(name);
    fn(s, data_dir);
    reports.push_back(s.report());
  }
  return reports;
}

}  // namespace frabessel
