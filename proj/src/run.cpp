#include "frabessel/run.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <thread>

#include "json.hpp"

#include "frabessel/errors.hpp"
#include "frabessel/fracbessel.hpp"
#include "frabessel/hankel.hpp"
#include "frabessel/oracles.hpp"
#include "frabessel/translation.hpp"

namespace frabessel {

namespace {

PotentialScheme potential_scheme(const RunConfig& cfg) {
  if (cfg.scheme == "kernel") return PotentialScheme::kernel();
  if (cfg.scheme == "translation") return PotentialScheme::translation();
  if (cfg.scheme == "laguerre" || cfg.scheme == "gauss_laguerre") return PotentialScheme::gauss_laguerre(cfg.n.value_or(10));
  throw DomainError("unknown scheme '" + cfg.scheme + "' (kernel, translation, laguerre)");
}

TranslationMethod translation_method(const std::string& m) {
  if (m == "auto") return TranslationMethod::closed_form_auto;
  if (m == "trig") return TranslationMethod::trig;
  if (m == "unit") return TranslationMethod::unit_interval;
  if (m == "kernel") return TranslationMethod::kernel;
  throw DomainError("unknown translation method '" + m + "' (auto, trig, unit, kernel)");
}

int hankel_order(const RunConfig& cfg) { return cfg.n.value_or(kDefaultHankelOrder); }

double default_tol(Operation op) {
  switch (op) {
    case Operation::derivative:
      return kDefaultDerivativeTol;
    case Operation::translate:
      return kDefaultTranslationTol;
    default:
      return kDefaultPotentialTol;
  }
}

nlohmann::json number_or_null(std::optional<double> v) {
  if (!v || !std::isfinite(*v)) return nullptr;
  return *v;
}

}  // namespace

RunConfig example1_config() {
  RunConfig c;
  c.op = Operation::neg_power;
  c.alpha = 0.7;
  c.gamma = 0.5;
  c.function = "gaussian";
  c.scheme = "laguerre";
  c.n = 10;
  c.start = 0.01;
  c.step = 0.19;
  c.count = 25;
  return c;
}

RunConfig example2_config() {
  RunConfig c;
  c.op = Operation::derivative;
  c.alpha = 0.2;
  c.gamma = 2.0;
  c.function = "bessel_j";
  c.nu = 0.5;
  c.start = 0.01;
  c.step = 0.29;
  c.count = 34;
  return c;
}

std::optional<Operation> parse_operation(const std::string& name) {
  if (name == "neg-power") return Operation::neg_power;
  if (name == "derivative") return Operation::derivative;
  if (name == "translate") return Operation::translate;
  if (name == "hankel") return Operation::hankel;
  return std::nullopt;
}

std::string operation_name(Operation op) {
  switch (op) {
    case Operation::neg_power:
      return "neg-power";
    case Operation::derivative:
      return "derivative";
    case Operation::translate:
      return "translate";
    case Operation::hankel:
      return "hankel";
  }
  return "unknown";
}

TestFunction make_function(const RunConfig& cfg) {
  const std::string& f = cfg.function;
  if (f == "gaussian") return TestFunction::gaussian(cfg.rate);
  if (f == "bessel_j" || f == "j") return TestFunction::bessel_j(cfg.nu, cfg.scale);
  if (f == "power") return TestFunction::power(cfg.p);
  if (f == "constant") return TestFunction::constant(cfg.c);
  if (f == "zero") return TestFunction::zero();
  if (f == "one") return TestFunction::one();
  throw DomainError("unknown function '" + f + "' (gaussian, bessel_j, power, constant, zero, one)");
}

void validate(const RunConfig& cfg) {
  make_function(cfg);
  const GammaWeight g(cfg.gamma);
  if (cfg.tol && !(*cfg.tol > 0)) throw DomainError("tol must be positive");
  if (cfg.count < 1) throw DomainError("grid count must be >= 1");
  if (!std::isfinite(cfg.start) || !std::isfinite(cfg.step)) throw DomainError("grid start and step must be finite");
  switch (cfg.op) {
    case Operation::neg_power:
      FracOrder::potential(cfg.alpha, g);
      potential_scheme(cfg);
      break;
    case Operation::derivative:
      FracOrder::derivative(cfg.alpha);
      break;
    case Operation::translate:
      translation_method(cfg.method);
      break;
    case Operation::hankel:
      HankelIndex{cfg.gamma};
      if (cfg.method != "forward" && cfg.method != "inverse" && cfg.method != "auto")
        throw DomainError("unknown hankel method '" + cfg.method + "' (forward, inverse)");
      break;
  }
}

EvalResult evaluate(const RunConfig& cfg, double x) {
  const TestFunction f = make_function(cfg);
  const GammaWeight g(cfg.gamma);
  const double tol = cfg.tol.value_or(default_tol(cfg.op));
  switch (cfg.op) {
    case Operation::neg_power:
      return riesz_b_potential(f, x, FracOrder::potential(cfg.alpha, g), g, potential_scheme(cfg), tol);
    case Operation::derivative: {
      DerivativeOptions o;
      o.t_split = cfg.t_split;
      o.t_max = cfg.t_max;
      o.tol = tol;
      return frac_derivative(f, x, FracOrder::derivative(cfg.alpha), g, o);
    }
    case Operation::translate:
      return translate(f, x, cfg.y, g, translation_method(cfg.method), tol);
    case Operation::hankel:
      if (cfg.method == "inverse") return hankel_inverse(f, x, HankelIndex(cfg.gamma), hankel_order(cfg));
      return hankel_forward(f, x, HankelIndex(cfg.gamma), hankel_order(cfg));
  }
  throw DomainError("unknown operation");
}

bool has_oracle(const RunConfig& cfg) {
  if (cfg.function == "zero") return true;
  if (cfg.op == Operation::neg_power && cfg.function == "gaussian") return true;
  return cfg.op == Operation::derivative && (cfg.function == "bessel_j" || cfg.function == "j") && cfg.nu == 0.5 &&
         cfg.gamma == 2.0;
}

std::optional<double> oracle_value(const RunConfig& cfg, double x) {
  if (!has_oracle(cfg)) return std::nullopt;
  if (cfg.function == "zero") return 0.0;
  if (cfg.op == Operation::neg_power) {
    // e^{-c x^2}: scaling x -> sqrt(c) x multiplies the potential by c^{-alpha}
    return std::pow(cfg.rate, -cfg.alpha) * oracle_gaussian_potential(std::sqrt(cfg.rate) * x, cfg.alpha, cfg.gamma);
  }
  return std::pow(cfg.scale, 2 * cfg.alpha) * oracle_j_derivative_gamma2(cfg.scale * x, cfg.alpha);
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v == 0 ? 0.0 : v);
  return buf;
}

std::vector<TableRow> compute_table(const RunConfig& cfg) {
  const int count = cfg.count;
  std::vector<TableRow> rows(count);
  std::atomic<int> next{0};
  auto work = [&] {
    for (int i = next++; i < count; i = next++) {
      TableRow& r = rows[i];
      r.x = cfg.start + i * cfg.step;
      try {
        r.numerical = evaluate(cfg, r.x).value;
        r.exact = oracle_value(cfg, r.x);
      } catch (const std::exception& e) {
        r.numerical.reset();
        r.failure = e.what();
        r.status = 3;
      }
    }
  };
  const int threads = std::clamp<int>(static_cast<int>(std::thread::hardware_concurrency()), 1, count);
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return rows;
}

int write_table(const RunConfig& cfg, const std::vector<TableRow>& rows, std::ostream& out) {
  const bool oracle = has_oracle(cfg);
  int status = 0;
  for (const auto& r : rows) status = std::max(status, r.status);
  if (cfg.format == "json") {
    nlohmann::json j;
    j["op"] = operation_name(cfg.op);
    j["alpha"] = cfg.alpha;
    j["gamma"] = cfg.gamma;
    j["function"] = cfg.function;
    j["rows"] = nlohmann::json::array();
    for (const auto& r : rows) {
      nlohmann::json row{{"x", r.x}, {"numerical", number_or_null(r.numerical)}};
      if (oracle) {
        row["exact"] = number_or_null(r.exact);
        row["abs_error"] = r.numerical && r.exact ? number_or_null(std::abs(*r.numerical - *r.exact)) : nullptr;
      }
      if (!r.failure.empty()) row["error"] = r.failure;
      j["rows"].push_back(row);
    }
    out << j.dump(2) << '\n';
    return status;
  }
  out << (oracle ? "x,numerical,exact,abs_error\n" : "x,numerical\n");
  const double nan = std::nan("");
  for (const auto& r : rows) {
    out << format_number(r.x) << ',' << format_number(r.numerical.value_or(nan));
    if (oracle) {
      const double exact = r.numerical ? r.exact.value_or(nan) : nan;
      const double err = r.numerical && r.exact ? std::abs(*r.numerical - *r.exact) : nan;
      out << ',' << format_number(exact) << ',' << format_number(err);
    }
    out << '\n';
  }
  return status;
}

}  // namespace frabessel
