#include "frabessel/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <memory>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "frabessel/errors.hpp"
#include "frabessel/run.hpp"
#include "frabessel/selftest.hpp"

#ifndef FRABESSEL_DATA_DIR
#define FRABESSEL_DATA_DIR "data"
#endif

namespace frabessel {

namespace {

// Each option writes into its own slot; slots given on the command line or
// in the config file are copied over the base configuration after parsing.
class Overrides {
 public:
  template <typename T>
  CLI::Option* add(CLI::App& app, const std::string& flags, T RunConfig::*field, const std::string& help) {
    auto slot = std::make_shared<T>();
    CLI::Option* opt = app.add_option(flags, *slot, help);
    apply_.push_back([slot, opt, field](RunConfig& c) {
      if (opt->count() > 0) c.*field = *slot;
    });
    return opt;
  }

  void apply(RunConfig& c) const {
    for (const auto& a : apply_) a(c);
  }

 private:
  std::vector<std::function<void(RunConfig&)>> apply_;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

double env_tol() {
  const char* v = std::getenv("FRABESSEL_TOL");
  if (!v || !*v) return 0;
  char* end = nullptr;
  const double t = std::strtod(v, &end);
  if (*end != '\0' || !(t > 0) || !std::isfinite(t)) throw DomainError(std::string("FRABESSEL_TOL must be a positive number, got '") + v + "'");
  return t;
}

int cmd_eval(const RunConfig& cfg, std::ostream& out) {
  validate(cfg);
  const auto t0 = std::chrono::steady_clock::now();
  const EvalResult r = evaluate(cfg, cfg.x);
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  if (cfg.format == "json") {
    nlohmann::json j{{"op", operation_name(cfg.op)}, {"x", cfg.x},          {"value", r.value},
                     {"error", r.error},             {"scheme", r.method}, {"elapsed_ms", ms}};
    out << j.dump(2) << '\n';
  } else {
    out << "op,x,value,error,scheme,elapsed_ms\n"
        << operation_name(cfg.op) << ',' << format_number(cfg.x) << ',' << format_number(r.value) << ','
        << format_number(r.error) << ',' << csv_field(r.method) << ',' << format_number(ms) << '\n';
  }
  return kExitOk;
}

int cmd_table(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  validate(cfg);
  const auto rows = compute_table(cfg);
  for (const auto& r : rows)
    if (!r.failure.empty()) err << "x=" << format_number(r.x) << ": " << r.failure << '\n';
  return write_table(cfg, rows, out);
}

int cmd_selftest(const std::optional<std::string>& suite, const std::string& data_dir, std::ostream& out) {
  const auto reports = run_selftest(suite, data_dir);
  std::string first;
  for (const auto& r : reports) {
    out << r.name << ": " << r.passed << " passed, " << r.failed << " failed\n";
    if (r.failed > 0) {
      out << "  first failure: " << r.first_failure << '\n';
      if (first.empty()) first = r.name + ": " + r.first_failure;
    }
  }
  if (first.empty()) {
    out << "all suites passed\n";
    return kExitOk;
  }
  out << "selftest failed: " << first << '\n';
  return kExitSelftestFailed;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fractional powers of the Bessel operator: potentials, derivatives, translations, Hankel transforms"};
  app.name("frabessel");
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value file with option defaults");
  app.allow_config_extras(CLI::config_extras_mode::error);

  Overrides ov;
  std::string op;
  std::string preset;
  app.add_option("--op", op, "neg-power | derivative | translate | hankel")
      ->check(CLI::IsMember({"neg-power", "derivative", "translate", "hankel"}));
  app.add_option("--preset", preset, "start from a published configuration")->check(CLI::IsMember({"example1", "example2"}));
  ov.add(app, "--alpha", &RunConfig::alpha, "fractional order");
  ov.add(app, "--gamma", &RunConfig::gamma, "Bessel operator index, >= 0");
  ov.add(app, "--f,--function", &RunConfig::function, "gaussian | bessel_j | power | constant | zero | one");
  ov.add(app, "--rate", &RunConfig::rate, "gaussian: e^{-rate x^2}");
  ov.add(app, "--nu", &RunConfig::nu, "bessel_j: order");
  ov.add(app, "--scale", &RunConfig::scale, "bessel_j: j_nu(scale x)");
  ov.add(app, "--p", &RunConfig::p, "power: x^p");
  ov.add(app, "--c", &RunConfig::c, "constant value");
  ov.add(app, "--scheme", &RunConfig::scheme, "neg-power: kernel | translation | laguerre");
  ov.add(app, "--method", &RunConfig::method, "translate: auto | trig | unit | kernel; hankel: forward | inverse");
  ov.add(app, "--n", &RunConfig::n, "quadrature order");
  ov.add(app, "--x", &RunConfig::x, "evaluation point");
  ov.add(app, "--y", &RunConfig::y, "translate: shift");
  ov.add(app, "--start", &RunConfig::start, "table: first grid point");
  ov.add(app, "--step", &RunConfig::step, "table: grid step");
  ov.add(app, "--count", &RunConfig::count, "table: number of grid points");
  ov.add(app, "--tol", &RunConfig::tol, "absolute tolerance (default from FRABESSEL_TOL, else per operation)");
  ov.add(app, "--t-split", &RunConfig::t_split, "derivative: Taylor split point");
  ov.add(app, "--t-max", &RunConfig::t_max, "derivative: fixed truncation point");
  ov.add(app, "--format", &RunConfig::format, "csv | json")->check(CLI::IsMember({"csv", "json"}));

  CLI::App* eval = app.add_subcommand("eval", "evaluate one operator at --x");
  CLI::App* table = app.add_subcommand("table", "evaluate over the grid start + k step, k < count");
  CLI::App* selftest = app.add_subcommand("selftest", "run the property suites");
  std::optional<std::string> suite;
  std::string data_dir = FRABESSEL_DATA_DIR;
  selftest->add_option("--suite", suite, "run a single suite");
  selftest->add_option("--data-dir", data_dir, "directory with the published tables and golden/");
  for (CLI::App* sub : {eval, table, selftest}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitDomain;
  }

  try {
    if (selftest->parsed()) return cmd_selftest(suite, data_dir, out);
    RunConfig cfg;
    if (preset == "example1") cfg = example1_config();
    if (preset == "example2") cfg = example2_config();
    if (!op.empty()) cfg.op = *parse_operation(op);
    ov.apply(cfg);
    if (!cfg.tol) {
      const double t = env_tol();
      if (t > 0) cfg.tol = t;
    }
    if (eval->parsed()) return cmd_eval(cfg, out);
    return cmd_table(cfg, out, err);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const AccuracyError& e) {
    err << "error: " << e.what();
    if (std::isfinite(e.best_estimate())) err << " (best estimate " << format_number(e.best_estimate()) << ")";
    err << " (error estimate " << format_number(e.error_estimate()) << ")\n";
    return kExitAccuracy;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitAccuracy;
  }
}

}  // namespace frabessel
