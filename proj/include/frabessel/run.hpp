#pragma once

// Batch evaluation shared by the command-line tool and the self-test:
// one configuration, evaluated at a point or over a grid.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "frabessel/eval_result.hpp"
#include "frabessel/test_function.hpp"

namespace frabessel {

enum class Operation { neg_power, derivative, translate, hankel };

struct RunConfig {
  Operation op{Operation::neg_power};
  double alpha{0.7};
  double gamma{0.5};

  // test function: gaussian (rate), bessel_j (nu, scale), power (p), constant (c), zero, one
  std::string function{"gaussian"};
  double rate{1.0};
  double nu{0.5};
  double scale{1.0};
  double p{-2.0};
  double c{1.0};

  // neg-power: kernel | translation | laguerre
  std::string scheme{"laguerre"};
  // translate: auto | trig | unit | kernel; hankel: forward | inverse
  std::string method{"auto"};
  std::optional<int> n;  // quadrature order; 10 for laguerre, 48 for hankel when empty

  double x{1.0};
  double y{1.0};
  double start{0.01};
  double step{0.19};
  int count{25};

  std::optional<double> tol;  // per-operation default when empty
  double t_split{0.1};
  std::optional<double> t_max;

  std::string format{"csv"};  // csv | json
};

/// Potential of e^{-x^2}, alpha = 0.7, gamma = 0.5, Gauss-Laguerre n = 10, x = 0.01 + 0.19k, 25 rows.
RunConfig example1_config();
/// Derivative of j_{1/2}, alpha = 0.2, gamma = 2, x = 0.01 + 0.29k, 34 rows.
RunConfig example2_config();

std::optional<Operation> parse_operation(const std::string& name);
std::string operation_name(Operation op);

/// Builds the test function; throws DomainError for unknown names or bad parameters.
TestFunction make_function(const RunConfig& cfg);

/// Checks parameter windows (orders, gamma, scheme names, grid) up front.
void validate(const RunConfig& cfg);

/// Evaluates the configured operation at x.
EvalResult evaluate(const RunConfig& cfg, double x);

/// Closed-form value when an oracle covers the configuration.
std::optional<double> oracle_value(const RunConfig& cfg, double x);
bool has_oracle(const RunConfig& cfg);

/// %.10g: 10 significant digits, ties to even on the binary value, `nan` for NaN.
std::string format_number(double v);

struct TableRow {
  double x;
  std::optional<double> numerical;
  std::optional<double> exact;
  std::string failure;  // empty on success
  int status{0};        // exit status contribution
};

/// Grid rows x_k = start + k step, evaluated concurrently, returned in grid order.
std::vector<TableRow> compute_table(const RunConfig& cfg);

/// Writes the table as CSV (header x,numerical[,exact,abs_error]) or JSON;
/// returns 0, or 3 when some row failed.
int write_table(const RunConfig& cfg, const std::vector<TableRow>& rows, std::ostream& out);

}  // namespace frabessel
