#pragma once

#include <optional>
#include <string>
#include <vector>

namespace frabessel {

struct SuiteReport {
  std::string name;
  int passed{0};
  int failed{0};
  std::string first_failure;
};

/// specfun, quadrature, translation, hankel, fracbessel, oracles, golden
std::vector<std::string> selftest_suite_names();

/// Runs the property checks of one suite, or of all suites when `suite` is
/// empty. `data_dir` holds the published tables and golden/ outputs.
/// Throws DomainError for an unknown suite name.
std::vector<SuiteReport> run_selftest(const std::optional<std::string>& suite, const std::string& data_dir);

/// Path of a golden table output, e.g. <data_dir>/golden/example1_table.csv.
std::string golden_path(const std::string& data_dir, const std::string& name);

}  // namespace frabessel
