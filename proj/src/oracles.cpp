#include "frabessel/oracles.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "frabessel/errors.hpp"
#include "frabessel/specfun.hpp"

namespace frabessel {

namespace {

constexpr std::string_view kExample1 =
R"csv(
x,exact,abs_error
0.01,6.020591621,3.84693E-09
0.2,6.0047675,3.69646E-09
0.39,5.962266116,3.30447E-09
0.58,5.898170158,2.74828E-09
0.77,5.819430732,2.1265E-09
0.96,5.733357752,1.53078E-09
1.15,5.646313465,1.02519E-09
1.34,5.562932684,6.38767E-10
1.53,5.485940594,3.7027E-10
1.72,5.416426922,1.99684E-10
1.91,5.354341757,1.00189E-10
2.1,5.299001572,4.67759E-11
2.29,5.249480524,2.03046E-11
2.48,5.204851927,8.22364E-12
2.67,5.16430296,3.09441E-12
2.86,5.127166869,1.09246E-12
3.05,5.0929132,3.58824E-13
3.24,5.061123119,1.14575E-13
3.43,5.031463853,4.44089E-14
3.62,5.003667528,1.42109E-14
3.81,4.977515233,5.32907E-15
4,4.952825466,2.66454E-15
4.19,4.929445799,7.99361E-15
4.38,4.9072468,1.33227E-14
4.57,4.886117511,3.81917E-14
)csv";

constexpr std::string_view kExample2 =
R"csv(
x,paper_numeric,exact,paper_abs_error
0.01,1.397316,1.41372,0.016428
0.3,1.397316,1.392633,0.016183
0.59,1.397316,1.333139,0.015491
0.88,1.397316,1.238213,0.014388
1.17,1.397316,1.112569,0.012928
1.46,1.397316,0.96238,0.011183
1.75,1.397316,0.794917,0.009237
2.04,1.397316,0.618117,0.007183
2.33,1.397316,0.440132,0.005114
2.62,1.397316,0.26886,0.003124
2.91,1.397316,0.11151,0.001296
3.2,1.397316,-0.02579,0.0003
3.49,1.397316,-0.1383,0.001607
3.78,1.397316,-0.22288,0.00259
4.07,1.397316,-0.27812,0.003232
4.36,1.397316,-0.30433,0.003536
4.65,1.397316,-0.30344,0.003526
4.94,1.397316,-0.2788,0.00324
5.23,1.397316,-0.2349,0.00273
5.52,1.397316,-0.17703,0.002057
5.81,1.397316,-0.11089,0.001289
6.1,1.397316,-0.04222,0.000491
6.39,1.397316,0.023587,0.000274
6.68,1.397316,0.081794,0.00095
6.97,1.397316,0.128612,0.001495
7.26,1.397316,0.161377,0.001875
7.55,1.397316,0.178666,0.002076
7.84,1.397316,0.180307,0.002095
8.13,1.397316,0.16731,0.001944
8.42,1.397316,0.141717,0.001647
8.71,1.397316,0.106388,0.001236
9,1.397316,0.064737,0.000752
9.29,1.397316,0.020448,0.000238
9.58,1.397316,-0.02281,0.000265
)csv";

// The raw strings open with a newline after the delimiter; drop it.
std::string_view body(std::string_view s) { return s.substr(1); }

std::vector<std::vector<double>> parse(std::string_view csv, std::size_t columns) {
  std::istringstream in{std::string(csv)};
  std::string line;
  std::getline(in, line);  // header
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::istringstream fields(line);
    std::string cell;
    while (std::getline(fields, cell, ',')) row.push_back(std::stod(cell));
    if (row.size() != columns) throw Error("malformed table row: " + line);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

OracleSpec OracleSpec::gaussian_potential(double alpha, double gamma) {
  if (!(gamma >= 0) || !(alpha > 0 && alpha < (gamma + 1) / 2))
    throw DomainError("gaussian_potential oracle needs gamma >= 0 and 0 < alpha < (gamma + 1)/2");
  return {Name::gaussian_potential, alpha, gamma};
}

OracleSpec OracleSpec::j_derivative_gamma2(double alpha) {
  if (!(alpha > 0 && alpha < 1)) throw DomainError("j_derivative_gamma2 oracle needs 0 < alpha < 1");
  return {Name::j_derivative_gamma2, alpha, 2.0};
}

double OracleSpec::operator()(double x) const {
  return name == Name::gaussian_potential ? oracle_gaussian_potential(x, alpha, gamma)
                                          : oracle_j_derivative_gamma2(x, alpha);
}

double oracle_gaussian_potential(double x, double alpha, double gamma) {
  OracleSpec::gaussian_potential(alpha, gamma);
  if (!(x >= 0)) throw DomainError("oracle_gaussian_potential: requires x >= 0");
  const double h = (gamma + 1) / 2;
  const double c = gamma_fn(h - alpha) / (std::exp2(2 * alpha) * gamma_fn(h));
  return c * std::exp(-x * x) * kummer_1f1(alpha, h, x * x);
}

double oracle_j_derivative_coefficient(double alpha) {
  OracleSpec::j_derivative_gamma2(alpha);
  return std::exp2(2 * alpha) * gamma_fn(1.5 + alpha) * gamma_fn(0.5 + alpha) / (gamma_fn(1.5) * gamma_fn(2 * alpha + 2));
}

double oracle_j_derivative_gamma2(double x, double alpha) {
  const double c = oracle_j_derivative_coefficient(alpha);
  if (!(x >= 0)) throw DomainError("oracle_j_derivative_gamma2: requires x >= 0");
  return x == 0 ? c : c * std::sin(x) / x;
}

std::string_view example1_csv() { return body(kExample1); }
std::string_view example2_csv() { return body(kExample2); }

const std::vector<Example1Row>& example1_table() {
  static const std::vector<Example1Row> rows = [] {
    std::vector<Example1Row> out;
    for (const auto& r : parse(example1_csv(), 3)) out.push_back({r[0], r[1], r[2]});
    return out;
  }();
  return rows;
}

const std::vector<Example2Row>& example2_table() {
  static const std::vector<Example2Row> rows = [] {
    std::vector<Example2Row> out;
    for (const auto& r : parse(example2_csv(), 4)) out.push_back({r[0], r[1], r[2], r[3]});
    return out;
  }();
  return rows;
}

}  // namespace frabessel
