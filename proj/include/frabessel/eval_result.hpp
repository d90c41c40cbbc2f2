#pragma once

#include <cstddef>
#include <string>

namespace frabessel {

template <typename Scalar>
struct BasicEvalResult {
  Scalar value{0};
  Scalar error{0};       // estimated absolute error
  std::string method;    // which scheme produced the value
  std::size_t evaluations{0};
};

using EvalResult = BasicEvalResult<double>;

}  // namespace frabessel
