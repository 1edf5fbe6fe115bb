#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace meul {

// All results are exact: arbitrary-precision integers for counts,
// reduced rationals (positive denominator) for polynomial coefficients.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Thrown when a computation would exceed a configured size cap.
class resource_limit_error : public std::runtime_error {
 public:
  explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace meul
