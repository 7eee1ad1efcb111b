#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace hypertrees {

/// Exact nonnegative count. Every counting result is carried in this type.
using BigCount = boost::multiprecision::cpp_int;

/// Exact fraction, always kept in lowest terms with a positive denominator.
using Probability = boost::multiprecision::cpp_rational;

inline std::string to_decimal(const BigCount& value) { return value.str(); }

inline BigCount pow(const BigCount& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

}  // namespace hypertrees
