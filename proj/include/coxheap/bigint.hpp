#pragma once

#include <cmath>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace coxheap {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& value) { return value.str(); }

// Natural logarithm of a positive big integer, exact to double precision
// regardless of magnitude.
inline double log_bigint(const BigInt& value) {
  if (value <= 0) return -HUGE_VAL;
  const std::size_t bits = boost::multiprecision::msb(value) + 1;
  if (bits <= 60) return std::log(value.convert_to<double>());
  const std::size_t shift = bits - 60;
  const BigInt top = value >> shift;
  return std::log(top.convert_to<double>()) +
         static_cast<double>(shift) * std::log(2.0);
}

}  // namespace coxheap
