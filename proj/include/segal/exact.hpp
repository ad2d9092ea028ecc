#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace segal {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline std::string to_string(const Int& x) { return x.str(); }

inline std::string to_string(const Rat& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

}  // namespace segal
