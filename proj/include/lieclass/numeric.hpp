#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace lieclass {

// All dimension counts go through arbitrary precision; E-type representation
// dimensions overflow 64 bits quickly under scaling.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

}  // namespace lieclass
