#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace b3 {

// Arbitrary-precision signed integer. Burau coefficients, SL2 entries and
// Fibonacci values all outgrow 64 bits quickly, so everything arithmetic
// that faces user input goes through this type.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace b3
