#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace cwb {

// Arbitrary-precision integer used for polynomial coefficients, evaluation,
// and primitive recursive values. Naturals are represented as non-negative
// BigInt values, checked where it matters.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace cwb
