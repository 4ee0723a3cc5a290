#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace rootcensus {

// All counting and verification arithmetic is exact: arbitrary-precision
// integers and rationals, no floating point anywhere in the library.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

} // namespace rootcensus
