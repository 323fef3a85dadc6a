#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace pdsaw {

// Exact arbitrary-precision integers and rationals. All counting and all
// polynomial/series coefficients go through these; overflow cannot occur.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

BigInt factorial(int n);

// (2n-1)!! = 1 * 3 * ... * (2n-1); the n = 0 product is empty and equals 1.
BigInt double_factorial_odd(int n);

// Binomial coefficient; 0 whenever k < 0 or k > n.
BigInt binomial(int n, int k);

}  // namespace pdsaw
