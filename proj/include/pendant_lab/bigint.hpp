#pragma once

#include <boost/multiprecision/gmp.hpp>

namespace pendant_lab {

using BigInt = boost::multiprecision::mpz_int;
using BigRational = boost::multiprecision::mpq_rational;

// Natural logarithm of a positive big integer, accurate to double precision
// for integers of any size.
double log_big(const BigInt& x);

}  // namespace pendant_lab
