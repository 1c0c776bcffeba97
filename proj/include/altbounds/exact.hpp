#pragma once

// Arbitrary-precision integer and rational types shared by every module.

#include <gmpxx.h>

#include <string>

namespace altbounds {

using BigInt = mpz_class;
using Rational = mpq_class;

BigInt ipow(const BigInt& base, unsigned long exponent);
BigInt ipow(long base, unsigned long exponent);

// floor for exact rationals (mpz division truncates toward zero)
BigInt floor(const Rational& r);

// Exact quotient; throws std::logic_error if den does not divide num.
BigInt exact_div(const BigInt& num, const BigInt& den);

std::string to_string(const BigInt& x);
// "p/q", or just "p" when the denominator is 1
std::string to_string(const Rational& x);

}  // namespace altbounds
