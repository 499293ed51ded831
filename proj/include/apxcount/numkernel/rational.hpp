#pragma once

#include <gmpxx.h>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace apxcount {

// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
// positive denominator) after every arithmetic operation.
using Rational = mpq_class;
using BigInt = mpz_class;

// At least 50 significant decimal digits; used only for transcendental bounds.
using HighPrecision = boost::multiprecision::cpp_dec_float_50;

Rational make_rational(long num, long den = 1);
Rational make_rational(const BigInt& num, const BigInt& den = 1);

/// Always "num/den", including integers ("3/1") and zero ("0/1").
std::string to_string(const Rational& r);

/// Accepts "num/den" or a bare integer. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

Rational pow(const Rational& base, unsigned exponent);
Rational abs(const Rational& r);
int sign(const Rational& r);
double to_double(const Rational& r);
HighPrecision to_high_precision(const Rational& r);

BigInt binomial(unsigned long n, unsigned long k);
BigInt factorial(unsigned long n);

/// Largest integer d with d^k <= n (n >= 0).
std::int64_t integer_root(std::int64_t n, unsigned k);

/// Rational approximation of sqrt(x) for x >= 0: exact when x is the square
/// of a rational, otherwise floor(sqrt(x) * 2^bits) / 2^bits.
Rational sqrt_approx(const Rational& x, unsigned bits = 40);

}  // namespace apxcount
