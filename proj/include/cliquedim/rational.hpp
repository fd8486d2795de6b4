#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace cliquedim {

/// Exact rational number (always canonical: reduced, positive denominator).
using Rational = mpq_class;
using BigInt = mpz_class;

/// "num/den" rendering; integers still carry "/1".
std::string to_string(const Rational& q);

/// Parses "num/den" or a bare integer. Throws Error(parse_error).
Rational parse_rational(std::string_view text);

BigInt pow(const BigInt& base, unsigned long exponent);
Rational pow(const Rational& base, unsigned long exponent);

/// 2^e for a possibly negative exponent.
Rational pow2(long exponent);

double to_double(const Rational& q);

/// Largest dyadic p/2^bits not above q, and smallest not below q.
Rational round_down_dyadic(const Rational& q, unsigned bits);
Rational round_up_dyadic(const Rational& q, unsigned bits);

}  // namespace cliquedim
