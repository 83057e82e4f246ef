#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace wtaut {

// mpq_class keeps every value canonical (lowest terms, positive denominator)
// after each arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// "3", "-1/2"
std::string to_string(const Rational& q);

/// Parses "n" or "n/d". Throws DataError on malformed text or zero denominator.
Rational parse_rational(std::string_view text);

Integer binomial(long n, long k);
Integer factorial(long n);

}  // namespace wtaut
