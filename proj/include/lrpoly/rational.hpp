#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace lrpoly {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical rational num/den. Throws std::invalid_argument on a zero denominator.
Rational make_rational(long num, long den = 1);

/// Parses "p", "-p" or "p/q".
Rational parse_rational(const std::string& text);

/// "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& q);

bool is_integer(const Rational& q);

/// Throws std::domain_error if q is not an integer or does not fit in 64 bits.
std::int64_t to_int64(const Rational& q);

std::vector<Rational> to_rationals(std::span<const long> values);

}  // namespace lrpoly
