#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace crnreal {

/// Arbitrary-precision fraction, always kept in lowest terms with a positive
/// denominator.
using Rational = mpq_class;
using Integer = mpz_class;
using RatVector = std::vector<Rational>;

/// Parses "p", "-p" or "p/q" (q != 0). Surrounding whitespace is ignored.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);
std::string to_string(const RatVector& v);

bool is_integer(const Rational& value);
bool is_zero(const RatVector& v);

Rational dot(const RatVector& a, const RatVector& b);
RatVector operator+(const RatVector& a, const RatVector& b);
RatVector operator-(const RatVector& a, const RatVector& b);
RatVector operator*(const Rational& s, const RatVector& v);

/// Smallest positive multiple of v with all-integer, coprime entries.
/// The zero vector is returned unchanged.
RatVector primitive_integer(const RatVector& v);

}  // namespace crnreal
