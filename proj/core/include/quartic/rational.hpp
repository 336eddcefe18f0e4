#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace quartic {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "a" or "a/b" (optional leading sign, b > 0 after sign handling).
/// Throws ParseError on anything else, including decimals and exponents.
Rational parse_rational(std::string_view text);

/// Canonical wire form: "a" for integers, "a/b" in lowest terms otherwise.
std::string to_string(const Rational& value);

/// n/d in lowest terms; the two-argument mpq_class constructor does not canonicalize.
inline Rational ratio(const Integer& n, const Integer& d) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

}  // namespace quartic
