#pragma once

#include <gmpxx.h>

#include <string>

namespace walsh {

/// Exact rational coefficient. Always kept in canonical (reduced, positive
/// denominator) form.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// "p/q" form used in all serialized output, even when q == 1.
inline std::string to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Parses "p/q" or "p". Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

}  // namespace walsh
