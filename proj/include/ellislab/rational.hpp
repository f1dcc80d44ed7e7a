#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>
#include <string>

#include "ellislab/error.hpp"

namespace ellislab {

// All arithmetic in the library is exact. Points of the chain are rationals
// with arbitrary-precision components; nothing is ever rounded.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::rational<Int>;

inline Rational rat(long n, long d = 1) { return Rational(Int(n), Int(d)); }

inline int sign(const Int& v) { return v == 0 ? 0 : (v < 0 ? -1 : 1); }

inline int sign(const Rational& v) { return sign(v.numerator()); }

inline int compare(const Rational& a, const Rational& b) {
  // boost::rational compares exactly via cross multiplication
  if (a < b) return -1;
  if (b < a) return 1;
  return 0;
}

/// Canonical text form "p/q", always with an explicit positive denominator.
std::string to_text(const Rational& v);

/// Parses the canonical "p/q" form (also accepts a bare integer "p").
Rational parse_rational(const std::string& text);

}  // namespace ellislab
