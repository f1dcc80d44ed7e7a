#include "ellislab/rational.hpp"

#include <cctype>

namespace ellislab {

std::string to_text(const Rational& v) {
  return v.numerator().str() + "/" + v.denominator().str();
}

Rational parse_rational(const std::string& text) {
  auto bad = [&]() { fail(ErrorKind::ParseError, "bad rational '" + text + "'"); };
  if (text.empty()) bad();
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(text), Int(1));
    Int num(text.substr(0, slash));
    Int den(text.substr(slash + 1));
    if (den <= 0) bad();
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    bad();
  }
  return Rational();  // unreachable
}

}  // namespace ellislab
