#include "ellislab/gap_cut.hpp"

namespace ellislab {

int quadratic_sign(const Rational& r, const Rational& s) {
  if (sign(s) == 0) return sign(r);
  if (sign(s) > 0) {
    if (sign(r) >= 0) return 1;
    // r < 0 < s: sign decided by 2s^2 vs r^2
    int c = compare(2 * s * s, r * r);
    if (c == 0) fail(ErrorKind::Internal, "sqrt(2) matched a rational");
    return c;
  }
  // s < 0
  if (sign(r) <= 0) return -1;
  int c = compare(r * r, 2 * s * s);
  if (c == 0) fail(ErrorKind::Internal, "sqrt(2) matched a rational");
  return c;
}

}  // namespace ellislab
