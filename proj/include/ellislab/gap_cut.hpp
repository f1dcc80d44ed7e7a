#pragma once

#include <string>

#include "ellislab/rational.hpp"

namespace ellislab {

/// Sign of r + s*sqrt(2), decided exactly by squaring with case analysis.
/// Never zero when s != 0 (sqrt(2) is irrational).
int quadratic_sign(const Rational& r, const Rational& s);

/// A proper cut of the rational chain at the irrational value r + s*sqrt(2).
/// Only quadratic cuts are representable; that keeps every comparison the
/// artifact needs exactly decidable.
class GapCut {
 public:
  GapCut(Rational r, Rational s) : r_(std::move(r)), s_(std::move(s)) {
    if (sign(s_) == 0) fail(ErrorKind::RationalCut, "s = 0 does not define a proper gap");
  }

  const Rational& r() const { return r_; }
  const Rational& s() const { return s_; }

  /// True iff q lies strictly below the cut value.
  bool below(const Rational& q) const { return compare_with(q) > 0; }

  /// Sign of (cut value - q); never zero.
  int compare_with(const Rational& q) const { return quadratic_sign(r_ - q, s_); }

  /// Sign of (this - other); zero iff the cuts are identical.
  int compare(const GapCut& other) const {
    return quadratic_sign(r_ - other.r_, s_ - other.s_);
  }

  bool operator==(const GapCut& other) const {
    return r_ == other.r_ && s_ == other.s_;
  }

  std::string to_text() const {
    return "gap(" + ellislab::to_text(r_) + "," + ellislab::to_text(s_) + ")";
  }

 private:
  Rational r_;
  Rational s_;
};

inline GapCut make_gap(const Rational& r, const Rational& s) { return GapCut(r, s); }

}  // namespace ellislab
