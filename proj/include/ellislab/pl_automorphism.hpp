#pragma once

#include <vector>

#include "ellislab/spaces.hpp"

namespace ellislab {

/// An order automorphism of the rational chain, piecewise linear with
/// finitely many rational breakpoints and slope 1 beyond the extreme ones.
/// Closed under composition and inversion, and rich enough to realize any
/// finite increasing tuple assignment.
class PLAutomorphism {
 public:
  using Breakpoint = std::pair<Rational, Rational>;

  /// The identity map (no breakpoints).
  PLAutomorphism() = default;

  /// The map through the given points, linear in between, slope 1 outside.
  /// Throws NotMonotonePairs unless x- and y-coordinates both strictly
  /// increase.
  static PLAutomorphism through(std::vector<Breakpoint> points);

  const std::vector<Breakpoint>& breakpoints() const { return points_; }

  Rational operator()(const Rational& x) const;

  /// Exact image of a quadratic cut: affine image on the segment holding it.
  GapCut image_of_cut(const GapCut& c) const;

  PLAutomorphism inverse() const;

  bool is_identity() const { return points_.empty(); }

  /// Equality as functions (representations are normalized on construction).
  bool operator==(const PLAutomorphism& o) const { return points_ == o.points_; }
  bool operator!=(const PLAutomorphism& o) const { return !(*this == o); }

 private:
  std::vector<Breakpoint> points_;  // normalized: minimal, strictly increasing
};

/// g after f, exactly.
PLAutomorphism compose(const PLAutomorphism& g, const PLAutomorphism& f);

/// Realizes the ultrahomogeneity witness g(x_k) = y_k for finitely many
/// strictly increasing pairs.
PLAutomorphism pl_witness(std::vector<PLAutomorphism::Breakpoint> pairs);

/// Canonical extension of an automorphism of the chain to a compactified
/// space: endpoints stay fixed, (x, j) keeps its side tag, gaps go to the
/// image cut.
ExtendedPoint extend_to_space(const PLAutomorphism& g, Space space,
                              const ExtendedPoint& p);

}  // namespace ellislab
