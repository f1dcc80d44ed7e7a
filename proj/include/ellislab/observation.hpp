#pragma once

#include <string>
#include <vector>

#include "ellislab/spaces.hpp"

namespace ellislab {

enum class TargetKind { Exactly, InInterval, Cofinite };

/// The finite-data face of a pointwise-convergence neighborhood: a point is
/// required to land exactly on a value, inside an open interval, or outside
/// a finite excluded set (the one-point-compactification neighborhoods).
struct TargetConstraint {
  TargetKind kind = TargetKind::Exactly;
  ExtendedPoint point = ExtendedPoint::infinity();  // Exactly
  ExtendedPoint lo = ExtendedPoint::infinity();     // InInterval
  ExtendedPoint hi = ExtendedPoint::infinity();     // InInterval
  std::vector<ExtendedPoint> excluded;              // Cofinite

  static TargetConstraint exactly(ExtendedPoint p) {
    TargetConstraint t;
    t.point = std::move(p);
    return t;
  }
  static TargetConstraint interval(ExtendedPoint lo, ExtendedPoint hi) {
    TargetConstraint t;
    t.kind = TargetKind::InInterval;
    t.lo = std::move(lo);
    t.hi = std::move(hi);
    return t;
  }
  static TargetConstraint cofinite(std::vector<ExtendedPoint> excluded) {
    TargetConstraint t;
    t.kind = TargetKind::Cofinite;
    t.excluded = std::move(excluded);
    return t;
  }

  /// True iff the value meets the constraint, in the order of `space`.
  bool satisfied_by(Space space, const ExtendedPoint& value) const;
};

struct ObservationEntry {
  ExtendedPoint point;
  TargetConstraint target;
};

struct Observation {
  Space space;
  std::vector<ObservationEntry> entries;
};

/// Checks the structural invariants: entry points pairwise distinct and
/// legal, targets legal (interval targets nonempty and ordered, cofinite
/// targets only in the one-point compactification). Throws
/// IllegalObservation on violation.
void validate_observation(const Observation& obs);

std::string to_json_text(const Observation& obs);
Observation observation_from_json_text(const std::string& text);

}  // namespace ellislab
