#pragma once

#include <string>

#include "ellislab/observation.hpp"

namespace ellislab {

enum class GroupMode { Sym, Aut };

/// Result of a membership check: either no observed clause is violated, or
/// the first violated clause of the corresponding characterization.
struct Verdict {
  bool consistent = true;
  std::string clause;  // "(i)".."(v)", "(i')", "(ii')", "collision", ...
  std::string detail;

  static Verdict ok() { return {}; }
  static Verdict refuted(std::string clause, std::string detail) {
    return {false, std::move(clause), std::move(detail)};
  }
};

/// Membership in the one-point-compactification Ellis semigroup: no two
/// points may collide on a chain value, the point at infinity is fixed, and
/// in Aut mode chain values must be strictly increasing.
Verdict check_alpha_membership(const Observation& obs, GroupMode mode);

/// Membership among the monotone self-maps of the maximal discrete-chain
/// compactification, clauses (i)-(v): monotone; nothing outside the chain
/// maps into it; collisions only outside the chain; the (x,-1),(x,0),(x,+1)
/// triples move coherently; endpoints are fixed.
Verdict check_bm_membership(const Observation& obs);

/// Monotone self-maps of the minimal LOTS compactification fixing inf/sup.
Verdict check_cm_membership(const Observation& obs);

/// Self-maps of cX fixing oo and monotone among the non-oo targets.
Verdict check_cX_membership(const Observation& obs);

/// The Roelcke-face check: observations live on chain points, targets in the
/// full compactification; (i') monotone and (ii') collisions only outside
/// the chain.
Verdict check_br_membership(const Observation& obs);

}  // namespace ellislab
