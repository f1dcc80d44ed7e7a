#pragma once

#include <optional>
#include <vector>

#include "ellislab/membership.hpp"
#include "ellislab/observation.hpp"
#include "ellislab/pl_automorphism.hpp"

namespace ellislab {

/// One-sided exclusive bound on the rationals; Cut bounds come from gaps.
struct RatBound {
  enum class Kind { NegInfinite, PosInfinite, Finite, Cut };
  Kind kind = Kind::NegInfinite;
  Rational value;              // Finite
  std::optional<GapCut> cut;   // Cut

  static RatBound neg_infinite() { return {}; }
  static RatBound pos_infinite() { return {Kind::PosInfinite, {}, {}}; }
  static RatBound finite(Rational v) { return {Kind::Finite, std::move(v), {}}; }
  static RatBound at_cut(GapCut c) { return {Kind::Cut, {}, std::move(c)}; }
};

/// Some rational strictly between the two bounds, found by exact bisection.
/// Throws UnwitnessableTarget when the bounds leave no room.
Rational rational_strictly_between(const RatBound& lo, const RatBound& hi);

/// A finite injective assignment, extendable to a permutation of the chain.
struct FinitePermutationWitness {
  std::vector<std::pair<Rational, Rational>> pairs;

  std::optional<Rational> apply(const Rational& x) const;
};

/// Completes the witness to a permutation of the finite set
/// domain-union-range (identity outside).
FinitePermutationWitness complete_to_permutation(const FinitePermutationWitness& w);

/// Permutation realizing a consistent AlphaX observation in Sym mode:
/// exact chain constraints are honored verbatim, cofinite constraints by a
/// greedy first-fit pick outside the exclusions.
FinitePermutationWitness permutation_witness(const Observation& obs);

/// Which characterization the witness must realize.
enum class WitnessFace { Bm, Cm, CX, AlphaAut, Br };

WitnessFace default_face(Space space);

/// An automorphism of the chain whose canonical extension satisfies every
/// constraint of a consistent observation. Exact targets must carry the tag
/// of their point (chain tag for the Roelcke face); gap points are realized
/// through interval targets by flanking anchor points. Exact gap targets,
/// exact collisions and endpoint-valued exact targets on interior points are
/// only reachable in the limit and raise UnwitnessableTarget/Inconsistent.
PLAutomorphism ellis_witness(const Observation& obs,
                             std::optional<WitnessFace> face = std::nullopt);

/// Runs the membership check matching the face.
Verdict check_for_face(const Observation& obs, WitnessFace face);

/// Evaluates the canonical extension of g at an observation point for the
/// given face (the Roelcke face sends chain points to chain values in BmX).
ExtendedPoint witness_value(const PLAutomorphism& g, Space space, WitnessFace face,
                            const ExtendedPoint& p);

/// The uniform re-alignment witness: g' agrees with g on sigma exactly and
/// tracks h across the cells of the entourage everywhere else, by anchoring
/// g' to h at the points where h crosses a cell boundary.
PLAutomorphism star_star_witness(const PLAutomorphism& g, const PLAutomorphism& h,
                                 const std::vector<Rational>& sigma,
                                 const ChainPartition& entourage);

/// Verification grid for PL proximity claims: all breakpoints of the maps,
/// midpoints of consecutive grid points, and sigma itself.
std::vector<Rational> verification_grid(
    const std::vector<const PLAutomorphism*>& maps,
    const std::vector<Rational>& sigma);

}  // namespace ellislab
