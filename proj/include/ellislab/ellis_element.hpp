#pragma once

#include "ellislab/membership.hpp"
#include "ellislab/observation.hpp"
#include "ellislab/partial_bijection.hpp"

namespace ellislab {

/// A finitely represented element of an Ellis compactification: an injective
/// (order-preserving in Aut mode) partial map on an integer carrier, with a
/// designated absorbing value everywhere else.
struct EllisElementFin {
  Space space;
  GroupMode mode;
  PartialBijection<int> core;
  ExtendedPoint default_value;
};

/// Builds a finite element and checks the invariants of its space: the core
/// must be injective, order-preserving in Aut mode, and the default must be
/// a legal point outside the chain. Default value: oo where legal, inf
/// otherwise.
EllisElementFin make_ellis_element(Space space, GroupMode mode,
                                   PartialBijection<int> core);
EllisElementFin make_ellis_element(Space space, GroupMode mode,
                                   PartialBijection<int> core,
                                   ExtendedPoint default_value);

/// The restriction f|_{D(f)}: the isomorphism onto the partial-map monoid.
PartialBijection<int> xi_restrict(const EllisElementFin& e);

/// Pointwise composition of core-plus-default representations; anything
/// routed through the default stays at the default.
EllisElementFin ellis_compose(const EllisElementFin& e, const EllisElementFin& e2);

/// Value at a point of the finite model: carrier chain points go through the
/// core (default outside its domain), endpoints stay fixed, everything else
/// takes the default value.
ExtendedPoint evaluate(const EllisElementFin& e, const ExtendedPoint& p);

/// The induced map between Ellis compactifications, on finite elements:
/// the core is untouched and the default is pushed along the arrow.
EllisElementFin induce_element(const EllisElementFin& e, Space to);

/// Exact observations of e at the given points.
Observation sample_observation(const EllisElementFin& e,
                               const std::vector<ExtendedPoint>& points);

/// Pushes an observation along a quotient arrow: entry points and targets
/// are mapped pointwise; intervals map endpoint-wise.
Observation induce_quotient_obs(const Observation& obs, Space from, Space to);

/// The ideal/uniqueness predicates attached to an elementary quotient arrow:
/// `ideal_predicate` recognizes elements mapping everything into the
/// collapsed fiber, `ef_check` verifies that agreement off the fiber forces
/// full agreement for a pair of finite elements.
struct ElementaryFiber {
  Space from;
  Space to;

  bool in_fiber(const ExtendedPoint& p) const;
  bool ideal_predicate(const EllisElementFin& e) const;
  bool ef_check(const EllisElementFin& e, const EllisElementFin& e2) const;
};

ElementaryFiber check_EF_ideal(Space from, Space to);

}  // namespace ellislab
