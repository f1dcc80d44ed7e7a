#include "ellislab/witness.hpp"

#include <algorithm>
#include <map>

namespace ellislab {

namespace {

// Rational on the requested side of a cut; 2|s| overshoots sqrt(2)|s|.
Rational rational_below_cut(const GapCut& c) { return c.r() - 2 * abs(c.s()); }
Rational rational_above_cut(const GapCut& c) { return c.r() + 2 * abs(c.s()); }

bool strictly_below(const Rational& v, const RatBound& hi) {
  switch (hi.kind) {
    case RatBound::Kind::PosInfinite: return true;
    case RatBound::Kind::NegInfinite: return false;
    case RatBound::Kind::Finite: return v < hi.value;
    case RatBound::Kind::Cut: return hi.cut->compare_with(v) > 0;
  }
  return false;
}

bool strictly_above(const Rational& v, const RatBound& lo) {
  switch (lo.kind) {
    case RatBound::Kind::NegInfinite: return true;
    case RatBound::Kind::PosInfinite: return false;
    case RatBound::Kind::Finite: return v > lo.value;
    case RatBound::Kind::Cut: return lo.cut->compare_with(v) < 0;
  }
  return false;
}

}  // namespace

Rational rational_strictly_between(const RatBound& lo, const RatBound& hi) {
  if (lo.kind == RatBound::Kind::NegInfinite &&
      hi.kind == RatBound::Kind::NegInfinite)
    fail(ErrorKind::UnwitnessableTarget, "empty bound interval");
  // rational seeds flanking the target interval
  Rational seed_lo, seed_hi;
  switch (lo.kind) {
    case RatBound::Kind::NegInfinite:
      switch (hi.kind) {
        case RatBound::Kind::PosInfinite: return Rational(0);
        case RatBound::Kind::Finite: return hi.value - 1;
        case RatBound::Kind::Cut: return rational_below_cut(*hi.cut);
        default: fail(ErrorKind::UnwitnessableTarget, "empty bound interval");
      }
    case RatBound::Kind::Finite: seed_lo = lo.value; break;
    case RatBound::Kind::Cut: seed_lo = rational_below_cut(*lo.cut); break;
    case RatBound::Kind::PosInfinite:
      fail(ErrorKind::UnwitnessableTarget, "empty bound interval");
  }
  switch (hi.kind) {
    case RatBound::Kind::PosInfinite:
      if (lo.kind == RatBound::Kind::Finite) return lo.value + 1;
      return rational_above_cut(*lo.cut);
    case RatBound::Kind::Finite: seed_hi = hi.value; break;
    case RatBound::Kind::Cut: seed_hi = rational_above_cut(*hi.cut); break;
    default: fail(ErrorKind::UnwitnessableTarget, "empty bound interval");
  }
  if (lo.kind == RatBound::Kind::Finite && hi.kind == RatBound::Kind::Finite) {
    if (!(lo.value < hi.value))
      fail(ErrorKind::UnwitnessableTarget, "empty bound interval");
    return (lo.value + hi.value) / 2;
  }
  // at least one cut bound: bisect between the rational seeds; the strict
  // width of the interval is positive, so this terminates
  Rational a = seed_lo, b = seed_hi;
  for (int iter = 0; iter < 20000; ++iter) {
    Rational m = (a + b) / 2;
    if (!strictly_above(m, lo)) a = m;
    else if (!strictly_below(m, hi)) b = m;
    else return m;
  }
  fail(ErrorKind::UnwitnessableTarget, "empty bound interval");
}

std::optional<Rational> FinitePermutationWitness::apply(const Rational& x) const {
  for (const auto& [a, b] : pairs)
    if (a == x) return b;
  return std::nullopt;
}

FinitePermutationWitness complete_to_permutation(const FinitePermutationWitness& w) {
  std::vector<Rational> domain, range, carrier;
  for (const auto& [a, b] : w.pairs) {
    domain.push_back(a);
    range.push_back(b);
    carrier.push_back(a);
    carrier.push_back(b);
  }
  std::sort(carrier.begin(), carrier.end());
  carrier.erase(std::unique(carrier.begin(), carrier.end()), carrier.end());
  std::sort(domain.begin(), domain.end());
  std::sort(range.begin(), range.end());
  std::vector<Rational> missing_dom, missing_ran;
  for (const auto& x : carrier) {
    if (!std::binary_search(domain.begin(), domain.end(), x)) missing_dom.push_back(x);
    if (!std::binary_search(range.begin(), range.end(), x)) missing_ran.push_back(x);
  }
  FinitePermutationWitness out = w;
  for (size_t i = 0; i < missing_dom.size(); ++i)
    out.pairs.emplace_back(missing_dom[i], missing_ran[i]);
  return out;
}

FinitePermutationWitness permutation_witness(const Observation& obs) {
  Verdict v = check_alpha_membership(obs, GroupMode::Sym);
  if (!v.consistent)
    fail(ErrorKind::Inconsistent, "observation is refuted: " + v.clause);

  FinitePermutationWitness w;
  std::vector<Rational> used;
  auto mark_used = [&](const Rational& r) { used.push_back(r); };
  auto is_used = [&](const Rational& r) {
    return std::find(used.begin(), used.end(), r) != used.end();
  };

  // exact constraints first, then greedy first-fit for the cofinite ones
  for (const auto& e : obs.entries) {
    if (e.target.kind != TargetKind::Exactly) continue;
    if (e.point.kind() == PointKind::Infinity) continue;  // oo -> oo, free
    if (!e.target.point.is_chain_point())
      fail(ErrorKind::UnwitnessableTarget,
           "a permutation cannot send " + e.point.to_text() + " to " +
               e.target.point.to_text());
    w.pairs.emplace_back(e.point.x(), e.target.point.x());
    mark_used(e.target.point.x());
  }
  for (const auto& e : obs.entries) {
    if (e.target.kind != TargetKind::Cofinite) continue;
    if (e.point.kind() == PointKind::Infinity) continue;  // oo avoids any finite set
    auto excluded = [&](const Rational& r) {
      for (const auto& x : e.target.excluded)
        if (x.x() == r) return true;
      return false;
    };
    Rational candidate(0);
    while (excluded(candidate) || is_used(candidate)) candidate += 1;
    w.pairs.emplace_back(e.point.x(), candidate);
    mark_used(candidate);
  }
  return w;
}

WitnessFace default_face(Space space) {
  switch (space) {
    case Space::BmX: return WitnessFace::Bm;
    case Space::CmX: return WitnessFace::Cm;
    case Space::CX: return WitnessFace::CX;
    case Space::AlphaX: return WitnessFace::AlphaAut;
    default:
      fail(ErrorKind::IllegalObservation,
           std::string("no witness face for ") + to_string(space));
  }
}

Verdict check_for_face(const Observation& obs, WitnessFace face) {
  switch (face) {
    case WitnessFace::Bm: return check_bm_membership(obs);
    case WitnessFace::Cm: return check_cm_membership(obs);
    case WitnessFace::CX: return check_cX_membership(obs);
    case WitnessFace::AlphaAut: return check_alpha_membership(obs, GroupMode::Aut);
    case WitnessFace::Br: return check_br_membership(obs);
  }
  fail(ErrorKind::Internal, "unreachable");
}

ExtendedPoint witness_value(const PLAutomorphism& g, Space space, WitnessFace face,
                            const ExtendedPoint& p) {
  if (face == WitnessFace::Br) {
    if (!p.is_chain_point())
      fail(ErrorKind::IllegalObservation, "Roelcke-face points live in the chain");
    return ExtendedPoint::chain(g(p.x()));
  }
  return extend_to_space(g, space, p);
}

namespace {

struct ValueConstraint {
  RatBound lo;
  RatBound hi;
  std::optional<Rational> exact;
  std::vector<Rational> excluded;  // cofinite exclusions
};

// Bounds on the chain value the witness may take inside an interval target.
// Sound shrink: a value strictly beyond the endpoint's base position clears
// the endpoint regardless of side tags.
RatBound lower_bound_for(const ExtendedPoint& lo) {
  switch (lo.kind()) {
    case PointKind::Inf:
    case PointKind::Infinity: return RatBound::neg_infinite();
    case PointKind::Sup: return RatBound::pos_infinite();
    case PointKind::Tagged: return RatBound::finite(lo.x());
    case PointKind::Gap: return RatBound::at_cut(lo.cut());
  }
  return RatBound::neg_infinite();
}

RatBound upper_bound_for(const ExtendedPoint& hi) {
  switch (hi.kind()) {
    case PointKind::Sup: return RatBound::pos_infinite();
    case PointKind::Inf:
    case PointKind::Infinity: return RatBound::neg_infinite();
    case PointKind::Tagged: return RatBound::finite(hi.x());
    case PointKind::Gap: return RatBound::at_cut(hi.cut());
  }
  return RatBound::pos_infinite();
}

// -1, 0, +1 comparison of two finite-or-cut bound positions
int cmp_bound_position(const RatBound& a, const RatBound& b) {
  if (a.kind == RatBound::Kind::Finite && b.kind == RatBound::Kind::Finite)
    return compare(a.value, b.value);
  if (a.kind == RatBound::Kind::Cut && b.kind == RatBound::Kind::Cut)
    return a.cut->compare(*b.cut);
  if (a.kind == RatBound::Kind::Cut) return a.cut->compare_with(b.value);
  return -b.cut->compare_with(a.value);
}

// min of exclusive upper bounds (PosInfinite is no bound)
RatBound min_bound(const RatBound& a, const RatBound& b) {
  if (a.kind == RatBound::Kind::PosInfinite) return b;
  if (b.kind == RatBound::Kind::PosInfinite) return a;
  if (a.kind == RatBound::Kind::NegInfinite) return a;
  if (b.kind == RatBound::Kind::NegInfinite) return b;
  return cmp_bound_position(a, b) <= 0 ? a : b;
}

// max of exclusive lower bounds (NegInfinite is no bound)
RatBound max_bound(const RatBound& a, const RatBound& b) {
  if (a.kind == RatBound::Kind::NegInfinite) return b;
  if (b.kind == RatBound::Kind::NegInfinite) return a;
  if (a.kind == RatBound::Kind::PosInfinite) return a;
  if (b.kind == RatBound::Kind::PosInfinite) return b;
  return cmp_bound_position(a, b) >= 0 ? a : b;
}

int required_target_tag(WitnessFace face, const ExtendedPoint& point) {
  if (face == WitnessFace::Br) return 0;
  return point.tag();
}

}  // namespace

PLAutomorphism ellis_witness(const Observation& obs,
                             std::optional<WitnessFace> face_opt) {
  WitnessFace face = face_opt ? *face_opt : default_face(obs.space);
  Verdict verdict = check_for_face(obs, face);
  if (!verdict.consistent)
    fail(ErrorKind::Inconsistent,
         "observation is refuted by clause " + verdict.clause);

  // One constraint unit per interior position. Entries of the same triple
  // (x,-1),(x,0),(x,+1) collapse to a single constraint on g(x); endpoint
  // entries are pinned by the membership check already and need no anchor.
  struct Unit {
    bool at_gap;
    Rational x;                 // position of a tagged unit
    std::optional<GapCut> cut;  // position of a gap unit
    ValueConstraint c;
  };
  std::vector<Unit> units;
  auto unit_for = [&](const ObservationEntry& e) -> Unit& {
    for (auto& u : units) {
      if (e.point.kind() == PointKind::Tagged && !u.at_gap && u.x == e.point.x())
        return u;
      if (e.point.kind() == PointKind::Gap && u.at_gap && *u.cut == e.point.cut())
        return u;
    }
    Unit u;
    u.at_gap = e.point.kind() == PointKind::Gap;
    if (u.at_gap) u.cut = e.point.cut();
    else u.x = e.point.x();
    u.c.lo = RatBound::neg_infinite();
    u.c.hi = RatBound::pos_infinite();
    units.push_back(std::move(u));
    return units.back();
  };

  for (const auto& e : obs.entries) {
    if (e.point.kind() != PointKind::Tagged && e.point.kind() != PointKind::Gap)
      continue;
    Unit& u = unit_for(e);
    switch (e.target.kind) {
      case TargetKind::Exactly: {
        const ExtendedPoint& t = e.target.point;
        if (e.point.kind() == PointKind::Gap)
          fail(ErrorKind::UnwitnessableTarget,
               "cannot hit a prescribed value at a gap exactly; use an interval");
        if (t.kind() != PointKind::Tagged ||
            t.tag() != required_target_tag(face, e.point))
          fail(ErrorKind::UnwitnessableTarget,
               e.point.to_text() + " cannot reach " + t.to_text() +
                   " under an automorphism");
        if (u.c.exact && *u.c.exact != t.x())
          fail(ErrorKind::Inconsistent, "triple constrained to two exact values");
        u.c.exact = t.x();
        break;
      }
      case TargetKind::InInterval:
        u.c.lo = max_bound(u.c.lo, lower_bound_for(e.target.lo));
        u.c.hi = min_bound(u.c.hi, upper_bound_for(e.target.hi));
        break;
      case TargetKind::Cofinite:
        for (const auto& x : e.target.excluded) u.c.excluded.push_back(x.x());
        break;
    }
  }
  std::sort(units.begin(), units.end(), [](const Unit& a, const Unit& b) {
    if (!a.at_gap && !b.at_gap) return a.x < b.x;
    if (a.at_gap && b.at_gap) return a.cut->compare(*b.cut) < 0;
    if (a.at_gap) return a.cut->compare_with(b.x) < 0;
    return b.cut->compare_with(a.x) > 0;
  });

  // effective upper bound of each pick: its own upper bound and everything
  // the later units can still accept (values strictly increase left to right)
  std::vector<RatBound> effective_hi(units.size(), RatBound::pos_infinite());
  RatBound running = RatBound::pos_infinite();
  for (size_t i = units.size(); i-- > 0;) {
    const ValueConstraint& c = units[i].c;
    effective_hi[i] = min_bound(c.hi, running);
    running = min_bound(running, c.exact ? RatBound::finite(*c.exact) : c.hi);
  }

  std::vector<PLAutomorphism::Breakpoint> anchors;
  RatBound prev_val = RatBound::neg_infinite();
  std::optional<Rational> prev_dom;
  auto place = [&](const Rational& d, const Rational& v) {
    if (prev_dom && !(*prev_dom < d))
      fail(ErrorKind::Internal, "anchor positions not increasing");
    anchors.emplace_back(d, v);
    prev_dom = d;
    prev_val = RatBound::finite(v);
  };

  for (size_t i = 0; i < units.size(); ++i) {
    const Unit& u = units[i];
    const ValueConstraint& c = u.c;
    if (!u.at_gap) {
      Rational v;
      if (c.exact) {
        if (!strictly_above(*c.exact, max_bound(prev_val, c.lo)) ||
            !strictly_below(*c.exact, min_bound(c.hi, effective_hi[i])))
          fail(ErrorKind::Inconsistent,
               "exact value " + to_text(*c.exact) + " conflicts with neighbors");
        v = *c.exact;
      } else {
        v = rational_strictly_between(max_bound(prev_val, c.lo),
                                      min_bound(c.hi, effective_hi[i]));
        for (int guard = 0; std::find(c.excluded.begin(), c.excluded.end(), v) !=
                            c.excluded.end();
             ++guard) {
          if (guard > 1000) fail(ErrorKind::Internal, "exclusion dodging stuck");
          v = rational_strictly_between(RatBound::finite(v),
                                        min_bound(c.hi, effective_hi[i]));
        }
      }
      place(u.x, v);
    } else {
      // gap position: flank it with two anchors mapping into the target
      // interval; a monotone map then carries the cut strictly in between
      RatBound dom_lo =
          prev_dom ? RatBound::finite(*prev_dom) : RatBound::neg_infinite();
      RatBound gap_here = RatBound::at_cut(*u.cut);
      RatBound next_dom = RatBound::pos_infinite();
      if (i + 1 < units.size()) {
        next_dom = units[i + 1].at_gap ? RatBound::at_cut(*units[i + 1].cut)
                                       : RatBound::finite(units[i + 1].x);
      }
      Rational d1 = rational_strictly_between(dom_lo, gap_here);
      Rational d2 = rational_strictly_between(gap_here, next_dom);
      RatBound hi_eff = min_bound(c.hi, effective_hi[i]);
      Rational v1 = rational_strictly_between(max_bound(prev_val, c.lo), hi_eff);
      Rational v2 = rational_strictly_between(RatBound::finite(v1), hi_eff);
      place(d1, v1);
      place(d2, v2);
    }
  }

  PLAutomorphism g = PLAutomorphism::through(std::move(anchors));

  // post-hoc re-verification, exact
  for (const auto& e : obs.entries) {
    ExtendedPoint value = witness_value(g, obs.space, face, e.point);
    if (!e.target.satisfied_by(obs.space, value))
      fail(ErrorKind::Internal,
           "constructed witness misses the constraint at " + e.point.to_text());
  }
  return g;
}

PLAutomorphism star_star_witness(const PLAutomorphism& g, const PLAutomorphism& h,
                                 const std::vector<Rational>& sigma,
                                 const ChainPartition& entourage) {
  if (sigma.empty()) fail(ErrorKind::EmptySigma, "sigma must be nonempty");
  for (const Rational& x : sigma)
    if (entourage.cell_index(g(x)) != entourage.cell_index(h(x)))
      fail(ErrorKind::PreconditionViolated,
           "g and h are not entourage-close at " + to_text(x));
  if (g == h) return g;

  std::map<Rational, Rational> anchors;
  for (const Rational& x : sigma) anchors[x] = g(x);
  PLAutomorphism hinv = h.inverse();
  for (const Rational& boundary : entourage.cuts()) {
    Rational t = hinv(boundary);
    auto it = anchors.find(t);
    if (it != anchors.end()) {
      if (it->second != boundary)
        fail(ErrorKind::Internal, "sigma anchor collides with a cell boundary");
      continue;
    }
    anchors[t] = boundary;
  }
  std::vector<PLAutomorphism::Breakpoint> pts(anchors.begin(), anchors.end());
  for (size_t i = 0; i + 1 < pts.size(); ++i)
    if (!(pts[i].second < pts[i + 1].second))
      fail(ErrorKind::Internal, "anchor values not increasing");
  return PLAutomorphism::through(std::move(pts));
}

std::vector<Rational> verification_grid(
    const std::vector<const PLAutomorphism*>& maps,
    const std::vector<Rational>& sigma) {
  std::vector<Rational> grid = sigma;
  for (const auto* m : maps)
    for (const auto& bp : m->breakpoints()) grid.push_back(bp.first);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  if (grid.empty()) {
    grid.push_back(Rational(0));
    return grid;
  }
  std::vector<Rational> with_mids;
  with_mids.push_back(grid.front() - 1);
  for (size_t i = 0; i < grid.size(); ++i) {
    with_mids.push_back(grid[i]);
    if (i + 1 < grid.size()) with_mids.push_back((grid[i] + grid[i + 1]) / 2);
  }
  with_mids.push_back(grid.back() + 1);
  return with_mids;
}

}  // namespace ellislab
