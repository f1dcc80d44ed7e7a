#include "ellislab/membership.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace ellislab {

namespace {

// One-sided bound of the set of values a target allows.
struct Bound {
  ExtendedPoint p;
  bool inclusive;
};

struct AllowedRange {
  std::optional<Bound> lo;
  std::optional<Bound> hi;
};

AllowedRange allowed_range(const TargetConstraint& t) {
  switch (t.kind) {
    case TargetKind::Exactly:
      return {Bound{t.point, true}, Bound{t.point, true}};
    case TargetKind::InInterval:
      return {Bound{t.lo, false}, Bound{t.hi, false}};
    case TargetKind::Cofinite:
      return {};  // unbounded
  }
  return {};
}

// True iff every value allowed at the later point is strictly below every
// value allowed at the earlier one -- a certain monotonicity violation.
bool certainly_reversed(Space s, const AllowedRange& earlier,
                        const AllowedRange& later) {
  if (!later.hi || !earlier.lo) return false;
  Ordering c = cmp_extended(s, later.hi->p, earlier.lo->p);
  if (c == Ordering::LT) return true;
  if (c == Ordering::GT) return false;
  return !(later.hi->inclusive && earlier.lo->inclusive);
}

bool target_is_exactly_chain(const TargetConstraint& t) {
  return t.kind == TargetKind::Exactly && t.point.is_chain_point();
}

bool entry_points_sorted_lt(Space s, const ObservationEntry& a,
                            const ObservationEntry& b) {
  return point_lt(s, a.point, b.point);
}

// Endpoint entries must keep the endpoint fixed: only an Exactly target on
// the endpoint itself can allow that (open intervals never contain an
// extreme point, and cofinite targets do not occur outside AlphaX).
std::optional<std::string> endpoint_violation(const Observation& obs,
                                              PointKind endpoint) {
  for (const auto& e : obs.entries) {
    if (e.point.kind() != endpoint) continue;
    if (e.target.kind == TargetKind::Exactly && e.target.point == e.point) continue;
    return e.point.to_text() + " must stay fixed";
  }
  return std::nullopt;
}

std::vector<ObservationEntry> sorted_entries(const Observation& obs) {
  auto entries = obs.entries;
  std::sort(entries.begin(), entries.end(),
            [&](const ObservationEntry& a, const ObservationEntry& b) {
              return entry_points_sorted_lt(obs.space, a, b);
            });
  return entries;
}

// Pairwise monotonicity over the observed points. `strict` demands strictly
// increasing values; otherwise equal values pass.
std::optional<std::string> monotonicity_violation(
    Space s, const std::vector<ObservationEntry>& entries, bool strict) {
  for (size_t i = 0; i < entries.size(); ++i) {
    for (size_t j = i + 1; j < entries.size(); ++j) {
      AllowedRange a = allowed_range(entries[i].target);
      AllowedRange b = allowed_range(entries[j].target);
      if (certainly_reversed(s, a, b))
        return entries[i].point.to_text() + " < " + entries[j].point.to_text() +
               " but the allowed targets are reversed";
      if (strict && entries[i].target.kind == TargetKind::Exactly &&
          entries[j].target.kind == TargetKind::Exactly &&
          cmp_extended(s, entries[j].target.point, entries[i].target.point) ==
              Ordering::EQ)
        return "equal values at " + entries[i].point.to_text() + " and " +
               entries[j].point.to_text();
    }
  }
  return std::nullopt;
}

}  // namespace

Verdict check_alpha_membership(const Observation& obs, GroupMode mode) {
  if (obs.space != Space::AlphaX)
    fail(ErrorKind::IllegalObservation, "check_alpha_membership needs AlphaX");
  validate_observation(obs);

  for (const auto& e : obs.entries) {
    if (e.point.kind() == PointKind::Infinity &&
        e.target.kind == TargetKind::Exactly && e.target.point.is_chain_point())
      return Verdict::refuted("infinity", "oo forced to " + e.target.point.to_text());
  }
  for (size_t i = 0; i < obs.entries.size(); ++i) {
    const auto& a = obs.entries[i];
    if (!target_is_exactly_chain(a.target)) continue;
    for (size_t j = i + 1; j < obs.entries.size(); ++j) {
      const auto& b = obs.entries[j];
      if (!target_is_exactly_chain(b.target)) continue;
      if (a.target.point == b.target.point)
        return Verdict::refuted("collision", a.point.to_text() + " and " +
                                                 b.point.to_text() + " collide at " +
                                                 a.target.point.to_text());
    }
  }
  if (mode == GroupMode::Aut) {
    // strong monotonicity among chain-valued exact targets
    auto entries = sorted_entries(obs);
    for (size_t i = 0; i < entries.size(); ++i) {
      if (entries[i].point.kind() != PointKind::Tagged) continue;
      if (!target_is_exactly_chain(entries[i].target)) continue;
      for (size_t j = i + 1; j < entries.size(); ++j) {
        if (entries[j].point.kind() != PointKind::Tagged) continue;
        if (!target_is_exactly_chain(entries[j].target)) continue;
        if (cmp_extended(obs.space, entries[j].target.point,
                         entries[i].target.point) != Ordering::GT)
          return Verdict::refuted("order", "order reversal between " +
                                               entries[i].point.to_text() + " and " +
                                               entries[j].point.to_text());
      }
    }
  }
  return Verdict::ok();
}

Verdict check_bm_membership(const Observation& obs) {
  if (obs.space != Space::BmX)
    fail(ErrorKind::IllegalObservation, "check_bm_membership needs BmX");
  validate_observation(obs);

  // (v) endpoints fixed
  if (auto why = endpoint_violation(obs, PointKind::Inf))
    return Verdict::refuted("(v)", *why);
  if (auto why = endpoint_violation(obs, PointKind::Sup))
    return Verdict::refuted("(v)", *why);

  // (ii) nothing outside the chain maps into it
  for (const auto& e : obs.entries) {
    if (e.point.is_chain_point()) continue;
    if (target_is_exactly_chain(e.target))
      return Verdict::refuted("(ii)", e.point.to_text() + " forced into the chain");
  }

  // (iii) collisions only outside the chain
  for (size_t i = 0; i < obs.entries.size(); ++i) {
    const auto& a = obs.entries[i];
    if (!target_is_exactly_chain(a.target)) continue;
    for (size_t j = i + 1; j < obs.entries.size(); ++j) {
      const auto& b = obs.entries[j];
      if (b.target.kind != TargetKind::Exactly) continue;
      if (a.target.point == b.target.point)
        return Verdict::refuted("(iii)", "chain-valued collision at " +
                                             a.target.point.to_text());
    }
  }

  // (iv) observed members of a triple (x,-1),(x,0),(x,+1) move coherently
  std::map<std::string, std::vector<const ObservationEntry*>> triples;
  for (const auto& e : obs.entries)
    if (e.point.kind() == PointKind::Tagged)
      triples[to_text(e.point.x())].push_back(&e);
  for (const auto& [x, members] : triples) {
    std::vector<std::pair<int, const ExtendedPoint*>> exact;
    for (const auto* e : members)
      if (e->target.kind == TargetKind::Exactly)
        exact.emplace_back(e->point.tag(), &e->target.point);
    if (exact.size() < 2) continue;
    bool all_equal_nonchain = true;
    for (const auto& [tag, target] : exact)
      if (target->is_chain_point() || !(*target == *exact.front().second))
        all_equal_nonchain = false;
    bool tag_coherent = exact.front().second->kind() == PointKind::Tagged;
    if (tag_coherent) {
      const Rational& y = exact.front().second->x();
      for (const auto& [tag, target] : exact)
        if (target->kind() != PointKind::Tagged || target->tag() != tag ||
            !(target->x() == y))
          tag_coherent = false;
    }
    if (!all_equal_nonchain && !tag_coherent)
      return Verdict::refuted("(iv)", "triple at " + x + " moves incoherently");
  }

  // (i) monotone
  if (auto why = monotonicity_violation(obs.space, sorted_entries(obs), false))
    return Verdict::refuted("(i)", *why);
  return Verdict::ok();
}

Verdict check_cm_membership(const Observation& obs) {
  if (obs.space != Space::CmX)
    fail(ErrorKind::IllegalObservation, "check_cm_membership needs CmX");
  validate_observation(obs);
  if (auto why = endpoint_violation(obs, PointKind::Inf))
    return Verdict::refuted("endpoint", *why);
  if (auto why = endpoint_violation(obs, PointKind::Sup))
    return Verdict::refuted("endpoint", *why);
  if (auto why = monotonicity_violation(obs.space, sorted_entries(obs), false))
    return Verdict::refuted("monotone", *why);
  return Verdict::ok();
}

Verdict check_cX_membership(const Observation& obs) {
  if (obs.space != Space::CX)
    fail(ErrorKind::IllegalObservation, "check_cX_membership needs CX");
  validate_observation(obs);
  for (const auto& e : obs.entries) {
    if (e.point.kind() != PointKind::Infinity) continue;
    if (e.target.kind == TargetKind::Exactly &&
        e.target.point.kind() == PointKind::Infinity)
      continue;
    return Verdict::refuted("infinity", "oo must stay fixed");
  }
  // monotone among targets that stay away from oo; entries forced to oo are
  // outside the monotone fiber and do not participate
  std::vector<ObservationEntry> finite_part;
  for (const auto& e : sorted_entries(obs)) {
    if (e.point.kind() == PointKind::Infinity) continue;
    if (e.target.kind == TargetKind::Exactly &&
        e.target.point.kind() == PointKind::Infinity)
      continue;
    finite_part.push_back(e);
  }
  if (auto why = monotonicity_violation(obs.space, finite_part, false))
    return Verdict::refuted("monotone", *why);
  return Verdict::ok();
}

Verdict check_br_membership(const Observation& obs) {
  if (obs.space != Space::BmX)
    fail(ErrorKind::IllegalObservation, "check_br_membership works on BmX data");
  validate_observation(obs);
  for (const auto& e : obs.entries)
    if (!e.point.is_chain_point())
      fail(ErrorKind::IllegalObservation,
           "Roelcke-face observations live on chain points");

  // (i') monotone
  if (auto why = monotonicity_violation(obs.space, sorted_entries(obs), false))
    return Verdict::refuted("(i')", *why);

  // (ii') collisions only outside the chain
  for (size_t i = 0; i < obs.entries.size(); ++i) {
    const auto& a = obs.entries[i];
    if (!target_is_exactly_chain(a.target)) continue;
    for (size_t j = i + 1; j < obs.entries.size(); ++j) {
      const auto& b = obs.entries[j];
      if (b.target.kind != TargetKind::Exactly) continue;
      if (a.target.point == b.target.point)
        return Verdict::refuted("(ii')", "chain-valued collision at " +
                                             a.target.point.to_text());
    }
  }
  return Verdict::ok();
}

}  // namespace ellislab
