#include "ellislab/observation.hpp"

#include <nlohmann/json.hpp>

namespace ellislab {

using nlohmann::json;

bool TargetConstraint::satisfied_by(Space space, const ExtendedPoint& value) const {
  switch (kind) {
    case TargetKind::Exactly:
      return value == point;
    case TargetKind::InInterval:
      return cmp_extended(space, lo, value) == Ordering::LT &&
             cmp_extended(space, value, hi) == Ordering::LT;
    case TargetKind::Cofinite:
      for (const auto& e : excluded)
        if (value == e) return false;
      return true;
  }
  return false;
}

void validate_observation(const Observation& obs) {
  auto illegal = [](const std::string& why) {
    fail(ErrorKind::IllegalObservation, why);
  };
  for (size_t i = 0; i < obs.entries.size(); ++i) {
    const auto& e = obs.entries[i];
    if (!point_legal(obs.space, e.point))
      illegal("entry point " + e.point.to_text() + " not legal for " +
              to_string(obs.space));
    for (size_t j = i + 1; j < obs.entries.size(); ++j)
      if (obs.entries[j].point == e.point)
        illegal("duplicate entry point " + e.point.to_text());
    switch (e.target.kind) {
      case TargetKind::Exactly:
        if (!point_legal(obs.space, e.target.point))
          illegal("target " + e.target.point.to_text() + " not legal for " +
                  to_string(obs.space));
        break;
      case TargetKind::InInterval:
        if (obs.space == Space::AlphaX)
          illegal("interval targets make no sense in AlphaX");
        if (!point_legal(obs.space, e.target.lo) ||
            !point_legal(obs.space, e.target.hi))
          illegal("interval endpoint not legal for " +
                  std::string(to_string(obs.space)));
        if (!exists_point_strictly_between(obs.space, e.target.lo, e.target.hi))
          illegal("empty interval target (" + e.target.lo.to_text() + "," +
                  e.target.hi.to_text() + ")");
        break;
      case TargetKind::Cofinite:
        if (obs.space != Space::AlphaX)
          illegal("cofinite targets only exist in AlphaX");
        for (const auto& x : e.target.excluded)
          if (!x.is_chain_point())
            illegal("cofinite exclusions must be chain points");
        break;
    }
  }
}

namespace {

json target_to_json(const TargetConstraint& t) {
  switch (t.kind) {
    case TargetKind::Exactly:
      return json{{"kind", "exactly"}, {"point", t.point.to_text()}};
    case TargetKind::InInterval:
      return json{{"kind", "interval"}, {"lo", t.lo.to_text()}, {"hi", t.hi.to_text()}};
    case TargetKind::Cofinite: {
      json ex = json::array();
      for (const auto& p : t.excluded) ex.push_back(p.to_text());
      return json{{"kind", "cofinite"}, {"excluded", ex}};
    }
  }
  return {};
}

TargetConstraint target_from_json(const json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "exactly")
    return TargetConstraint::exactly(parse_point(j.at("point").get<std::string>()));
  if (kind == "interval")
    return TargetConstraint::interval(parse_point(j.at("lo").get<std::string>()),
                                      parse_point(j.at("hi").get<std::string>()));
  if (kind == "cofinite") {
    std::vector<ExtendedPoint> excluded;
    for (const auto& p : j.at("excluded"))
      excluded.push_back(parse_point(p.get<std::string>()));
    return TargetConstraint::cofinite(std::move(excluded));
  }
  fail(ErrorKind::ParseError, "unknown target kind '" + kind + "'");
}

}  // namespace

std::string to_json_text(const Observation& obs) {
  json entries = json::array();
  for (const auto& e : obs.entries)
    entries.push_back(
        json{{"point", e.point.to_text()}, {"target", target_to_json(e.target)}});
  json j{{"space", to_string(obs.space)}, {"entries", entries}};
  return j.dump(2);
}

Observation observation_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::ParseError, std::string("bad observation JSON: ") + e.what());
  }
  Observation obs;
  try {
    auto space = parse_space(j.at("space").get<std::string>());
    if (!space) fail(ErrorKind::ParseError, "unknown space");
    obs.space = *space;
    for (const auto& e : j.at("entries"))
      obs.entries.push_back({parse_point(e.at("point").get<std::string>()),
                             target_from_json(e.at("target"))});
  } catch (const json::exception& e) {
    fail(ErrorKind::ParseError, std::string("bad observation JSON: ") + e.what());
  }
  return obs;
}

}  // namespace ellislab
