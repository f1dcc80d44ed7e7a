#include "ellislab/pl_automorphism.hpp"

#include <algorithm>

namespace ellislab {

namespace {

bool collinear(const PLAutomorphism::Breakpoint& a,
               const PLAutomorphism::Breakpoint& b,
               const PLAutomorphism::Breakpoint& c) {
  return (b.second - a.second) * (c.first - b.first) ==
         (c.second - b.second) * (b.first - a.first);
}

bool unit_slope(const PLAutomorphism::Breakpoint& a,
                const PLAutomorphism::Breakpoint& b) {
  return b.second - a.second == b.first - a.first;
}

// Minimal representation: interior points on a straight segment and end
// points continuing with slope 1 carry no information; a pure translation is
// anchored at x = 0 and the identity has no breakpoints at all.
std::vector<PLAutomorphism::Breakpoint> normalize(
    std::vector<PLAutomorphism::Breakpoint> pts) {
  bool changed = true;
  while (changed && pts.size() >= 2) {
    changed = false;
    if (unit_slope(pts[0], pts[1])) {
      pts.erase(pts.begin());
      changed = true;
      continue;
    }
    if (unit_slope(pts[pts.size() - 2], pts.back())) {
      pts.pop_back();
      changed = true;
      continue;
    }
    for (size_t i = 1; i + 1 < pts.size(); ++i) {
      if (collinear(pts[i - 1], pts[i], pts[i + 1])) {
        pts.erase(pts.begin() + static_cast<long>(i));
        changed = true;
        break;
      }
    }
  }
  if (pts.size() == 1) {
    Rational shift = pts[0].second - pts[0].first;
    pts.clear();
    if (sign(shift) != 0) pts.emplace_back(Rational(0), shift);
  }
  return pts;
}

}  // namespace

PLAutomorphism PLAutomorphism::through(std::vector<Breakpoint> points) {
  std::sort(points.begin(), points.end());
  for (size_t i = 0; i + 1 < points.size(); ++i) {
    if (!(points[i].first < points[i + 1].first) ||
        !(points[i].second < points[i + 1].second))
      fail(ErrorKind::NotMonotonePairs,
           "breakpoints must strictly increase in both coordinates");
  }
  PLAutomorphism g;
  g.points_ = normalize(std::move(points));
  return g;
}

Rational PLAutomorphism::operator()(const Rational& x) const {
  if (points_.empty()) return x;
  if (x <= points_.front().first)
    return points_.front().second + (x - points_.front().first);
  if (x >= points_.back().first)
    return points_.back().second + (x - points_.back().first);
  auto it = std::upper_bound(
      points_.begin(), points_.end(), x,
      [](const Rational& v, const Breakpoint& p) { return v < p.first; });
  const Breakpoint& hi = *it;
  const Breakpoint& lo = *(it - 1);
  Rational slope = (hi.second - lo.second) / (hi.first - lo.first);
  return lo.second + slope * (x - lo.first);
}

GapCut PLAutomorphism::image_of_cut(const GapCut& c) const {
  // the cut is irrational, so it falls strictly inside one segment
  Rational anchor_x, anchor_y, slope;
  if (points_.empty()) return c;
  if (c.compare_with(points_.front().first) < 0) {
    anchor_x = points_.front().first;
    anchor_y = points_.front().second;
    slope = 1;
  } else if (c.compare_with(points_.back().first) > 0) {
    anchor_x = points_.back().first;
    anchor_y = points_.back().second;
    slope = 1;
  } else {
    size_t i = 0;
    while (i + 1 < points_.size() && c.compare_with(points_[i + 1].first) > 0) ++i;
    anchor_x = points_[i].first;
    anchor_y = points_[i].second;
    slope = (points_[i + 1].second - points_[i].second) /
            (points_[i + 1].first - points_[i].first);
  }
  return GapCut(anchor_y + slope * (c.r() - anchor_x), slope * c.s());
}

PLAutomorphism PLAutomorphism::inverse() const {
  std::vector<Breakpoint> flipped;
  flipped.reserve(points_.size());
  for (const Breakpoint& p : points_) flipped.emplace_back(p.second, p.first);
  return through(std::move(flipped));
}

PLAutomorphism compose(const PLAutomorphism& g, const PLAutomorphism& f) {
  if (f.is_identity()) return g;
  if (g.is_identity()) return f;
  std::vector<Rational> xs;
  for (const auto& p : f.breakpoints()) xs.push_back(p.first);
  PLAutomorphism finv = f.inverse();
  for (const auto& p : g.breakpoints()) xs.push_back(finv(p.first));
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<PLAutomorphism::Breakpoint> pts;
  pts.reserve(xs.size());
  for (const Rational& x : xs) pts.emplace_back(x, g(f(x)));
  return PLAutomorphism::through(std::move(pts));
}

PLAutomorphism pl_witness(std::vector<PLAutomorphism::Breakpoint> pairs) {
  return PLAutomorphism::through(std::move(pairs));
}

ExtendedPoint extend_to_space(const PLAutomorphism& g, Space space,
                              const ExtendedPoint& p) {
  require_legal(space, p);
  switch (p.kind()) {
    case PointKind::Inf:
    case PointKind::Sup:
    case PointKind::Infinity:
      return p;
    case PointKind::Tagged:
      return ExtendedPoint::tagged(g(p.x()), p.tag());
    case PointKind::Gap:
      return ExtendedPoint::gap(g.image_of_cut(p.cut()));
  }
  fail(ErrorKind::Internal, "unreachable");
}

}  // namespace ellislab
