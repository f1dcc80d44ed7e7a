#include "ellislab/spaces.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace ellislab {

const char* to_string(Space s) {
  switch (s) {
    case Space::BmX: return "BmX";
    case Space::BlrX: return "BlrX";
    case Space::BudX: return "BudX";
    case Space::BplusX: return "BplusX";
    case Space::AlphaX: return "AlphaX";
    case Space::CmX: return "CmX";
    case Space::CX: return "CX";
  }
  return "?";
}

std::optional<Space> parse_space(const std::string& text) {
  static const std::map<std::string, Space> table = {
      {"BmX", Space::BmX},       {"BlrX", Space::BlrX}, {"BudX", Space::BudX},
      {"BplusX", Space::BplusX}, {"AlphaX", Space::AlphaX},
      {"CmX", Space::CmX},       {"CX", Space::CX},
  };
  auto it = table.find(text);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

ExtendedPoint ExtendedPoint::tagged(Rational x, int j) {
  if (j < -1 || j > 1) fail(ErrorKind::IllegalPoint, "tag must be -1, 0 or +1");
  ExtendedPoint p(PointKind::Tagged);
  p.x_ = std::move(x);
  p.tag_ = j;
  return p;
}

ExtendedPoint ExtendedPoint::gap(GapCut c) {
  ExtendedPoint p(PointKind::Gap);
  p.gap_ = std::move(c);
  return p;
}

const Rational& ExtendedPoint::x() const {
  if (kind_ != PointKind::Tagged) fail(ErrorKind::IllegalPoint, "not a tagged point");
  return x_;
}

int ExtendedPoint::tag() const {
  if (kind_ != PointKind::Tagged) fail(ErrorKind::IllegalPoint, "not a tagged point");
  return tag_;
}

const GapCut& ExtendedPoint::cut() const {
  if (kind_ != PointKind::Gap) fail(ErrorKind::IllegalPoint, "not a gap");
  return *gap_;
}

bool ExtendedPoint::operator==(const ExtendedPoint& o) const {
  if (kind_ != o.kind_) return false;
  switch (kind_) {
    case PointKind::Tagged: return tag_ == o.tag_ && x_ == o.x_;
    case PointKind::Gap: return *gap_ == *o.gap_;
    default: return true;
  }
}

std::string ExtendedPoint::to_text() const {
  switch (kind_) {
    case PointKind::Inf: return "inf";
    case PointKind::Sup: return "sup";
    case PointKind::Infinity: return "oo";
    case PointKind::Gap: return gap_->to_text();
    case PointKind::Tagged: {
      const char* suffix = tag_ == -1 ? "@-1" : (tag_ == 0 ? "@0" : "@+1");
      return ellislab::to_text(x_) + suffix;
    }
  }
  return "?";
}

ExtendedPoint parse_point(const std::string& text) {
  if (text == "inf") return ExtendedPoint::inf();
  if (text == "sup") return ExtendedPoint::sup();
  if (text == "oo") return ExtendedPoint::infinity();
  if (text.rfind("gap(", 0) == 0 && text.back() == ')') {
    std::string body = text.substr(4, text.size() - 5);
    auto comma = body.find(',');
    if (comma == std::string::npos)
      fail(ErrorKind::ParseError, "bad gap '" + text + "'");
    return ExtendedPoint::gap(GapCut(parse_rational(body.substr(0, comma)),
                                     parse_rational(body.substr(comma + 1))));
  }
  auto at = text.rfind('@');
  if (at == std::string::npos) fail(ErrorKind::ParseError, "bad point '" + text + "'");
  std::string tag = text.substr(at + 1);
  int j;
  if (tag == "-1") j = -1;
  else if (tag == "0") j = 0;
  else if (tag == "+1") j = 1;
  else fail(ErrorKind::ParseError, "bad tag in '" + text + "'");
  return ExtendedPoint::tagged(parse_rational(text.substr(0, at)), j);
}

bool point_legal(Space space, const ExtendedPoint& p) {
  switch (p.kind()) {
    case PointKind::Inf:
    case PointKind::Sup:
      return space == Space::BmX || space == Space::BudX || space == Space::CmX;
    case PointKind::Infinity:
      return space == Space::BlrX || space == Space::BplusX ||
             space == Space::AlphaX || space == Space::CX;
    case PointKind::Gap:
      return space != Space::AlphaX;
    case PointKind::Tagged:
      switch (space) {
        case Space::BmX:
        case Space::BlrX:
          return true;
        case Space::BudX:
        case Space::BplusX:
          return p.tag() != 1;  // the (x,-1)~(x,+1) class is stored at -1
        case Space::AlphaX:
        case Space::CmX:
        case Space::CX:
          return p.tag() == 0;
      }
  }
  return false;
}

void require_legal(Space space, const ExtendedPoint& p) {
  if (!point_legal(space, p))
    fail(ErrorKind::IllegalPoint,
         p.to_text() + " is not a point of " + to_string(space));
}

namespace {

// 0 = minimum (inf / oo), 1 = interior, 2 = maximum (sup)
int order_rank(const ExtendedPoint& p) {
  switch (p.kind()) {
    case PointKind::Inf:
    case PointKind::Infinity: return 0;
    case PointKind::Sup: return 2;
    default: return 1;
  }
}

int cmp_interior(const ExtendedPoint& p, const ExtendedPoint& q) {
  if (p.kind() == PointKind::Tagged && q.kind() == PointKind::Tagged) {
    int c = compare(p.x(), q.x());
    if (c != 0) return c;
    return p.tag() < q.tag() ? -1 : (p.tag() > q.tag() ? 1 : 0);
  }
  if (p.kind() == PointKind::Tagged) {
    // q is a gap; the cut value is irrational so the tag never matters
    return -q.cut().compare_with(p.x());
  }
  if (q.kind() == PointKind::Tagged) return p.cut().compare_with(q.x());
  return p.cut().compare(q.cut());
}

}  // namespace

Ordering cmp_extended(Space space, const ExtendedPoint& p, const ExtendedPoint& q) {
  require_legal(space, p);
  require_legal(space, q);
  int rp = order_rank(p), rq = order_rank(q);
  int c;
  if (rp != rq) c = rp < rq ? -1 : 1;
  else if (rp != 1) c = 0;
  else c = cmp_interior(p, q);
  return c < 0 ? Ordering::LT : (c > 0 ? Ordering::GT : Ordering::EQ);
}

bool exists_point_strictly_between(Space space, const ExtendedPoint& p,
                                   const ExtendedPoint& q) {
  if (cmp_extended(space, p, q) != Ordering::LT) return false;
  // Interior points of every space are unbounded in both directions, so an
  // endpoint on either side never blocks density questions.
  if (order_rank(p) != 1 || order_rank(q) != 1) {
    if (order_rank(p) != 1 && order_rank(q) != 1) return true;  // min vs max
    return true;
  }
  if (p.kind() == PointKind::Tagged && q.kind() == PointKind::Tagged &&
      p.x() == q.x()) {
    // (x,-1) < (x,0) < (x,+1) are consecutive; only the outer pair has a
    // point in between, and only where tag 0 is legal between them.
    return p.tag() == -1 && q.tag() == 1;
  }
  // Distinct base positions: the chain is dense, so a (w,0) point fits.
  return true;
}

namespace {

const std::array<std::pair<Space, Space>, 6> kDirectEdges = {{
    {Space::BmX, Space::BlrX},
    {Space::BmX, Space::BudX},
    {Space::BlrX, Space::BplusX},
    {Space::BudX, Space::BplusX},
    {Space::BplusX, Space::AlphaX},
    {Space::CmX, Space::CX},
}};

ExtendedPoint step(Space from, Space to, const ExtendedPoint& p) {
  auto endpoints_to_oo = [](const ExtendedPoint& pt) {
    if (pt.kind() == PointKind::Inf || pt.kind() == PointKind::Sup)
      return ExtendedPoint::infinity();
    return pt;
  };
  auto merge_side_tags = [](const ExtendedPoint& pt) {
    if (pt.kind() == PointKind::Tagged && pt.tag() != 0)
      return ExtendedPoint::tagged(pt.x(), -1);
    return pt;
  };
  if (from == Space::BmX && to == Space::BlrX) return endpoints_to_oo(p);
  if (from == Space::BmX && to == Space::BudX) return merge_side_tags(p);
  if (from == Space::BlrX && to == Space::BplusX) return merge_side_tags(p);
  if (from == Space::BudX && to == Space::BplusX) return endpoints_to_oo(p);
  if (from == Space::CmX && to == Space::CX) return endpoints_to_oo(p);
  if (from == Space::BplusX && to == Space::AlphaX)
    return p.is_chain_point() ? p : ExtendedPoint::infinity();
  fail(ErrorKind::Internal, "no direct edge");
}

// Fixed-length path through the direct edges, empty if unreachable.
std::vector<Space> path_between(Space from, Space to) {
  if (from == to) return {from};
  for (auto [a, b] : kDirectEdges) {
    if (a != from) continue;
    auto rest = path_between(b, to);
    if (!rest.empty()) {
      rest.insert(rest.begin(), from);
      return rest;
    }
  }
  return {};
}

}  // namespace

std::vector<LatticeArrow> lattice_arrows() {
  // Elementary flags: a quotient is elementary iff it collapses a single
  // fiber. The (x,-1)~(x,+1) identification collapses one fiber per chain
  // point, so every arrow factoring through it (and not ending in AlphaX,
  // where everything outside the chain becomes one point) is not elementary.
  return {
      {Space::BmX, Space::BlrX, true},    {Space::BmX, Space::BudX, false},
      {Space::BmX, Space::BplusX, false}, {Space::BmX, Space::AlphaX, true},
      {Space::BlrX, Space::BplusX, false},{Space::BlrX, Space::AlphaX, true},
      {Space::BudX, Space::BplusX, true}, {Space::BudX, Space::AlphaX, true},
      {Space::BplusX, Space::AlphaX, true},
      {Space::CmX, Space::CX, true},
  };
}

bool has_arrow(Space from, Space to) { return !path_between(from, to).empty(); }

ExtendedPoint quotient_point(Space from, Space to, const ExtendedPoint& p) {
  require_legal(from, p);
  auto path = path_between(from, to);
  if (path.empty())
    fail(ErrorKind::NoArrow, std::string(to_string(from)) + " -> " + to_string(to));
  ExtendedPoint q = p;
  for (size_t i = 0; i + 1 < path.size(); ++i) q = step(path[i], path[i + 1], q);
  return q;
}

bool IntervalCell::contains(const Rational& q) const {
  switch (kind) {
    case Kind::LeftRay: return q < *hi;
    case Kind::Point: return q == *lo;
    case Kind::Open: return *lo < q && q < *hi;
    case Kind::RightRay: return q > *lo;
  }
  return false;
}

std::string IntervalCell::to_text() const {
  switch (kind) {
    case Kind::LeftRay: return "(<-," + ellislab::to_text(*hi) + ")";
    case Kind::Point: return "{" + ellislab::to_text(*lo) + "}";
    case Kind::Open:
      return "(" + ellislab::to_text(*lo) + "," + ellislab::to_text(*hi) + ")";
    case Kind::RightRay: return "(" + ellislab::to_text(*lo) + ",->)";
  }
  return "?";
}

ChainPartition::ChainPartition(std::vector<Rational> cuts) : cuts_(std::move(cuts)) {
  if (cuts_.empty()) fail(ErrorKind::EmptySigma, "a partition needs at least one cut");
  std::sort(cuts_.begin(), cuts_.end());
  cuts_.erase(std::unique(cuts_.begin(), cuts_.end()), cuts_.end());
}

int ChainPartition::cell_index(const Rational& q) const {
  auto it = std::lower_bound(cuts_.begin(), cuts_.end(), q);
  auto i = static_cast<int>(it - cuts_.begin());
  if (it != cuts_.end() && *it == q) return 2 * i + 1;
  return 2 * i;
}

std::vector<IntervalCell> ChainPartition::cells() const {
  std::vector<IntervalCell> out;
  out.push_back({IntervalCell::Kind::LeftRay, std::nullopt, cuts_.front()});
  for (size_t i = 0; i < cuts_.size(); ++i) {
    out.push_back({IntervalCell::Kind::Point, cuts_[i], std::nullopt});
    if (i + 1 < cuts_.size())
      out.push_back({IntervalCell::Kind::Open, cuts_[i], cuts_[i + 1]});
  }
  out.push_back({IntervalCell::Kind::RightRay, cuts_.back(), std::nullopt});
  return out;
}

bool ChainPartition::refines(const ChainPartition& coarser) const {
  // Every cut of the coarser partition must be a cut here; then each coarser
  // cell splits along the extra cuts.
  return std::includes(cuts_.begin(), cuts_.end(), coarser.cuts_.begin(),
                       coarser.cuts_.end());
}

ChainPartition stabilizer_partition(std::vector<Rational> sigma) {
  if (sigma.empty()) fail(ErrorKind::EmptySigma, "sigma must be nonempty");
  return ChainPartition(std::move(sigma));
}

}  // namespace ellislab
