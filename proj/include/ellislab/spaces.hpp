#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ellislab/gap_cut.hpp"
#include "ellislab/rational.hpp"

namespace ellislab {

/// The compactified point spaces of the rational chain.
///
/// BmX, BlrX, BudX, BplusX and AlphaX model the discrete-chain case
/// (b_m X, its inf~sup quotient, its (x,-1)~(x,+1) quotient, both, and the
/// one-point compactification). CmX and CX model the LOTS case.
enum class Space { BmX, BlrX, BudX, BplusX, AlphaX, CmX, CX };

const char* to_string(Space s);
std::optional<Space> parse_space(const std::string& text);

enum class PointKind { Inf, Sup, Tagged, Gap, Infinity };

/// A point of a compactified chain: inf, sup, (x, j) with j in {-1,0,+1},
/// a gap cut, or the identified endpoint "oo" of the quotient spaces.
/// Points of the chain X itself are Tagged with j = 0.
class ExtendedPoint {
 public:
  static ExtendedPoint inf() { return ExtendedPoint(PointKind::Inf); }
  static ExtendedPoint sup() { return ExtendedPoint(PointKind::Sup); }
  static ExtendedPoint infinity() { return ExtendedPoint(PointKind::Infinity); }
  static ExtendedPoint tagged(Rational x, int j);
  static ExtendedPoint chain(Rational x) { return tagged(std::move(x), 0); }
  static ExtendedPoint gap(GapCut c);

  PointKind kind() const { return kind_; }
  bool is_chain_point() const { return kind_ == PointKind::Tagged && tag_ == 0; }

  const Rational& x() const;  // Tagged only
  int tag() const;            // Tagged only
  const GapCut& cut() const;  // Gap only

  bool operator==(const ExtendedPoint& o) const;
  bool operator!=(const ExtendedPoint& o) const { return !(*this == o); }

  /// Canonical text form: "inf", "sup", "oo", "p/q@j", "gap(p/q,p/q)".
  std::string to_text() const;

 private:
  explicit ExtendedPoint(PointKind k) : kind_(k) {}

  PointKind kind_;
  Rational x_;
  int tag_ = 0;
  std::optional<GapCut> gap_;
};

ExtendedPoint parse_point(const std::string& text);

enum class Ordering { LT = -1, EQ = 0, GT = 1 };

bool point_legal(Space space, const ExtendedPoint& p);
void require_legal(Space space, const ExtendedPoint& p);

/// Total order on the points of a space. Inf is minimal and Sup maximal
/// where they exist. In the quotient spaces that identify inf with sup the
/// point "oo" is placed first; that is a canonical enumeration order for
/// deterministic comparisons, not a topological statement. In BudX and
/// BplusX the identified class {(x,-1),(x,+1)} sits at the -1 slot of x.
Ordering cmp_extended(Space space, const ExtendedPoint& p, const ExtendedPoint& q);

inline bool point_lt(Space s, const ExtendedPoint& p, const ExtendedPoint& q) {
  return cmp_extended(s, p, q) == Ordering::LT;
}

/// True iff some legal point of `space` lies strictly between p and q.
bool exists_point_strictly_between(Space space, const ExtendedPoint& p,
                                   const ExtendedPoint& q);

struct LatticeArrow {
  Space from;
  Space to;
  bool elementary;
};

/// All (non-reflexive) arrows of the two quotient lattices, elementary
/// flags included. Quotient maps collapsing a single fiber are elementary.
std::vector<LatticeArrow> lattice_arrows();

/// Reflexive-transitive reachability in the quotient lattice.
bool has_arrow(Space from, Space to);

/// Pushes a point along an arrow of the quotient lattice, performing
/// exactly the identifications of the corresponding quotient maps:
///   BmX -> BlrX   identifies inf ~ sup -> oo
///   BmX -> BudX   identifies (x,-1) ~ (x,+1), represented by (x,-1)
///   BlrX -> BplusX, BudX -> BplusX, BplusX -> AlphaX, CmX -> CX
/// and their compositions. The identity arrow is allowed.
ExtendedPoint quotient_point(Space from, Space to, const ExtendedPoint& p);

/// Cell of the orbit partition of a pointwise stabilizer acting on the
/// chain: a one-point cell or an open interval with symbolic ends.
struct IntervalCell {
  enum class Kind { LeftRay, Point, Open, RightRay };
  Kind kind;
  std::optional<Rational> lo;  // Open, RightRay
  std::optional<Rational> hi;  // Open, LeftRay; Point stores the point in lo

  bool contains(const Rational& q) const;
  std::string to_text() const;
};

/// Ordered partition of the chain into the cells
/// (<-, c1), {c1}, (c1, c2), ..., {cn}, (cn, ->) for sorted cuts c1..cn.
/// Doubles as the entourage representation for the witness constructions:
/// two rationals are entourage-close iff they share a cell.
class ChainPartition {
 public:
  explicit ChainPartition(std::vector<Rational> cuts);

  const std::vector<Rational>& cuts() const { return cuts_; }
  int cell_count() const { return static_cast<int>(cuts_.size()) * 2 + 1; }

  /// Index of the cell containing q; cells are numbered left to right,
  /// even indexes are intervals and odd indexes are the one-point cells.
  int cell_index(const Rational& q) const;

  std::vector<IntervalCell> cells() const;

  /// True iff every cell of `coarser` is a union of cells of this partition.
  bool refines(const ChainPartition& coarser) const;

 private:
  std::vector<Rational> cuts_;  // sorted, distinct, nonempty
};

/// Orbit partition of the stabilizer of sigma acting on the discrete chain.
ChainPartition stabilizer_partition(std::vector<Rational> sigma);

}  // namespace ellislab
