#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ellislab/partial_bijection.hpp"

namespace ellislab {

/// An explicit finite monoid: element labels, a total multiplication table,
/// the identity, and optionally a zero and an involution table. When the
/// monoid was built from partial bijections, element_rank keeps |D(f)| per
/// element so the rank ideals can be formed without the maps themselves.
struct FiniteMonoid {
  std::vector<std::string> labels;
  std::vector<std::vector<int>> mul;
  int identity = 0;
  std::optional<int> zero;
  std::optional<std::vector<int>> star;
  std::optional<std::vector<int>> element_rank;

  int size() const { return static_cast<int>(labels.size()); }
  int product(int a, int b) const {
    return mul[static_cast<size_t>(a)][static_cast<size_t>(b)];
  }

  /// Exhaustively checks associativity, the identity law, the zero law and
  /// both involution laws; throws on any failure.
  void validate() const;
};

/// Member indices of a two-sided ideal, sorted.
using IdealSet = std::vector<int>;

bool is_ideal(const FiniteMonoid& s, const IdealSet& ideal);

struct InverseReport {
  bool ok = true;
  struct Witness {
    int element;
    std::vector<int> inverses;  // 0 or >= 2 entries
  };
  std::vector<Witness> witnesses;
};

/// Every element must have exactly one generalized inverse
/// (a g a = a and g a g = g); reports the offenders otherwise.
InverseReport check_inverse_monoid(const FiniteMonoid& s);

/// Elements of rank <= n. Requires rank data (partial-map monoids only).
IdealSet rank_ideal(const FiniteMonoid& s, int n);

/// Every two-sided ideal of s, as unions of principal ideals, including the
/// empty ideal and s itself. Deterministic order (by size, then members).
std::vector<IdealSet> enumerate_all_ideals(const FiniteMonoid& s, int cap = 512);

struct ReesQuotient {
  FiniteMonoid quotient;
  std::vector<int> quotient_map;  // index in s -> index in quotient
  bool zero_adjoined = false;
};

/// Collapses the ideal to a zero: x *_I y = x * y when the product stays
/// outside I, else 0. If s has no zero one is adjoined first. When s carries
/// an involution fixing I setwise, the lifted involution is installed.
ReesQuotient rees_quotient(const FiniteMonoid& s, const IdealSet& ideal);

/// True iff h respects multiplication and maps identity to identity.
bool check_homomorphism(const std::vector<int>& h, const FiniteMonoid& s,
                        const FiniteMonoid& t);

constexpr int kDefaultClosureCap = 20000;

template <typename P>
struct ClosureResult {
  FiniteMonoid monoid;
  std::vector<PartialBijection<P>> elements;  // parallel to monoid labels
};

/// Smallest monoid of partial bijections containing the generators and the
/// identity, closed under composition. The involution table is installed
/// when the closure happens to be closed under inversion.
template <typename P>
ClosureResult<P> close_under_composition(
    const std::vector<PartialBijection<P>>& generators,
    int cap = kDefaultClosureCap) {
  if (generators.empty())
    fail(ErrorKind::IllegalPoint, "closure needs at least one generator");
  const auto& carrier = generators.front().carrier();
  for (const auto& g : generators)
    if (g.carrier() != carrier)
      fail(ErrorKind::CarrierMismatch, "generators must share a carrier");

  std::vector<PartialBijection<P>> elements;
  std::map<PartialBijection<P>, int> index_of;
  auto intern = [&](const PartialBijection<P>& f) {
    auto it = index_of.find(f);
    if (it != index_of.end()) return it->second;
    int idx = static_cast<int>(elements.size());
    if (idx >= cap) fail(ErrorKind::CapExceeded, "closure exceeds cap");
    elements.push_back(f);
    index_of.emplace(f, idx);
    return idx;
  };

  intern(PartialBijection<P>::identity(carrier));
  for (const auto& g : generators) intern(g);

  // worklist closure: products of any pair involving a fresh element
  for (size_t frontier = 0; frontier < elements.size(); ++frontier) {
    for (size_t j = 0; j <= frontier; ++j) {
      intern(compose(elements[frontier], elements[j]));
      intern(compose(elements[j], elements[frontier]));
    }
  }

  FiniteMonoid m;
  int n = static_cast<int>(elements.size());
  m.mul.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m.mul[static_cast<size_t>(i)][static_cast<size_t>(j)] = index_of.at(
          compose(elements[static_cast<size_t>(i)], elements[static_cast<size_t>(j)]));

  m.labels.reserve(static_cast<size_t>(n));
  std::vector<int> ranks;
  ranks.reserve(static_cast<size_t>(n));
  for (const auto& f : elements) {
    m.labels.push_back(f.to_text());
    ranks.push_back(f.rank());
  }
  m.element_rank = std::move(ranks);
  m.identity = index_of.at(PartialBijection<P>::identity(carrier));

  auto empty = index_of.find(PartialBijection<P>::empty_map(carrier));
  if (empty != index_of.end()) m.zero = empty->second;

  std::vector<int> star(static_cast<size_t>(n));
  bool inverse_closed = true;
  for (int i = 0; i < n && inverse_closed; ++i) {
    auto it = index_of.find(elements[static_cast<size_t>(i)].invert());
    if (it == index_of.end()) inverse_closed = false;
    else star[static_cast<size_t>(i)] = it->second;
  }
  if (inverse_closed) m.star = std::move(star);

  return {std::move(m), std::move(elements)};
}

}  // namespace ellislab
