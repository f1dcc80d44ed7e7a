#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "ellislab/error.hpp"
#include "ellislab/rational.hpp"

namespace ellislab {

/// A finite injective partial map on a totally ordered carrier. Elements of
/// the symmetric inverse monoid I_n and, when order-preserving, of J_n.
template <typename P>
class PartialBijection {
 public:
  using Pair = std::pair<P, P>;

  PartialBijection(std::vector<P> carrier, std::vector<Pair> pairs)
      : carrier_(std::move(carrier)), pairs_(std::move(pairs)) {
    std::sort(carrier_.begin(), carrier_.end());
    carrier_.erase(std::unique(carrier_.begin(), carrier_.end()), carrier_.end());
    std::sort(pairs_.begin(), pairs_.end(),
              [](const Pair& a, const Pair& b) { return a.first < b.first; });
    validate();
  }

  static PartialBijection identity(std::vector<P> carrier) {
    std::vector<Pair> pairs;
    pairs.reserve(carrier.size());
    for (const P& x : carrier) pairs.emplace_back(x, x);
    return PartialBijection(std::move(carrier), std::move(pairs));
  }

  static PartialBijection empty_map(std::vector<P> carrier) {
    return PartialBijection(std::move(carrier), {});
  }

  const std::vector<P>& carrier() const { return carrier_; }
  const std::vector<Pair>& pairs() const { return pairs_; }

  int rank() const { return static_cast<int>(pairs_.size()); }

  bool defined_at(const P& x) const { return apply(x).has_value(); }

  std::optional<P> apply(const P& x) const {
    auto it = std::lower_bound(
        pairs_.begin(), pairs_.end(), x,
        [](const Pair& a, const P& v) { return a.first < v; });
    if (it == pairs_.end() || it->first != x) return std::nullopt;
    return it->second;
  }

  bool is_identity() const {
    if (pairs_.size() != carrier_.size()) return false;
    return std::all_of(pairs_.begin(), pairs_.end(),
                       [](const Pair& p) { return p.first == p.second; });
  }

  /// x < y in the domain implies f(x) < f(y). Domain pairs are kept sorted,
  /// so this is one pass over consecutive images.
  bool is_order_preserving() const {
    for (size_t i = 0; i + 1 < pairs_.size(); ++i)
      if (!(pairs_[i].second < pairs_[i + 1].second)) return false;
    return true;
  }

  /// The relation transpose f*: the unique generalized inverse in I_X.
  PartialBijection invert() const {
    std::vector<Pair> flipped;
    flipped.reserve(pairs_.size());
    for (const Pair& p : pairs_) flipped.emplace_back(p.second, p.first);
    return PartialBijection(carrier_, std::move(flipped));
  }

  /// Extensional equality: same domain, same values.
  bool operator==(const PartialBijection& o) const { return pairs_ == o.pairs_; }
  bool operator!=(const PartialBijection& o) const { return !(*this == o); }
  bool operator<(const PartialBijection& o) const { return pairs_ < o.pairs_; }

  std::string to_text() const {
    std::string out = "{";
    for (size_t i = 0; i < pairs_.size(); ++i) {
      if (i) out += ", ";
      out += point_text(pairs_[i].first) + "->" + point_text(pairs_[i].second);
    }
    return out + "}";
  }

 private:
  static std::string point_text(const P& v) {
    if constexpr (std::is_same_v<P, Rational>) return ellislab::to_text(v);
    else return std::to_string(v);
  }

  void validate() const {
    for (size_t i = 0; i + 1 < pairs_.size(); ++i)
      if (pairs_[i].first == pairs_[i + 1].first)
        fail(ErrorKind::IllegalPoint, "duplicate domain point in " + to_text());
    std::vector<P> range;
    range.reserve(pairs_.size());
    for (const Pair& p : pairs_) {
      if (!in_carrier(p.first) || !in_carrier(p.second))
        fail(ErrorKind::IllegalPoint, "point outside carrier in " + to_text());
      range.push_back(p.second);
    }
    std::sort(range.begin(), range.end());
    if (std::adjacent_find(range.begin(), range.end()) != range.end())
      fail(ErrorKind::IllegalPoint, "not injective: " + to_text());
  }

  bool in_carrier(const P& x) const {
    return std::binary_search(carrier_.begin(), carrier_.end(), x);
  }

  std::vector<P> carrier_;
  std::vector<Pair> pairs_;  // sorted by domain point
};

/// (f o g) with domain D(g) intersect g^{-1}(D(f)).
template <typename P>
PartialBijection<P> compose(const PartialBijection<P>& f,
                            const PartialBijection<P>& g) {
  if (f.carrier() != g.carrier())
    fail(ErrorKind::CarrierMismatch, "compose needs a common carrier");
  std::vector<typename PartialBijection<P>::Pair> pairs;
  for (const auto& [x, gx] : g.pairs())
    if (auto fgx = f.apply(gx)) pairs.emplace_back(x, *fgx);
  return PartialBijection<P>(f.carrier(), std::move(pairs));
}

template <typename P>
PartialBijection<P> invert(const PartialBijection<P>& f) {
  return f.invert();
}

template <typename P>
bool is_order_preserving(const PartialBijection<P>& f) {
  return f.is_order_preserving();
}

template <typename P>
int rank(const PartialBijection<P>& f) {
  return f.rank();
}

enum class MonoidMode { I, J };

inline std::vector<int> integer_carrier(int n) {
  std::vector<int> carrier(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) carrier[static_cast<size_t>(i)] = i + 1;
  return carrier;
}

constexpr int kDefaultEnumerationCap = 6;

/// All partial bijections (mode I) or all partial order-automorphisms
/// (mode J) of the carrier {1..n}, in a deterministic sorted order.
std::vector<PartialBijection<int>> enumerate_monoid(
    int n, MonoidMode mode, int cap = kDefaultEnumerationCap);

}  // namespace ellislab
