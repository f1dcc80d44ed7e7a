#pragma once

// Test-only oracles, kept independent of the library code paths they check.

#include <random>
#include <utility>
#include <vector>

#include "ellislab/gap_cut.hpp"
#include "ellislab/pl_automorphism.hpp"
#include "ellislab/rational.hpp"

namespace ellislab::testing {

/// Rational interval [lo, hi] bracketing sqrt(2) with hi - lo = 2^-bits,
/// computed purely with integer arithmetic (floor square root of 2*4^bits).
inline std::pair<Rational, Rational> sqrt2_interval(unsigned bits) {
  Int scale = Int(1) << bits;
  Int root = boost::multiprecision::sqrt(Int(2) * scale * scale);
  return {Rational(root, scale), Rational(root + 1, scale)};
}

/// Interval-arithmetic verdict for "q < r + s*sqrt(2)": +1 certainly below,
/// -1 certainly above, 0 undecided at this precision.
inline int interval_oracle_below(const Rational& r, const Rational& s,
                                 const Rational& q, unsigned bits = 256) {
  auto [lo, hi] = sqrt2_interval(bits);
  Rational value_lo = r + s * (sign(s) > 0 ? lo : hi);
  Rational value_hi = r + s * (sign(s) > 0 ? hi : lo);
  if (q < value_lo) return 1;
  if (q > value_hi) return -1;
  return 0;
}

/// Number of partial injections of {1..n}, by bitmask backtracking
/// (each point is left unmapped or sent to an unused value).
inline long long count_partial_injections_bruteforce(int n) {
  std::vector<long long> memo;
  auto rec = [&](auto&& self, int i, unsigned used) -> long long {
    if (i > n) return 1;
    long long total = self(self, i + 1, used);  // i unmapped
    for (int v = 0; v < n; ++v)
      if (!(used & (1u << v))) total += self(self, i + 1, used | (1u << v));
    return total;
  };
  return rec(rec, 1, 0);
}

/// Number of order-preserving partial injections of {1..n}: each point is
/// skipped or mapped to some value above everything already used.
inline long long count_partial_order_maps_bruteforce(int n) {
  auto rec = [&](auto&& self, int i, int min_value) -> long long {
    if (i > n) return 1;
    long long total = self(self, i + 1, min_value);
    for (int v = min_value; v <= n; ++v) total += self(self, i + 1, v + 1);
    return total;
  };
  return rec(rec, 1, 1);
}

struct Rng {
  std::mt19937_64 eng;

  explicit Rng(uint64_t seed) : eng(seed) {}

  int uniform(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(eng);
  }
  bool chance(int percent) { return uniform(1, 100) <= percent; }

  Rational rational(int span = 200, int max_den = 24) {
    return Rational(Int(uniform(-span, span)), Int(uniform(1, max_den)));
  }

  /// strictly increasing rationals, count many
  std::vector<Rational> increasing(int count, int span = 200, int max_den = 24) {
    std::vector<Rational> out;
    while (static_cast<int>(out.size()) < count) {
      Rational candidate = rational(span, max_den);
      bool fresh = true;
      for (const auto& v : out)
        if (v == candidate) fresh = false;
      if (fresh) out.push_back(candidate);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  GapCut gap(int span = 200) {
    Rational s = rational(6, 8);
    if (sign(s) == 0) s = Rational(Int(1), Int(3));
    return GapCut(rational(span), s);
  }

  PLAutomorphism pl(int max_breaks = 4, int span = 200) {
    int k = uniform(0, max_breaks);
    auto xs = increasing(k, span);
    auto ys = increasing(k, span);
    std::vector<PLAutomorphism::Breakpoint> pts;
    for (int i = 0; i < k; ++i) pts.emplace_back(xs[static_cast<size_t>(i)],
                                                 ys[static_cast<size_t>(i)]);
    return PLAutomorphism::through(std::move(pts));
  }

  /// a PL automorphism fixing each point of sigma
  PLAutomorphism pl_fixing(const std::vector<Rational>& sigma) {
    std::vector<PLAutomorphism::Breakpoint> pts;
    for (const auto& x : sigma) pts.emplace_back(x, x);
    // bend the map between consecutive fixed points
    std::vector<PLAutomorphism::Breakpoint> bent = pts;
    for (size_t i = 0; i + 1 < pts.size(); ++i) {
      if (!chance(60)) continue;
      Rational mid = (pts[i].first + pts[i + 1].first) / Rational(2);
      Rational lo = pts[i].first, hi = pts[i + 1].first;
      Rational image = lo + (hi - lo) * Rational(Int(uniform(1, 9)), Int(10));
      bent.emplace_back(mid, image);
    }
    return PLAutomorphism::through(std::move(bent));
  }
};

}  // namespace ellislab::testing
