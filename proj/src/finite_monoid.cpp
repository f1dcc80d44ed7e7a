#include "ellislab/finite_monoid.hpp"

#include <algorithm>
#include <set>

namespace ellislab {

void FiniteMonoid::validate() const {
  int n = size();
  if (n == 0) fail(ErrorKind::Internal, "empty monoid");
  if (static_cast<int>(mul.size()) != n)
    fail(ErrorKind::Internal, "multiplication table has wrong height");
  for (const auto& row : mul) {
    if (static_cast<int>(row.size()) != n)
      fail(ErrorKind::Internal, "multiplication table has wrong width");
    for (int v : row)
      if (v < 0 || v >= n) fail(ErrorKind::Internal, "table entry out of range");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (product(product(a, b), c) != product(a, product(b, c)))
          fail(ErrorKind::Internal, "multiplication is not associative");
  for (int a = 0; a < n; ++a)
    if (product(identity, a) != a || product(a, identity) != a)
      fail(ErrorKind::Internal, "identity law fails");
  if (zero) {
    for (int a = 0; a < n; ++a)
      if (product(*zero, a) != *zero || product(a, *zero) != *zero)
        fail(ErrorKind::Internal, "zero law fails");
  }
  if (star) {
    const auto& s = *star;
    if (static_cast<int>(s.size()) != n)
      fail(ErrorKind::Internal, "involution table has wrong size");
    for (int a = 0; a < n; ++a) {
      if (s[static_cast<size_t>(s[static_cast<size_t>(a)])] != a)
        fail(ErrorKind::Internal, "involution is not an involution");
      for (int b = 0; b < n; ++b)
        if (s[static_cast<size_t>(product(a, b))] !=
            product(s[static_cast<size_t>(b)], s[static_cast<size_t>(a)]))
          fail(ErrorKind::Internal, "involution does not reverse products");
    }
  }
}

bool is_ideal(const FiniteMonoid& s, const IdealSet& ideal) {
  std::vector<char> in(static_cast<size_t>(s.size()), 0);
  for (int i : ideal) {
    if (i < 0 || i >= s.size()) return false;
    in[static_cast<size_t>(i)] = 1;
  }
  for (int i : ideal)
    for (int a = 0; a < s.size(); ++a)
      if (!in[static_cast<size_t>(s.product(a, i))] ||
          !in[static_cast<size_t>(s.product(i, a))])
        return false;
  return true;
}

InverseReport check_inverse_monoid(const FiniteMonoid& s) {
  InverseReport report;
  for (int a = 0; a < s.size(); ++a) {
    std::vector<int> inverses;
    for (int g = 0; g < s.size(); ++g) {
      if (s.product(s.product(a, g), a) == a && s.product(s.product(g, a), g) == g)
        inverses.push_back(g);
    }
    if (inverses.size() != 1) {
      report.ok = false;
      report.witnesses.push_back({a, std::move(inverses)});
    }
  }
  return report;
}

IdealSet rank_ideal(const FiniteMonoid& s, int n) {
  if (!s.element_rank)
    fail(ErrorKind::NotPartialMapMonoid, "monoid carries no rank data");
  IdealSet out;
  for (int i = 0; i < s.size(); ++i)
    if ((*s.element_rank)[static_cast<size_t>(i)] <= n) out.push_back(i);
  if (!is_ideal(s, out))
    fail(ErrorKind::Internal, "rank ideal is not absorbing");
  return out;
}

std::vector<IdealSet> enumerate_all_ideals(const FiniteMonoid& s, int cap) {
  int n = s.size();
  if (n > cap) fail(ErrorKind::CapExceeded, "ideal enumeration cap exceeded");

  using Mask = std::vector<char>;
  // principal ideal of x: all s*x*t (the monoid has an identity, so this
  // covers x, x*t and s*x as well)
  std::set<Mask> principals;
  for (int x = 0; x < n; ++x) {
    Mask m(static_cast<size_t>(n), 0);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        m[static_cast<size_t>(s.product(s.product(a, x), b))] = 1;
    principals.insert(std::move(m));
  }

  // every ideal is a union of principal ideals; close under pairwise union
  std::set<Mask> ideals(principals.begin(), principals.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Mask> snapshot(ideals.begin(), ideals.end());
    for (const Mask& a : snapshot)
      for (const Mask& p : principals) {
        Mask u(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i)
          u[static_cast<size_t>(i)] = a[static_cast<size_t>(i)] | p[static_cast<size_t>(i)];
        if (ideals.insert(std::move(u)).second) grew = true;
      }
  }
  ideals.insert(Mask(static_cast<size_t>(n), 0));  // the empty ideal

  std::vector<IdealSet> out;
  for (const Mask& m : ideals) {
    IdealSet members;
    for (int i = 0; i < n; ++i)
      if (m[static_cast<size_t>(i)]) members.push_back(i);
    out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end(), [](const IdealSet& a, const IdealSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

ReesQuotient rees_quotient(const FiniteMonoid& s, const IdealSet& ideal) {
  if (ideal.empty()) fail(ErrorKind::NotAnIdeal, "ideal must be nonempty");
  if (!is_ideal(s, ideal)) fail(ErrorKind::NotAnIdeal, "set is not absorbing");

  FiniteMonoid base = s;
  bool adjoined = false;
  IdealSet full = ideal;
  if (!base.zero) {
    // adjoin a fresh zero; it joins the collapsed class
    int z = base.size();
    base.labels.push_back("0");
    for (auto& row : base.mul) row.push_back(z);
    base.mul.emplace_back(static_cast<size_t>(z + 1), z);
    base.zero = z;
    if (base.star) base.star->push_back(z);
    if (base.element_rank) base.element_rank->push_back(0);
    full.push_back(z);
    adjoined = true;
  } else if (!std::binary_search(full.begin(), full.end(), *base.zero)) {
    // a nonempty ideal always absorbs the zero
    fail(ErrorKind::NotAnIdeal, "ideal misses the zero");
  }

  int n = base.size();
  std::vector<char> in_ideal(static_cast<size_t>(n), 0);
  for (int i : full) in_ideal[static_cast<size_t>(i)] = 1;

  ReesQuotient out;
  out.zero_adjoined = adjoined;
  out.quotient_map.assign(static_cast<size_t>(s.size()), -1);

  FiniteMonoid& q = out.quotient;
  q.labels.push_back("0");
  q.zero = 0;
  std::vector<int> kept;  // base indices surviving the collapse
  std::vector<int> new_index(static_cast<size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    if (in_ideal[static_cast<size_t>(i)]) continue;
    new_index[static_cast<size_t>(i)] = static_cast<int>(q.labels.size());
    q.labels.push_back(base.labels[static_cast<size_t>(i)]);
    kept.push_back(i);
  }
  for (int i = 0; i < s.size(); ++i)
    out.quotient_map[static_cast<size_t>(i)] = new_index[static_cast<size_t>(i)];

  int qn = q.size();
  q.mul.assign(static_cast<size_t>(qn), std::vector<int>(static_cast<size_t>(qn), 0));
  for (size_t a = 0; a < kept.size(); ++a)
    for (size_t b = 0; b < kept.size(); ++b) {
      int prod = base.product(kept[a], kept[b]);
      q.mul[a + 1][b + 1] =
          in_ideal[static_cast<size_t>(prod)] ? 0 : new_index[static_cast<size_t>(prod)];
    }
  q.identity = in_ideal[static_cast<size_t>(base.identity)]
                   ? 0
                   : new_index[static_cast<size_t>(base.identity)];

  if (base.star) {
    bool star_invariant = true;
    for (int i : full)
      if (!in_ideal[static_cast<size_t>((*base.star)[static_cast<size_t>(i)])])
        star_invariant = false;
    if (star_invariant) {
      std::vector<int> lifted(static_cast<size_t>(qn), 0);
      for (size_t a = 0; a < kept.size(); ++a)
        lifted[a + 1] = new_index[static_cast<size_t>((*base.star)[static_cast<size_t>(kept[a])])];
      q.star = std::move(lifted);
    }
  }
  return out;
}

bool check_homomorphism(const std::vector<int>& h, const FiniteMonoid& s,
                        const FiniteMonoid& t) {
  if (static_cast<int>(h.size()) != s.size()) return false;
  for (int v : h)
    if (v < 0 || v >= t.size()) return false;
  if (h[static_cast<size_t>(s.identity)] != t.identity) return false;
  // maps of monoids with zero preserve the zero
  if (s.zero && t.zero && h[static_cast<size_t>(*s.zero)] != *t.zero) return false;
  for (int a = 0; a < s.size(); ++a)
    for (int b = 0; b < s.size(); ++b)
      if (h[static_cast<size_t>(s.product(a, b))] !=
          t.product(h[static_cast<size_t>(a)], h[static_cast<size_t>(b)]))
        return false;
  return true;
}

}  // namespace ellislab
