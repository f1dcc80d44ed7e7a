#include <doctest.h>

#include "ellislab/finite_monoid.hpp"

using namespace ellislab;

namespace {

FiniteMonoid table_of(int n, MonoidMode mode) {
  return close_under_composition(enumerate_monoid(n, mode)).monoid;
}

// two-element left-zero semigroup with adjoined identity: a and b are
// mutual generalized inverses, so inverse uniqueness fails
FiniteMonoid broken_control() {
  FiniteMonoid m;
  m.labels = {"e", "a", "b"};
  m.identity = 0;
  m.mul = {{0, 1, 2}, {1, 1, 1}, {2, 2, 2}};
  return m;
}

}  // namespace

TEST_CASE("closure from generators reproduces the full monoids") {
  CHECK(table_of(2, MonoidMode::I).size() == 7);
  CHECK(table_of(2, MonoidMode::J).size() == 6);
  auto trivial = close_under_composition<int>(
      {PartialBijection<int>::identity(integer_carrier(2))});
  CHECK(trivial.monoid.size() == 1);
  trivial.monoid.validate();

  // a single rank-1 generator closes into {id, f, empty}
  auto small = close_under_composition<int>(
      {PartialBijection<int>(integer_carrier(2), {{1, 2}})});
  CHECK(small.monoid.size() == 3);
  CHECK_FALSE(small.monoid.star.has_value());  // not closed under inversion
}

TEST_CASE("generated tables satisfy the monoid laws") {
  for (int n = 1; n <= 3; ++n) {
    for (MonoidMode mode : {MonoidMode::I, MonoidMode::J}) {
      auto m = table_of(n, mode);
      m.validate();
      CHECK(m.zero.has_value());  // the empty map
      CHECK(m.star.has_value());
    }
  }
}

TEST_CASE("inverse-monoid check accepts I_n and rejects the control") {
  CHECK(check_inverse_monoid(table_of(3, MonoidMode::I)).ok);
  CHECK(check_inverse_monoid(table_of(3, MonoidMode::J)).ok);
  FiniteMonoid trivial;
  trivial.labels = {"e"};
  trivial.mul = {{0}};
  CHECK(check_inverse_monoid(trivial).ok);

  auto report = check_inverse_monoid(broken_control());
  CHECK_FALSE(report.ok);
  REQUIRE_FALSE(report.witnesses.empty());
  CHECK(report.witnesses.front().inverses.size() >= 2);
}

TEST_CASE("rank ideals") {
  auto i3 = table_of(3, MonoidMode::I);
  CHECK(rank_ideal(i3, 1).size() == 10);
  CHECK(rank_ideal(i3, 0).size() == 1);
  CHECK(rank_ideal(table_of(3, MonoidMode::J), 1).size() == 10);
  CHECK(is_ideal(i3, rank_ideal(i3, 2)));

  // rank ideals are invariant under the involution
  for (int k = 0; k <= 3; ++k) {
    auto ideal = rank_ideal(i3, k);
    IdealSet starred;
    for (int i : ideal) starred.push_back((*i3.star)[static_cast<size_t>(i)]);
    std::sort(starred.begin(), starred.end());
    CHECK(starred == ideal);
  }

  FiniteMonoid no_ranks = broken_control();
  CHECK_THROWS_AS(rank_ideal(no_ranks, 1), Error);
}

TEST_CASE("all ideals of I_n and J_n are the rank ideals") {
  for (int n = 1; n <= 3; ++n) {
    for (MonoidMode mode : {MonoidMode::I, MonoidMode::J}) {
      auto m = table_of(n, mode);
      auto ideals = enumerate_all_ideals(m);
      std::vector<IdealSet> expected = {IdealSet{}};
      for (int k = 0; k <= n; ++k) expected.push_back(rank_ideal(m, k));
      std::sort(expected.begin(), expected.end(),
                [](const IdealSet& a, const IdealSet& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  return a < b;
                });
      CHECK(ideals == expected);
    }
  }
  FiniteMonoid trivial;
  trivial.labels = {"e"};
  trivial.mul = {{0}};
  auto ideals = enumerate_all_ideals(trivial);
  CHECK(ideals == std::vector<IdealSet>{{}, {0}});
}

TEST_CASE("Rees quotients collapse an ideal to zero") {
  auto i3 = table_of(3, MonoidMode::I);
  auto rq = rees_quotient(i3, rank_ideal(i3, 1));
  CHECK(rq.quotient.size() == 34 - 10 + 1);
  rq.quotient.validate();
  CHECK(check_homomorphism(rq.quotient_map, i3, rq.quotient));
  CHECK_FALSE(rq.zero_adjoined);  // the empty map already acts as zero

  auto full = rees_quotient(i3, rank_ideal(i3, 3));
  CHECK(full.quotient.size() == 1);

  auto i2 = table_of(2, MonoidMode::I);
  CHECK(rees_quotient(i2, rank_ideal(i2, 0)).quotient.size() == 7);

  CHECK_THROWS_AS(rees_quotient(i3, IdealSet{}), Error);
  CHECK_THROWS_AS(rees_quotient(i3, IdealSet{5}), Error);  // not absorbing
}

TEST_CASE("Rees quotients of every ideal keep the lifted involution laws") {
  for (int n = 1; n <= 3; ++n) {
    for (MonoidMode mode : {MonoidMode::I, MonoidMode::J}) {
      auto m = table_of(n, mode);
      for (const auto& ideal : enumerate_all_ideals(m)) {
        if (ideal.empty()) continue;
        auto rq = rees_quotient(m, ideal);
        rq.quotient.validate();  // includes both involution laws
        CHECK(rq.quotient.size() ==
              m.size() - static_cast<int>(ideal.size()) + 1);
        CHECK(check_homomorphism(rq.quotient_map, m, rq.quotient));
        REQUIRE(rq.quotient.star.has_value());
        CHECK((*rq.quotient.star)[static_cast<size_t>(*rq.quotient.zero)] ==
              *rq.quotient.zero);
      }
    }
  }
}

TEST_CASE("zero adjunction when the monoid lacks one") {
  // the control semigroup has no zero; collapse {a, b}
  FiniteMonoid m = broken_control();
  auto rq = rees_quotient(m, IdealSet{1, 2});
  CHECK(rq.zero_adjoined);
  CHECK(rq.quotient.size() == 2);  // {0, e}
  rq.quotient.validate();
  CHECK(check_homomorphism(rq.quotient_map, m, rq.quotient));
}

TEST_CASE("homomorphism check") {
  auto i2 = table_of(2, MonoidMode::I);
  std::vector<int> identity_map(static_cast<size_t>(i2.size()));
  for (int i = 0; i < i2.size(); ++i) identity_map[static_cast<size_t>(i)] = i;
  CHECK(check_homomorphism(identity_map, i2, i2));
  std::vector<int> constant(static_cast<size_t>(i2.size()), i2.identity);
  CHECK_FALSE(check_homomorphism(constant, i2, i2));
}
