#include <doctest.h>

#include "ellislab/ellis_element.hpp"
#include "support/obs_fuzz.hpp"

using namespace ellislab;
using ellislab::testing::Rng;

namespace {

ObservationEntry ex(ExtendedPoint p, ExtendedPoint target) {
  return {std::move(p), TargetConstraint::exactly(std::move(target))};
}

ExtendedPoint ch(long v) { return ExtendedPoint::chain(Rational(Int(v), Int(1))); }
ExtendedPoint tg(long v, int j) {
  return ExtendedPoint::tagged(Rational(Int(v), Int(1)), j);
}
ExtendedPoint sqrt2_gap() {
  return ExtendedPoint::gap(GapCut(Rational(0), Rational(1)));
}

}  // namespace

TEST_CASE("alpha membership: collisions, fixed infinity, strong monotonicity") {
  Observation collide{Space::AlphaX, {ex(ch(1), ch(3)), ex(ch(2), ch(3))}};
  auto v = check_alpha_membership(collide, GroupMode::Sym);
  CHECK_FALSE(v.consistent);
  CHECK(v.clause == "collision");

  Observation moved{Space::AlphaX, {ex(ExtendedPoint::infinity(), ch(5))}};
  v = check_alpha_membership(moved, GroupMode::Sym);
  CHECK_FALSE(v.consistent);
  CHECK(v.clause == "infinity");

  Observation reversed{Space::AlphaX, {ex(ch(1), ch(4)), ex(ch(2), ch(3))}};
  CHECK(check_alpha_membership(reversed, GroupMode::Sym).consistent);
  v = check_alpha_membership(reversed, GroupMode::Aut);
  CHECK_FALSE(v.consistent);
  CHECK(v.clause == "order");

  // sending a chain point toward infinity is a legitimate limit behavior
  Observation vanish{Space::AlphaX,
                     {ex(ch(1), ExtendedPoint::infinity()), ex(ch(2), ch(3))}};
  CHECK(check_alpha_membership(vanish, GroupMode::Aut).consistent);
}

TEST_CASE("bm membership: the five clauses") {
  Observation rev{Space::BmX, {ex(tg(0, 0), tg(5, 0)), ex(tg(1, 0), tg(4, 0))}};
  auto v = check_bm_membership(rev);
  CHECK_FALSE(v.consistent);
  CHECK(v.clause == "(i)");

  Observation gap_into_chain{Space::BmX, {ex(sqrt2_gap(), tg(2, 0))}};
  v = check_bm_membership(gap_into_chain);
  CHECK_FALSE(v.consistent);
  CHECK(v.clause == "(ii)");

  Observation collide{Space::BmX, {ex(tg(0, 0), tg(5, 0)), ex(tg(1, 0), tg(5, 0))}};
  v = check_bm_membership(collide);
  CHECK_FALSE(v.consistent);
  CHECK(v.clause == "(iii)");

  Observation incoherent{Space::BmX,
                         {ex(tg(0, -1), tg(1, -1)), ex(tg(0, 0), tg(2, 0))}};
  v = check_bm_membership(incoherent);
  CHECK_FALSE(v.consistent);
  CHECK(v.clause == "(iv)");

  Observation moved_inf{Space::BmX, {ex(ExtendedPoint::inf(), tg(0, 0))}};
  v = check_bm_membership(moved_inf);
  CHECK_FALSE(v.consistent);
  CHECK(v.clause == "(v)");

  // restriction of the shift x -> x+1, extended to the compactification
  Observation shift{Space::BmX,
                    {ex(ExtendedPoint::inf(), ExtendedPoint::inf()),
                     ex(tg(0, -1), tg(1, -1)), ex(tg(0, 0), tg(1, 0))}};
  CHECK(check_bm_membership(shift).consistent);

  // the whole triple collapsing onto one gap is coherent
  Observation collapse{Space::BmX,
                       {ex(tg(0, -1), sqrt2_gap()), ex(tg(0, 0), sqrt2_gap()),
                        ex(tg(0, 1), sqrt2_gap())}};
  CHECK(check_bm_membership(collapse).consistent);
}

TEST_CASE("cm membership allows collapses but pins the endpoints") {
  Observation squeeze{Space::CmX, {ex(ch(0), ch(1)), ex(ch(2), ch(1))}};
  CHECK(check_cm_membership(squeeze).consistent);

  Observation moved{Space::CmX, {ex(ExtendedPoint::inf(), ch(0))}};
  auto v = check_cm_membership(moved);
  CHECK_FALSE(v.consistent);
  CHECK(v.clause == "endpoint");

  Observation rev{Space::CmX, {ex(ch(0), ch(3)), ex(ch(1), ch(2))}};
  v = check_cm_membership(rev);
  CHECK_FALSE(v.consistent);
  CHECK(v.clause == "monotone");
}

TEST_CASE("cX membership constrains only the finite fibers") {
  Observation mixed{Space::CX,
                    {ex(ch(0), ExtendedPoint::infinity()), ex(ch(1), ch(0))}};
  CHECK(check_cX_membership(mixed).consistent);

  Observation moved{Space::CX, {ex(ExtendedPoint::infinity(), ch(0))}};
  auto v = check_cX_membership(moved);
  CHECK_FALSE(v.consistent);
  CHECK(v.clause == "infinity");

  Observation rev{Space::CX, {ex(ch(0), ch(1)), ex(ch(2), ch(0))}};
  v = check_cX_membership(rev);
  CHECK_FALSE(v.consistent);
  CHECK(v.clause == "monotone");
}

TEST_CASE("Roelcke-face membership allows collisions outside the chain") {
  Observation shared_gap{Space::BmX,
                         {{ch(0), TargetConstraint::exactly(sqrt2_gap())},
                          {ch(1), TargetConstraint::exactly(sqrt2_gap())}}};
  CHECK(check_br_membership(shared_gap).consistent);

  Observation shared_chain{Space::BmX, {ex(ch(0), tg(5, 0)), ex(ch(1), tg(5, 0))}};
  auto v = check_br_membership(shared_chain);
  CHECK_FALSE(v.consistent);
  CHECK(v.clause == "(ii')");

  Observation empty{Space::BmX, {}};
  CHECK(check_br_membership(empty).consistent);

  Observation off_chain{Space::BmX, {ex(tg(0, 1), tg(1, 1))}};
  CHECK_THROWS_AS(check_br_membership(off_chain), Error);
}

TEST_CASE("sampled extensions of genuine automorphisms always pass") {
  Rng rng(31);
  using testing::FuzzFace;
  for (FuzzFace face : {FuzzFace::Bm, FuzzFace::Cm, FuzzFace::CX,
                        FuzzFace::AlphaAut, FuzzFace::Br}) {
    for (int i = 0; i < 150; ++i) {
      PLAutomorphism g = rng.pl();
      Space space = testing::fuzz_space(face);
      auto xs = rng.increasing(rng.uniform(1, 5));
      Observation obs{space, {}};
      for (const auto& x : xs) {
        ExtendedPoint p = ExtendedPoint::chain(x);
        if (face == FuzzFace::Bm) p = ExtendedPoint::tagged(x, rng.uniform(-1, 1));
        if (face != FuzzFace::AlphaAut && face != FuzzFace::Br && rng.chance(25))
          p = ExtendedPoint::gap(GapCut(x, Rational(Int(1), Int(3))));
        ExtendedPoint value = face == FuzzFace::Br
                                  ? ExtendedPoint::chain(g(p.x()))
                                  : extend_to_space(g, space, p);
        obs.entries.push_back({p, TargetConstraint::exactly(value)});
      }
      CHECK(testing::check_fuzz_face(obs, face).consistent);
    }
  }
}

TEST_CASE("xi restricts finite elements onto the partial-map monoid") {
  auto carrier = integer_carrier(4);
  auto core = PartialBijection<int>(carrier, {{1, 2}});
  auto e = make_ellis_element(Space::AlphaX, GroupMode::Sym, core);
  CHECK(xi_restrict(e) == core);
  CHECK(xi_restrict(make_ellis_element(Space::AlphaX, GroupMode::Sym,
                                       PartialBijection<int>::identity(carrier)))
            .is_identity());

  Rng rng(32);
  auto i5 = enumerate_monoid(5, MonoidMode::I);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto& f = i5[static_cast<size_t>(rng.uniform(0, static_cast<int>(i5.size()) - 1))];
    const auto& g = i5[static_cast<size_t>(rng.uniform(0, static_cast<int>(i5.size()) - 1))];
    auto ef = make_ellis_element(Space::AlphaX, GroupMode::Sym, f);
    auto eg = make_ellis_element(Space::AlphaX, GroupMode::Sym, g);
    CHECK(xi_restrict(ellis_compose(ef, eg)) == compose(f, g));
  }
}

TEST_CASE("xi is a bijective homomorphism over small carriers") {
  for (int n = 1; n <= 3; ++n) {
    auto elems = enumerate_monoid(n, MonoidMode::I);
    std::vector<EllisElementFin> lifted;
    for (const auto& f : elems)
      lifted.push_back(make_ellis_element(Space::AlphaX, GroupMode::Sym, f));
    for (size_t i = 0; i < lifted.size(); ++i)
      for (size_t j = 0; j < lifted.size(); ++j)
        CHECK(xi_restrict(ellis_compose(lifted[i], lifted[j])) ==
              compose(elems[i], elems[j]));
  }
}

TEST_CASE("the absorbing default behaves like a zero through composition") {
  auto carrier = integer_carrier(3);
  auto constant = make_ellis_element(Space::AlphaX, GroupMode::Sym,
                                     PartialBijection<int>::empty_map(carrier));
  auto any = make_ellis_element(Space::AlphaX, GroupMode::Sym,
                                PartialBijection<int>(carrier, {{3, 1}}));
  CHECK(ellis_compose(constant, any).core.rank() == 0);
  CHECK(ellis_compose(any, constant).core.rank() == 0);
  auto id = make_ellis_element(Space::AlphaX, GroupMode::Sym,
                               PartialBijection<int>::identity(carrier));
  CHECK(xi_restrict(ellis_compose(any, id)) == xi_restrict(any));
  CHECK_THROWS_AS(
      ellis_compose(constant, make_ellis_element(Space::CmX, GroupMode::Aut,
                                                 PartialBijection<int>::empty_map(
                                                     carrier))),
      Error);
}

TEST_CASE("membership classes are closed under composition") {
  for (int n = 1; n <= 3; ++n) {
    auto aut_cores = enumerate_monoid(n, MonoidMode::J);
    std::vector<EllisElementFin> elems;
    for (const auto& f : aut_cores)
      elems.push_back(make_ellis_element(Space::AlphaX, GroupMode::Aut, f));
    for (const auto& a : elems)
      for (const auto& b : elems) {
        auto c = ellis_compose(a, b);
        CHECK(c.core.is_order_preserving());  // stays in the Aut class
      }
  }
}

TEST_CASE("observations push through the quotient lattice") {
  Observation obs{Space::BmX, {ex(ExtendedPoint::inf(), ExtendedPoint::inf())}};
  auto pushed = induce_quotient_obs(obs, Space::BmX, Space::BlrX);
  REQUIRE(pushed.entries.size() == 1);
  CHECK(pushed.entries[0].point == ExtendedPoint::infinity());
  CHECK(pushed.entries[0].target.point == ExtendedPoint::infinity());

  Observation tagged{Space::BmX, {ex(tg(0, -1), tg(1, -1))}};
  auto merged = induce_quotient_obs(tagged, Space::BmX, Space::BudX);
  CHECK(merged.entries[0].point == tg(0, -1));
  CHECK(merged.entries[0].target.point == tg(1, -1));

  auto unchanged = induce_quotient_obs(tagged, Space::BmX, Space::BmX);
  CHECK(unchanged.entries[0].point == tagged.entries[0].point);

  // interval targets map endpoint-wise
  Observation boxed{Space::BmX,
                    {{tg(0, 0), TargetConstraint::interval(tg(1, 1), tg(3, -1))}}};
  auto pushed_box = induce_quotient_obs(boxed, Space::BmX, Space::BudX);
  CHECK(pushed_box.entries[0].target.lo == tg(1, -1));
  CHECK(pushed_box.entries[0].target.hi == tg(3, -1));

  CHECK_THROWS_AS(induce_quotient_obs(tagged, Space::BmX, Space::CX), Error);
}

TEST_CASE("pushed samples of finite elements commute with the induced map") {
  Rng rng(33);
  auto cores = enumerate_monoid(3, MonoidMode::J);
  std::vector<std::pair<Space, Space>> arrows = {
      {Space::BplusX, Space::AlphaX}, {Space::BmX, Space::BudX},
      {Space::BmX, Space::AlphaX},    {Space::CmX, Space::CX}};
  for (int trial = 0; trial < 400; ++trial) {
    auto [from, to] = arrows[static_cast<size_t>(rng.uniform(0, 3))];
    const auto& core =
        cores[static_cast<size_t>(rng.uniform(0, static_cast<int>(cores.size()) - 1))];
    auto e = make_ellis_element(from, GroupMode::Aut, core);
    std::vector<ExtendedPoint> points;
    for (int v = 1; v <= 3; ++v) points.push_back(ch(v));
    if (point_legal(from, ExtendedPoint::inf())) points.push_back(ExtendedPoint::inf());
    if (point_legal(from, ExtendedPoint::infinity()))
      points.push_back(ExtendedPoint::infinity());
    auto sampled_then_pushed =
        induce_quotient_obs(sample_observation(e, points), from, to);
    auto pushed_element = induce_element(e, to);
    for (const auto& entry : sampled_then_pushed.entries)
      CHECK(evaluate(pushed_element, entry.point) == entry.target.point);
  }
}

TEST_CASE("the induced map respects composition of finite elements") {
  auto cores = enumerate_monoid(3, MonoidMode::J);
  for (const auto& f : cores)
    for (const auto& g : cores) {
      auto ef = make_ellis_element(Space::BplusX, GroupMode::Aut, f);
      auto eg = make_ellis_element(Space::BplusX, GroupMode::Aut, g);
      auto lhs = induce_element(ellis_compose(ef, eg), Space::AlphaX);
      auto rhs = ellis_compose(induce_element(ef, Space::AlphaX),
                               induce_element(eg, Space::AlphaX));
      CHECK(lhs.core == rhs.core);
      CHECK(lhs.default_value == rhs.default_value);
    }
}

TEST_CASE("elementary arrows carry the collapsed-fiber predicates") {
  auto fiber = check_EF_ideal(Space::CmX, Space::CX);
  CHECK(fiber.in_fiber(ExtendedPoint::inf()));
  CHECK(fiber.in_fiber(ExtendedPoint::sup()));
  CHECK_FALSE(fiber.in_fiber(ch(0)));

  auto carrier = integer_carrier(3);
  auto constant_inf =
      make_ellis_element(Space::CmX, GroupMode::Aut,
                         PartialBijection<int>::empty_map(carrier),
                         ExtendedPoint::inf());
  CHECK(fiber.ideal_predicate(constant_inf));
  auto idlike = make_ellis_element(Space::CmX, GroupMode::Aut,
                                   PartialBijection<int>::identity(carrier),
                                   ExtendedPoint::inf());
  CHECK_FALSE(fiber.ideal_predicate(idlike));

  // agreement off the two-point fiber forces agreement everywhere
  auto other = make_ellis_element(Space::CmX, GroupMode::Aut,
                                  PartialBijection<int>::identity(carrier),
                                  ExtendedPoint::sup());
  CHECK(fiber.ef_check(idlike, other));
  CHECK(fiber.ef_check(idlike, idlike));

  CHECK_THROWS_AS(check_EF_ideal(Space::BmX, Space::BudX), Error);
  CHECK_THROWS_AS(check_EF_ideal(Space::CX, Space::CmX), Error);

  auto to_alpha = check_EF_ideal(Space::BplusX, Space::AlphaX);
  auto constant_oo =
      make_ellis_element(Space::BplusX, GroupMode::Aut,
                         PartialBijection<int>::empty_map(carrier));
  CHECK(to_alpha.ideal_predicate(constant_oo));
  CHECK_FALSE(to_alpha.ideal_predicate(
      make_ellis_element(Space::BplusX, GroupMode::Aut,
                         PartialBijection<int>::identity(carrier))));
}

TEST_CASE("finite-scale Rees correspondence along BplusX -> AlphaX") {
  for (int n = 1; n <= 3; ++n) {
    auto cores = enumerate_monoid(n, MonoidMode::J);
    auto fiber = check_EF_ideal(Space::BplusX, Space::AlphaX);

    std::vector<EllisElementFin> upstairs, downstairs;
    for (const auto& f : cores) {
      upstairs.push_back(make_ellis_element(Space::BplusX, GroupMode::Aut, f));
      downstairs.push_back(make_ellis_element(Space::AlphaX, GroupMode::Aut, f));
    }
    // the collapsed class: elements mapping everything into the fiber
    std::vector<int> collapsed;
    for (size_t i = 0; i < upstairs.size(); ++i)
      if (fiber.ideal_predicate(upstairs[i])) collapsed.push_back(static_cast<int>(i));
    CHECK(collapsed.size() == 1);  // exactly the constant-default element

    for (size_t i = 0; i < upstairs.size(); ++i)
      for (size_t j = 0; j < upstairs.size(); ++j) {
        auto up = ellis_compose(upstairs[i], upstairs[j]);
        auto down = ellis_compose(downstairs[i], downstairs[j]);
        // collapsing the ideal class upstairs must land on the same table
        bool up_in_ideal = fiber.ideal_predicate(up);
        bool down_is_zero = down.core.rank() == 0;
        CHECK(up_in_ideal == down_is_zero);
        CHECK(up.core == down.core);
      }
  }
}
