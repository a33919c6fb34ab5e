#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liaison/linkage.hpp"
#include "liaison/oracle.hpp"

using namespace liaison;

namespace {

NatFn nat(std::initializer_list<IntFn::Entry> e) { return NatFn{IntFn(e)}; }

SubschemeModel skew_model(Deg h, std::initializer_list<IntFn::Entry> theta) {
  return SubschemeModel(fixtures::skew_lines(), h, NatFn{IntFn(theta)});
}

SubschemeModel four_model(Deg h, std::initializer_list<IntFn::Entry> theta) {
  return SubschemeModel(fixtures::four_lines_on_quadric(), h, NatFn{IntFn(theta)});
}

}  // namespace

TEST_CASE("class descriptors validate") {
  LinkageClass skew = fixtures::skew_lines();
  CHECK(skew.s0() == 2);
  CHECK(skew.s1() == 2);
  CHECK(skew.gamma0().fn() == IntFn{{0, -1}, {1, -1}, {2, 3}, {3, -1}});
  CHECK(skew.dual_class().same_class(skew));

  LinkageClass four = fixtures::four_lines_on_quadric();
  CHECK(four.s0() == 2);
  CHECK(four.s1() == 4);
  CHECK(four.gamma0().fn() == IntFn{{0, -1}, {1, -1}, {4, 5}, {5, -3}});

  AdmissibleCharacter g = skew.gamma0();
  CHECK_THROWS_AS(LinkageClass(2, g, 2, -2, true), invalid_input);
  CHECK_THROWS_AS(LinkageClass(3, g, 1, -2, true), invalid_input);  // t1 < s1
  CHECK_THROWS_AS(LinkageClass(3, g, 2, -2, false), invalid_input);
  // Mismatched minimal linking degrees in a dual pair.
  CHECK_THROWS_AS(LinkageClass(3, g, 2, -2, true, LinkageClass::DualData{g, 3, -2}),
                  invalid_input);
  // Minimal degrees must fill the minimal complete intersection.
  AdmissibleCharacter small = require_admissible(IntFn{{0, -1}, {1, -1}, {2, 2}});
  CHECK_THROWS_WITH_AS(
      LinkageClass(3, g, 3, -2, true, LinkageClass::DualData{small, 3, -1}),
      doctest::Contains("degrees sum"), invalid_input);
}

TEST_CASE("link_dual across a non-self-dual pair") {
  // Degree-2 side linked to a degree-4 side by the minimal (2,3)
  // intersection: 2 + 4 = 6.
  AdmissibleCharacter gp = require_admissible(IntFn{{0, -1}, {1, -1}, {2, 3}, {3, -1}});
  AdmissibleCharacter gq = require_admissible(IntFn{{0, -1}, {1, -1}, {2, 1}, {3, 1}});
  LinkageClass p(3, gp, 3, -2, true, LinkageClass::DualData{gq, 3, -1});
  SubschemeModel x = double_link(SubschemeModel(p, 0, NatFn{}), 3, 1,
                                 LinkKind::elementary);
  CHECK(invariants(x).degree == 5);
  SubschemeModel y = link_dual(x, 3, 3);
  CHECK(y.h() == 0);
  CHECK(y.theta().is_zero());
  CHECK(y.cls().gamma0() == gq);
  CHECK(invariants(y).degree == 4);
  CHECK(invariants(x).degree + invariants(y).degree == 3 * 3);
  // Back across the pair.
  SubschemeModel back = link_dual(y, 3, 3);
  CHECK(back.h() == x.h());
  CHECK(back.theta() == x.theta());
  CHECK(back.cls().gamma0() == gp);
}

TEST_CASE("model validity") {
  CHECK_NOTHROW(skew_model(1, {{8, 1}}));
  CHECK_THROWS_AS(skew_model(0, {{8, 1}}), invalid_input);   // m > h
  CHECK_THROWS_AS(skew_model(2, {{3, 2}}), invalid_input);   // below s0 + m
  CHECK_THROWS_AS(skew_model(-1, {}), invalid_input);
}

TEST_CASE("model_gamma") {
  CHECK(model_gamma(skew_model(1, {{8, 1}})).fn() ==
        IntFn{{0, -1}, {1, -1}, {2, -1}, {3, 3}, {4, -1}, {8, 1}});
  CHECK(model_gamma(skew_model(0, {})) == fixtures::skew_lines().gamma0());
  CHECK(model_gamma(skew_model(6, {})).fn() ==
        IntFn{{0, -1}, {1, -1}, {8, 3}, {9, -1}});
}

TEST_CASE("invariants") {
  DerivedInvariants c = invariants(skew_model(1, {{8, 1}}));
  CHECK(c.s0 == 3);
  CHECK(c.s1 == 3);
  CHECK(c.e == 5);
  CHECK(c.degree == 10);

  DerivedInvariants d = invariants(skew_model(6, {}));
  CHECK(d.s0 == 2);
  CHECK(d.s1 == 8);
  CHECK(d.e == 4);
  CHECK(d.degree == 14);

  DerivedInvariants m = invariants(skew_model(0, {}));
  CHECK(m.s0 == 2);
  CHECK(m.s1 == 2);
  CHECK(m.e == -2);
  CHECK(m.degree == 2);
}

TEST_CASE("double_link") {
  SubschemeModel minimal = skew_model(0, {});
  SubschemeModel c = double_link(minimal, 8, 1, LinkKind::elementary);
  CHECK(c.h() == 1);
  CHECK(c.theta().fn() == IntFn{{8, 1}});

  SubschemeModel b = double_link(minimal, 2, 1, LinkKind::basic);
  CHECK(b.h() == 1);
  CHECK(b.theta().is_zero());

  CHECK_THROWS_WITH_AS(double_link(minimal, 1, 1, LinkKind::basic),
                       doctest::Contains("below the minimal degree"),
                       invalid_input);
  CHECK_THROWS_AS(double_link(minimal, 3, -1, LinkKind::elementary), invalid_input);

  // Height-one links obey the two-case rule: at s0 the theta is unchanged
  // up to shift, above s0 it gains the spike at s.
  for (Deg s = 2; s <= 6; ++s) {
    SubschemeModel y = double_link(minimal, s, 1, LinkKind::basic);
    if (s == 2)
      CHECK(y.theta().is_zero());
    else
      CHECK(y.theta().fn() == IntFn{{s, 1}});
  }
}

TEST_CASE("dominates_model") {
  SubschemeModel x = skew_model(1, {{8, 1}});
  SubschemeModel y = skew_model(2, {{8, 1}, {9, 1}});
  CHECK(dominates_model(x, y) == 1);
  CHECK(dominates_model(x, x) == 0);
  CHECK(!dominates_model(x, skew_model(1, {{9, 1}})).has_value());
  CHECK(!dominates_model(y, x).has_value());
  CHECK_THROWS_AS(dominates_model(x, four_model(0, {})), invalid_input);
}

TEST_CASE("lr_decompose") {
  SubschemeModel minimal = skew_model(0, {});
  SubschemeModel c = skew_model(1, {{8, 1}});
  auto steps = lr_decompose(minimal, c);
  REQUIRE(steps.size() == 1);
  CHECK(steps[0] == DoubleLinkStep{8, 1, LinkKind::basic});

  // Target with eta {8:1, 9:1}: theta is {8:1, 9:1} as well.
  SubschemeModel y = skew_model(2, {{8, 1}, {9, 1}});
  auto steps2 = lr_decompose(minimal, y);
  REQUIRE(steps2.size() == 2);
  CHECK(steps2[0] == DoubleLinkStep{8, 1, LinkKind::basic});
  CHECK(steps2[1] == DoubleLinkStep{8, 1, LinkKind::basic});
  SubschemeModel replay = minimal;
  for (const auto& st : steps2) replay = double_link(replay, st.s, st.h, st.kind);
  CHECK(replay == y);

  CHECK(lr_decompose(c, c).empty());
  CHECK_THROWS_AS(lr_decompose(c, minimal), invalid_input);
}

TEST_CASE("t1_bound") {
  CHECK(t1_bound(skew_model(1, {{8, 1}})) == 8);
  CHECK(t1_bound(skew_model(1, {})) == 3);
  CHECK(t1_bound(four_model(2, {{4, 1}, {5, 1}})) == 4);
}

TEST_CASE("t1_witness_chain") {
  T1WitnessChain one = t1_witness_chain(skew_model(1, {{8, 1}}));
  REQUIRE(one.steps.size() == 1);
  CHECK(one.steps[0] == DoubleLinkStep{8, 1, LinkKind::elementary});
  CHECK(one.base_height == 0);
  CHECK(one.certified_t1 == 8);

  T1WitnessChain zero = t1_witness_chain(skew_model(1, {}));
  CHECK(zero.steps.empty());
  CHECK(zero.base_height == 1);
  CHECK(zero.base_link_s == 2);
  CHECK(zero.base_link_t == 3);

  T1WitnessChain two = t1_witness_chain(skew_model(3, {{8, 1}, {9, 1}}));
  REQUIRE(two.steps.size() == 1);
  CHECK(two.steps[0] == DoubleLinkStep{8, 2, LinkKind::elementary});
  CHECK(two.base_height == 1);

  // Replay lands in the class of the original model.
  for (const auto& x : {skew_model(1, {{8, 1}}), skew_model(3, {{8, 1}, {9, 1}}),
                        skew_model(2, {{8, 2}}), skew_model(4, {{6, 1}, {7, 2}, {9, 1}})}) {
    T1WitnessChain chain = t1_witness_chain(x);
    SubschemeModel cur(x.cls(), chain.base_height, NatFn{});
    for (const auto& st : chain.steps)
      cur = double_link(cur, st.s, st.h, LinkKind::elementary);
    CHECK(cur == x);
  }
}

TEST_CASE("s1_t1_deformable") {
  CHECK(s1_t1_deformable(four_model(2, {{4, 1}, {5, 1}})));
  CHECK(!s1_t1_deformable(skew_model(1, {{8, 1}})));
  CHECK(s1_t1_deformable(skew_model(0, {})));
}

TEST_CASE("minimal_M") {
  SubschemeModel skew_min = minimal_M(fixtures::skew_lines());
  CHECK(skew_min.h() == 0);
  CHECK(skew_min.theta().is_zero());

  LinkageClass synth = fixtures::synthetic_s1_lt_t1();
  SubschemeModel m = minimal_M(synth);
  CHECK(m.h() == 2);
  CHECK(m.theta().fn() == IntFn{{5, 1}, {6, 1}});
  CHECK(t1_bound(m) == 5);
  CHECK(invariants(m).s1 == 5);

  // Every deformable model dominates it.
  for (const auto& x : fixtures::model_family(synth, 3, 9))
    if (s1_t1_deformable(x)) CHECK(dominates_model(m, x).has_value());
}

TEST_CASE("unique_minimal and contains_minimal") {
  LinkageClass ten = fixtures::seminatural_degree10();
  CHECK(ten.s0() == 5);
  CHECK(unique_minimal(ten));                  // delta = 2
  CHECK(!unique_minimal(fixtures::skew_lines()));  // delta = 0
  SubschemeModel x(ten, 1, nat({{6, 1}}));
  CHECK(contains_minimal(x));  // s0(X) = 6 > -1 + 3 + 1 + 1
  CHECK(!contains_minimal(SubschemeModel(ten, 2, NatFn{})));  // 5 <= -1+3+1+2
}

TEST_CASE("link_dual") {
  SubschemeModel c = skew_model(1, {{8, 1}});
  SubschemeModel d = link_dual(c, 3, 8);
  CHECK(d.h() == 6);
  CHECK(d.theta().is_zero());
  CHECK(invariants(d).degree == 14);
  CHECK(invariants(c).degree + invariants(d).degree == 3 * 8);

  SubschemeModel minimal = skew_model(0, {});
  SubschemeModel dual_min = link_dual(minimal, 2, 2);
  CHECK(dual_min.h() == 0);
  CHECK(dual_min.theta().is_zero());

  // Involution on (h, theta).
  for (const auto& x : {c, skew_model(2, {{5, 1}, {6, 1}}), skew_model(3, {})}) {
    DerivedInvariants inv = invariants(x);
    for (Deg s = inv.s0; s <= inv.s0 + 2; ++s)
      for (Deg t = std::max(t1_bound(x), s); t <= t1_bound(x) + 2; ++t) {
        SubschemeModel y = link_dual(x, s, t);
        CHECK(x.h() + y.h() == s + t - 2 - 2);
        SubschemeModel back = link_dual(y, s, t);
        CHECK(back.h() == x.h());
        CHECK(back.theta() == x.theta());
      }
  }

  CHECK_THROWS_WITH_AS(link_dual(c, 2, 8), doctest::Contains("below s0"),
                       invalid_input);
  CHECK_THROWS_WITH_AS(link_dual(c, 3, 7), doctest::Contains("below the t1 bound"),
                       invalid_input);
  SubschemeModel no_dual(fixtures::seminatural_degree10(), 0, NatFn{});
  CHECK_THROWS_WITH_AS(link_dual(no_dual, 5, 5), doctest::Contains("dual"),
                       invalid_input);
}

TEST_CASE("link_minimal_ci") {
  CHECK(link_minimal_ci(skew_model(2, {})).is_zero());
  CHECK(link_minimal_ci(skew_model(1, {{8, 1}})).is_zero());
  CHECK(link_minimal_ci(four_model(2, {{4, 1}, {5, 1}})).is_zero());
  // A connected theta with excess mass leaves a residue.
  NatFn res = link_minimal_ci(skew_model(2, {{8, 2}}));
  CHECK(res.fn() == IntFn{{3, 1}});
  CHECK_THROWS_WITH_AS(link_minimal_ci(skew_model(3, {{6, 1}, {8, 2}})),
                       doctest::Contains("not connected"), invalid_input);
}

TEST_CASE("integral_necessary") {
  LinkageClass four = fixtures::four_lines_on_quadric();

  IntegralVerdict v42s = integral_necessary(four_model(2, {{4, 1}, {5, 1}}),
                                            IntegralVariant::strict_s0);
  IntegralVerdict v42c = integral_necessary(four_model(2, {{4, 1}, {5, 1}}),
                                            IntegralVariant::combined_s1);
  CHECK(v42s.pass);
  CHECK(v42c.pass);

  // The (2,1) link: theta = 0 at height 1.  The strict form demands theta
  // positive on [3, 4] and fails; the combined form has the empty interval
  // [5, 4] and passes.  Pinned as a regression.
  IntegralVerdict v21s = integral_necessary(four_model(1, {}), IntegralVariant::strict_s0);
  IntegralVerdict v21c = integral_necessary(four_model(1, {}), IntegralVariant::combined_s1);
  CHECK(!v21s.pass);
  REQUIRE(v21s.failed.size() == 1);
  CHECK(v21s.failed[0].find("connected about [3, 4]") != std::string::npos);
  CHECK(v21c.pass);

  IntegralVerdict v8s = integral_necessary(skew_model(1, {{8, 1}}),
                                           IntegralVariant::strict_s0);
  IntegralVerdict v8c = integral_necessary(skew_model(1, {{8, 1}}),
                                           IntegralVariant::combined_s1);
  CHECK(!v8s.pass);
  CHECK(!v8c.pass);
  bool saw_theta_a = false;
  for (const auto& f : v8c.failed)
    if (f.find("theta_a = 8 exceeds s0 + h = 3") != std::string::npos)
      saw_theta_a = true;
  CHECK(saw_theta_a);

  CHECK_THROWS_AS(parse_integral_variant("bogus"), invalid_input);
}

TEST_CASE("integral_chain") {
  LinkageClass four = fixtures::four_lines_on_quadric();
  SubschemeModel x(four, 2, nat({{4, 1}, {5, 1}}));
  SubschemeModel y(four, 3, nat({{5, 1}, {6, 1}}));
  IntegralChain chain = integral_chain(x, y);
  REQUIRE(chain.steps.size() == 1);
  CHECK(chain.steps[0].a == 4);
  CHECK(chain.steps[0].w == 1);
  CHECK(chain.steps[0].s0_at == 4);
  CHECK(chain.steps[0].s1_at == 4);
  CHECK(chain.steps[0].e_at == 2);
  CHECK(chain.steps[0].degree_ok);

  CHECK(integral_chain(x, x).steps.empty());

  SubschemeModel sx = skew_model(1, {{8, 1}});
  SubschemeModel sy = skew_model(2, {{8, 1}, {9, 1}});
  IntegralChain schain = integral_chain(sx, sy);
  REQUIRE(schain.steps.size() == 1);
  CHECK(schain.steps[0].a == 8);
  CHECK(schain.steps[0].w == 1);
  CHECK(schain.steps[0].s1_at == 3);
  CHECK(schain.steps[0].e_at == 5);
  CHECK(schain.steps[0].degree_ok);  // 8 <= 5 + 3 + 1 + 1

  // Replay.
  SubschemeModel cur = x;
  for (const auto& st : chain.steps)
    cur = double_link(cur, st.a, st.w, LinkKind::elementary);
  CHECK(cur == y);

  // A step breaching the degree cap aborts with the failing inequality.
  SubschemeModel min = skew_model(0, {});
  SubschemeModel far = skew_model(2, {{9, 2}});
  CHECK_THROWS_WITH_AS(integral_chain(min, far), doctest::Contains("exceeds e(X)"),
                       gate_failure);
}
