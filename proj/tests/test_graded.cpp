#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "gaut/diag.hpp"
#include "gaut/graded.hpp"

using namespace gaut;
using namespace gaut::fixtures;

TEST_CASE("degree_of on the A3 2A1 relation") {
  GradedPolyRing S = a32a1_ring();
  Polynomial g = parse_polynomial(S, "T1*T2 + T3^2 + T4^2");
  auto d = degree_of(S, g);
  REQUIRE(d.has_value());
  // derived: w1 + w2 = (2,0,1+1 mod 2) = (2,0,0~)
  CHECK(*d == ge(S.K, {2, 0}, {0}));

  CHECK(*degree_of(S, parse_polynomial(S, "1")) == GroupElement::zero(S.K));
  CHECK_FALSE(degree_of(S, parse_polynomial(S, "T1 + T2")).has_value());  // torsion differs? same
  // T1 and T4 have different degrees
  CHECK_FALSE(degree_of(S, parse_polynomial(S, "T1 + T4")).has_value());
}

TEST_CASE("effective and pointed checks") {
  CHECK(check_effective_pointed(a32a1_ring()).pointed);
  CHECK(check_effective_pointed(a32a1_ring()).effective);
  CHECK(check_effective_pointed(g25_ring()).pointed);
  CHECK(check_effective_pointed(blowup_ring()).pointed);
  CHECK(check_effective_pointed(d4_ring()).pointed);
  CHECK(check_effective_pointed(cubic2a2_ring()).pointed);

  // deg T1 = 1, deg T2 = -1 over Z: not pointed, witness T1*T2
  GradedPolyRing bad = ring_from_columns(1, {}, {{1}, {-1}});
  GradingCheck c = check_effective_pointed(bad);
  CHECK(c.effective);
  CHECK_FALSE(c.pointed);
  CHECK(c.witness == "T1*T2");

  // degrees {2} over Z: not effective
  GradedPolyRing bad2 = ring_from_columns(1, {}, {{2}});
  CHECK_FALSE(check_effective_pointed(bad2).effective);
}

TEST_CASE("monomial_basis") {
  GradedPolyRing S = a32a1_ring();
  // the component bases are singletons (T_i)
  for (int i = 0; i < 5; ++i) {
    auto b = monomial_basis(S, S.degrees[i]);
    REQUIRE(b.size() == 1);
    Exp ei(5, 0);
    ei[i] = 1;
    CHECK(b[0] == ei);
  }
  // degree 0 gives the constant
  auto b0 = monomial_basis(S, GroupElement::zero(S.K));
  REQUIRE(b0.size() == 1);
  CHECK(exp_degree(b0[0]) == 0);

  // standard Z-grading, 3 variables, w = 2: C(4,2) = 6 monomials
  GradedPolyRing P = ring_from_columns(1, {}, {{1}, {1}, {1}});
  CHECK(monomial_basis(P, ge(P.K, {2})).size() == 6);

  // generating-function identity on a mixed grading: the counts of
  // monomials per functional value match the product expansion
  GradedPolyRing Q = ring_from_columns(1, {}, {{1}, {2}, {3}});
  // coefficients of 1/((1-t)(1-t^2)(1-t^3)) up to t^6: 1,1,2,3,4,5,7
  long expect[] = {1, 1, 2, 3, 4, 5, 7};
  for (long v = 0; v <= 6; ++v) CHECK((long)monomial_basis(Q, ge(Q.K, {v})).size() == expect[v]);
}

TEST_CASE("ideal_component") {
  GradedPolyRing S = a32a1_ring();
  Ideal I = a32a1_ideal(S);
  // w = (2,0,0~): one-dimensional, spanned by the relation itself
  ComponentBasis cb = ideal_component(S, I, ge(S.K, {2, 0}, {0}));
  CHECK(cb.space_basis.size() == 3);  // T1*T2, T3^2, T4^2
  REQUIRE(cb.dim() == 1);
  CHECK(cb.polys[0] == parse_polynomial(S, "T1*T2 + T3^2 + T4^2"));

  // infeasible complement degree: component is zero
  CHECK(ideal_component(S, I, ge(S.K, {1, 0}, {0})).dim() == 0);

  // G(2,5): the component at deg(T5*T10) is spanned by the first relation
  GradedPolyRing G = g25_ring();
  Ideal J = g25_ideal(G);
  GroupElement w = add(G.K, G.degrees[4], G.degrees[9]);
  ComponentBasis gb = ideal_component(G, J, w);
  REQUIRE(gb.dim() == 1);
  // same line as the first relation up to scale
  Polynomial diff = gb.polys[0].scaled(gb.polys[0].terms[0].second.inv()) -
                    J.gens[0].scaled(J.gens[0].terms[0].second.inv());
  CHECK(diff.is_zero());
}

TEST_CASE("generator_degrees") {
  GradedPolyRing S = a32a1_ring();
  CHECK(generator_degrees(S).size() == 5);
  GradedPolyRing P = ring_from_columns(1, {}, {{1}, {1}, {1}});
  CHECK(generator_degrees(P).size() == 1);
  CHECK(generator_degrees(g25_ring()).size() == 10);
}

TEST_CASE("ideal_generator_degrees") {
  GradedPolyRing S = a32a1_ring();
  auto om = ideal_generator_degrees(S, a32a1_ideal(S));
  REQUIRE(om.size() == 1);
  CHECK(om[0] == ge(S.K, {2, 0}, {0}));

  CHECK(ideal_generator_degrees(S, Ideal{}).empty());

  // Pluecker: five distinct, pairwise incomparable degrees
  GradedPolyRing G = g25_ring();
  Ideal J = g25_ideal(G);
  auto omg = ideal_generator_degrees(G, J);
  CHECK(omg.size() == 5);
  for (const auto& a : omg)
    for (const auto& b : omg)
      if (!(a == b)) CHECK_FALSE(degree_less(G, a, b));
}

TEST_CASE("minimalize_presentation") {
  // I = <T2 - T1^2>, deg T2 = 2 deg T1: eliminate T2
  GradedPolyRing S = ring_from_columns(1, {}, {{1}, {2}});
  Ideal I{{parse_polynomial(S, "T2 - T1^2")}};
  MinimalPresentation mp = minimalize_presentation(S, I);
  CHECK(mp.ring.nvars() == 1);
  CHECK(mp.ideal.gens.empty());
  CHECK(mp.eliminated == std::vector<std::string>{"T2"});

  // already minimal input stays unchanged
  GradedPolyRing A = a32a1_ring();
  MinimalPresentation mp2 = minimalize_presentation(A, a32a1_ideal(A));
  CHECK(mp2.ring.nvars() == 5);
  CHECK(mp2.eliminated.empty());
  CHECK(mp2.ideal.gens.size() == 1);

  // chain elimination, checked against the hand-substitution oracle:
  // T3 = T1*T2, then T4 = T3^2 = (T1*T2)^2, everything collapses
  GradedPolyRing C = ring_from_columns(1, {}, {{1}, {1}, {2}, {4}});
  Ideal J{{parse_polynomial(C, "T3 - T1*T2"), parse_polynomial(C, "T3^2 - T4")}};
  MinimalPresentation mp3 = minimalize_presentation(C, J);
  CHECK(mp3.ring.nvars() == 2);
  CHECK(mp3.ideal.gens.empty());
  CHECK(mp3.eliminated.size() == 2);

  // output invariant: no generator keeps a linear term in any variable
  for (const auto& g : mp3.ideal.gens)
    for (int v = 0; v < mp3.ring.nvars(); ++v) {
      Exp ev(mp3.ring.nvars(), 0);
      ev[v] = 1;
      CHECK(g.coeff(ev).is_zero());
    }
}
