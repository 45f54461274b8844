#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "gaut/autgraded.hpp"

using namespace gaut;
using namespace gaut::fixtures;

namespace {

std::vector<GroupHom> full_aut(const GradedPolyRing& S) {
  std::vector<GroupElement> omega;
  for (const auto& d : S.degrees) omega.push_back(d);
  return enumerate_aut_stabilizing(S.K, omega);
}

bool same_ideal(const GradedPolyRing& ring, const std::vector<Polynomial>& a,
                const std::vector<Polynomial>& b) {
  auto ga = groebner(a, MonomialOrder::grevlex());
  auto gb = groebner(b, MonomialOrder::grevlex());
  (void)ring;
  return ga.elements == gb.elements;
}

}  // namespace

TEST_CASE("rep basis") {
  GradedPolyRing S = a32a1_ring();
  RepBasis rep = build_rep_basis(S);
  CHECK(rep.n == 5);
  CHECK(rep.blocks.size() == 5);
  for (int i = 0; i < 5; ++i) {
    CHECK(rep.blocks[i].dim() == 1);
    Exp ei(5, 0);
    ei[i] = 1;
    CHECK(rep.blocks[i].monomials[0] == ei);
  }

  // two variables of equal degree give one block of dim >= 2
  GradedPolyRing P = ring_from_columns(1, {}, {{1}, {1}});
  RepBasis rp = build_rep_basis(P);
  CHECK(rp.blocks.size() == 1);
  CHECK(rp.blocks[0].dim() == 2);

  // G(2,5): ten singleton blocks
  RepBasis rg = build_rep_basis(g25_ring());
  CHECK(rg.n == 10);
  CHECK(rg.blocks.size() == 10);
}

TEST_CASE("admissibility equations") {
  GradedPolyRing S = a32a1_ring();
  CHECK(admissibility_equations(S, build_rep_basis(S)).empty());

  CHECK(admissibility_equations(g25_ring(), build_rep_basis(g25_ring())).empty());

  // deg T1 = 1, deg T2 = 2: the image of T1^2 is forced to be the square
  GradedPolyRing W = ring_from_columns(1, {}, {{1}, {2}});
  RepBasis rep = build_rep_basis(W);
  CHECK(rep.n == 3);
  auto eqs = admissibility_equations(W, rep);
  CHECK_FALSE(eqs.empty());
}

TEST_CASE("permuting matrix for psi1 swaps indices 3 and 4") {
  GradedPolyRing S = a32a1_ring();
  RepBasis rep = build_rep_basis(S);
  auto auts = full_aut(S);
  REQUIRE(auts.size() == 2);
  const GroupHom& psi1 = auts[0] == identity_hom(S.K) ? auts[1] : auts[0];
  auto perm = block_permutation(rep, S.K, psi1);
  IntMat B = permuting_matrix(rep, perm);
  // swaps basis vectors 3 and 4 (1-indexed), fixes the rest
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      int expect = (i == j && i != 2 && i != 3) || (i == 2 && j == 3) || (i == 3 && j == 2);
      CHECK(B(i, j) == expect);
    }
  CHECK(permuting_matrix(rep, block_permutation(rep, S.K, identity_hom(S.K))) ==
        IntMat::identity(5));
}

TEST_CASE("aut_ks on the A3 2A1 surface") {
  GradedPolyRing S = a32a1_ring();
  MatrixGroupDescription G = aut_ks(S, full_aut(S));
  REQUIRE(G.cosets.size() == 2);
  for (const Coset& c : G.cosets) {
    CHECK(c.gens.empty());  // no admissibility equations needed here
    CHECK(c.pattern.size() == 5);
  }
  CHECK((G.cosets[0].unit_coset || G.cosets[1].unit_coset));
  CHECK(entry_ideals_homogeneous(G));

  // torus case: single coset, no equations
  GradedPolyRing P = ring_from_columns(2, {}, {{1, 0}, {0, 1}});
  MatrixGroupDescription T = aut_ks(P, {identity_hom(P.K)});
  REQUIRE(T.cosets.size() == 1);
  CHECK(T.cosets[0].gens.empty());
  CHECK(T.cosets[0].pattern.size() == 2);
}

TEST_CASE("stab_ideal equations for the A3 2A1 surface") {
  GradedPolyRing S = a32a1_ring();
  Ideal I = a32a1_ideal(S);
  MatrixGroupDescription G = stab_ideal(S, I, full_aut(S));
  REQUIRE(G.cosets.size() == 2);
  CHECK(entry_ideals_homogeneous(G));

  const Coset& cid = G.cosets[0].unit_coset ? G.cosets[0] : G.cosets[1];
  const Coset& cpsi = G.cosets[0].unit_coset ? G.cosets[1] : G.cosets[0];

  // presentation-equivalent to the displayed equations
  CHECK(same_ideal(G.entries, cid.gens,
                   {parse_polynomial(G.entries, "a3_3^2 - a4_4^2"),
                    parse_polynomial(G.entries, "a1_1*a2_2 - a3_3^2")}));
  CHECK(same_ideal(G.entries, cpsi.gens,
                   {parse_polynomial(G.entries, "a3_4^2 - a4_3^2"),
                    parse_polynomial(G.entries, "a1_1*a2_2 - a4_3^2")}));

  // the identity matrix satisfies the unit coset ideal
  ScalarMat id5 = ScalarMat::identity(5);
  for (const auto& g : cid.gens) CHECK(evaluate_entry_poly(g, id5).is_zero());

  // I = 0 leaves aut_ks unchanged
  MatrixGroupDescription G0 = stab_ideal(S, Ideal{}, full_aut(S));
  for (const Coset& c : G0.cosets) CHECK(c.gens.empty());
}

TEST_CASE("a stab coset matrix maps I_W into I_W") {
  GradedPolyRing S = a32a1_ring();
  Ideal I = a32a1_ideal(S);
  MatrixGroupDescription G = stab_ideal(S, I, full_aut(S));
  // sample a point of the unit coset: t1 t2 = t3^2 = t4^2
  ScalarMat M(5, 5);
  Scalar u(Rat(3)), s(Rat(2));
  M(0, 0) = u;                      // t1
  M(1, 1) = s * s / u;              // t2 = s^2/t1
  M(2, 2) = s;
  M(3, 3) = -s;
  M(4, 4) = Scalar(Rat(7));
  for (const Coset& c : G.cosets) {
    if (!c.unit_coset) continue;
    for (const auto& g : c.gens) CHECK(evaluate_entry_poly(g, M).is_zero());
  }
  // direct check: phi(g) proportional to g
  Polynomial img = Polynomial::compose(
      I.gens[0],
      {Polynomial::variable(0, 5).scaled(M(0, 0)), Polynomial::variable(1, 5).scaled(M(1, 1)),
       Polynomial::variable(2, 5).scaled(M(2, 2)), Polynomial::variable(3, 5).scaled(M(3, 3)),
       Polynomial::variable(4, 5).scaled(M(4, 4))},
      5);
  Polynomial expect = I.gens[0].scaled(Scalar(Rat(4)));  // common factor s^2
  CHECK(img == expect);
}

TEST_CASE("quot_rep: trivial components reproduce stab_ideal bit for bit") {
  GradedPolyRing S = a32a1_ring();
  Ideal I = a32a1_ideal(S);
  QuotientRep q = quot_rep(S, I, full_aut(S));
  CHECK(q.identical_to_stab);
  CHECK(q.group.rep.n == 5);
  MatrixGroupDescription G = stab_ideal(S, I, full_aut(S));
  REQUIRE(q.group.cosets.size() == G.cosets.size());
  for (size_t i = 0; i < G.cosets.size(); ++i) {
    CHECK(q.group.cosets[i].gens == G.cosets[i].gens);
    CHECK(q.group.cosets[i].pattern == G.cosets[i].pattern);
  }
}

TEST_CASE("quot_rep toy: quotient of K[T1,T2,T3] by <T1 - T2>") {
  GradedPolyRing S = ring_from_columns(1, {}, {{1}, {1}, {1}});
  Ideal I{{parse_polynomial(S, "T1 - T2")}};
  QuotientRep q = quot_rep(S, I, {identity_hom(S.K)});
  CHECK_FALSE(q.identical_to_stab);
  CHECK(q.group.rep.n == 2);
  REQUIRE(q.group.cosets.size() == 1);
  // hand-computed: the quotient is a free polynomial ring, its graded
  // automorphisms are all of GL(2)
  CHECK(q.group.cosets[0].gens.empty());
}

TEST_CASE("gamma group") {
  GradedPolyRing S = a32a1_ring();
  GammaGroup g = gamma_group(S, a32a1_ideal(S));
  CHECK(g.order() == 2);
  CHECK(g.abelian);

  // I = 0: Gamma = Aut(Omega_S)
  GammaGroup g0 = gamma_group(S, Ideal{});
  CHECK(g0.order() == 2);
}

TEST_CASE("group dimension and components for the A3 2A1 surface") {
  GradedPolyRing S = a32a1_ring();
  Ideal I = a32a1_ideal(S);
  MatrixGroupDescription G = stab_ideal(S, I, full_aut(S));
  CHECK(group_dimension(G) == 3);
  ComponentCount cc = component_count(G);
  CHECK(cc.known);
  CHECK(cc.count == 4);

  // cross-check the binomial route against the Groebner route on the unit
  // coset: saturate by the diagonal product and take the Krull dimension
  const Coset& cid = G.cosets[0].unit_coset ? G.cosets[0] : G.cosets[1];
  std::vector<int> vars;
  for (auto& [r, c] : cid.pattern) vars.push_back(r * 5 + c);
  std::vector<int> map(25, -1);
  for (size_t i = 0; i < vars.size(); ++i) map[vars[i]] = (int)i;
  std::vector<Polynomial> restricted;
  for (const auto& g : cid.gens) restricted.push_back(g.remap(map, 5));
  Polynomial det_prod = Polynomial::constant(Scalar(1), 5);
  for (int i = 0; i < 5; ++i) det_prod = det_prod * Polynomial::variable(i, 5);
  auto sat = saturate(restricted, 5, det_prod);
  CHECK(ideal_dimension(sat, 5) == 3);

  // torus case: dimension r, one component
  GradedPolyRing P = ring_from_columns(2, {}, {{1, 0}, {0, 1}});
  MatrixGroupDescription T = stab_ideal(P, Ideal{}, {identity_hom(P.K)});
  CHECK(group_dimension(T) == 2);
  CHECK(component_count(T).count == 1);
}

TEST_CASE("group closure spot checks on sampled matrices") {
  GradedPolyRing S = a32a1_ring();
  Ideal I = a32a1_ideal(S);
  MatrixGroupDescription G = stab_ideal(S, I, full_aut(S));
  auto satisfies_some_coset = [&](const ScalarMat& M) {
    for (const Coset& c : G.cosets) {
      bool ok = true;
      // pattern support
      std::vector<char> allowed(25, 0);
      for (auto& [r, cc] : c.pattern) allowed[r * 5 + cc] = 1;
      for (int i = 0; i < 5 && ok; ++i)
        for (int j = 0; j < 5 && ok; ++j)
          if (!M(i, j).is_zero() && !allowed[i * 5 + j]) ok = false;
      for (const auto& g : c.gens)
        if (ok && !evaluate_entry_poly(g, M).is_zero()) ok = false;
      if (ok) return true;
    }
    return false;
  };
  auto diag_point = [&](long u, long s, int sign, long v) {
    ScalarMat M(5, 5);
    M(0, 0) = Scalar(Rat(u));
    M(1, 1) = Scalar(Rat(s * s) / Rat(u));
    M(2, 2) = Scalar(Rat(s));
    M(3, 3) = Scalar(Rat(sign * s));
    M(4, 4) = Scalar(Rat(v));
    return M;
  };
  auto swap_point = [&](long u, long s, int sign, long v) {
    ScalarMat M(5, 5);
    M(0, 0) = Scalar(Rat(u));
    M(1, 1) = Scalar(Rat(s * s) / Rat(u));
    M(2, 3) = Scalar(Rat(s));
    M(3, 2) = Scalar(Rat(sign * s));
    M(4, 4) = Scalar(Rat(v));
    return M;
  };
  std::vector<ScalarMat> samples;
  long us[] = {1, 2, 3, -2};
  long ss[] = {1, 5, -3};
  for (long u : us)
    for (long s : ss)
      for (int sg : {1, -1}) {
        samples.push_back(diag_point(u, s, sg, u + 10));
        samples.push_back(swap_point(u, s, sg, u + 11));
      }
  for (const auto& M : samples) CHECK(satisfies_some_coset(M));
  // products and inverses stay in the group
  for (size_t i = 0; i + 1 < samples.size(); i += 2) {
    CHECK(satisfies_some_coset(samples[i] * samples[i + 1]));
    ScalarMat inv;
    REQUIRE(samples[i].invert(inv));
    CHECK(satisfies_some_coset(inv));
  }
}

TEST_CASE("transporter") {
  GradedPolyRing S = a32a1_ring();
  Ideal I = a32a1_ideal(S);
  auto sig = full_aut(S);
  MatrixGroupDescription t = transporter(S, I, I, sig);
  MatrixGroupDescription st = stab_ideal(S, I, sig);
  REQUIRE(t.cosets.size() == st.cosets.size());
  for (size_t i = 0; i < t.cosets.size(); ++i) CHECK(t.cosets[i].gens == st.cosets[i].gens);

  // I2 = whole degree component: no constraints beyond aut_ks
  GradedPolyRing P = ring_from_columns(1, {}, {{1}, {1}});
  Ideal I1{{parse_polynomial(P, "T1")}};
  Ideal Ifull{{parse_polynomial(P, "T1"), parse_polynomial(P, "T2")}};
  MatrixGroupDescription tr = transporter(P, I1, Ifull, {identity_hom(P.K)});
  CHECK(tr.cosets[0].gens.empty());

  // I1 = <T1>, I2 = <T2>: matrices sending T1 into the T2-line
  Ideal I2{{parse_polynomial(P, "T2")}};
  MatrixGroupDescription tr2 = transporter(P, I1, I2, {identity_hom(P.K)});
  REQUIRE(tr2.cosets.size() == 1);
  REQUIRE(tr2.cosets[0].gens.size() == 1);
  CHECK(tr2.cosets[0].gens[0] == -Polynomial::variable(0, 4));  // a1_1 = 0
}

TEST_CASE("permutation symmetries of the A3 2A1 relation") {
  GradedPolyRing S = a32a1_ring();
  Ideal I = a32a1_ideal(S);
  PermutationSymmetries ps = extract_permutation_symmetries(S, I);
  REQUIRE(ps.perms.size() == 2);
  CHECK(ps.perms[0] == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(ps.perms[1] == std::vector<int>{0, 1, 3, 2, 4});
  CHECK(ps.closed_under_composition);
  CHECK(ps.closed_under_inverse);

  // I = 0: all degree-compatible permutations (here: only the same two)
  PermutationSymmetries p0 = extract_permutation_symmetries(S, Ideal{});
  CHECK(p0.perms.size() == 2);
}

TEST_CASE("dimension bounds") {
  GradedPolyRing S = a32a1_ring();
  Ideal I = a32a1_ideal(S);
  DimBound db = dim_bound(S, I);
  CHECK(db.algebra_bound == 5);
  CHECK(db.mds_bound == 3);
  // attained bound on projective space P^2: r = 3 equal degrees, I = 0
  GradedPolyRing P = ring_from_columns(1, {}, {{1}, {1}, {1}});
  DimBound dp = dim_bound(P, Ideal{});
  CHECK(dp.algebra_bound == 9);
  CHECK(dp.mds_bound == 8);  // = dim PGL(3)
  // group_dimension <= bound
  MatrixGroupDescription G = stab_ideal(S, I, full_aut(S));
  CHECK(group_dimension(G) <= db.algebra_bound);
}

TEST_CASE("combined ideal export") {
  GradedPolyRing S = a32a1_ring();
  Ideal I = a32a1_ideal(S);
  MatrixGroupDescription G = stab_ideal(S, I, full_aut(S));
  auto prod = G.combined_ideal();
  REQUIRE(prod.has_value());
  // the product ideal vanishes on points of both cosets
  ScalarMat M(5, 5);
  M(0, 0) = Scalar(Rat(2));
  M(1, 1) = Scalar(Rat(1, 2));
  M(2, 2) = Scalar(1);
  M(3, 3) = Scalar(-1);
  M(4, 4) = Scalar(5);
  for (const auto& g : *prod) CHECK(evaluate_entry_poly(g, M).is_zero());
}
