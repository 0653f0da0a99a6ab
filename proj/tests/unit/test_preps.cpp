#include <doctest.h>

#include "../support/fixtures.hpp"
#include "pact/preps.hpp"

using namespace pact;
using namespace pact::fixtures;

TEST_CASE("verify_partial_rep: homomorphisms, [g] in K_par, zero rep") {
  Field q = Field::rationals();
  // any group homomorphism into invertibles: the regular representation
  Group z3 = Group::cyclic(3);
  Algebra kz3 = Algebra::group_algebra(q, z3);
  PartialRep hom{z3, kz3, {kz3.basis_vec(0), kz3.basis_vec(1), kz3.basis_vec(2)}};
  CHECK(verify_partial_rep(hom).ok);

  // g -> [g] in K_par(G)
  Group z2 = Group::cyclic(2);
  ExelSemigroup s(z2);
  Algebra kp = kpar_algebra(q, s);
  PartialRep tilde{z2, kp, {unit_vec(q, 3, s.generator(0)), unit_vec(q, 3, s.generator(1))}};
  CHECK(verify_partial_rep(tilde).ok);

  // Z/2 -> K with g -> 0
  Algebra k = Algebra::field_algebra(q);
  PartialRep zero{z2, k, {k.basis_vec(0), zero_vec(q, 1)}};
  CHECK(verify_partial_rep(zero).ok);

  // pi(1) != 1 is rejected
  PartialRep bad{z2, k, {zero_vec(q, 1), zero_vec(q, 1)}};
  CHECK_FALSE(verify_partial_rep(bad).ok);
}

TEST_CASE("epsilon family: idempotent, commuting, one-star") {
  Field q = Field::rationals();
  Group z3 = Group::cyclic(3);
  GroupSubset a(z3, {0, 1});
  ElementaryRepData erd = elementary_rep(q, a);
  EpsilonFamily ef = epsilon_family(erd.pi);
  CHECK(ef.ok());
  // eps_1 = e11 + e22, eps_a = e11, eps_{a^2} = e22
  CHECK(ef.eps[0] == add(unit_vec(q, 4, erd.unit_index(0, 0, 0)),
                         unit_vec(q, 4, erd.unit_index(1, 1, 0))));
  CHECK(ef.eps[1] == unit_vec(q, 4, erd.unit_index(0, 0, 0)));
  CHECK(ef.eps[2] == unit_vec(q, 4, erd.unit_index(1, 1, 0)));

  // homomorphism case: all eps = 1
  Algebra kz3 = Algebra::group_algebra(q, z3);
  PartialRep hom{z3, kz3, {kz3.basis_vec(0), kz3.basis_vec(1), kz3.basis_vec(2)}};
  EpsilonFamily ef2 = epsilon_family(hom);
  CHECK(ef2.ok());
  for (const Vec& e : ef2.eps) CHECK(e == *kz3.unit());
}

TEST_CASE("induced actions") {
  Field q = Field::rationals();
  // homomorphism case: global conjugation on the span of 1 (abelian group)
  Group z3 = Group::cyclic(3);
  Algebra kz3 = Algebra::group_algebra(q, z3);
  PartialRep hom{z3, kz3, {kz3.basis_vec(0), kz3.basis_vec(1), kz3.basis_vec(2)}};
  InducedAction ind = induced_action(hom);
  CHECK(ind.action.base().dim() == 1);
  for (std::size_t e = 0; e < 3; ++e) CHECK(ind.action.domain(static_cast<int>(e)).dim() == 1);

  // elementary Z/3 with A = {1, a}: partial action on K^2
  ElementaryRepData erd = elementary_rep(q, GroupSubset(z3, {0, 1}));
  InducedAction ind2 = induced_action(erd.pi);
  CHECK(ind2.action.base().dim() == 2);
  CHECK(ind2.action.domain(1).dim() == 1);
  CHECK(ind2.action.domain(2).dim() == 1);

  // pi tilde on K_par(Z/2): base = span{1, eps_g}, D_g one-dimensional
  Group z2 = Group::cyclic(2);
  ExelSemigroup s(z2);
  Algebra kp = kpar_algebra(q, s);
  PartialRep tilde{z2, kp,
                   {unit_vec(q, 3, s.generator(0)), unit_vec(q, 3, s.generator(1))}};
  InducedAction ind3 = induced_action(tilde);
  CHECK(ind3.action.base().dim() == 2);
  CHECK(ind3.action.domain(1).dim() == 1);
}

TEST_CASE("pi_alpha") {
  Field q = Field::rationals();
  // global action: g -> 1 d_g
  GlobalAction beta = k3_swap_action(q);
  PartialAction pa = beta.as_partial();
  CrossedProduct cp = CrossedProduct::build(pa);
  PartialRep pia = pi_alpha(pa, cp);
  CHECK(verify_partial_rep(pia).ok);
  CHECK(pia.images[1] == cp.delta_vec(1, *pa.base().unit()));

  // K^3 restriction: 1_g = e3, and eps_g = 1_g d_1 in the crossed product
  RestrictedAction ra = k3_restriction(q);
  CrossedProduct cp2 = CrossedProduct::build(ra.action);
  PartialRep pia2 = pi_alpha(ra.action, cp2);
  CHECK(verify_partial_rep(pia2).ok);
  EpsilonFamily ef = epsilon_family(pia2);
  UnitFamily uf = unit_family(ra.action);
  for (std::size_t e = 0; e < 2; ++e)
    CHECK(ef.eps[e] == cp2.embed_base_vec(*uf.units[e]));

  // counterexample: no units
  CHECK_THROWS_AS(pi_alpha(counter_action(q)), Error);
}

TEST_CASE("phi_alpha") {
  Field q = Field::rationals();
  // K^3 restriction: 1 = (1,1) and 1_g = e3 span the base, so the units
  // generate and the induced action is equivalent to the original
  RestrictedAction ra = k3_restriction(q);
  PhiAlpha pa1 = phi_alpha_map(ra.action);
  CHECK(pa1.intertwines);
  CHECK(pa1.units_generate);
  CHECK(pa1.equivalence);
  CHECK(pa1.a_prime.dim() == 2);  // span{1, e3}

  // elementary action on K^n: units generate, actions equivalent
  Group z3 = Group::cyclic(3);
  ElementaryRepData erd = elementary_rep(q, GroupSubset(z3, {0, 1}));
  InducedAction ind = induced_action(erd.pi);
  PhiAlpha pa2 = phi_alpha_map(ind.action);
  CHECK(pa2.intertwines);
  CHECK(pa2.units_generate);
  CHECK(pa2.equivalence);

  // global unital: A' = K 1 d_1
  GlobalAction beta = k3_swap_action(q);
  PhiAlpha pa3 = phi_alpha_map(beta.as_partial());
  CHECK(pa3.a_prime.dim() == 1);
  CHECK(pa3.intertwines);
  CHECK_FALSE(pa3.units_generate);
  CHECK_FALSE(pa3.equivalence);
}

TEST_CASE("phi_pi: bijective on the elementary Z/3 case and on K_par(Z/2)") {
  Field q = Field::rationals();
  Group z3 = Group::cyclic(3);
  ElementaryRepData erd = elementary_rep(q, GroupSubset(z3, {0, 1}));
  InducedAction ind = induced_action(erd.pi);
  PhiPi phi = phi_pi(erd.pi, ind);
  CHECK(phi.multiplicative);
  CHECK(phi.composes_to_pi);
  CHECK(phi.bijective);  // K^2 x| Z/3 = M_2(K)

  Group z2 = Group::cyclic(2);
  KparIso ki = kpar_iso(q, z2);
  CHECK(ki.phi.bijective);
  CHECK(ki.phi.crossed.dim() == 3);
}

TEST_CASE("expectation criterion applicability") {
  Field q = Field::rationals();
  // degenerate D_g: the counterexample action is inapplicable
  PartialAction pa = counter_action(q);
  CrossedProduct cp = CrossedProduct::build(pa);
  // phi = identity map on the crossed product viewed as plain linear space;
  // the target only carries E, so a zero-product algebra will do
  LinearMap id = LinearMap::identity(q, cp.dim());
  Algebra carrier(q, cp.dim(), MulTable(q, cp.dim()), std::nullopt);
  ExpectationResult res = expectation_injectivity(cp, id, carrier, id);
  CHECK_FALSE(res.applicable);

  // identity embedding A d_1 -> A with E = id on the base component
  GlobalAction beta = k3_swap_action(q);
  PartialAction pg = beta.as_partial();
  CrossedProduct cpg = CrossedProduct::build(pg);
  // collapse to the 1-component: E(phi(a d_g)) = [g = 1] phi(a d_g)
  Mat e(q, cpg.dim(), cpg.dim());
  for (std::size_t i = 0; i < 3; ++i) e.at(i, i) = Scalar::one(q);
  Algebra target = cpg.as_algebra();
  ExpectationResult res2 = expectation_injectivity(
      cpg, LinearMap::identity(q, cpg.dim()), target, LinearMap(cpg.dim(), cpg.dim(), e));
  CHECK(res2.applicable);
  CHECK(res2.injective);
}

TEST_CASE("Exel semigroup sizes and structure") {
  Field q = Field::rationals();
  Group z2 = Group::cyclic(2);
  ExelSemigroup s2(z2);
  CHECK(s2.size() == 3);  // 1, [g], eps_g
  // eps_g [g] = [g]
  std::size_t eps = s2.mul(s2.generator(1), s2.generator(1));  // ({1,g},1)
  CHECK(s2.mul(eps, s2.generator(1)) == s2.generator(1));
  // [g][g][g] = [g]
  CHECK(s2.mul(s2.mul(s2.generator(1), s2.generator(1)), s2.generator(1)) == s2.generator(1));

  CHECK(ExelSemigroup(Group::cyclic(3)).size() == 8);
  CHECK(ExelSemigroup(Group::cyclic(4)).size() == 20);
  CHECK(ExelSemigroup(Group::klein_four()).size() == 20);
  CHECK(ExelSemigroup(Group::cyclic(6)).size() == 112);
  CHECK_THROWS_AS(ExelSemigroup(Group::symmetric(4)), Error);  // |G| = 24

  // defining relations hold in the pair model
  for (const Group& g : {Group::cyclic(3), Group::klein_four()}) {
    ExelSemigroup s(g);
    for (std::size_t ge = 0; ge < g.order(); ++ge)
      for (std::size_t he = 0; he < g.order(); ++he) {
        int gi = static_cast<int>(ge), hi = static_cast<int>(he);
        std::size_t lhs_a = s.mul(s.mul(s.generator(g.inv(gi)), s.generator(gi)),
                                  s.generator(hi));
        std::size_t rhs_a = s.mul(s.generator(g.inv(gi)), s.generator(g.mul(gi, hi)));
        CHECK(lhs_a == rhs_a);
        std::size_t lhs_b = s.mul(s.mul(s.generator(gi), s.generator(hi)),
                                  s.generator(g.inv(hi)));
        std::size_t rhs_b = s.mul(s.generator(g.mul(gi, hi)), s.generator(g.inv(hi)));
        CHECK(lhs_b == rhs_b);
      }
  }
  (void)q;
}

TEST_CASE("rewriting oracle confirms the pair model") {
  for (const Group& g : {Group::cyclic(2), Group::cyclic(3), Group::cyclic(4),
                         Group::klein_four()}) {
    ExelSemigroup s(g);
    ExelOracle oracle = exel_oracle(g, s);
    CAPTURE(g.order());
    CHECK(oracle.classes == s.size());
    CHECK(oracle.matches_pair_model);
  }
}

TEST_CASE("kpar_iso composites are identities") {
  Field q = Field::rationals();
  for (const Group& g : {Group::cyclic(2), Group::cyclic(3)}) {
    KparIso ki = kpar_iso(q, g);
    CHECK(ki.psi_matches_generators);
    CHECK(ki.mutually_inverse);
    CHECK(ki.phi.multiplicative);
    CHECK(ki.phi.composes_to_pi);
  }
}

TEST_CASE("elementary representations") {
  Field q = Field::rationals();
  Group z3 = Group::cyclic(3);
  ElementaryRepData erd = elementary_rep(q, GroupSubset(z3, {0, 1}));
  CHECK(erd.n() == 2);
  CHECK(erd.h.group.order() == 1);
  CHECK(erd.target.dim() == 4);
  // pi(a) is the monomial matrix e_{1,2}(1)
  CHECK(erd.pi.images[1] == unit_vec(q, 4, erd.unit_index(0, 1, 0)));
  CHECK(erd.pi.images[2] == unit_vec(q, 4, erd.unit_index(1, 0, 0)));

  // A = G: single translate, H = G, the regular representation into KG
  ElementaryRepData whole = elementary_rep(q, GroupSubset(z3, {0, 1, 2}));
  CHECK(whole.n() == 1);
  CHECK(whole.h.group.order() == 3);
  CHECK(whole.target.dim() == 3);

  // S_3 with A = {1, (12)}: |A| = |H| n
  Group s3 = Group::symmetric(3);
  int t12 = s3.index_of("213");
  REQUIRE(t12 > 0);
  ElementaryRepData es3 = elementary_rep(q, GroupSubset(s3, {0, t12}));
  CHECK(es3.a_set.size() == es3.h.group.order() * es3.n());
}

TEST_CASE("iso_bis: matrix algebras as crossed products") {
  Field q = Field::rationals();
  // K^2 x| Z/3 = M_2(Q)
  IsoBis i1 = iso_bis(elementary_rep(q, GroupSubset(Group::cyclic(3), {0, 1})));
  CHECK(i1.isomorphism);
  CHECK(i1.expectation.applicable);

  // H nontrivial: Z/4 with A = {1, g^2}: M_1(KH) = KH
  IsoBis i2 = iso_bis(elementary_rep(q, GroupSubset(Group::cyclic(4), {0, 2})));
  CHECK(i2.isomorphism);
  CHECK(i2.induced.action.base().dim() == 1);
  CHECK(i2.phi.crossed.dim() == 2);
}

TEST_CASE("transitivity witnesses") {
  Field q = Field::rationals();
  ElementaryRepData erd = elementary_rep(q, GroupSubset(Group::cyclic(3), {0, 1}));
  InducedAction ind = induced_action(erd.pi);
  CHECK(transitivity_witness(erd, ind, 0, 0) == 0);
  // g with g A_1 = A_2 is a^2
  CHECK(transitivity_witness(erd, ind, 0, 1) == 2);
  CHECK(transitivity_witness(erd, ind, 1, 0) == 1);
}

TEST_CASE("elementary gradings") {
  Field q = Field::rationals();
  Group z3 = Group::cyclic(3);
  ElementaryRepData erd = elementary_rep(q, GroupSubset(z3, {0, 1}));
  IsoBis iso = iso_bis(erd);
  ElementaryGrading gr = elementary_grading(erd, iso);
  CHECK(gr.phi_graded);
  CHECK(gr.multiplicative);
  // deg e_{ii}(1) = 1; deg e_{12}(1) = r_1 r_2^{-1}
  CHECK(gr.degree[erd.unit_index(0, 0, 0)] == 0);
  CHECK(gr.degree[erd.unit_index(1, 1, 0)] == 0);
  CHECK(gr.degree[erd.unit_index(0, 1, 0)] ==
        z3.mul(erd.orbit.reps[0], z3.inv(erd.orbit.reps[1])));

  // H nontrivial: deg e_{11}(g^2) = g^2
  Group z4 = Group::cyclic(4);
  ElementaryRepData e2 = elementary_rep(q, GroupSubset(z4, {0, 2}));
  IsoBis iso2 = iso_bis(e2);
  ElementaryGrading gr2 = elementary_grading(e2, iso2);
  CHECK(gr2.phi_graded);
  CHECK(gr2.degree[e2.unit_index(0, 0, 1)] == 2);
}

TEST_CASE("f_S products and the correspondence round trip") {
  Field q = Field::rationals();
  Group z3 = Group::cyclic(3);
  ElementaryRepData erd = elementary_rep(q, GroupSubset(z3, {0, 1}));
  InducedAction ind = induced_action(erd.pi);

  ElementaryCorrespondence corr = action_to_elementary(ind.action);
  CHECK(corr.f_checks);
  CHECK(corr.action_equal);
  CHECK(corr.reps_equivalent);
  // the reconstructed representation is the original one
  REQUIRE(corr.erd.pi.images.size() == erd.pi.images.size());
  for (std::size_t e = 0; e < erd.pi.images.size(); ++e)
    CHECK(corr.erd.pi.images[e] == erd.pi.images[e]);

  // f_S = 0 for S not among the A_i, checked exhaustively inside
  UnitFamily uf = unit_family(ind.action);
  Vec f_whole = f_s_product(ind.action, uf, {0, 1, 2});
  CHECK(is_zero_vec(f_whole));  // {1,a,a^2} is not an A_i
}

TEST_CASE("action_to_elementary rejects bases that are not K^n") {
  Field q = Field::rationals();
  PartialAction pa = counter_action(q);
  CHECK_THROWS_AS(action_to_elementary(pa), Error);
}
