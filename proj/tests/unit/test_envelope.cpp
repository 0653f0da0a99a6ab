#include <doctest.h>

#include "../support/fixtures.hpp"
#include "pact/envelope.hpp"

using namespace pact;
using namespace pact::fixtures;

TEST_CASE("has_enveloping") {
  Field q = Field::rationals();
  CHECK_FALSE(has_enveloping(counter_action(q)));
  CHECK(has_enveloping(k3_restriction(q).action));
  CHECK(has_enveloping(k3_swap_action(q).as_partial()));
}

TEST_CASE("build_enveloping on the K^3 restriction") {
  Field q = Field::rationals();
  RestrictedAction ra = k3_restriction(q);
  EnvelopingAction e = build_enveloping(ra.action);
  CHECK(e.ambient.algebra().dim() == 3);
  CHECK(verify_enveloping(ra.action, e.ambient, e.embed).ok());

  // compare with the original global action it was restricted from
  GlobalAction beta = k3_swap_action(q);
  EnvelopingAction original{ra.action, beta, ra.include};
  CHECK(verify_enveloping(ra.action, beta, ra.include).ok());
  AlgebraMorphism iso = compare_envelopings(ra.action, e, original);
  CHECK(verify_isomorphism(iso).isomorphism());

  // and in the other direction
  AlgebraMorphism iso2 = compare_envelopings(ra.action, original, e);
  CHECK(verify_isomorphism(iso2).isomorphism());
}

TEST_CASE("enlarging the ambient algebra violates (iii')") {
  Field q = Field::rationals();
  RestrictedAction ra = k3_restriction(q);
  // K^4 with the swap on the first two coordinates: K^3 translates generate
  // only a proper subalgebra
  Algebra k4 = Algebra::product_field(q, 4);
  Mat sw(q, 4, 4);
  sw.at(0, 1) = Scalar::one(q);
  sw.at(1, 0) = Scalar::one(q);
  sw.at(2, 2) = Scalar::one(q);
  sw.at(3, 3) = Scalar::one(q);
  GlobalActionData gd;
  gd.group = Group::cyclic(2);
  gd.algebra = k4;
  gd.autos = {LinearMap::identity(q, 4), LinearMap(4, 4, sw)};
  GlobalAction beta = GlobalAction::make(std::move(gd));

  Mat inc(q, 2, 4);
  inc.at(0, 0) = Scalar::one(q);
  inc.at(1, 2) = Scalar::one(q);
  AlgebraMorphism embed{ra.action.base(), k4, LinearMap(2, 4, inc)};
  EnvelopeReport rep = verify_enveloping(ra.action, beta, embed);
  CHECK_FALSE(rep.cond_iii);
  CHECK_FALSE(rep.ok());
}

TEST_CASE("global action envelopes itself") {
  Field q = Field::rationals();
  GlobalAction beta = k3_swap_action(q);
  PartialAction pa = beta.as_partial();
  EnvelopingAction e = build_enveloping(pa);
  CHECK(e.ambient.algebra().dim() == 3);
  MorphismReport mr = verify_isomorphism(e.embed);
  CHECK(mr.isomorphism());
}

TEST_CASE("the K^2 action with D_g = e1 K^2 envelopes in dimension 3") {
  Field q = Field::rationals();
  Algebra k2 = Algebra::product_field(q, 2);
  PartialActionData d;
  d.group = Group::cyclic(2);
  d.base = k2;
  Subspace e1 = Subspace::span(q, 2, {k2.basis_vec(0)});
  d.domains = {Subspace::full(q, 2), e1};
  d.maps = {LinearMap::identity(q, 2), LinearMap::identity(q, 1)};
  PartialAction pa = PartialAction::make(std::move(d));
  EnvelopingAction e = build_enveloping(pa);
  CHECK(e.ambient.algebra().dim() == 3);
  CHECK(verify_enveloping(pa, e.ambient, e.embed).ok());

  // rebuilding gives the identity comparison
  EnvelopingAction e2 = build_enveloping(pa);
  AlgebraMorphism iso = compare_envelopings(pa, e, e2);
  CHECK(iso.map.table().is_identity());

  // a coordinate-permuted copy compares as exactly that permutation
  const Algebra& b = e.ambient.algebra();
  Mat p(q, 3, 3);
  p.at(0, 2) = Scalar::one(q);
  p.at(1, 0) = Scalar::one(q);
  p.at(2, 1) = Scalar::one(q);
  LinearMap perm(3, 3, p);
  LinearMap perm_inv = perm.inverse();
  MulTable pt(q, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      pt.set_basis_product(i, j,
                           perm.apply(b.mul(perm_inv.apply(b.basis_vec(i)),
                                            perm_inv.apply(b.basis_vec(j)))));
  Algebra b_perm(q, 3, std::move(pt), perm.apply(*b.unit()));
  GlobalActionData gd2;
  gd2.group = pa.group();
  gd2.algebra = b_perm;
  for (std::size_t ge = 0; ge < 2; ++ge)
    gd2.autos.push_back(
        perm_inv.then(e.ambient.automorphism(static_cast<int>(ge))).then(perm));
  EnvelopingAction e3{pa, GlobalAction::make(std::move(gd2)),
                      AlgebraMorphism{pa.base(), b_perm, e.embed.map.then(perm)}};
  REQUIRE(verify_enveloping(pa, e3.ambient, e3.embed).ok());
  AlgebraMorphism iso3 = compare_envelopings(pa, e, e3);
  CHECK(iso3.map == perm);
}

TEST_CASE("embed_crossed: injectivity and image dimensions") {
  Field q = Field::rationals();
  RestrictedAction ra = k3_restriction(q);
  EnvelopingAction e = build_enveloping(ra.action);
  CrossedEmbedding emb = embed_crossed(ra.action, e);
  CHECK(emb.injective);
  CHECK(emb.multiplicative);
  CHECK(emb.source.dim() == 3);
  CHECK(emb.target.dim() == 6);

  // global case: isomorphism onto
  GlobalAction beta = k3_swap_action(q);
  PartialAction pa = beta.as_partial();
  EnvelopingAction eg = build_enveloping(pa);
  CrossedEmbedding emb2 = embed_crossed(pa, eg);
  CHECK(emb2.injective);
  CHECK(emb2.source.dim() == emb2.target.dim());
}

TEST_CASE("morita context for the K^3 restriction") {
  Field q = Field::rationals();
  RestrictedAction ra = k3_restriction(q);
  EnvelopingAction e = build_enveloping(ra.action);
  MoritaContext mc = morita_context(ra.action, e);
  CHECK(mc.ok());
  CHECK(mc.m.dim() == 4);  // |G| * dim A
  CHECK(mc.n.dim() == 4);
  CHECK(mc.mn_equals_r);
  CHECK(mc.nm_equals_rp);

  // every c d_h with c in D_h is reproduced inside MN via 1_A d_1
  const CrossedProduct& cpb = mc.emb.target;
  Vec one_a = cpb.delta_vec(0, e.embed.map.apply(*ra.action.base().unit()));
  for (std::size_t h = 0; h < 2; ++h) {
    const Subspace& dh = ra.action.domain(static_cast<int>(h));
    for (std::size_t r = 0; r < dh.dim(); ++r) {
      Vec c = cpb.delta_vec(static_cast<int>(h), e.embed.map.apply(dh.basis_row(r)));
      CHECK(mc.n.contains(c));
      Vec prod = cpb.mul(one_a, c);
      CHECK(prod == c);
    }
  }
}

TEST_CASE("morita context for a global action: M = N = the whole ring") {
  Field q = Field::rationals();
  GlobalAction beta = k3_swap_action(q);
  PartialAction pa = beta.as_partial();
  EnvelopingAction e = build_enveloping(pa);
  MoritaContext mc = morita_context(pa, e);
  CHECK(mc.ok());
  CHECK(mc.m.dim() == mc.emb.target.dim());
  CHECK(mc.n.dim() == mc.emb.target.dim());
}

TEST_CASE("identity (alfa) holds for every built envelope in the corpus") {
  fixtures::CorpusGen gen(77);
  for (int i = 0; i < 6; ++i) {
    fixtures::CorpusCase c = gen.next_k_blocks();
    CAPTURE(c.descr);
    if (!has_enveloping(c.ra.action)) continue;
    EnvelopingAction e = build_enveloping(c.ra.action);  // throws if (alfa) fails
    CHECK(e.ambient.algebra().dim() <=
          c.ra.action.group().order() * c.ra.action.base().dim());
    MoritaContext mc = morita_context(c.ra.action, e);
    CHECK(mc.ok());
  }
}
