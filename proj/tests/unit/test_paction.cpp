#include <doctest.h>

#include "../support/fixtures.hpp"
#include "pact/paction.hpp"

using namespace pact;
using namespace pact::fixtures;

TEST_CASE("verify_partial_action: counterexample action, trivial action, rejection") {
  Field q = Field::rationals();
  PartialAction pa = counter_action(q);
  PactionReport rep = verify_partial_action(pa.data());
  CHECK(rep.valid());
  CHECK(rep.weak_agrees);

  // trivial partial action from a global action
  GlobalAction beta = k3_swap_action(q);
  PactionReport rep2 = verify_partial_action(beta.as_partial().data());
  CHECK(rep2.valid());

  // projection instead of an isomorphism is rejected
  PartialActionData bad = pa.data();
  Mat proj(q, 2, 2);
  proj.at(0, 0) = Scalar::one(q);
  bad.maps[1] = LinearMap(2, 2, proj);
  PactionReport rep3 = verify_partial_action(bad);
  CHECK_FALSE(rep3.valid());
  CHECK_FALSE(rep3.structural);
  CHECK_THROWS_AS(PartialAction::make(bad), Error);
}

TEST_CASE("weak conditions (ii)/(iii) agree with the primed forms") {
  Field q = Field::rationals();
  for (const PactionReport& rep :
       {verify_partial_action(counter_action(q).data()),
        verify_partial_action(k3_restriction(q).action.data()),
        verify_partial_action(k3_swap_action(q).as_partial().data())}) {
    CHECK(rep.weak_agrees);
    CHECK(rep.cond_ii_weak == rep.cond_ii_prime);
  }
}

TEST_CASE("restrict_global: the K^3 swap example") {
  Field q = Field::rationals();
  RestrictedAction ra = k3_restriction(q);
  CHECK(ra.admissible);
  const PartialAction& pa = ra.action;
  CHECK(pa.base().dim() == 2);
  CHECK(pa.domain(0).dim() == 2);
  CHECK(pa.domain(1).dim() == 1);  // coordinate 3 only
  // alpha_g is the identity there
  Vec f2 = pa.domain(1).basis_row(0);
  CHECK(pa.apply(1, f2) == f2);

  // restricting to the whole algebra recovers the global action
  GlobalAction beta = k3_swap_action(q);
  RestrictedAction whole = restrict_global(beta, Ideal::whole(beta.algebra()));
  CHECK(whole.admissible);
  CHECK(whole.action.domain(1).dim() == 3);

  // zero ideal: valid partial action, not admissible
  RestrictedAction zero = restrict_global(beta, Ideal::zero(beta.algebra()));
  CHECK_FALSE(zero.admissible);
  CHECK(zero.action.base().dim() == 0);
}

TEST_CASE("equivalence of partial actions") {
  Field q = Field::rationals();
  PartialAction pa = counter_action(q);

  AlgebraMorphism id{pa.base(), pa.base(), LinearMap::identity(q, 4)};
  CHECK(verify_equivalence(pa, pa, id));

  // a nontrivial self-equivalence: t -> t + 2u, u -> 3u, v -> 3v
  Mat m(q, 4, 4);
  m.at(0, 0) = Scalar::one(q);
  m.at(1, 1) = Scalar::one(q);
  m.at(1, 2) = Scalar::of(q, 2);
  m.at(2, 2) = Scalar::of(q, 3);
  m.at(3, 3) = Scalar::of(q, 3);
  AlgebraMorphism phi{pa.base(), pa.base(), LinearMap(4, 4, m)};
  REQUIRE(verify_morphism(phi).multiplicative);
  CHECK(verify_equivalence(pa, pa, phi));

  // scaling only u breaks the intertwining with the swap
  Mat bad(q, 4, 4);
  bad.at(0, 0) = Scalar::one(q);
  bad.at(1, 1) = Scalar::one(q);
  bad.at(2, 2) = Scalar::of(q, 3);
  bad.at(3, 3) = Scalar::one(q);
  AlgebraMorphism psi{pa.base(), pa.base(), LinearMap(4, 4, bad)};
  std::string w;
  CHECK_FALSE(verify_equivalence(pa, pa, psi, &w));
}

TEST_CASE("unit families") {
  Field q = Field::rationals();
  // global action on a unital algebra: 1_g = 1 throughout
  GlobalAction beta = k3_swap_action(q);
  UnitFamily uf = unit_family(beta.as_partial());
  REQUIRE(uf.complete);
  CHECK(uf.triviality_ok);
  for (const auto& u : uf.units) CHECK(*u == *beta.algebra().unit());

  // K^3 restriction: 1_g = e3 for g != 1
  RestrictedAction ra = k3_restriction(q);
  UnitFamily uf2 = unit_family(ra.action);
  REQUIRE(uf2.complete);
  CHECK(uf2.triviality_ok);
  CHECK(*uf2.units[1] == ra.action.base().basis_vec(1));

  // counterexample: span{u,v} has no unit
  UnitFamily uf3 = unit_family(counter_action(q));
  CHECK_FALSE(uf3.complete);
  CHECK(uf3.missing.size() == 1);
}

TEST_CASE("condition (X) on slices") {
  Field q = Field::rationals();

  // identity on a unital ideal always passes
  Algebra k2 = Algebra::product_field(q, 2);
  Subspace e1 = Subspace::span(q, 2, {k2.basis_vec(0)});
  LocalActionSlice ok = make_slice(k2, e1, e1, LinearMap::identity(q, 1));
  CHECK(condition_x_check(ok).holds);

  // T(3) slice: fails with the witness product e13 on the right-hand side
  LocalActionSlice t3 = t3_slice(q);
  ConditionX cx = condition_x_check(t3);
  REQUIRE_FALSE(cx.holds);
  CHECK(cx.a == 0);  // e11
  CHECK(cx.b == 1);  // e23, second basis vector of D_plus
  CHECK(cx.c == 4);  // e23
  CHECK(is_zero_vec(cx.lhs));
  CHECK(cx.rhs == t3.base.basis_vec(2));  // e13

  // counterexample slice: witness (t, u, t)
  PartialAction pa = counter_action(q);
  ConditionX cx2 = condition_x_check(slice_of(pa, 1));
  REQUIRE_FALSE(cx2.holds);
  CHECK(cx2.a == 1);
  CHECK(cx2.b == 0);
  CHECK(cx2.c == 1);
  CHECK(cx2.rhs == pa.base().basis_vec(2));  // u

  // a slice whose map is not multiplicative is refused
  Algebra t3a = Algebra::upper_triangular(q, 3);
  Subspace dm = Subspace::span(q, 6, {t3a.basis_vec(0)});
  Subspace dp = Subspace::span(q, 6, {t3a.basis_vec(2)});
  CHECK_THROWS_AS(make_slice(t3a, dm, dp, LinearMap::identity(q, 1)), Error);
}

TEST_CASE("equivalence is preserved under composition of the witnesses") {
  Field q = Field::rationals();
  PartialAction pa = counter_action(q);
  Mat m(q, 4, 4);
  m.at(0, 0) = Scalar::one(q);
  m.at(1, 1) = Scalar::one(q);
  m.at(1, 2) = Scalar::of(q, 5);
  m.at(2, 2) = Scalar::of(q, 2);
  m.at(3, 3) = Scalar::of(q, 2);
  AlgebraMorphism phi{pa.base(), pa.base(), LinearMap(4, 4, m)};
  REQUIRE(verify_equivalence(pa, pa, phi));
  // compose: still an equivalence; invert: still an equivalence
  AlgebraMorphism phi2{pa.base(), pa.base(), phi.map.then(phi.map)};
  CHECK(verify_equivalence(pa, pa, phi2));
  AlgebraMorphism inv{pa.base(), pa.base(), phi.map.inverse()};
  CHECK(verify_equivalence(pa, pa, inv));
}
