#include <random>

#include <benchmark/benchmark.h>

#include "pact/dsl.hpp"
#include "pact/envelope.hpp"
#include "pact/multiplier.hpp"
#include "pact/preps.hpp"

using namespace pact;

namespace {

Mat random_rational_matrix(std::size_t n, std::uint32_t seed) {
  Field q = Field::rationals();
  std::mt19937 rng(seed);
  Mat m(q, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m.at(i, j) = Scalar::of(q, static_cast<long>(rng() % 19) - 9,
                              static_cast<long>(rng() % 7) + 1);
  return m;
}

PartialAction counter_action() {
  Field q = Field::rationals();
  MulTable t(q, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    t.set_basis_product(0, i, unit_vec(q, 4, i));
    t.set_basis_product(i, 0, unit_vec(q, 4, i));
  }
  t.set_basis_product(1, 3, unit_vec(q, 4, 2));
  t.set_basis_product(3, 1, unit_vec(q, 4, 2));
  Algebra a(q, 4, std::move(t), unit_vec(q, 4, 0));
  Ideal iv = Ideal::generated(a, {a.basis_vec(3)});
  PartialActionData d;
  d.group = Group::cyclic(2);
  d.base = a;
  d.domains = {Subspace::full(q, 4), iv.space()};
  Mat swap(q, 2, 2);
  swap.at(0, 1) = Scalar::one(q);
  swap.at(1, 0) = Scalar::one(q);
  d.maps = {LinearMap::identity(q, 4), LinearMap(2, 2, swap)};
  return PartialAction::make(std::move(d));
}

}  // namespace

static void BM_EchelonRationals(benchmark::State& state) {
  Mat m = random_rational_matrix(static_cast<std::size_t>(state.range(0)), 99);
  for (auto _ : state) benchmark::DoNotOptimize(echelon(m));
}
BENCHMARK(BM_EchelonRationals)->Arg(8)->Arg(16)->Arg(24);

static void BM_MultiplierAlgebra(benchmark::State& state) {
  Algebra t = Algebra::upper_triangular(Field::rationals(),
                                        static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(multiplier_algebra(t));
}
BENCHMARK(BM_MultiplierAlgebra)->Arg(2)->Arg(3)->Arg(4);

static void BM_CrossedAssociativity(benchmark::State& state) {
  PartialAction pa = counter_action();
  CrossedProduct cp = CrossedProduct::build(pa);
  for (auto _ : state) benchmark::DoNotOptimize(cp.nonassoc_witness(1));
}
BENCHMARK(BM_CrossedAssociativity);

static void BM_ExelOracle(benchmark::State& state) {
  Group g = state.range(0) == 4 ? Group::klein_four()
                                : Group::cyclic(static_cast<std::size_t>(state.range(0)));
  ExelSemigroup s(g);
  for (auto _ : state) benchmark::DoNotOptimize(exel_oracle(g, s));
}
BENCHMARK(BM_ExelOracle)->Arg(2)->Arg(3)->Arg(4);

static void BM_KparIso(benchmark::State& state) {
  Field q = Field::rationals();
  Group g = Group::cyclic(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kpar_iso(q, g));
}
BENCHMARK(BM_KparIso)->Arg(2)->Arg(3)->Arg(4);

static void BM_IsoBis(benchmark::State& state) {
  Field q = Field::rationals();
  Group g = Group::cyclic(static_cast<std::size_t>(state.range(0)));
  std::vector<int> a;
  for (int e = 0; e + 1 < static_cast<int>(g.order()); ++e) a.push_back(e);
  ElementaryRepData erd = elementary_rep(q, GroupSubset(g, a));
  for (auto _ : state) benchmark::DoNotOptimize(iso_bis(erd));
}
BENCHMARK(BM_IsoBis)->Arg(3)->Arg(4)->Arg(5);

static void BM_BuildEnveloping(benchmark::State& state) {
  Field q = Field::rationals();
  Algebra b = Algebra::product_field(q, 3);
  Mat swap(q, 3, 3);
  swap.at(0, 1) = Scalar::one(q);
  swap.at(1, 0) = Scalar::one(q);
  swap.at(2, 2) = Scalar::one(q);
  GlobalActionData gd;
  gd.group = Group::cyclic(2);
  gd.algebra = b;
  gd.autos = {LinearMap::identity(q, 3), LinearMap(3, 3, swap)};
  GlobalAction beta = GlobalAction::make(std::move(gd));
  Ideal a(b, Subspace::span(q, 3, {unit_vec(q, 3, 0), unit_vec(q, 3, 2)}));
  PartialAction pa = restrict_global(beta, a).action;
  for (auto _ : state) benchmark::DoNotOptimize(build_enveloping(pa));
}
BENCHMARK(BM_BuildEnveloping);

static void BM_DslRun(benchmark::State& state) {
  const char* doc =
      "field rationals\n"
      "group g2 = cyclic 2\n"
      "algebra A = constants 4 { 2 4 -> 3:1 ; 4 2 -> 3:1 } unit e1\n"
      "ideal I = span(A; e3, e4)\n"
      "action ax on A by g2 { g: ideal = I, map = e3 -> e4, e4 -> e3 }\n"
      "cmd assoc ax expect false\n";
  dsl::SpecDocument parsed = dsl::parse_spec(doc);
  for (auto _ : state) benchmark::DoNotOptimize(dsl::run(parsed));
}
BENCHMARK(BM_DslRun);

BENCHMARK_MAIN();
