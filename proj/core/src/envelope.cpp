#include "pact/envelope.hpp"

namespace pact {

bool has_enveloping(const PartialAction& pa) {
  if (!pa.base().is_unital()) throw Error("has_enveloping: base algebra must be unital");
  return unit_family(pa).complete;
}

EnvelopeReport verify_enveloping(const PartialAction& pa, const GlobalAction& beta,
                                 const AlgebraMorphism& embed) {
  EnvelopeReport rep;
  const Group& g = pa.group();
  const Algebra& b = beta.algebra();
  if (!(beta.group() == g)) {
    rep.violations.push_back("group mismatch");
    return rep;
  }

  MorphismReport mr = verify_morphism(embed);
  rep.embed_ok = mr.multiplicative && mr.injective;
  if (!rep.embed_ok)
    rep.violations.push_back("embedding not injective multiplicative: " + mr.witness);

  Subspace phi_a = embed.map.image();
  rep.image_ideal = true;
  for (std::size_t i = 0; i < b.dim() && rep.image_ideal; ++i)
    for (std::size_t r = 0; r < phi_a.dim(); ++r) {
      Vec x = phi_a.basis_row(r);
      if (!phi_a.contains(b.mul(b.basis_vec(i), x)) ||
          !phi_a.contains(b.mul(x, b.basis_vec(i)))) {
        rep.image_ideal = false;
        rep.violations.push_back("phi(A) is not an ideal of B");
        break;
      }
    }

  rep.cond_i = true;
  rep.cond_ii = true;
  for (std::size_t e = 0; e < g.order(); ++e) {
    int ge = static_cast<int>(e);
    Subspace beta_phi_a = beta.automorphism(ge).image_of(phi_a);
    Subspace rhs = phi_a.intersect(beta_phi_a);
    Subspace lhs = embed.map.image_of(pa.domain(ge));
    if (!(lhs == rhs)) {
      rep.cond_i = false;
      rep.violations.push_back("(i') fails at g = " + g.label(ge));
    }
    const Subspace& dom = pa.domain(g.inv(ge));
    for (std::size_t r = 0; r < dom.dim(); ++r) {
      Vec x = dom.basis_row(r);
      if (!(embed.map.apply(pa.apply(ge, x)) == beta.apply(ge, embed.map.apply(x)))) {
        rep.cond_ii = false;
        rep.violations.push_back("(ii') fails at g = " + g.label(ge));
        break;
      }
    }
  }

  std::vector<Vec> gen;
  for (std::size_t e = 0; e < g.order(); ++e) {
    Subspace tr = beta.automorphism(static_cast<int>(e)).image_of(phi_a);
    for (std::size_t r = 0; r < tr.dim(); ++r) gen.push_back(tr.basis_row(r));
  }
  Subspace closure = subalgebra_closure(b, Subspace::span(b.field(), b.dim(), gen));
  rep.cond_iii = closure.dim() == b.dim();
  if (!rep.cond_iii)
    rep.violations.push_back("(iii') fails: translates of phi(A) generate a proper subalgebra");
  return rep;
}

EnvelopingAction build_enveloping(const PartialAction& pa) {
  const Group& g = pa.group();
  const Algebra& a = pa.base();
  const Field& f = a.field();
  std::size_t n = g.order(), d = a.dim();

  UnitFamily uf = unit_family(pa);
  if (!uf.complete) {
    std::string msg = "build_enveloping: criterion fails";
    for (const auto& m : uf.missing) msg += "; " + m;
    throw Error(msg);
  }
  if (!uf.triviality_ok)
    throw Error("build_enveloping: unit family violates alpha_g(1_{g^-1} 1_h) = 1_g 1_{gh}");

  // independent check of alpha_{h^-1 g}(a 1_{g^-1 h}) = alpha_{h^-1}(alpha_g(a) 1_h)
  for (std::size_t gi = 0; gi < n; ++gi)
    for (std::size_t hi = 0; hi < n; ++hi) {
      int ge = static_cast<int>(gi), he = static_cast<int>(hi);
      int hg = g.mul(g.inv(he), ge);
      const Subspace& dom = pa.domain(g.inv(ge));
      for (std::size_t r = 0; r < dom.dim(); ++r) {
        Vec x = dom.basis_row(r);
        Vec lhs = pa.apply(hg, a.mul(x, *uf.units[g.mul(g.inv(ge), he)]));
        Vec rhs = pa.apply(g.inv(he), a.mul(pa.apply(ge, x), *uf.units[he]));
        if (!(lhs == rhs))
          throw Error("build_enveloping: identity (alfa) fails at (" + g.label(ge) + "," +
                      g.label(he) + ")");
      }
    }

  Algebra func = Algebra::function_algebra(a, n);

  // phi(a)|_h = alpha_{h^-1}(a 1_h)
  Mat phi_table(f, d, func.dim());
  for (std::size_t i = 0; i < d; ++i) {
    Vec img = zero_vec(f, func.dim());
    for (std::size_t h = 0; h < n; ++h) {
      Vec block =
          pa.apply(g.inv(static_cast<int>(h)), a.mul(a.basis_vec(i), *uf.units[h]));
      for (std::size_t k = 0; k < d; ++k) img[h * d + k] = block[k];
    }
    phi_table.set_row(i, img);
  }
  LinearMap phi_into_func(d, func.dim(), phi_table);

  // beta_g permutes blocks: beta_g(f)|_h = f(g^-1 h), so block h feeds block gh
  auto beta_on_func = [&](int ge) {
    Mat t(f, func.dim(), func.dim());
    for (std::size_t h = 0; h < n; ++h) {
      int dest = g.mul(ge, static_cast<int>(h));
      for (std::size_t k = 0; k < d; ++k)
        t.at(h * d + k, static_cast<std::size_t>(dest) * d + k) = Scalar::one(f);
    }
    return LinearMap(func.dim(), func.dim(), t);
  };

  std::vector<Vec> gen;
  for (std::size_t e = 0; e < n; ++e) {
    LinearMap be = beta_on_func(static_cast<int>(e));
    for (std::size_t i = 0; i < d; ++i)
      gen.push_back(be.apply(phi_into_func.apply(a.basis_vec(i))));
  }
  Subspace b_space = subalgebra_closure(func, Subspace::span(f, func.dim(), gen));

  std::vector<std::string> names;
  for (std::size_t r = 0; r < b_space.dim(); ++r) names.push_back("b" + std::to_string(r + 1));
  Algebra b_alg = subalgebra_on(func, b_space, std::move(names));
  if (!b_alg.is_unital())
    throw Error("build_enveloping: ambient algebra has no unit");

  GlobalActionData gd;
  gd.group = g;
  gd.algebra = b_alg;
  for (std::size_t e = 0; e < n; ++e) {
    LinearMap be = beta_on_func(static_cast<int>(e));
    Mat t(f, b_space.dim(), b_space.dim());
    for (std::size_t r = 0; r < b_space.dim(); ++r) {
      Vec img = be.apply(b_space.basis_row(r));
      auto coords = b_space.try_coordinates(img);
      if (!coords) throw Error("build_enveloping: B is not beta-invariant");
      t.set_row(r, *coords);
    }
    gd.autos.push_back(LinearMap(b_space.dim(), b_space.dim(), std::move(t)));
  }
  GlobalAction beta = GlobalAction::make(std::move(gd));

  Mat emb_table(f, d, b_space.dim());
  for (std::size_t i = 0; i < d; ++i)
    emb_table.set_row(i, b_space.coordinates(phi_into_func.apply(a.basis_vec(i))));
  AlgebraMorphism embed{a, b_alg, LinearMap(d, b_space.dim(), std::move(emb_table))};

  EnvelopingAction out{pa, beta, embed};
  EnvelopeReport rep = verify_enveloping(pa, beta, embed);
  if (!rep.ok()) {
    std::string msg = "build_enveloping: verification failed";
    for (const auto& v : rep.violations) msg += "; " + v;
    throw Error(msg);
  }

  // proof identities: beta_g(phi(x)) phi(y) = phi(alpha_g(x 1_{g^-1}) y)
  for (std::size_t e = 0; e < n; ++e) {
    int ge = static_cast<int>(e);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        Vec lhs = b_alg.mul(beta.apply(ge, embed.map.apply(a.basis_vec(i))),
                            embed.map.apply(a.basis_vec(j)));
        Vec inner = a.mul(pa.apply(ge, a.mul(a.basis_vec(i), *uf.units[g.inv(ge)])),
                          a.basis_vec(j));
        if (!(lhs == embed.map.apply(inner)))
          throw Error("build_enveloping: ideal identity fails");
      }
  }
  return out;
}

AlgebraMorphism compare_envelopings(const PartialAction& pa, const EnvelopingAction& e1,
                                    const EnvelopingAction& e2) {
  const Group& g = pa.group();
  const Algebra& a = pa.base();
  const Algebra& b1 = e1.ambient.algebra();
  const Algebra& b2 = e2.ambient.algebra();
  const Field& f = a.field();

  std::vector<Vec> v1, v2;
  for (std::size_t e = 0; e < g.order(); ++e)
    for (std::size_t i = 0; i < a.dim(); ++i) {
      v1.push_back(e1.ambient.apply(static_cast<int>(e), e1.embed.map.apply(a.basis_vec(i))));
      v2.push_back(e2.ambient.apply(static_cast<int>(e), e2.embed.map.apply(a.basis_vec(i))));
    }
  Mat m1 = Mat::from_rows(f, b1.dim(), v1);
  Mat m2 = Mat::from_rows(f, b2.dim(), v2);
  if (rank(m1) != b1.dim())
    throw Error("compare_envelopings: translates do not span B1 (not admissible)");
  auto t = solve_columns(m1, m2);
  if (!t)
    throw Error("compare_envelopings: map is not well defined (uniqueness theorem violated)");
  AlgebraMorphism phi{b1, b2, LinearMap(b1.dim(), b2.dim(), *t)};
  MorphismReport rep = verify_isomorphism(phi);
  if (!rep.isomorphism())
    throw Error("compare_envelopings: comparison map is not an isomorphism: " + rep.witness);
  for (std::size_t e = 0; e < g.order(); ++e) {
    int ge = static_cast<int>(e);
    if (!(e1.ambient.automorphism(ge).then(phi.map) ==
          phi.map.then(e2.ambient.automorphism(ge))))
      throw Error("compare_envelopings: map is not equivariant");
  }
  if (!(e1.embed.map.then(phi.map) == e2.embed.map))
    throw Error("compare_envelopings: map does not intertwine the embeddings");
  return phi;
}

CrossedEmbedding embed_crossed(const PartialAction& pa, const EnvelopingAction& e) {
  CrossedProduct cpa = CrossedProduct::build(pa);
  CrossedProduct cpb = CrossedProduct::build(e.ambient.as_partial());
  const Field& f = cpa.field();
  Mat table(f, cpa.dim(), cpb.dim());
  for (std::size_t x = 0; x < cpa.dim(); ++x) {
    auto [ge, i] = cpa.label(x);
    Vec amb = pa.domain(ge).basis_row(i);
    table.set_row(x, cpb.delta_vec(ge, e.embed.map.apply(amb)));
  }
  CrossedEmbedding out{cpa, cpb, LinearMap(cpa.dim(), cpb.dim(), std::move(table)), false,
                       false};
  out.injective = rank(out.map.table()) == cpa.dim();
  out.multiplicative = true;
  for (std::size_t x = 0; x < cpa.dim() && out.multiplicative; ++x)
    for (std::size_t y = 0; y < cpa.dim(); ++y) {
      Vec lhs = out.map.apply(cpa.table().basis_product(x, y));
      Vec rhs = cpb.mul(out.map.apply(unit_vec(f, cpa.dim(), x)),
                        out.map.apply(unit_vec(f, cpa.dim(), y)));
      if (!(lhs == rhs)) {
        out.multiplicative = false;
        break;
      }
    }
  return out;
}

MoritaContext morita_context(const PartialAction& pa, const EnvelopingAction& e) {
  if (!pa.base().is_unital()) throw Error("morita_context: base must be unital");
  if (!e.ambient.algebra().is_unital()) throw Error("morita_context: ambient must be unital");
  const Group& g = pa.group();
  const Field& f = e.ambient.algebra().field();

  MoritaContext out{embed_crossed(pa, e), Subspace(), Subspace(), false, false,
                    false, false, false, false, false};
  const CrossedProduct& cpb = out.emb.target;

  Subspace phi_a = e.embed.map.image();
  std::vector<Vec> m_rows, n_rows;
  for (std::size_t ge = 0; ge < g.order(); ++ge) {
    Subspace beta_phi_a = e.ambient.automorphism(static_cast<int>(ge)).image_of(phi_a);
    for (std::size_t r = 0; r < phi_a.dim(); ++r)
      m_rows.push_back(cpb.delta_vec(static_cast<int>(ge), phi_a.basis_row(r)));
    for (std::size_t r = 0; r < beta_phi_a.dim(); ++r)
      n_rows.push_back(cpb.delta_vec(static_cast<int>(ge), beta_phi_a.basis_row(r)));
  }
  out.m = Subspace::span(f, cpb.dim(), m_rows);
  out.n = Subspace::span(f, cpb.dim(), n_rows);

  auto closed_under = [&](const Subspace& s, const Subspace& by, bool left) {
    for (std::size_t r = 0; r < s.dim(); ++r)
      for (std::size_t t = 0; t < by.dim(); ++t) {
        Vec p = left ? cpb.mul(by.basis_row(t), s.basis_row(r))
                     : cpb.mul(s.basis_row(r), by.basis_row(t));
        if (!s.contains(p)) return false;
      }
    return true;
  };
  Subspace full = Subspace::full(f, cpb.dim());
  out.m_right_ideal = closed_under(out.m, full, false);
  out.n_left_ideal = closed_under(out.n, full, true);

  Subspace r_image = out.emb.map.image();
  out.r_m_closed = closed_under(out.m, r_image, true);
  out.n_r_closed = closed_under(out.n, r_image, false);

  std::vector<Vec> mn, nm;
  for (std::size_t r = 0; r < out.m.dim(); ++r)
    for (std::size_t t = 0; t < out.n.dim(); ++t) {
      mn.push_back(cpb.mul(out.m.basis_row(r), out.n.basis_row(t)));
      nm.push_back(cpb.mul(out.n.basis_row(t), out.m.basis_row(r)));
    }
  out.mn_equals_r = Subspace::span(f, cpb.dim(), mn) == r_image;
  out.nm_equals_rp = Subspace::span(f, cpb.dim(), nm).dim() == cpb.dim();

  // tau(x (x) x') y = x tau'(x' (x) y) and tau'(x' (x) x) y' = x' tau(x (x) y')
  out.compat = true;
  for (std::size_t r = 0; r < out.m.dim() && out.compat; ++r)
    for (std::size_t t = 0; t < out.n.dim() && out.compat; ++t) {
      Vec x = out.m.basis_row(r), xp = out.n.basis_row(t);
      for (std::size_t s = 0; s < out.m.dim(); ++s) {
        Vec y = out.m.basis_row(s);
        if (!(cpb.mul(cpb.mul(x, xp), y) == cpb.mul(x, cpb.mul(xp, y)))) {
          out.compat = false;
          break;
        }
      }
      for (std::size_t s = 0; s < out.n.dim() && out.compat; ++s) {
        Vec yp = out.n.basis_row(s);
        if (!(cpb.mul(cpb.mul(xp, x), yp) == cpb.mul(xp, cpb.mul(x, yp)))) {
          out.compat = false;
          break;
        }
      }
    }
  return out;
}

}  // namespace pact
