#include "pact/paction.hpp"

#include <sstream>

namespace pact {

namespace {

std::string pair_str(const Group& g, int a, int b) {
  return "(" + g.label(a) + "," + g.label(b) + ")";
}

// alpha_g on an ambient vector known to lie in D_{g^-1}
Vec apply_map(const PartialActionData& d, int g, const Vec& v) {
  const Subspace& dom = d.domains[d.group.inv(g)];
  const Subspace& cod = d.domains[g];
  return cod.from_coordinates(d.maps[g].apply(dom.coordinates(v)));
}

bool check_structural(const PartialActionData& d, PactionReport& rep) {
  const Group& g = d.group;
  const Algebra& a = d.base;
  bool ok = true;
  if (d.domains.size() != g.order() || d.maps.size() != g.order()) {
    rep.violations.push_back("per-element data size mismatch");
    return false;
  }
  for (std::size_t e = 0; e < g.order(); ++e) {
    int ge = static_cast<int>(e);
    // domains must be ideals
    try {
      Ideal check(a, d.domains[e]);
      (void)check;
    } catch (const Error& err) {
      rep.violations.push_back("D_" + g.label(ge) + " is not an ideal: " + err.what());
      ok = false;
      continue;
    }
    const Subspace& dom = d.domains[g.inv(ge)];
    const Subspace& cod = d.domains[e];
    if (d.maps[e].domain_dim() != dom.dim() || d.maps[e].codomain_dim() != cod.dim()) {
      rep.violations.push_back("alpha_" + g.label(ge) + " has wrong shape");
      ok = false;
      continue;
    }
    if (!d.maps[e].is_invertible()) {
      rep.violations.push_back("alpha_" + g.label(ge) + " is not bijective");
      ok = false;
      continue;
    }
    // multiplicative: alpha(xy) = alpha(x)alpha(y) on basis pairs of D_{g^-1}
    for (std::size_t r = 0; r < dom.dim() && ok; ++r)
      for (std::size_t s = 0; s < dom.dim(); ++s) {
        Vec x = dom.basis_row(r), y = dom.basis_row(s);
        Vec lhs = apply_map(d, ge, a.mul(x, y));
        Vec rhs = a.mul(apply_map(d, ge, x), apply_map(d, ge, y));
        if (!(lhs == rhs)) {
          rep.violations.push_back("alpha_" + g.label(ge) + " is not multiplicative");
          ok = false;
          break;
        }
      }
  }
  return ok;
}

}  // namespace

PactionReport verify_partial_action(const PartialActionData& d) {
  PactionReport rep;
  const Group& g = d.group;
  const Algebra& a = d.base;
  rep.structural = check_structural(d, rep);
  if (!rep.structural) return rep;

  // (i) D_1 = A and alpha_1 = id
  rep.cond_i = d.domains[g.identity()] == Subspace::full(a.field(), a.dim()) &&
               d.maps[g.identity()].table().is_identity();
  if (!rep.cond_i) rep.violations.push_back("(i) fails: D_1 != A or alpha_1 != id");

  rep.cond_ii_prime = true;
  rep.cond_iii_prime = true;
  rep.cond_ii_weak = true;
  rep.cond_iii_weak = true;
  for (std::size_t gi = 0; gi < g.order(); ++gi)
    for (std::size_t hi = 0; hi < g.order(); ++hi) {
      int ge = static_cast<int>(gi), he = static_cast<int>(hi);
      int gh = g.mul(ge, he);
      const Subspace& dgi = d.domains[g.inv(ge)];
      // (ii'): alpha_g(D_{g^-1} cap D_h) = D_g cap D_{gh}
      Subspace lhs_space = dgi.intersect(d.domains[he]);
      std::vector<Vec> imgs;
      for (std::size_t r = 0; r < lhs_space.dim(); ++r)
        imgs.push_back(apply_map(d, ge, lhs_space.basis_row(r)));
      Subspace img = Subspace::span(a.field(), a.dim(), imgs);
      Subspace rhs_space = d.domains[ge].intersect(d.domains[gh]);
      if (!(img == rhs_space)) {
        rep.cond_ii_prime = false;
        rep.violations.push_back("(ii') fails at " + pair_str(g, ge, he));
      }
      // (ii) weak: alpha_h^{-1}(D_h cap D_{g^-1}) <= D_{(gh)^-1}, with the
      // function inverse of alpha_h (it equals alpha_{h^-1} only once the
      // axioms hold)
      Subspace mid = d.domains[he].intersect(dgi);
      LinearMap alpha_h_inv = d.maps[he].inverse();
      const Subspace& dom_h = d.domains[g.inv(he)];
      std::vector<Vec> pre;
      for (std::size_t r = 0; r < mid.dim(); ++r)
        pre.push_back(dom_h.from_coordinates(
            alpha_h_inv.apply(d.domains[he].coordinates(mid.basis_row(r)))));
      Subspace pre_space = Subspace::span(a.field(), a.dim(), pre);
      bool weak_here = d.domains[g.inv(gh)].contains(pre_space);
      if (!weak_here) {
        rep.cond_ii_weak = false;
        rep.violations.push_back("(ii) fails at " + pair_str(g, ge, he));
      }
      // (iii'): alpha_g(alpha_h(x)) = alpha_{gh}(x) on D_{h^-1} cap D_{(gh)^-1}
      Subspace dom3 = d.domains[g.inv(he)].intersect(d.domains[g.inv(gh)]);
      for (std::size_t r = 0; r < dom3.dim(); ++r) {
        Vec x = dom3.basis_row(r);
        Vec ahx = apply_map(d, he, x);
        if (!d.domains[g.inv(ge)].contains(ahx)) {
          rep.cond_iii_prime = false;
          rep.violations.push_back("(iii') inapplicable at " + pair_str(g, ge, he) +
                                   ": alpha_h(x) escapes D_{g^-1}");
          continue;
        }
        if (!(apply_map(d, ge, ahx) == apply_map(d, gh, x))) {
          rep.cond_iii_prime = false;
          rep.violations.push_back("(iii') fails at " + pair_str(g, ge, he));
        }
      }
      // (iii) weak: same composition law on alpha_h^{-1}(D_h cap D_{g^-1}),
      // checked only where applicable
      if (weak_here)
        for (std::size_t r = 0; r < pre_space.dim(); ++r) {
          Vec x = pre_space.basis_row(r);
          Vec ahx = apply_map(d, he, x);
          if (!d.domains[g.inv(ge)].contains(ahx)) continue;
          if (!(apply_map(d, ge, ahx) == apply_map(d, gh, x))) {
            rep.cond_iii_weak = false;
            rep.violations.push_back("(iii) fails at " + pair_str(g, ge, he));
          }
        }
    }
  bool strong = rep.cond_i && rep.cond_ii_prime && rep.cond_iii_prime;
  bool weak = rep.cond_i && rep.cond_ii_weak && rep.cond_iii_weak;
  rep.weak_agrees = strong == weak;
  return rep;
}

PartialAction PartialAction::make(PartialActionData data) {
  PactionReport rep = verify_partial_action(data);
  if (!rep.valid()) {
    std::string msg = "invalid partial action";
    for (const auto& v : rep.violations) msg += "; " + v;
    throw Error(msg);
  }
  if (!rep.weak_agrees)
    throw Error("internal: (ii)/(iii) verdict disagrees with (ii')/(iii')");
  return PartialAction(std::move(data));
}

Vec PartialAction::apply(int g, const Vec& v) const { return apply_map(data_, g, v); }

GlobalActionReport verify_global_action(const GlobalActionData& d) {
  GlobalActionReport rep;
  const Group& g = d.group;
  const Algebra& b = d.algebra;
  rep.ok = true;
  if (d.autos.size() != g.order()) {
    rep.violations.push_back("per-element data size mismatch");
    rep.ok = false;
    return rep;
  }
  if (!d.autos[g.identity()].table().is_identity()) {
    rep.violations.push_back("beta_1 != id");
    rep.ok = false;
  }
  for (std::size_t e = 0; e < g.order(); ++e) {
    AlgebraMorphism m{b, b, d.autos[e]};
    MorphismReport mr = verify_isomorphism(m);
    if (!mr.isomorphism()) {
      rep.violations.push_back("beta_" + g.label(static_cast<int>(e)) +
                               " is not an automorphism: " + mr.witness);
      rep.ok = false;
    }
  }
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t c = 0; c < g.order(); ++c) {
      int ab = g.mul(static_cast<int>(a), static_cast<int>(c));
      if (!(d.autos[c].then(d.autos[a]) == d.autos[ab])) {
        rep.violations.push_back("beta_g beta_h != beta_{gh} at " +
                                 pair_str(g, static_cast<int>(a), static_cast<int>(c)));
        rep.ok = false;
      }
    }
  return rep;
}

GlobalAction GlobalAction::make(GlobalActionData data) {
  GlobalActionReport rep = verify_global_action(data);
  if (!rep.ok) {
    std::string msg = "invalid global action";
    for (const auto& v : rep.violations) msg += "; " + v;
    throw Error(msg);
  }
  return GlobalAction(std::move(data));
}

PartialAction GlobalAction::as_partial() const {
  PartialActionData d;
  d.group = data_.group;
  d.base = data_.algebra;
  std::size_t n = data_.group.order();
  Subspace full = Subspace::full(data_.algebra.field(), data_.algebra.dim());
  for (std::size_t e = 0; e < n; ++e) {
    d.domains.push_back(full);
    d.maps.push_back(data_.autos[e]);
  }
  return PartialAction::make(std::move(d));
}

RestrictedAction restrict_global(const GlobalAction& beta, const Ideal& a) {
  const Group& g = beta.group();
  const Algebra& b = beta.algebra();
  const Field& f = b.field();

  Algebra a_alg = a.as_algebra();
  PartialActionData d;
  d.group = g;
  d.base = a_alg;

  // subspaces of A in A-coordinates
  std::vector<Subspace> amb_domains;
  for (std::size_t e = 0; e < g.order(); ++e) {
    Subspace beta_a = beta.automorphism(static_cast<int>(e)).image_of(a.space());
    Subspace dg_amb = a.space().intersect(beta_a);
    amb_domains.push_back(dg_amb);
    std::vector<Vec> rows;
    for (std::size_t r = 0; r < dg_amb.dim(); ++r)
      rows.push_back(a.space().coordinates(dg_amb.basis_row(r)));
    d.domains.push_back(Subspace::span(f, a_alg.dim(), rows));
  }
  for (std::size_t e = 0; e < g.order(); ++e) {
    int ge = static_cast<int>(e);
    const Subspace& dom = d.domains[g.inv(ge)];
    const Subspace& cod = d.domains[e];
    Mat table(f, dom.dim(), cod.dim());
    for (std::size_t r = 0; r < dom.dim(); ++r) {
      Vec amb = a.space().from_coordinates(dom.from_coordinates(unit_vec(f, dom.dim(), r)));
      Vec img = beta.apply(ge, amb);
      table.set_row(r, cod.coordinates(a.space().coordinates(img)));
    }
    d.maps.push_back(LinearMap(dom.dim(), cod.dim(), std::move(table)));
  }

  RestrictedAction out{PartialAction::make(std::move(d)),
                       AlgebraMorphism{a_alg, b, LinearMap(a_alg.dim(), b.dim(), a.space().basis())},
                       false};
  // admissible iff the subalgebra generated by the beta-translates of A is B
  std::vector<Vec> gen;
  for (std::size_t e = 0; e < g.order(); ++e) {
    Subspace tr = beta.automorphism(static_cast<int>(e)).image_of(a.space());
    for (std::size_t r = 0; r < tr.dim(); ++r) gen.push_back(tr.basis_row(r));
  }
  Subspace closure = subalgebra_closure(b, Subspace::span(f, b.dim(), gen));
  out.admissible = closure.dim() == b.dim();
  return out;
}

bool verify_equivalence(const PartialAction& pa, const PartialAction& pb,
                        const AlgebraMorphism& phi, std::string* witness) {
  const Group& g = pa.group();
  if (!(pb.group() == g)) {
    if (witness) *witness = "different groups";
    return false;
  }
  MorphismReport mr = verify_isomorphism(phi);
  if (!mr.isomorphism()) {
    if (witness) *witness = "phi is not an isomorphism: " + mr.witness;
    return false;
  }
  for (std::size_t e = 0; e < g.order(); ++e) {
    int ge = static_cast<int>(e);
    if (!(phi.map.image_of(pa.domain(ge)) == pb.domain(ge))) {
      if (witness) *witness = "phi(D_" + g.label(ge) + ") != D'_" + g.label(ge);
      return false;
    }
    const Subspace& dom = pa.domain(g.inv(ge));
    for (std::size_t r = 0; r < dom.dim(); ++r) {
      Vec x = dom.basis_row(r);
      if (!(phi.map.apply(pa.apply(ge, x)) == pb.apply(ge, phi.map.apply(x)))) {
        if (witness)
          *witness = "alpha'_" + g.label(ge) + " o phi != phi o alpha_" + g.label(ge);
        return false;
      }
    }
  }
  return true;
}

UnitFamily unit_family(const PartialAction& pa) {
  const Group& g = pa.group();
  const Algebra& a = pa.base();
  UnitFamily out;
  out.complete = true;
  for (std::size_t e = 0; e < g.order(); ++e) {
    auto u = unit_of_ideal(pa.domain_ideal(static_cast<int>(e)));
    if (!u) {
      out.complete = false;
      out.missing.push_back("D_" + g.label(static_cast<int>(e)) + " has no unit");
    }
    out.units.push_back(std::move(u));
  }
  if (!out.complete) return out;
  out.triviality_ok = true;
  for (std::size_t gi = 0; gi < g.order(); ++gi)
    for (std::size_t hi = 0; hi < g.order(); ++hi) {
      int ge = static_cast<int>(gi), he = static_cast<int>(hi);
      Vec lhs = pa.apply(ge, a.mul(*out.units[g.inv(ge)], *out.units[he]));
      Vec rhs = a.mul(*out.units[ge], *out.units[g.mul(ge, he)]);
      if (!(lhs == rhs)) {
        out.triviality_ok = false;
        out.missing.push_back("alpha_g(1_{g^-1} 1_h) != 1_g 1_{gh} at " + pair_str(g, ge, he));
      }
    }
  return out;
}

LocalActionSlice make_slice(const Algebra& base, const Subspace& d_minus,
                            const Subspace& d_plus, const LinearMap& alpha) {
  LocalActionSlice s{base, Ideal(base, d_minus), Ideal(base, d_plus), alpha};
  if (alpha.domain_dim() != d_minus.dim() || alpha.codomain_dim() != d_plus.dim())
    throw Error("slice: alpha shape mismatch");
  if (!alpha.is_invertible()) throw Error("slice: alpha is not bijective");
  // alpha must be an isomorphism of algebras D_minus -> D_plus
  for (std::size_t r = 0; r < d_minus.dim(); ++r)
    for (std::size_t t = 0; t < d_minus.dim(); ++t) {
      Vec x = d_minus.basis_row(r), y = d_minus.basis_row(t);
      Vec lhs = d_plus.from_coordinates(alpha.apply(d_minus.coordinates(base.mul(x, y))));
      Vec rhs = base.mul(d_plus.from_coordinates(alpha.apply(d_minus.coordinates(x))),
                         d_plus.from_coordinates(alpha.apply(d_minus.coordinates(y))));
      if (!(lhs == rhs)) throw Error("slice: alpha is not multiplicative");
    }
  return s;
}

LocalActionSlice slice_of(const PartialAction& pa, int g) {
  return LocalActionSlice{pa.base(), pa.domain_ideal(pa.group().inv(g)),
                          pa.domain_ideal(g), pa.map(g)};
}

ConditionX condition_x_check(const LocalActionSlice& slice) {
  const Algebra& alg = slice.base;
  const Subspace& dm = slice.d_minus.space();
  const Subspace& dp = slice.d_plus.space();
  LinearMap inv = slice.alpha.inverse();
  auto fwd = [&](const Vec& v) {
    return dp.from_coordinates(slice.alpha.apply(dm.coordinates(v)));
  };
  auto bwd = [&](const Vec& v) {
    return dm.from_coordinates(inv.apply(dp.coordinates(v)));
  };
  ConditionX out;
  out.holds = true;
  for (std::size_t ai = 0; ai < alg.dim(); ++ai)
    for (std::size_t bi = 0; bi < dp.dim(); ++bi)
      for (std::size_t ci = 0; ci < alg.dim(); ++ci) {
        Vec a = alg.basis_vec(ai);
        Vec b = dp.basis_row(bi);
        Vec c = alg.basis_vec(ci);
        Vec lhs = fwd(alg.mul(bwd(alg.mul(a, b)), c));
        Vec rhs = alg.mul(a, fwd(alg.mul(bwd(b), c)));
        if (!(lhs == rhs)) {
          out.holds = false;
          out.a = ai;
          out.b = bi;
          out.c = ci;
          out.lhs = lhs;
          out.rhs = rhs;
          out.witness = "condition (X) fails at (" + alg.basis_name(ai) + ", D-basis " +
                        std::to_string(bi + 1) + ", " + alg.basis_name(ci) + "): lhs " +
                        vec_str(lhs) + " != rhs " + vec_str(rhs);
          return out;
        }
      }
  return out;
}

}  // namespace pact
