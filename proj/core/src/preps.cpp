#include "pact/preps.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace pact {

PrepReport verify_partial_rep(const PartialRep& pi) {
  PrepReport rep;
  const Group& g = pi.group;
  const Algebra& b = pi.target;
  if (!b.is_unital()) {
    rep.witness = "target is not unital";
    return rep;
  }
  if (pi.images.size() != g.order()) {
    rep.witness = "image count mismatch";
    return rep;
  }
  if (!(pi.images[g.identity()] == *b.unit())) {
    rep.witness = "pi(1) != 1";
    return rep;
  }
  for (std::size_t gi = 0; gi < g.order(); ++gi)
    for (std::size_t hi = 0; hi < g.order(); ++hi) {
      int ge = static_cast<int>(gi), he = static_cast<int>(hi);
      const Vec& pg = pi.images[ge];
      const Vec& ph = pi.images[he];
      const Vec& phinv = pi.images[g.inv(he)];
      const Vec& pginv = pi.images[g.inv(ge)];
      const Vec& pgh = pi.images[g.mul(ge, he)];
      if (!(b.mul(b.mul(pg, ph), phinv) == b.mul(pgh, phinv))) {
        rep.witness = "pi(g)pi(h)pi(h^-1) != pi(gh)pi(h^-1) at (" + g.label(ge) + "," +
                      g.label(he) + ")";
        return rep;
      }
      if (!(b.mul(b.mul(pginv, pg), ph) == b.mul(pginv, pgh))) {
        rep.witness = "pi(g^-1)pi(g)pi(h) != pi(g^-1)pi(gh) at (" + g.label(ge) + "," +
                      g.label(he) + ")";
        return rep;
      }
    }
  rep.ok = true;
  return rep;
}

EpsilonFamily epsilon_family(const PartialRep& pi) {
  const Group& g = pi.group;
  const Algebra& b = pi.target;
  EpsilonFamily out;
  for (std::size_t e = 0; e < g.order(); ++e)
    out.eps.push_back(b.mul(pi.images[e], pi.images[g.inv(static_cast<int>(e))]));
  out.idempotent = true;
  out.commuting = true;
  out.one_star = true;
  for (std::size_t e = 0; e < g.order(); ++e)
    if (!(b.mul(out.eps[e], out.eps[e]) == out.eps[e])) out.idempotent = false;
  for (std::size_t x = 0; x < g.order(); ++x)
    for (std::size_t y = x + 1; y < g.order(); ++y)
      if (!(b.mul(out.eps[x], out.eps[y]) == b.mul(out.eps[y], out.eps[x])))
        out.commuting = false;
  for (std::size_t gi = 0; gi < g.order(); ++gi)
    for (std::size_t hi = 0; hi < g.order(); ++hi) {
      int ge = static_cast<int>(gi), he = static_cast<int>(hi);
      if (!(b.mul(pi.images[ge], out.eps[he]) ==
            b.mul(out.eps[g.mul(ge, he)], pi.images[ge])))
        out.one_star = false;
      if (!(b.mul(out.eps[he], pi.images[ge]) ==
            b.mul(pi.images[ge], out.eps[g.mul(g.inv(ge), he)])))
        out.one_star = false;
    }
  return out;
}

InducedAction induced_action(const PartialRep& pi) {
  PrepReport pr = verify_partial_rep(pi);
  if (!pr.ok) throw Error("induced_action: not a partial representation: " + pr.witness);
  EpsilonFamily ef = epsilon_family(pi);
  if (!ef.ok()) throw Error("induced_action: epsilon family checks failed");

  const Group& g = pi.group;
  const Algebra& b = pi.target;
  const Field& f = b.field();

  Subspace span_eps = Subspace::span(f, b.dim(), ef.eps);
  Subspace a_space = subalgebra_closure(b, span_eps);
  Algebra a = subalgebra_on(b, a_space);

  LinearMap include(a.dim(), b.dim(), a_space.basis());

  std::vector<Vec> eps_in_a;
  for (const auto& e : ef.eps) eps_in_a.push_back(a_space.coordinates(e));

  PartialActionData d;
  d.group = g;
  d.base = a;
  for (std::size_t e = 0; e < g.order(); ++e) {
    std::vector<Vec> rows;
    for (std::size_t r = 0; r < a.dim(); ++r)
      rows.push_back(a.mul(eps_in_a[e], a.basis_vec(r)));
    d.domains.push_back(Subspace::span(f, a.dim(), rows));
  }
  for (std::size_t e = 0; e < g.order(); ++e) {
    int ge = static_cast<int>(e);
    const Subspace& dom = d.domains[g.inv(ge)];
    const Subspace& cod = d.domains[e];
    Mat t(f, dom.dim(), cod.dim());
    for (std::size_t r = 0; r < dom.dim(); ++r) {
      Vec amb = a_space.from_coordinates(dom.from_coordinates(unit_vec(f, dom.dim(), r)));
      Vec img = b.mul(b.mul(pi.images[ge], amb), pi.images[g.inv(ge)]);
      t.set_row(r, cod.coordinates(a_space.coordinates(img)));
    }
    d.maps.push_back(LinearMap(dom.dim(), cod.dim(), std::move(t)));
  }
  return InducedAction{PartialAction::make(std::move(d)), b, include, std::move(eps_in_a)};
}

PartialRep pi_alpha(const PartialAction& pa, const CrossedProduct& cp) {
  UnitFamily uf = unit_family(pa);
  if (!uf.complete) {
    std::string msg = "pi_alpha: unit family incomplete";
    for (const auto& m : uf.missing) msg += "; " + m;
    throw Error(msg);
  }
  Algebra target = cp.as_algebra();  // refuses a non-associative crossed product
  PartialRep pi;
  pi.group = pa.group();
  pi.target = target;
  for (std::size_t e = 0; e < pa.group().order(); ++e)
    pi.images.push_back(cp.delta_vec(static_cast<int>(e), *uf.units[e]));
  PrepReport rep = verify_partial_rep(pi);
  if (!rep.ok) throw Error("pi_alpha: laws fail: " + rep.witness);
  return pi;
}

PartialRep pi_alpha(const PartialAction& pa) {
  return pi_alpha(pa, CrossedProduct::build(pa));
}

PhiAlpha phi_alpha_map(const PartialAction& pa) {
  const Group& g = pa.group();
  const Algebra& a = pa.base();
  const Field& f = a.field();

  CrossedProduct cp = CrossedProduct::build(pa);
  PartialRep pia = pi_alpha(pa, cp);
  InducedAction ind = induced_action(pia);
  const Algebra& ap = ind.action.base();

  // A' lives inside A d_1: block-1 coordinates are exactly A coordinates
  Mat phi_table(f, ap.dim(), a.dim());
  for (std::size_t r = 0; r < ap.dim(); ++r) {
    Vec in_cp = ind.include.apply(ap.basis_vec(r));
    Vec amb = zero_vec(f, a.dim());
    std::size_t off = cp.offset(g.identity());
    for (std::size_t k = 0; k < a.dim(); ++k) amb[k] = in_cp[off + k];
    // sanity: nothing outside block 1
    Vec back = cp.delta_vec(g.identity(), amb);
    if (!(back == in_cp)) throw Error("phi_alpha: A' escapes A d_1");
    phi_table.set_row(r, amb);
  }
  PhiAlpha out{ind, ap, AlgebraMorphism{ap, a, LinearMap(ap.dim(), a.dim(), phi_table)},
               false, false, false};
  MorphismReport mr = verify_morphism(out.phi);
  if (!mr.multiplicative || !mr.injective)
    throw Error("phi_alpha: not a monomorphism: " + mr.witness);

  out.intertwines = true;
  for (std::size_t e = 0; e < g.order() && out.intertwines; ++e) {
    int ge = static_cast<int>(e);
    const Subspace& dom = ind.action.domain(g.inv(ge));
    for (std::size_t r = 0; r < dom.dim(); ++r) {
      Vec x = dom.basis_row(r);
      Vec lhs = out.phi.map.apply(ind.action.apply(ge, x));
      Vec phix = out.phi.map.apply(x);
      if (!pa.domain(g.inv(ge)).contains(phix)) {
        out.intertwines = false;
        break;
      }
      if (!(lhs == pa.apply(ge, phix))) {
        out.intertwines = false;
        break;
      }
    }
  }

  UnitFamily uf = unit_family(pa);
  Subspace unit_span =
      subalgebra_closure(a, Subspace::span(f, a.dim(), [&] {
                           std::vector<Vec> v;
                           for (const auto& u : uf.units) v.push_back(*u);
                           return v;
                         }()));
  out.units_generate = unit_span.dim() == a.dim();
  if (out.units_generate && out.intertwines)
    out.equivalence = verify_equivalence(ind.action, pa, out.phi);
  return out;
}

PhiPi phi_pi(const PartialRep& pi, const InducedAction& ind) {
  const Group& g = pi.group;
  const Algebra& b = pi.target;
  const Field& f = b.field();
  CrossedProduct cp = CrossedProduct::build(ind.action);

  Mat table(f, cp.dim(), b.dim());
  for (std::size_t x = 0; x < cp.dim(); ++x) {
    auto [ge, i] = cp.label(x);
    Vec amb = ind.include.apply(ind.action.domain(ge).basis_row(i));
    table.set_row(x, b.mul(amb, pi.images[ge]));
  }
  PhiPi out{cp, LinearMap(cp.dim(), b.dim(), std::move(table)), false, false, false};

  out.multiplicative = true;
  for (std::size_t x = 0; x < cp.dim() && out.multiplicative; ++x)
    for (std::size_t y = 0; y < cp.dim(); ++y) {
      Vec lhs = out.map.apply(cp.table().basis_product(x, y));
      Vec rhs = b.mul(out.map.apply(unit_vec(f, cp.dim(), x)),
                      out.map.apply(unit_vec(f, cp.dim(), y)));
      if (!(lhs == rhs)) {
        out.multiplicative = false;
        break;
      }
    }

  out.composes_to_pi = true;
  for (std::size_t e = 0; e < g.order(); ++e) {
    Vec eps_delta = cp.delta_vec(static_cast<int>(e), ind.eps_in_a[e]);
    if (!(out.map.apply(eps_delta) == pi.images[e])) {
      out.composes_to_pi = false;
      break;
    }
  }
  out.bijective = cp.dim() == b.dim() && rank(out.map.table()) == cp.dim();
  return out;
}

ExpectationResult expectation_injectivity(const CrossedProduct& cp, const LinearMap& phi,
                                          const Algebra& target, const LinearMap& e) {
  const PartialAction& pa = cp.action();
  const Group& g = pa.group();
  const Field& f = cp.field();
  ExpectationResult out;

  for (std::size_t ge = 0; ge < g.order(); ++ge) {
    Annihilators ann = annihilators(pa.domain_ideal(static_cast<int>(ge)).as_algebra());
    if (!ann.right_nondegenerate) {
      out.why_not = "right annihilator of D_" + g.label(static_cast<int>(ge)) +
                    " in itself is nonzero";
      return out;
    }
  }
  // phi restricted to A = A d_1 must be injective
  std::vector<Vec> a_rows;
  const Subspace& d1 = pa.domain(g.identity());
  for (std::size_t r = 0; r < d1.dim(); ++r)
    a_rows.push_back(phi.apply(cp.delta_vec(g.identity(), d1.basis_row(r))));
  if (rank(Mat::from_rows(f, target.dim(), a_rows)) != d1.dim()) {
    out.why_not = "phi is not injective on A";
    return out;
  }
  // E(phi(a d_g)) = phi(a d_g) for g = 1 and 0 otherwise
  for (std::size_t ge = 0; ge < g.order(); ++ge) {
    const Subspace& dg = pa.domain(static_cast<int>(ge));
    for (std::size_t r = 0; r < dg.dim(); ++r) {
      Vec img = phi.apply(cp.delta_vec(static_cast<int>(ge), dg.basis_row(r)));
      Vec expected = (static_cast<int>(ge) == g.identity()) ? img : zero_vec(f, target.dim());
      if (!(e.apply(img) == expected)) {
        out.why_not = "E fails the expectation property at g = " + g.label(static_cast<int>(ge));
        return out;
      }
    }
  }
  out.applicable = true;
  out.injective = true;
  if (rank(phi.table()) != cp.dim())
    throw Error("expectation_injectivity: criterion asserts injectivity but rank drops");
  return out;
}

ExelSemigroup::ExelSemigroup(const Group& g) : g_(g) {
  std::size_t n = g.order();
  if (n > 6) throw Error("exel_semigroup: |G| <= 6 required");
  for (int ge = 0; ge < static_cast<int>(n); ++ge) {
    std::uint32_t required = (1u << g.identity()) | (1u << ge);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
      if ((mask & required) == required) elems_.emplace_back(mask, ge);
  }
}

std::size_t ExelSemigroup::index_of(std::uint32_t mask, int g) const {
  for (std::size_t i = 0; i < elems_.size(); ++i)
    if (elems_[i].first == mask && elems_[i].second == g) return i;
  throw Error("exel_semigroup: element not found");
}

std::size_t ExelSemigroup::mul(std::size_t a, std::size_t b) const {
  auto [ea, ga] = elems_[a];
  auto [eb, gb] = elems_[b];
  std::uint32_t translated = 0;
  for (std::size_t h = 0; h < g_.order(); ++h)
    if (eb & (1u << h)) translated |= 1u << g_.mul(ga, static_cast<int>(h));
  return index_of(ea | translated, g_.mul(ga, gb));
}

std::size_t ExelSemigroup::generator(int g) const {
  return index_of((1u << g_.identity()) | (1u << g), g);
}

std::size_t ExelSemigroup::identity() const { return generator(g_.identity()); }

std::string ExelSemigroup::label(std::size_t idx) const {
  auto [mask, ge] = elems_[idx];
  std::string s = "({";
  bool first = true;
  for (std::size_t h = 0; h < g_.order(); ++h)
    if (mask & (1u << h)) {
      if (!first) s += ",";
      s += g_.label(static_cast<int>(h));
      first = false;
    }
  s += "}," + g_.label(ge) + ")";
  return s;
}

ExelSemigroup exel_semigroup(const Group& g) { return ExelSemigroup(g); }

Algebra kpar_algebra(const Field& f, const ExelSemigroup& s) {
  std::size_t d = s.size();
  MulTable t(f, d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      t.set_basis_product(a, b, unit_vec(f, d, s.mul(a, b)));
  std::vector<std::string> names;
  for (std::size_t a = 0; a < d; ++a) names.push_back(s.label(a));
  return Algebra(f, d, std::move(t), unit_vec(f, d, s.identity()), std::move(names));
}

namespace {

using Word = std::vector<std::uint8_t>;

struct UnionFind {
  std::vector<std::size_t> parent;
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

ExelOracle exel_oracle(const Group& g, const ExelSemigroup& s) {
  std::size_t n = g.order();
  if (n > 4) throw Error("exel_oracle: |G| <= 4 required");

  // The defining relations, applied in place as moves at a position:
  //   a) [g^-1][g][h]   = [g^-1][gh]
  //   b) [g][h][h^-1]   = [gh][h^-1]
  //   c) [1]            = 1
  // Each is used in both directions; the expansions insert one symbol.

  // Congruence closure on words of length <= excursion_len; classes are
  // counted on the core (length <= core_len). Chains connecting two core
  // words may pass through longer bridge words, hence the slack.
  //
  // Soundness: the bounded congruence refines the true one, so if the core
  // classes number exactly |pair model|, are separated by evaluation into
  // the pair model, and every core class has a representative shorter than
  // core_len, then a length induction identifies S(G) with the core classes
  // (any word equals a shorter one times a generator, staying in the core).
  //
  // Words are coded in base n+1 (digit 0 terminates), so lookups are array
  // probes.
  std::vector<std::pair<std::size_t, std::size_t>> attempts =
      n <= 3 ? std::vector<std::pair<std::size_t, std::size_t>>{{5, 8}, {6, 10}}
             : std::vector<std::pair<std::size_t, std::size_t>>{{5, 8}, {5, 9}};
  for (auto [core_len, excursion_len] : attempts) {
    const std::size_t base = n + 1;
    std::size_t space = 1;
    for (std::size_t i = 0; i < excursion_len; ++i) space *= base;
    auto encode = [&](const Word& w) {
      std::size_t code = 0, mult = 1;
      for (std::uint8_t c : w) {
        code += (c + 1) * mult;
        mult *= base;
      }
      return code;
    };

    std::vector<Word> words;
    words.push_back({});
    std::size_t begin = 0;
    for (std::size_t len = 1; len <= excursion_len; ++len) {
      std::size_t end = words.size();
      for (std::size_t w = begin; w < end; ++w)
        for (std::uint8_t c = 0; c < n; ++c) {
          Word nw = words[w];
          nw.push_back(c);
          words.push_back(std::move(nw));
        }
      begin = end;
    }
    std::vector<std::size_t> id_of(space, 0);
    for (std::size_t w = 0; w < words.size(); ++w) id_of[encode(words[w])] = w;

    UnionFind uf;
    uf.parent.resize(words.size());
    std::iota(uf.parent.begin(), uf.parent.end(), std::size_t{0});

    // only shrinking moves are applied: each expansion edge is the same edge
    // as the contraction seen from the longer word, and all words up to the
    // excursion length are enumerated
    Word partner;
    auto unite_with = [&](std::size_t w, const Word& word, std::size_t pos,
                          std::size_t drop, std::initializer_list<std::uint8_t> put) {
      partner.assign(word.begin(), word.begin() + pos);
      partner.insert(partner.end(), put);
      partner.insert(partner.end(), word.begin() + pos + drop, word.end());
      uf.unite(w, id_of[encode(partner)]);
    };
    const std::uint8_t one = static_cast<std::uint8_t>(g.identity());
    for (std::size_t w = 0; w < words.size(); ++w) {
      const Word& word = words[w];
      std::size_t len = word.size();
      for (std::size_t p = 0; p < len; ++p) {
        std::uint8_t x = word[p];
        // c) drop [1]
        if (x == one) unite_with(w, word, p, 1, {});
        if (p + 2 < len) {
          std::uint8_t y = word[p + 1], z = word[p + 2];
          // a) [x][y][z] -> [x][yz] when y = x^-1
          if (y == static_cast<std::uint8_t>(g.inv(x)))
            unite_with(w, word, p, 3, {x, static_cast<std::uint8_t>(g.mul(y, z))});
          // b) [x][y][z] -> [xy][z] when z = y^-1
          if (z == static_cast<std::uint8_t>(g.inv(y)))
            unite_with(w, word, p, 3, {static_cast<std::uint8_t>(g.mul(x, y)), z});
        }
      }
    }

    // minimal length per class, over core words only
    std::map<std::size_t, std::size_t> min_len;
    for (std::size_t w = 0; w < words.size(); ++w) {
      if (words[w].size() > core_len) continue;
      std::size_t root = uf.find(w);
      auto it = min_len.find(root);
      if (it == min_len.end() || words[w].size() < it->second)
        min_len[root] = words[w].size();
    }
    bool closed = true;
    for (const auto& [root, len] : min_len)
      if (len >= core_len) { closed = false; break; }
    if (!closed) continue;

    ExelOracle out;
    out.classes = min_len.size();

    // evaluation into the pair model: constant on classes, all elements hit,
    // distinct per class
    std::map<std::size_t, std::size_t> eval_of_class;
    bool consistent = true;
    std::vector<bool> hit(s.size(), false);
    for (std::size_t w = 0; w < words.size() && consistent; ++w) {
      if (words[w].size() > core_len) continue;
      std::size_t v = s.identity();
      for (std::uint8_t c : words[w]) v = s.mul(v, s.generator(c));
      std::size_t root = uf.find(w);
      auto [it, inserted] = eval_of_class.try_emplace(root, v);
      if (!inserted && it->second != v) consistent = false;
      hit[v] = true;
    }
    bool all_hit = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
    std::vector<std::size_t> images;
    for (const auto& [root, v] : eval_of_class) images.push_back(v);
    std::sort(images.begin(), images.end());
    bool distinct = std::adjacent_find(images.begin(), images.end()) == images.end();
    out.matches_pair_model =
        consistent && all_hit && distinct && out.classes == s.size();
    return out;
  }
  throw Error("exel_oracle: congruence closure did not stabilize within the length caps");
}

KparIso kpar_iso(const Field& f, const Group& g) {
  ExelSemigroup s(g);
  Algebra kp = kpar_algebra(f, s);

  PartialRep pt;
  pt.group = g;
  pt.target = kp;
  for (std::size_t e = 0; e < g.order(); ++e)
    pt.images.push_back(unit_vec(f, kp.dim(), s.generator(static_cast<int>(e))));
  PrepReport pr = verify_partial_rep(pt);
  if (!pr.ok) throw Error("kpar_iso: tilde pi is not a partial representation: " + pr.witness);

  InducedAction ind = induced_action(pt);
  PhiPi phi = phi_pi(pt, ind);

  // psi : K_par -> A x| G on the semigroup basis, via the canonical
  // factorization (E, g) = prod_{e in E \ {1,g}} [e][e^-1] * [g]
  const CrossedProduct& cp = phi.crossed;
  std::vector<Vec> pi_cp;  // pi_{alpha^pi}(h) = eps_h d_h
  for (std::size_t e = 0; e < g.order(); ++e)
    pi_cp.push_back(cp.delta_vec(static_cast<int>(e), ind.eps_in_a[e]));
  Mat psi_table(f, kp.dim(), cp.dim());
  for (std::size_t idx = 0; idx < s.size(); ++idx) {
    auto [mask, ge] = s.element(idx);
    Vec acc = cp.embed_base_vec(*ind.action.base().unit());
    for (std::size_t h = 0; h < g.order(); ++h) {
      if (!(mask & (1u << h))) continue;
      if (static_cast<int>(h) == g.identity() || static_cast<int>(h) == ge) continue;
      acc = cp.mul(acc, cp.mul(pi_cp[h], pi_cp[g.inv(static_cast<int>(h))]));
    }
    acc = cp.mul(acc, pi_cp[ge]);
    psi_table.set_row(idx, acc);
  }
  KparIso out{std::move(s), kp, std::move(pt), std::move(ind), std::move(phi),
              LinearMap(kp.dim(), cp.dim(), std::move(psi_table)), false, false};

  out.psi_matches_generators = true;
  for (std::size_t e = 0; e < g.order(); ++e) {
    Vec lhs = out.psi.apply(unit_vec(f, kp.dim(), out.s.generator(static_cast<int>(e))));
    if (!(lhs == pi_cp[e])) {
      out.psi_matches_generators = false;
      break;
    }
  }

  // both composites must be identities on the bases
  out.mutually_inverse = true;
  for (std::size_t idx = 0; idx < kp.dim(); ++idx) {
    Vec v = unit_vec(f, kp.dim(), idx);
    if (!(out.phi.map.apply(out.psi.apply(v)) == v)) {
      out.mutually_inverse = false;
      break;
    }
  }
  if (out.mutually_inverse)
    for (std::size_t idx = 0; idx < out.phi.crossed.dim(); ++idx) {
      Vec v = unit_vec(f, out.phi.crossed.dim(), idx);
      if (!(out.psi.apply(out.phi.map.apply(v)) == v)) {
        out.mutually_inverse = false;
        break;
      }
    }
  return out;
}

ElementaryRepData elementary_rep(const Field& f, const GroupSubset& a) {
  const Group& g = a.parent();
  if (!a.contains_identity()) throw Error("elementary_rep: 1 must lie in A");

  ElementaryRepData erd{g,
                        a,
                        translate_orbit(a),
                        SubgroupAsGroup{},
                        Algebra(),
                        {},
                        Algebra(),
                        AlgebraMorphism{},
                        {},
                        PartialRep{}};
  erd.h = subgroup_as_group(g, erd.orbit.stabilizer);
  std::size_t n = erd.n();
  std::size_t hsize = erd.h.group.order();

  erd.target = Algebra::matrix_over_group(f, n, erd.h.group);

  auto translate_index = [&](const GroupSubset& t) -> int {
    for (std::size_t i = 0; i < n; ++i)
      if (erd.orbit.translates[i] == t) return static_cast<int>(i);
    return -1;
  };
  auto h_index = [&](int parent_elem) -> int {
    for (std::size_t i = 0; i < hsize; ++i)
      if (erd.h.parent_elems[i] == parent_elem) return static_cast<int>(i);
    return -1;
  };

  // morphisms (A_i, g) with g A_i again a translate
  for (std::size_t i = 0; i < n; ++i)
    for (int ge = 0; ge < static_cast<int>(g.order()); ++ge)
      if (translate_index(erd.orbit.translates[i].translate(ge)) >= 0)
        erd.gamma_basis.emplace_back(i, ge);

  std::size_t gd = erd.gamma_basis.size();
  auto gamma_index = [&](std::size_t i, int ge) -> std::size_t {
    for (std::size_t k = 0; k < gd; ++k)
      if (erd.gamma_basis[k].first == i && erd.gamma_basis[k].second == ge) return k;
    throw Error("elementary_rep: morphism not in gamma");
  };

  // groupoid algebra: (A_i, g)(A_j, g') = (A_j, gg') iff g' A_j = A_i
  MulTable gt(f, gd);
  for (std::size_t x = 0; x < gd; ++x)
    for (std::size_t y = 0; y < gd; ++y) {
      auto [i, ge] = erd.gamma_basis[x];
      auto [j, gpe] = erd.gamma_basis[y];
      GroupSubset moved = erd.orbit.translates[j].translate(gpe);
      if (translate_index(moved) == static_cast<int>(i))
        gt.set_basis_product(x, y, unit_vec(f, gd, gamma_index(j, g.mul(ge, gpe))));
    }
  Vec gunit = zero_vec(f, gd);
  for (std::size_t i = 0; i < n; ++i)
    gunit[gamma_index(i, g.identity())] = Scalar::one(f);
  std::vector<std::string> gnames;
  for (auto [i, ge] : erd.gamma_basis)
    gnames.push_back("(A" + std::to_string(i + 1) + "," + g.label(ge) + ")");
  erd.kgamma = Algebra(f, gd, std::move(gt), std::move(gunit), std::move(gnames));

  // tau: (A_i, g) -> e_{j,i}(h), j the index with g A_i = A_j, h = r_j^-1 g r_i
  Mat tau_table(f, gd, erd.target.dim());
  for (std::size_t x = 0; x < gd; ++x) {
    auto [i, ge] = erd.gamma_basis[x];
    int j = translate_index(erd.orbit.translates[i].translate(ge));
    int hparent = g.mul(g.mul(g.inv(erd.orbit.reps[j]), ge), erd.orbit.reps[i]);
    int hidx = h_index(hparent);
    if (hidx < 0) throw Error("elementary_rep: r_j^-1 g r_i escapes the stabilizer");
    tau_table.set_row(
        x, unit_vec(f, erd.target.dim(),
                    erd.unit_index(static_cast<std::size_t>(j), i,
                                   static_cast<std::size_t>(hidx))));
  }
  erd.tau = AlgebraMorphism{erd.kgamma, erd.target,
                            LinearMap(gd, erd.target.dim(), std::move(tau_table))};
  MorphismReport tr = verify_isomorphism(erd.tau, true);
  if (!tr.isomorphism())
    throw Error("elementary_rep: tau is not an isomorphism: " + tr.witness);

  // lambda(g) = sum over translates containing g^-1 of (A_i, g)
  for (int ge = 0; ge < static_cast<int>(g.order()); ++ge) {
    Vec l = zero_vec(f, gd);
    for (std::size_t i = 0; i < n; ++i)
      if (erd.orbit.translates[i].contains(g.inv(ge))) l[gamma_index(i, ge)] = Scalar::one(f);
    erd.lambda.push_back(std::move(l));
  }

  erd.pi.group = g;
  erd.pi.target = erd.target;
  for (std::size_t e = 0; e < g.order(); ++e)
    erd.pi.images.push_back(erd.tau.map.apply(erd.lambda[e]));
  PrepReport pr = verify_partial_rep(erd.pi);
  if (!pr.ok) throw Error("elementary_rep: pi = tau o lambda fails the laws: " + pr.witness);

  // eps_g = sum over A_i containing g of e_ii(1)
  EpsilonFamily ef = epsilon_family(erd.pi);
  for (std::size_t e = 0; e < g.order(); ++e) {
    Vec expected = zero_vec(f, erd.target.dim());
    for (std::size_t i = 0; i < n; ++i)
      if (erd.orbit.translates[i].contains(static_cast<int>(e)))
        expected[erd.unit_index(i, i, 0)] = Scalar::one(f);
    if (!(ef.eps[e] == expected))
      throw Error("elementary_rep: eps_g != sum of e_ii(1) over A_i containing g");
  }
  return erd;
}

IsoBis iso_bis(const ElementaryRepData& erd) {
  const Group& g = erd.group;
  const Field& f = erd.target.field();
  std::size_t n = erd.n();
  std::size_t hsize = erd.h.group.order();

  InducedAction induced = induced_action(erd.pi);
  const Algebra& a = induced.action.base();
  if (a.dim() != n) throw Error("iso_bis: diagonal subalgebra has unexpected dimension");
  // base coordinates must be the diagonal units e_ii(1), in order
  for (std::size_t i = 0; i < n; ++i)
    if (!(induced.include.apply(a.basis_vec(i)) ==
          unit_vec(f, erd.target.dim(), erd.unit_index(i, i, 0))))
      throw Error("iso_bis: base coordinates are not the diagonal matrix units");

  PhiPi phi = phi_pi(erd.pi, induced);
  IsoBis out{std::move(induced), std::move(phi), false, ExpectationResult{}, false};
  const Algebra& base = out.induced.action.base();

  // surjectivity: phi(e_ii d_g) = e_{ij}(h) for g = r_i h r_j^-1
  out.hits_all_units = true;
  for (std::size_t i = 0; i < n && out.hits_all_units; ++i)
    for (std::size_t j = 0; j < n && out.hits_all_units; ++j)
      for (std::size_t hx = 0; hx < hsize; ++hx) {
        int hparent = erd.h.parent_elems[hx];
        int ge = g.mul(erd.orbit.reps[i], g.mul(hparent, g.inv(erd.orbit.reps[j])));
        Vec eii = base.basis_vec(i);
        if (!out.induced.action.domain(ge).contains(eii)) {
          out.hits_all_units = false;
          break;
        }
        Vec img = out.phi.map.apply(out.phi.crossed.delta_vec(ge, eii));
        if (!(img == unit_vec(f, erd.target.dim(), erd.unit_index(i, j, hx)))) {
          out.hits_all_units = false;
          break;
        }
      }

  // E picks the identity-coefficient of the diagonal
  Mat e_table(f, erd.target.dim(), erd.target.dim());
  for (std::size_t i = 0; i < n; ++i)
    e_table.set_row(erd.unit_index(i, i, 0),
                    unit_vec(f, erd.target.dim(), erd.unit_index(i, i, 0)));
  out.expectation = expectation_injectivity(out.phi.crossed, out.phi.map, erd.target,
                                            LinearMap(erd.target.dim(), erd.target.dim(),
                                                      std::move(e_table)));
  out.isomorphism = out.phi.multiplicative && out.hits_all_units &&
                    out.expectation.applicable && out.expectation.injective &&
                    out.phi.bijective;
  return out;
}

int transitivity_witness(const ElementaryRepData& erd, const InducedAction& ind,
                         std::size_t i, std::size_t j) {
  const Group& g = erd.group;
  const Algebra& a = ind.action.base();
  for (int ge = 0; ge < static_cast<int>(g.order()); ++ge) {
    Vec eii = a.basis_vec(i);
    Vec ejj = a.basis_vec(j);
    if (!ind.action.domain(g.inv(ge)).contains(eii)) continue;
    if (!ind.action.domain(ge).contains(ejj)) continue;
    if (ind.action.apply(ge, eii) == ejj) return ge;
  }
  throw Error("transitivity_witness: no witness found");
}

ElementaryGrading elementary_grading(const ElementaryRepData& erd, const IsoBis& iso) {
  const Group& g = erd.group;
  std::size_t n = erd.n();
  std::size_t hsize = erd.h.group.order();

  ElementaryGrading out;
  out.degree.assign(erd.target.dim(), g.identity());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t hx = 0; hx < hsize; ++hx)
        out.degree[erd.unit_index(i, j, hx)] =
            g.mul(erd.orbit.reps[i], g.mul(erd.h.parent_elems[hx], g.inv(erd.orbit.reps[j])));

  // each phi-image of a d_g is homogeneous of degree g
  out.phi_graded = true;
  const CrossedProduct& cp = iso.phi.crossed;
  for (std::size_t x = 0; x < cp.dim() && out.phi_graded; ++x) {
    auto [ge, i] = cp.label(x);
    Vec img = iso.phi.map.apply(unit_vec(cp.field(), cp.dim(), x));
    for (std::size_t k = 0; k < img.size(); ++k)
      if (!img[k].is_zero() && out.degree[k] != ge) {
        out.phi_graded = false;
        break;
      }
  }

  // deg is multiplicative on nonzero products of homogeneous basis elements
  out.multiplicative = true;
  for (std::size_t x = 0; x < erd.target.dim() && out.multiplicative; ++x)
    for (std::size_t y = 0; y < erd.target.dim(); ++y) {
      const Vec& p = erd.target.table().basis_product(x, y);
      if (is_zero_vec(p)) continue;
      int expected = g.mul(out.degree[x], out.degree[y]);
      for (std::size_t k = 0; k < p.size(); ++k)
        if (!p[k].is_zero() && out.degree[k] != expected) {
          out.multiplicative = false;
          break;
        }
      if (!out.multiplicative) break;
    }
  return out;
}

Vec f_s_product(const PartialAction& pa, const UnitFamily& uf, const std::vector<int>& s) {
  const Algebra& a = pa.base();
  if (!a.is_unital()) throw Error("f_s_product: base must be unital");
  Vec acc = *a.unit();
  for (std::size_t e = 0; e < pa.group().order(); ++e) {
    bool in_s = std::find(s.begin(), s.end(), static_cast<int>(e)) != s.end();
    Vec factor = in_s ? *uf.units[e] : sub(*a.unit(), *uf.units[e]);
    acc = a.mul(acc, factor);
  }
  return acc;
}

ElementaryCorrespondence action_to_elementary(const PartialAction& pa) {
  const Group& g = pa.group();
  const Algebra& a = pa.base();
  const Field& f = a.field();
  std::size_t n = a.dim();
  if (g.order() > 6) throw Error("action_to_elementary: |G| <= 6 required");

  // the base must be the product field in coordinates
  Algebra kn = Algebra::product_field(f, n);
  if (!(a.table() == kn.table()) || !a.is_unital())
    throw Error("action_to_elementary: base is not K^n in product coordinates");

  UnitFamily uf = unit_family(pa);
  if (!uf.complete) throw Error("action_to_elementary: unit family incomplete");

  ElementaryCorrespondence out{{}, ElementaryRepData{}, {}, false, false, false};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> ai;
    for (std::size_t e = 0; e < g.order(); ++e)
      if (!(*uf.units[e])[i].is_zero()) ai.push_back(static_cast<int>(e));
    out.a_sets.push_back(std::move(ai));
  }

  GroupSubset a1(g, out.a_sets[0]);
  TranslateOrbit orbit = translate_orbit(a1);
  if (orbit.translates.size() != n)
    throw Error("action_to_elementary: (A_1 : St(A_1)) != n");

  // f_S checks: nonzero exactly at the A_i, where it equals e_ii; and
  // alpha_g(f_S) = f_{gS} whenever g^-1 in S
  out.f_checks = true;
  std::vector<GroupSubset> a_subsets;
  for (const auto& ai : out.a_sets) a_subsets.emplace_back(g, ai);
  for (std::uint32_t mask = 0; mask < (1u << g.order()); ++mask) {
    std::vector<int> s;
    for (std::size_t e = 0; e < g.order(); ++e)
      if (mask & (1u << e)) s.push_back(static_cast<int>(e));
    Vec fs = f_s_product(pa, uf, s);
    int which = -1;
    for (std::size_t i = 0; i < n; ++i)
      if (out.a_sets[i] == s) { which = static_cast<int>(i); break; }
    if (which >= 0) {
      if (!(fs == a.basis_vec(static_cast<std::size_t>(which)))) out.f_checks = false;
    } else if (!is_zero_vec(fs)) {
      out.f_checks = false;
    }
    if (!is_zero_vec(fs)) {
      GroupSubset ss(g, s);
      for (std::size_t e = 0; e < g.order(); ++e) {
        int ge = static_cast<int>(e);
        if (!ss.contains(g.inv(ge))) continue;
        if (!pa.domain(g.inv(ge)).contains(fs)) {
          out.f_checks = false;
          continue;
        }
        GroupSubset moved = ss.translate(ge);
        Vec expect = f_s_product(pa, uf, moved.elems());
        if (!(pa.apply(ge, fs) == expect)) out.f_checks = false;
      }
    }
  }
  // the A_i(alpha) must be exactly the translates of A_1
  for (std::size_t i = 0; i < n && out.f_checks; ++i) {
    bool found = false;
    for (const auto& t : orbit.translates)
      if (t == a_subsets[i]) { found = true; break; }
    if (!found) out.f_checks = false;
  }

  out.erd = elementary_rep(f, a1);

  // align translate order with pa coordinates
  out.coord_of_translate.assign(n, n);
  for (std::size_t t = 0; t < n; ++t) {
    for (std::size_t i = 0; i < n; ++i)
      if (a_subsets[i] == out.erd.orbit.translates[t]) {
        out.coord_of_translate[t] = i;
        break;
      }
    if (out.coord_of_translate[t] == n)
      throw Error("action_to_elementary: translate is not an A_i(alpha)");
  }

  InducedAction ind = induced_action(out.erd.pi);
  if (ind.action.base().dim() != n)
    throw Error("action_to_elementary: induced base has unexpected dimension");

  Mat perm(f, n, n);
  for (std::size_t t = 0; t < n; ++t)
    perm.at(t, out.coord_of_translate[t]) = Scalar::one(f);
  AlgebraMorphism align{ind.action.base(), a, LinearMap(n, n, perm)};
  out.action_equal = verify_equivalence(ind.action, pa, align);

  // phi_{pi'} carries pi_{alpha^{pi'}} to pi', which is the equivalence of
  // pi' with pi_alpha
  PhiPi phi = phi_pi(out.erd.pi, ind);
  out.reps_equivalent = out.action_equal && phi.multiplicative && phi.composes_to_pi;
  return out;
}

}  // namespace pact
