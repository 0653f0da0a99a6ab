#include "pact/multiplier.hpp"

namespace pact {

namespace {

// stacked coordinates: first d^2 entries row-major L, then d^2 entries R
Vec stack_multiplier(const Multiplier& m) {
  std::size_t d = m.left.domain_dim();
  const Field& f = m.left.table().field();
  Vec v = zero_vec(f, 2 * d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      v[i * d + j] = m.left.table().at(i, j);
      v[d * d + i * d + j] = m.right.table().at(i, j);
    }
  return v;
}

Multiplier unstack_multiplier(const Field& f, std::size_t d, const Vec& v) {
  Mat l(f, d, d), r(f, d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      l.at(i, j) = v[i * d + j];
      r.at(i, j) = v[d * d + i * d + j];
    }
  return Multiplier{LinearMap(d, d, std::move(l)), LinearMap(d, d, std::move(r))};
}

// rows of the homogeneous system cutting out M(I) inside (L | R) space
Mat multiplier_system(const Algebra& alg) {
  const Field& f = alg.field();
  std::size_t d = alg.dim();
  std::size_t unknowns = 2 * d * d;
  // conditions (i)-(iii) per basis pair (a,b) = (e_p, e_q), per coordinate k
  Mat sys(f, 3 * d * d * d, unknowns);
  std::size_t row = 0;
  auto lpos = [d](std::size_t i, std::size_t j) { return i * d + j; };
  auto rpos = [d](std::size_t i, std::size_t j) { return d * d + i * d + j; };
  for (std::size_t p = 0; p < d; ++p)
    for (std::size_t q = 0; q < d; ++q) {
      const Vec& pq = alg.table().basis_product(p, q);
      for (std::size_t k = 0; k < d; ++k) {
        // (i)   L(e_p e_q)_k - (L(e_p) e_q)_k = 0
        for (std::size_t m = 0; m < d; ++m) {
          if (!pq[m].is_zero())
            sys.at(row, lpos(m, k)) = sys.at(row, lpos(m, k)) + pq[m];
          const Vec& mq = alg.table().basis_product(m, q);
          if (!mq[k].is_zero())
            sys.at(row, lpos(p, m)) = sys.at(row, lpos(p, m)) - mq[k];
        }
        ++row;
        // (ii)  R(e_p e_q)_k - (e_p R(e_q))_k = 0
        for (std::size_t m = 0; m < d; ++m) {
          if (!pq[m].is_zero())
            sys.at(row, rpos(m, k)) = sys.at(row, rpos(m, k)) + pq[m];
          const Vec& pm = alg.table().basis_product(p, m);
          if (!pm[k].is_zero())
            sys.at(row, rpos(q, m)) = sys.at(row, rpos(q, m)) - pm[k];
        }
        ++row;
        // (iii) (R(e_p) e_q)_k - (e_p L(e_q))_k = 0
        for (std::size_t m = 0; m < d; ++m) {
          const Vec& mq = alg.table().basis_product(m, q);
          if (!mq[k].is_zero())
            sys.at(row, rpos(p, m)) = sys.at(row, rpos(p, m)) + mq[k];
          const Vec& pm = alg.table().basis_product(p, m);
          if (!pm[k].is_zero())
            sys.at(row, lpos(q, m)) = sys.at(row, lpos(q, m)) - pm[k];
        }
        ++row;
      }
    }
  return sys;
}

}  // namespace

bool satisfies_multiplier_conditions(const Algebra& i, const Multiplier& m,
                                     std::string* witness) {
  std::size_t d = i.dim();
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      Vec ea = i.basis_vec(a), eb = i.basis_vec(b);
      Vec ab = i.table().basis_product(a, b);
      if (!(m.left.apply(ab) == i.mul(m.left.apply(ea), eb))) {
        if (witness) *witness = "(i) fails at (" + i.basis_name(a) + "," + i.basis_name(b) + ")";
        return false;
      }
      if (!(m.right.apply(ab) == i.mul(ea, m.right.apply(eb)))) {
        if (witness) *witness = "(ii) fails at (" + i.basis_name(a) + "," + i.basis_name(b) + ")";
        return false;
      }
      if (!(i.mul(m.right.apply(ea), eb) == i.mul(ea, m.left.apply(eb)))) {
        if (witness) *witness = "(iii) fails at (" + i.basis_name(a) + "," + i.basis_name(b) + ")";
        return false;
      }
    }
  return true;
}

MultiplierAlgebra::MultiplierAlgebra(Algebra ideal_algebra)
    : ideal_(std::move(ideal_algebra)),
      solution_(),
      alg_(Algebra::field_algebra(ideal_.field())) {
  const Field& f = ideal_.field();
  std::size_t d = ideal_.dim();
  solution_ = Subspace::from_canonical(nullspace_columns(multiplier_system(ideal_)));
  for (std::size_t r = 0; r < solution_.dim(); ++r)
    basis_.push_back(unstack_multiplier(f, d, solution_.basis_row(r)));

  for (const auto& m : basis_) {
    std::string w;
    if (!satisfies_multiplier_conditions(ideal_, m, &w))
      throw Error("multiplier basis fails conditions: " + w);
  }

  // product (L,R)(L',R') = (L o L', R' o R); closure gives the structure
  // constants, and the identity multiplier must lie in the solution space
  std::size_t n = basis_.size();
  MulTable t(f, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Multiplier prod{basis_[b].left.then(basis_[a].left),
                      basis_[a].right.then(basis_[b].right)};
      auto coords = solution_.try_coordinates(stack_multiplier(prod));
      if (!coords) throw Error("M(I) not closed under its product");
      t.set_basis_product(a, b, *coords);
    }
  Multiplier id{LinearMap::identity(f, d), LinearMap::identity(f, d)};
  auto id_coords = solution_.try_coordinates(stack_multiplier(id));
  if (!id_coords) throw Error("identity multiplier missing from M(I)");
  std::vector<std::string> names;
  for (std::size_t a = 0; a < n; ++a) names.push_back("m" + std::to_string(a + 1));
  alg_ = Algebra(f, n, std::move(t), *id_coords, std::move(names));
}

Vec MultiplierAlgebra::coordinates(const Multiplier& m) const {
  auto c = solution_.try_coordinates(stack_multiplier(m));
  if (!c) throw Error("pair is not a multiplier of I");
  return *c;
}

Multiplier MultiplierAlgebra::from_coordinates(const Vec& coords) const {
  return unstack_multiplier(ideal_.field(), ideal_.dim(),
                            solution_.from_coordinates(coords));
}

Vec MultiplierAlgebra::identity_coords() const {
  std::size_t d = ideal_.dim();
  return coordinates(Multiplier{LinearMap::identity(ideal_.field(), d),
                                LinearMap::identity(ideal_.field(), d)});
}

MultiplierAlgebra multiplier_algebra(const Algebra& i) { return MultiplierAlgebra(i); }

namespace {

Multiplier phi_of_basis(const Algebra& i, std::size_t x) {
  const Field& f = i.field();
  std::size_t d = i.dim();
  Mat l(f, d, d), r(f, d, d);
  for (std::size_t a = 0; a < d; ++a) {
    Vec la = i.table().basis_product(x, a);  // L_x(e_a) = e_x e_a
    Vec ra = i.table().basis_product(a, x);  // R_x(e_a) = e_a e_x
    l.set_row(a, la);
    r.set_row(a, ra);
  }
  return Multiplier{LinearMap(d, d, std::move(l)), LinearMap(d, d, std::move(r))};
}

}  // namespace

PhiEmbedding phi_embedding(const Algebra& i) {
  PhiEmbedding out{multiplier_algebra(i),
                   AlgebraMorphism{i, Algebra::field_algebra(i.field()), LinearMap()},
                   Subspace(), false, false, false};
  const Field& f = i.field();
  std::size_t d = i.dim();
  Mat table(f, d, out.m.dim());
  for (std::size_t x = 0; x < d; ++x)
    table.set_row(x, out.m.coordinates(phi_of_basis(i, x)));
  LinearMap map(d, out.m.dim(), std::move(table));
  out.phi = AlgebraMorphism{i, out.m.algebra(), map};
  MorphismReport rep = verify_morphism(out.phi);
  if (!rep.multiplicative) throw Error("phi is not multiplicative: " + rep.witness);
  out.kernel = map.kernel();
  out.kernel_matches_annihilators = (out.kernel == annihilators(i).intersection);
  out.bijective = rep.injective && rep.surjective;

  // phi(I) is an ideal of M(I): products of phi-images with basis
  // multipliers stay in span(phi(I))
  Subspace image = map.image();
  out.image_is_ideal = true;
  for (std::size_t x = 0; x < d && out.image_is_ideal; ++x) {
    Vec px = map.apply(i.basis_vec(x));
    for (std::size_t b = 0; b < out.m.dim(); ++b) {
      Vec eb = unit_vec(f, out.m.dim(), b);
      if (!image.contains(out.m.algebra().mul(px, eb)) ||
          !image.contains(out.m.algebra().mul(eb, px))) {
        out.image_is_ideal = false;
        break;
      }
    }
  }
  return out;
}

PsiFromAmbient psi_from_ambient(const Ideal& i) {
  const Algebra& a = i.parent();
  const Field& f = a.field();
  Algebra ia = i.as_algebra();
  std::size_t d = ia.dim();
  PsiFromAmbient out{multiplier_algebra(ia),
                     AlgebraMorphism{a, Algebra::field_algebra(f), LinearMap()}, Subspace()};
  Mat table(f, a.dim(), out.m.dim());
  for (std::size_t x = 0; x < a.dim(); ++x) {
    // L_a, R_a restricted to I, in I coordinates
    Mat l(f, d, d), r(f, d, d);
    for (std::size_t b = 0; b < d; ++b) {
      Vec amb = i.space().basis_row(b);
      l.set_row(b, i.space().coordinates(a.mul(a.basis_vec(x), amb)));
      r.set_row(b, i.space().coordinates(a.mul(amb, a.basis_vec(x))));
    }
    Multiplier m{LinearMap(d, d, std::move(l)), LinearMap(d, d, std::move(r))};
    table.set_row(x, out.m.coordinates(m));
  }
  LinearMap map(a.dim(), out.m.dim(), std::move(table));
  out.psi = AlgebraMorphism{a, out.m.algebra(), map};
  MorphismReport rep = verify_morphism(out.psi);
  if (!rep.multiplicative) throw Error("psi is not multiplicative: " + rep.witness);
  out.kernel = map.kernel();
  return out;
}

LrAssociativity is_lr_associative(const MultiplierAlgebra& m) {
  LrAssociativity out;
  out.holds = true;
  std::size_t n = m.dim();
  std::size_t d = m.ideal().dim();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      // R' o L = L o R' with (L,R) = basis a, (L',R') = basis b
      LinearMap lhs = m.basis()[a].left.then(m.basis()[b].right);
      LinearMap rhs = m.basis()[b].right.then(m.basis()[a].left);
      if (!(lhs == rhs)) {
        out.holds = false;
        out.first = a;
        out.second = b;
        for (std::size_t k = 0; k < d; ++k)
          if (!(lhs.apply(m.ideal().basis_vec(k)) == rhs.apply(m.ideal().basis_vec(k)))) {
            out.vector_index = k;
            break;
          }
        out.witness = "R' o L != L o R' for basis multipliers (m" + std::to_string(a + 1) +
                      ",m" + std::to_string(b + 1) + ") at " +
                      m.ideal().basis_name(out.vector_index);
        return out;
      }
    }
  return out;
}

LrAssociativity is_lr_associative(const Algebra& i) {
  return is_lr_associative(multiplier_algebra(i));
}

Multiplier transport_multiplier(const AlgebraMorphism& iso, const Multiplier& m) {
  MorphismReport rep = verify_isomorphism(iso);
  if (!rep.isomorphism()) throw Error("transport requires an isomorphism: " + rep.witness);
  LinearMap inv = iso.map.inverse();
  return Multiplier{inv.then(m.left).then(iso.map), inv.then(m.right).then(iso.map)};
}

AlgebraMorphism transport_multiplier_algebra(const AlgebraMorphism& iso,
                                             const MultiplierAlgebra& mi,
                                             const MultiplierAlgebra& mj) {
  const Field& f = iso.source.field();
  Mat table(f, mi.dim(), mj.dim());
  for (std::size_t a = 0; a < mi.dim(); ++a) {
    Multiplier t = transport_multiplier(iso, mi.basis()[a]);
    std::string w;
    if (!satisfies_multiplier_conditions(mj.ideal(), t, &w))
      throw Error("transported multiplier fails conditions on J: " + w);
    table.set_row(a, mj.coordinates(t));
  }
  AlgebraMorphism out{mi.algebra(), mj.algebra(), LinearMap(mi.dim(), mj.dim(), std::move(table))};
  MorphismReport rep = verify_isomorphism(out);
  if (!rep.isomorphism())
    throw Error("multiplier transport is not an algebra isomorphism: " + rep.witness);
  return out;
}

}  // namespace pact
