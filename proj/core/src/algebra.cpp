#include "pact/algebra.hpp"

#include <algorithm>

#include "pact/group.hpp"

namespace pact {

MulTable::MulTable(const Field& f, std::size_t dim)
    : field_(f), dim_(dim), c_(dim * dim, zero_vec(f, dim)) {}

void MulTable::set_basis_product(std::size_t i, std::size_t j, Vec v) {
  if (v.size() != dim_) throw Error("structure constant length mismatch");
  c_[i * dim_ + j] = std::move(v);
}

Vec MulTable::mul(const Vec& x, const Vec& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw Error("mul: dimension mismatch");
  Vec r = zero_vec(field_, dim_);
  std::vector<std::size_t> nzx, nzy;
  nzx.reserve(dim_);
  nzy.reserve(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    if (!x[i].is_zero()) nzx.push_back(i);
  for (std::size_t j = 0; j < dim_; ++j)
    if (!y[j].is_zero()) nzy.push_back(j);
  for (std::size_t i : nzx)
    for (std::size_t j : nzy) add_scaled(r, x[i] * y[j], c_[i * dim_ + j]);
  return r;
}

Vec MulTable::mul_basis_right(const Vec& x, std::size_t k) const {
  Vec r = zero_vec(field_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    if (!x[i].is_zero()) add_scaled(r, x[i], c_[i * dim_ + k]);
  return r;
}

Vec MulTable::mul_basis_left(std::size_t k, const Vec& y) const {
  Vec r = zero_vec(field_, dim_);
  for (std::size_t j = 0; j < dim_; ++j)
    if (!y[j].is_zero()) add_scaled(r, y[j], c_[k * dim_ + j]);
  return r;
}

Algebra::Algebra(const Field& f, std::size_t dim, MulTable table, std::optional<Vec> unit,
                 std::vector<std::string> basis_names)
    : field_(f), table_(std::move(table)), unit_(std::move(unit)), names_(std::move(basis_names)) {
  if (table_.dim() != dim) throw Error("algebra: table dimension mismatch");
  if (names_.empty())
    for (std::size_t i = 0; i < dim; ++i) names_.push_back("e" + std::to_string(i + 1));
  if (names_.size() != dim) throw Error("algebra: basis name count mismatch");

  // triple check with reused scratch accumulators; a fresh pair of
  // dim-sized vectors per triple would dominate the whole construction
  {
    Vec lhs = zero_vec(f, dim), rhs = zero_vec(f, dim);
    std::vector<std::size_t> touched;
    std::vector<std::vector<std::size_t>> support(dim * dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t k = 0; k < dim; ++k)
          if (!table_.basis_product(i, j)[k].is_zero()) support[i * dim + j].push_back(k);
    Scalar zero = Scalar::zero(f);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) {
        const Vec& cij = table_.basis_product(i, j);
        for (std::size_t k = 0; k < dim; ++k) {
          touched.clear();
          for (std::size_t m : support[i * dim + j]) {
            const Vec& cmk = table_.basis_product(m, k);
            for (std::size_t t : support[m * dim + k]) {
              lhs[t] = lhs[t] + cij[m] * cmk[t];
              touched.push_back(t);
            }
          }
          const Vec& cjk = table_.basis_product(j, k);
          for (std::size_t m : support[j * dim + k]) {
            const Vec& cim = table_.basis_product(i, m);
            for (std::size_t t : support[i * dim + m]) {
              rhs[t] = rhs[t] + cjk[m] * cim[t];
              touched.push_back(t);
            }
          }
          bool ok = true;
          for (std::size_t t : touched)
            if (!(lhs[t] == rhs[t])) { ok = false; break; }
          for (std::size_t t : touched) {
            lhs[t] = zero;
            rhs[t] = zero;
          }
          if (!ok)
            throw NonAssociativeError(
                "structure constants not associative at (" + names_[i] + "," + names_[j] +
                    "," + names_[k] + ")",
                {i, j, k});
        }
      }
  }
  if (unit_) {
    if (unit_->size() != dim) throw Error("algebra: unit length mismatch");
    for (std::size_t i = 0; i < dim; ++i) {
      Vec e = basis_vec(i);
      if (!(table_.mul(*unit_, e) == e) || !(table_.mul(e, *unit_) == e))
        throw Error("algebra: declared unit fails the unit law at " + names_[i]);
    }
  }
}

std::optional<Vec> find_unit(const MulTable& table) {
  const Field& f = table.field();
  std::size_t d = table.dim();
  if (d == 0) return std::nullopt;
  // unknown u: u e_j = e_j and e_j u = e_j for all j
  Mat a(f, 2 * d * d, d);
  Vec b = zero_vec(f, 2 * d * d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < d; ++k) {
      for (std::size_t i = 0; i < d; ++i) {
        a.at((j * d + k), i) = table.basis_product(i, j)[k];
        a.at((d * d + j * d + k), i) = table.basis_product(j, i)[k];
      }
      Scalar rhs = (j == k) ? Scalar::one(f) : Scalar::zero(f);
      b[j * d + k] = rhs;
      b[d * d + j * d + k] = rhs;
    }
  LinearSolution s = solve_linear(a, b);
  if (!s.consistent) return std::nullopt;
  return s.particular;
}

Algebra Algebra::field_algebra(const Field& f) {
  MulTable t(f, 1);
  t.set_basis_product(0, 0, unit_vec(f, 1, 0));
  return Algebra(f, 1, std::move(t), unit_vec(f, 1, 0), {"e1"});
}

Algebra Algebra::matrix(const Field& f, std::size_t n) {
  std::size_t d = n * n;
  MulTable t(f, d);
  auto idx = [n](std::size_t i, std::size_t j) { return i * n + j; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
          if (j == k) t.set_basis_product(idx(i, j), idx(k, l), unit_vec(f, d, idx(i, l)));
  Vec unit = zero_vec(f, d);
  for (std::size_t i = 0; i < n; ++i) unit[idx(i, i)] = Scalar::one(f);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      names.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
  return Algebra(f, d, std::move(t), std::move(unit), std::move(names));
}

Algebra Algebra::matrix_over_group(const Field& f, std::size_t n, const Group& h) {
  std::size_t m = h.order();
  std::size_t d = n * n * m;
  auto idx = [n, m](std::size_t i, std::size_t j, std::size_t x) {
    return (i * n + j) * m + x;
  };
  MulTable t(f, d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t x = 0; x < m; ++x)
        for (std::size_t k = 0; k < n; ++k)
          for (std::size_t l = 0; l < n; ++l)
            for (std::size_t y = 0; y < m; ++y)
              if (j == k)
                t.set_basis_product(
                    idx(i, j, x), idx(k, l, y),
                    unit_vec(f, d, idx(i, l, h.mul(static_cast<int>(x), static_cast<int>(y)))));
  Vec unit = zero_vec(f, d);
  for (std::size_t i = 0; i < n; ++i) unit[idx(i, i, 0)] = Scalar::one(f);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t x = 0; x < m; ++x)
        names.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1) + "(" +
                        h.label(static_cast<int>(x)) + ")");
  return Algebra(f, d, std::move(t), std::move(unit), std::move(names));
}

Algebra Algebra::upper_triangular(const Field& f, std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> units;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) units.emplace_back(i, j);
  std::size_t d = units.size();
  auto idx = [&units](std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < units.size(); ++k)
      if (units[k].first == i && units[k].second == j) return k;
    throw Error("upper_triangular: index");
  };
  MulTable t(f, d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      auto [i, j] = units[a];
      auto [k, l] = units[b];
      if (j == k) t.set_basis_product(a, b, unit_vec(f, d, idx(i, l)));
    }
  Vec unit = zero_vec(f, d);
  for (std::size_t i = 0; i < n; ++i) unit[idx(i, i)] = Scalar::one(f);
  std::vector<std::string> names;
  for (auto [i, j] : units)
    names.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
  return Algebra(f, d, std::move(t), std::move(unit), std::move(names));
}

Algebra Algebra::product_field(const Field& f, std::size_t n) {
  MulTable t(f, n);
  for (std::size_t i = 0; i < n; ++i) t.set_basis_product(i, i, unit_vec(f, n, i));
  Vec unit(n, Scalar::one(f));
  return Algebra(f, n, std::move(t), std::move(unit));
}

Algebra Algebra::group_algebra(const Field& f, const Group& g) {
  std::size_t d = g.order();
  MulTable t(f, d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      t.set_basis_product(a, b, unit_vec(f, d, g.mul(static_cast<int>(a), static_cast<int>(b))));
  std::vector<std::string> names = g.labels();
  return Algebra(f, d, std::move(t), unit_vec(f, d, 0), std::move(names));
}

Algebra Algebra::function_algebra(const Algebra& base, std::size_t copies) {
  const Field& f = base.field();
  std::size_t bd = base.dim();
  std::size_t d = bd * copies;
  MulTable t(f, d);
  for (std::size_t c = 0; c < copies; ++c)
    for (std::size_t i = 0; i < bd; ++i)
      for (std::size_t j = 0; j < bd; ++j) {
        const Vec& p = base.table().basis_product(i, j);
        Vec v = zero_vec(f, d);
        for (std::size_t k = 0; k < bd; ++k) v[c * bd + k] = p[k];
        t.set_basis_product(c * bd + i, c * bd + j, std::move(v));
      }
  std::optional<Vec> unit;
  if (base.unit()) {
    Vec u = zero_vec(f, d);
    for (std::size_t c = 0; c < copies; ++c)
      for (std::size_t k = 0; k < bd; ++k) u[c * bd + k] = (*base.unit())[k];
    unit = std::move(u);
  }
  std::vector<std::string> names;
  for (std::size_t c = 0; c < copies; ++c)
    for (std::size_t k = 0; k < bd; ++k)
      names.push_back(base.basis_name(k) + "@" + std::to_string(c));
  return Algebra(f, d, std::move(t), std::move(unit), std::move(names));
}

Ideal::Ideal(Algebra parent, Subspace space)
    : parent_(std::move(parent)), space_(std::move(space)) {
  if (space_.ambient_dim() != parent_.dim()) throw Error("ideal: ambient mismatch");
  for (std::size_t i = 0; i < parent_.dim(); ++i)
    for (std::size_t r = 0; r < space_.dim(); ++r) {
      Vec x = space_.basis_row(r);
      if (!space_.contains(parent_.mul(parent_.basis_vec(i), x)))
        throw Error("subspace not a left ideal: " + parent_.basis_name(i) +
                    " * basis row " + std::to_string(r + 1) + " escapes");
      if (!space_.contains(parent_.mul(x, parent_.basis_vec(i))))
        throw Error("subspace not a right ideal: basis row " + std::to_string(r + 1) +
                    " * " + parent_.basis_name(i) + " escapes");
    }
}

Ideal Ideal::whole(const Algebra& a) {
  return Ideal(a, Subspace::full(a.field(), a.dim()));
}

Ideal Ideal::zero(const Algebra& a) {
  return Ideal(a, Subspace::zero(a.field(), a.dim()));
}

Ideal Ideal::generated(const Algebra& a, const std::vector<Vec>& generators) {
  Subspace s = Subspace::span(a.field(), a.dim(), generators);
  for (;;) {
    std::vector<Vec> next;
    for (std::size_t r = 0; r < s.dim(); ++r) next.push_back(s.basis_row(r));
    for (std::size_t r = 0; r < s.dim(); ++r)
      for (std::size_t i = 0; i < a.dim(); ++i) {
        next.push_back(a.mul(a.basis_vec(i), s.basis_row(r)));
        next.push_back(a.mul(s.basis_row(r), a.basis_vec(i)));
      }
    Subspace grown = Subspace::span(a.field(), a.dim(), next);
    if (grown.dim() == s.dim()) break;
    s = grown;
  }
  return Ideal(a, s);
}

Algebra Ideal::as_algebra() const {
  return subalgebra_on(parent_, space_);
}

Algebra subalgebra_on(const Algebra& a, const Subspace& s, std::vector<std::string> names) {
  std::size_t k = s.dim();
  MulTable t(a.field(), k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Vec p = a.mul(s.basis_row(i), s.basis_row(j));
      auto coords = s.try_coordinates(p);
      if (!coords) throw Error("subspace is not multiplicatively closed");
      t.set_basis_product(i, j, *coords);
    }
  std::optional<Vec> unit = find_unit(t);
  return Algebra(a.field(), k, std::move(t), std::move(unit), std::move(names));
}

Annihilators annihilators(const Algebra& i) {
  const Field& f = i.field();
  std::size_t d = i.dim();
  // x in left ann: x * e_j = 0 for all j; stack d*d equations over x coords
  Mat left_sys(f, d * d, d), right_sys(f, d * d, d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t x = 0; x < d; ++x) {
        left_sys.at(j * d + k, x) = i.table().basis_product(x, j)[k];
        right_sys.at(j * d + k, x) = i.table().basis_product(j, x)[k];
      }
  Annihilators out;
  out.left = Subspace::from_canonical(nullspace_columns(left_sys));
  out.right = Subspace::from_canonical(nullspace_columns(right_sys));
  out.intersection = out.left.intersect(out.right);
  out.nondegenerate = out.intersection.dim() == 0;
  out.right_nondegenerate = out.left.dim() == 0;
  out.left_nondegenerate = out.right.dim() == 0;
  return out;
}

bool is_idempotent(const Algebra& i) {
  std::vector<Vec> prods;
  for (std::size_t a = 0; a < i.dim(); ++a)
    for (std::size_t b = 0; b < i.dim(); ++b) prods.push_back(i.table().basis_product(a, b));
  return Subspace::span(i.field(), i.dim(), prods).dim() == i.dim();
}

bool is_idempotent(const Ideal& i) {
  std::vector<Vec> prods;
  const Algebra& a = i.parent();
  for (std::size_t r = 0; r < i.dim(); ++r)
    for (std::size_t s = 0; s < i.dim(); ++s)
      prods.push_back(a.mul(i.space().basis_row(r), i.space().basis_row(s)));
  return Subspace::span(a.field(), a.dim(), prods) == i.space();
}

std::optional<Vec> unit_of_ideal(const Ideal& i) {
  const Algebra& a = i.parent();
  const Field& f = a.field();
  std::size_t k = i.dim(), d = a.dim();
  if (k == 0) return zero_vec(f, d);  // the zero ideal is 0 * A
  // unknown e = sum u_r b_r with e b_j = b_j and b_j e = b_j
  Mat sys(f, 2 * k * d, k);
  Vec rhs = zero_vec(f, 2 * k * d);
  for (std::size_t j = 0; j < k; ++j) {
    Vec bj = i.space().basis_row(j);
    for (std::size_t r = 0; r < k; ++r) {
      Vec lp = a.mul(i.space().basis_row(r), bj);
      Vec rp = a.mul(bj, i.space().basis_row(r));
      for (std::size_t c = 0; c < d; ++c) {
        sys.at(j * d + c, r) = lp[c];
        sys.at(k * d + j * d + c, r) = rp[c];
      }
    }
    for (std::size_t c = 0; c < d; ++c) {
      rhs[j * d + c] = bj[c];
      rhs[k * d + j * d + c] = bj[c];
    }
  }
  LinearSolution s = solve_linear(sys, rhs);
  if (!s.consistent) return std::nullopt;
  Vec e = i.space().from_coordinates(s.particular);
  // forced: the unit of an ideal is a central idempotent of the parent
  if (!(a.mul(e, e) == e)) throw Error("unit_of_ideal: result not idempotent");
  for (std::size_t x = 0; x < d; ++x)
    if (!(a.mul(e, a.basis_vec(x)) == a.mul(a.basis_vec(x), e)))
      throw Error("unit_of_ideal: result not central in parent");
  return e;
}

Vec sum_of_unital_ideals_unit(const Ideal& i, const Ideal& j) {
  auto ui = unit_of_ideal(i);
  auto uj = unit_of_ideal(j);
  if (!ui || !uj) throw Error("sum_of_unital_ideals_unit: an ideal lacks a unit");
  const Algebra& a = i.parent();
  Vec e = sub(add(*ui, *uj), a.mul(*ui, *uj));
  Ideal sum(a, i.space().sum(j.space()));
  for (std::size_t r = 0; r < sum.dim(); ++r) {
    Vec b = sum.space().basis_row(r);
    if (!(a.mul(e, b) == b) || !(a.mul(b, e) == b))
      throw Error("sum_of_unital_ideals_unit: candidate fails the unit law");
  }
  return e;
}

namespace {

bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] + (k - i) < n) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<Subspace> enumerate_subspaces(const Field& f, std::size_t dim, std::size_t cap) {
  if (f.is_rational()) throw Error("enumerate_subspaces requires a finite field");
  std::size_t p = f.characteristic();
  std::vector<Subspace> out;
  out.push_back(Subspace::zero(f, dim));
  // every subspace has a unique RREF basis: choose pivot columns, then fill
  // the free entries in all p^free ways
  for (std::size_t k = 1; k <= dim; ++k) {
    std::vector<std::size_t> pivots(k);
    for (std::size_t i = 0; i < k; ++i) pivots[i] = i;
    do {
      std::vector<std::pair<std::size_t, std::size_t>> free_pos;
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t c = pivots[i] + 1; c < dim; ++c)
          if (std::find(pivots.begin(), pivots.end(), c) == pivots.end())
            free_pos.emplace_back(i, c);
      std::vector<std::size_t> digits(free_pos.size(), 0);
      bool more = true;
      while (more) {
        if (out.size() >= cap) throw Error("enumerate_subspaces: cap exceeded");
        Mat m(f, k, dim);
        for (std::size_t i = 0; i < k; ++i) m.at(i, pivots[i]) = Scalar::one(f);
        for (std::size_t t = 0; t < free_pos.size(); ++t)
          m.at(free_pos[t].first, free_pos[t].second) =
              Scalar::of(f, static_cast<long>(digits[t]));
        out.push_back(Subspace::from_canonical(std::move(m)));
        more = false;
        for (std::size_t t = 0; t < digits.size(); ++t) {
          if (++digits[t] < p) { more = true; break; }
          digits[t] = 0;
        }
      }
    } while (next_combination(pivots, dim));
  }
  return out;
}

std::vector<Subspace> enumerate_ideals(const Algebra& a, std::size_t cap) {
  std::vector<Subspace> out;
  for (auto& s : enumerate_subspaces(a.field(), a.dim(), cap)) {
    bool ideal = true;
    for (std::size_t i = 0; i < a.dim() && ideal; ++i)
      for (std::size_t r = 0; r < s.dim() && ideal; ++r) {
        if (!s.contains(a.mul(a.basis_vec(i), s.basis_row(r)))) ideal = false;
        else if (!s.contains(a.mul(s.basis_row(r), a.basis_vec(i)))) ideal = false;
      }
    if (ideal) out.push_back(s);
  }
  return out;
}

bool is_semiprime(const Algebra& a, const SemiprimeOptions& opts) {
  if (!a.is_unital()) throw Error("is_semiprime: algebra must be unital");
  const Field& f = a.field();
  std::size_t d = a.dim();
  std::size_t p = f.characteristic();
  if (p == 0 || p > d) {
    // Dickson: rad A is the radical of (x,y) -> trace(L_{xy})
    Mat gram(f, d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        Vec prod = a.table().basis_product(i, j);
        Scalar tr = Scalar::zero(f);
        for (std::size_t k = 0; k < d; ++k)
          tr = tr + a.mul(prod, a.basis_vec(k))[k];
        gram.at(i, j) = tr;
      }
    return rank(gram) == d;
  }
  if (d <= opts.brute_dim_bound) {
    for (auto& s : enumerate_ideals(a, opts.subspace_cap)) {
      if (s.dim() == 0) continue;
      bool square_zero = true;
      for (std::size_t r = 0; r < s.dim() && square_zero; ++r)
        for (std::size_t t = 0; t < s.dim() && square_zero; ++t)
          if (!is_zero_vec(a.mul(s.basis_row(r), s.basis_row(t)))) square_zero = false;
      if (square_zero) return false;
    }
    return true;
  }
  throw Error("is_semiprime: unsupported characteristic/dimension (char " +
              std::to_string(p) + ", dim " + std::to_string(d) + ")");
}

namespace {

MorphismReport verify_morphism_impl(const AlgebraMorphism& f, bool require_unital,
                                    bool check_bijective) {
  MorphismReport rep;
  const Algebra& s = f.source;
  const Algebra& t = f.target;
  if (f.map.domain_dim() != s.dim() || f.map.codomain_dim() != t.dim())
    throw Error("morphism: map dimensions do not match the algebras");
  rep.multiplicative = true;
  for (std::size_t i = 0; i < s.dim() && rep.multiplicative; ++i)
    for (std::size_t j = 0; j < s.dim(); ++j) {
      Vec lhs = f.map.apply(s.table().basis_product(i, j));
      Vec rhs = t.mul(f.map.apply(s.basis_vec(i)), f.map.apply(s.basis_vec(j)));
      if (!(lhs == rhs)) {
        rep.multiplicative = false;
        rep.witness = "f(" + s.basis_name(i) + "*" + s.basis_name(j) + ") != f(" +
                      s.basis_name(i) + ")f(" + s.basis_name(j) + ")";
        break;
      }
    }
  if (require_unital) {
    if (!s.is_unital() || !t.is_unital()) {
      rep.unital_ok = false;
      if (rep.witness.empty()) rep.witness = "unital morphism between non-unital algebras";
    } else if (!(f.map.apply(*s.unit()) == *t.unit())) {
      rep.unital_ok = false;
      if (rep.witness.empty()) rep.witness = "unit is not sent to unit";
    }
  }
  std::size_t r = rank(f.map.table());
  rep.injective = r == s.dim();
  rep.surjective = r == t.dim();
  if (check_bijective && rep.morphism() && !(rep.injective && rep.surjective) &&
      rep.witness.empty())
    rep.witness = "map is not bijective";
  return rep;
}

}  // namespace

MorphismReport verify_morphism(const AlgebraMorphism& f, bool require_unital) {
  return verify_morphism_impl(f, require_unital, false);
}

MorphismReport verify_isomorphism(const AlgebraMorphism& f, bool require_unital) {
  return verify_morphism_impl(f, require_unital, true);
}

Subspace subalgebra_closure(const Algebra& a, const Subspace& seed) {
  Subspace s = seed;
  for (;;) {
    std::vector<Vec> next;
    for (std::size_t r = 0; r < s.dim(); ++r) next.push_back(s.basis_row(r));
    for (std::size_t r = 0; r < s.dim(); ++r)
      for (std::size_t t = 0; t < s.dim(); ++t)
        next.push_back(a.mul(s.basis_row(r), s.basis_row(t)));
    Subspace grown = Subspace::span(a.field(), a.dim(), next);
    if (grown.dim() == s.dim()) return grown;
    s = grown;
  }
}

}  // namespace pact
