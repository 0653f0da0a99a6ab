#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pact/linalg.hpp"

namespace pact {

class Group;

/// Structure constants alone: a bilinear product with no associativity
/// assumption. Carrier for crossed products before their associativity is
/// decided.
class MulTable {
public:
  MulTable() : field_(Field::rationals()), dim_(0) {}
  MulTable(const Field& f, std::size_t dim);

  const Field& field() const { return field_; }
  std::size_t dim() const { return dim_; }

  const Vec& basis_product(std::size_t i, std::size_t j) const { return c_[i * dim_ + j]; }
  void set_basis_product(std::size_t i, std::size_t j, Vec v);

  Vec mul(const Vec& x, const Vec& y) const;
  Vec mul_basis_right(const Vec& x, std::size_t k) const;  // x * e_k
  Vec mul_basis_left(std::size_t k, const Vec& y) const;   // e_k * y

  bool operator==(const MulTable& o) const { return dim_ == o.dim_ && c_ == o.c_; }

private:
  Field field_;
  std::size_t dim_;
  std::vector<Vec> c_;
};

/// Thrown when structure constants fail the basis-triple associativity test;
/// carries the violating triple.
struct NonAssociativeError : Error {
  NonAssociativeError(std::string msg, std::array<std::size_t, 3> t)
      : Error(std::move(msg)), triple(t) {}
  std::array<std::size_t, 3> triple;
};

/// Finite-dimensional associative algebra over an exact field, given by
/// structure constants. Associativity and the unit law are verified at
/// construction. Basis order per preset:
///   matrix(n):           e11, e12, ..., e1n, e21, ..., enn (row-major)
///   matrix_over_group:   e_{ij}(h), (i,j) row-major outer, h in group order
///   upper_triangular(n): e_{ij} with i <= j, row-major
///   product_field(n):    coordinate idempotents e1..en
///   group_algebra(G):    group elements in declared order
///   function_algebra:    copy-major blocks, base basis inside each copy
class Algebra {
public:
  /// Zero-dimensional algebra over the rationals.
  Algebra() : field_(Field::rationals()) {}
  Algebra(const Field& f, std::size_t dim, MulTable table, std::optional<Vec> unit,
          std::vector<std::string> basis_names = {});

  static Algebra field_algebra(const Field& f);
  static Algebra matrix(const Field& f, std::size_t n);
  static Algebra matrix_over_group(const Field& f, std::size_t n, const Group& h);
  static Algebra upper_triangular(const Field& f, std::size_t n);
  static Algebra product_field(const Field& f, std::size_t n);
  static Algebra group_algebra(const Field& f, const Group& g);
  static Algebra function_algebra(const Algebra& base, std::size_t copies);

  const Field& field() const { return field_; }
  std::size_t dim() const { return table_.dim(); }
  const MulTable& table() const { return table_; }
  Vec mul(const Vec& x, const Vec& y) const { return table_.mul(x, y); }
  const std::optional<Vec>& unit() const { return unit_; }
  bool is_unital() const { return unit_.has_value(); }
  Vec basis_vec(std::size_t i) const { return unit_vec(field_, dim(), i); }
  const std::vector<std::string>& basis_names() const { return names_; }
  const std::string& basis_name(std::size_t i) const { return names_[i]; }

  bool operator==(const Algebra& o) const {
    return field_ == o.field_ && table_ == o.table_ && unit_ == o.unit_;
  }

private:
  Field field_;
  MulTable table_;
  std::optional<Vec> unit_;
  std::vector<std::string> names_;
};

/// Attempts to locate a two-sided unit by solving the linear unit equations;
/// empty when the algebra has none.
std::optional<Vec> find_unit(const MulTable& table);

/// Two-sided ideal of an algebra, stored as a canonical subspace; closure
/// under left/right multiplication is verified at construction.
class Ideal {
public:
  Ideal(Algebra parent, Subspace space);
  static Ideal whole(const Algebra& a);
  static Ideal zero(const Algebra& a);
  static Ideal generated(const Algebra& a, const std::vector<Vec>& generators);

  const Algebra& parent() const { return parent_; }
  const Subspace& space() const { return space_; }
  std::size_t dim() const { return space_.dim(); }

  /// The ideal as an algebra on its own canonical basis (unit attached when
  /// one exists).
  Algebra as_algebra() const;

  bool operator==(const Ideal& o) const {
    return parent_ == o.parent_ && space_ == o.space_;
  }

private:
  Algebra parent_;
  Subspace space_;
};

struct Annihilators {
  Subspace left;          // {x in I : x I = 0}
  Subspace right;         // {x in I : I x = 0}
  Subspace intersection;
  bool nondegenerate = false;        // intersection == 0
  bool right_nondegenerate = false;  // left  == 0  (a I != 0 for a != 0)
  bool left_nondegenerate = false;   // right == 0  (I a != 0 for a != 0)
};

/// Left/right annihilators of an algebra in itself, plus the
/// (non-)degeneracy predicates they decide.
Annihilators annihilators(const Algebra& i);

bool is_idempotent(const Algebra& i);
bool is_idempotent(const Ideal& i);

/// Unit of the ideal, if any. The returned element is checked to be a
/// central idempotent of the parent.
std::optional<Vec> unit_of_ideal(const Ideal& i);

/// 1_I + 1_J - 1_I 1_J, verified to be the unit of I + J.
Vec sum_of_unital_ideals_unit(const Ideal& i, const Ideal& j);

struct SemiprimeOptions {
  std::size_t brute_dim_bound = 5;
  std::size_t subspace_cap = 2000000;
};

/// Radical test: trace form of the left regular representation for char 0 or
/// p > dim; exhaustive nilpotent-ideal search over small finite fields.
bool is_semiprime(const Algebra& a, const SemiprimeOptions& opts = {});

/// All subspaces of GF(p)^dim, enumerated as RREF matrices (deterministic
/// order). Throws when the count would exceed cap.
std::vector<Subspace> enumerate_subspaces(const Field& f, std::size_t dim,
                                          std::size_t cap = 2000000);
/// The subspaces that are two-sided ideals of the algebra.
std::vector<Subspace> enumerate_ideals(const Algebra& a, std::size_t cap = 2000000);

struct AlgebraMorphism {
  Algebra source;
  Algebra target;
  LinearMap map;
};

struct MorphismReport {
  bool multiplicative = false;
  bool unital_ok = true;      // only checked when required
  bool injective = false;
  bool surjective = false;
  std::string witness;        // first violation, if any
  bool morphism() const { return multiplicative && unital_ok; }
  bool isomorphism() const { return morphism() && injective && surjective; }
};

MorphismReport verify_morphism(const AlgebraMorphism& f, bool require_unital = false);
MorphismReport verify_isomorphism(const AlgebraMorphism& f, bool require_unital = false);

/// Closure of a spanning set under the algebra product (the subalgebra it
/// generates, without adjoining a unit).
Subspace subalgebra_closure(const Algebra& a, const Subspace& seed);

/// The algebra induced on a multiplicatively closed subspace, with
/// coordinates in the subspace's canonical basis.
Algebra subalgebra_on(const Algebra& a, const Subspace& s,
                      std::vector<std::string> names = {});

}  // namespace pact
