#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pact/field.hpp"

namespace pact {

/// Coordinate vector. All vectors are rows; a subspace is the row space of
/// its canonical (RREF) basis matrix.
using Vec = std::vector<Scalar>;

Vec zero_vec(const Field& f, std::size_t n);
Vec unit_vec(const Field& f, std::size_t n, std::size_t i);
bool is_zero_vec(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Scalar& c, const Vec& v);
void add_scaled(Vec& acc, const Scalar& c, const Vec& v);
std::string vec_str(const Vec& v);

/// Dense row-major matrix over one Field.
class Mat {
public:
  Mat() : field_(Field::rationals()), rows_(0), cols_(0) {}
  Mat(const Field& f, std::size_t rows, std::size_t cols);

  static Mat identity(const Field& f, std::size_t n);
  static Mat from_rows(const Field& f, std::size_t cols, const std::vector<Vec>& rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  void set_row(std::size_t i, const Vec& v);

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  bool operator==(const Mat& o) const;
  Mat transpose() const;

  /// Row vector times matrix.
  Vec apply_row(const Vec& x) const;

  bool is_identity() const;

private:
  Field field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> data_;
};

struct EchelonForm {
  Mat rref;                         // zero rows kept at bottom
  std::vector<std::size_t> pivots;  // pivot column per nonzero row
  std::size_t rank = 0;
};

EchelonForm echelon(Mat m);

/// RREF rows with zero rows dropped: the canonical basis of the row space.
Mat row_canonical(const Mat& m);

/// Solution of A x = b (x, b columns). Nullspace rows are the canonical
/// basis of {x : A x = 0}.
struct LinearSolution {
  bool consistent = false;
  Vec particular;   // one solution when consistent
  Mat nullspace;    // rows
};

LinearSolution solve_linear(const Mat& a, const Vec& b);
/// Simultaneous A X = B for several right-hand-side columns; fails if any is
/// inconsistent. X has one column per column of B.
std::optional<Mat> solve_columns(const Mat& a, const Mat& b);
Mat nullspace_columns(const Mat& a);

std::size_t rank(const Mat& m);

/// Row space of a matrix, held in canonical echelon form. Two subspaces are
/// equal iff their canonical bases are identical.
class Subspace {
public:
  Subspace() : ambient_(0) {}
  static Subspace zero(const Field& f, std::size_t ambient);
  static Subspace full(const Field& f, std::size_t ambient);
  static Subspace span(const Field& f, std::size_t ambient, const std::vector<Vec>& vecs);
  static Subspace from_canonical(Mat canonical_rows);

  const Field& field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Mat& basis() const { return basis_; }
  Vec basis_row(std::size_t i) const { return basis_.row(i); }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& o) const;
  Subspace sum(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;
  bool operator==(const Subspace& o) const;

  /// Coordinates of an ambient vector w.r.t. the canonical basis; throws if
  /// the vector is outside the subspace.
  Vec coordinates(const Vec& v) const;
  Vec from_coordinates(const Vec& coords) const;
  std::optional<Vec> try_coordinates(const Vec& v) const;

private:
  std::size_t ambient_;
  Mat basis_;
};

/// Linear map stored as the coefficient table whose row i holds the codomain
/// coordinates of the i-th domain basis vector; apply(x) = x * table.
class LinearMap {
public:
  LinearMap() = default;
  LinearMap(std::size_t domain_dim, std::size_t codomain_dim, Mat table);
  static LinearMap identity(const Field& f, std::size_t n);
  static LinearMap zero(const Field& f, std::size_t domain, std::size_t codomain);

  std::size_t domain_dim() const { return table_.rows(); }
  std::size_t codomain_dim() const { return table_.cols(); }
  const Mat& table() const { return table_; }

  Vec apply(const Vec& x) const { return table_.apply_row(x); }
  /// Composition "this, then g".
  LinearMap then(const LinearMap& g) const;
  LinearMap operator+(const LinearMap& o) const;
  LinearMap operator-(const LinearMap& o) const;
  LinearMap scaled(const Scalar& c) const;
  bool operator==(const LinearMap& o) const { return table_ == o.table_; }

  bool is_invertible() const;
  LinearMap inverse() const;

  /// Image of a subspace (or of the whole domain via image()).
  Subspace image_of(const Subspace& s) const;
  Subspace image() const;
  Subspace kernel() const;

private:
  Mat table_;
};

/// Least map with dom_basis[k] -> images[k]; requires the pairs to be
/// linearly consistent and the given vectors to span the domain subspace.
LinearMap map_from_pairs(const Subspace& domain, const Subspace& codomain,
                         const std::vector<Vec>& from, const std::vector<Vec>& to);

}  // namespace pact
