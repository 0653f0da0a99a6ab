#include "pact/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace pact {

Vec zero_vec(const Field& f, std::size_t n) { return Vec(n, Scalar::zero(f)); }

Vec unit_vec(const Field& f, std::size_t n, std::size_t i) {
  Vec v = zero_vec(f, n);
  v.at(i) = Scalar::one(f);
  return v;
}

bool is_zero_vec(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error("vector size mismatch");
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = r[i] + b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error("vector size mismatch");
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = r[i] - b[i];
  return r;
}

Vec scale(const Scalar& c, const Vec& v) {
  Vec r = v;
  for (auto& x : r) x = c * x;
  return r;
}

void add_scaled(Vec& acc, const Scalar& c, const Vec& v) {
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < acc.size(); ++i)
    if (!v[i].is_zero()) acc[i] = acc[i] + c * v[i];
}

std::string vec_str(const Vec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i].str();
  }
  os << ")";
  return os.str();
}

Mat::Mat(const Field& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(f)) {}

Mat Mat::identity(const Field& f, std::size_t n) {
  Mat m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Mat Mat::from_rows(const Field& f, std::size_t cols, const std::vector<Vec>& rows) {
  Mat m(f, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Vec Mat::row(std::size_t i) const {
  Vec v;
  v.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v.push_back(at(i, j));
  return v;
}

void Mat::set_row(std::size_t i, const Vec& v) {
  if (v.size() != cols_) throw Error("row length mismatch");
  for (std::size_t j = 0; j < cols_; ++j) at(i, j) = v[j];
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw Error("matrix product shape mismatch");
  Mat r(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Scalar& b = o.at(k, j);
        if (!b.is_zero()) r.at(i, j) = r.at(i, j) + a * b;
      }
    }
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix shape mismatch");
  Mat r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = r.data_[i] + o.data_[i];
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix shape mismatch");
  Mat r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = r.data_[i] - o.data_[i];
  return r;
}

bool Mat::operator==(const Mat& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

Mat Mat::transpose() const {
  Mat r(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Vec Mat::apply_row(const Vec& x) const {
  if (x.size() != rows_) throw Error("apply_row size mismatch");
  Vec r = zero_vec(field_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero()) r[j] = r[j] + x[i] * at(i, j);
  }
  return r;
}

bool Mat::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      if (i == j && !at(i, j).is_one()) return false;
      if (i != j && !at(i, j).is_zero()) return false;
    }
  return true;
}

EchelonForm echelon(Mat m) {
  EchelonForm e;
  const Field& f = m.field();
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m.at(piv, c).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(r, j));
    Scalar inv = m.at(r, c).inv();
    for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) = inv * m.at(r, j);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      Scalar factor = m.at(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        m.at(i, j) = m.at(i, j) - factor * m.at(r, j);
    }
    e.pivots.push_back(c);
    ++r;
  }
  e.rank = r;
  e.rref = std::move(m);
  (void)f;
  return e;
}

Mat row_canonical(const Mat& m) {
  EchelonForm e = echelon(m);
  Mat r(m.field(), e.rank, m.cols());
  for (std::size_t i = 0; i < e.rank; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = e.rref.at(i, j);
  return r;
}

std::size_t rank(const Mat& m) { return echelon(m).rank; }

Mat nullspace_columns(const Mat& a) {
  EchelonForm e = echelon(a);
  const Field& f = a.field();
  std::size_t n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Mat basis(f, free_cols.size(), n);
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    std::size_t fc = free_cols[k];
    basis.at(k, fc) = Scalar::one(f);
    for (std::size_t i = 0; i < e.rank; ++i)
      basis.at(k, e.pivots[i]) = -e.rref.at(i, fc);
  }
  return row_canonical(basis);
}

LinearSolution solve_linear(const Mat& a, const Vec& b) {
  if (b.size() != a.rows()) throw Error("solve_linear: rhs dimension mismatch");
  const Field& f = a.field();
  Mat aug(f, a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  EchelonForm e = echelon(std::move(aug));
  LinearSolution sol;
  for (std::size_t i = 0; i < e.rank; ++i)
    if (e.pivots[i] == a.cols()) return sol;  // pivot in rhs column: inconsistent
  sol.consistent = true;
  sol.particular = zero_vec(f, a.cols());
  for (std::size_t i = 0; i < e.rank; ++i)
    sol.particular[e.pivots[i]] = e.rref.at(i, a.cols());
  sol.nullspace = nullspace_columns(a);
  return sol;
}

std::optional<Mat> solve_columns(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) throw Error("solve_columns shape mismatch");
  const Field& f = a.field();
  Mat aug(f, a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) aug.at(i, a.cols() + j) = b.at(i, j);
  }
  EchelonForm e = echelon(std::move(aug));
  for (std::size_t i = 0; i < e.rank; ++i)
    if (e.pivots[i] >= a.cols()) return std::nullopt;
  Mat x(f, a.cols(), b.cols());
  for (std::size_t i = 0; i < e.rank; ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      x.at(e.pivots[i], j) = e.rref.at(i, a.cols() + j);
  return x;
}

Subspace Subspace::zero(const Field& f, std::size_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Mat(f, 0, ambient);
  return s;
}

Subspace Subspace::full(const Field& f, std::size_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Mat::identity(f, ambient);
  return s;
}

Subspace Subspace::span(const Field& f, std::size_t ambient, const std::vector<Vec>& vecs) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = row_canonical(Mat::from_rows(f, ambient, vecs));
  return s;
}

Subspace Subspace::from_canonical(Mat canonical_rows) {
  Subspace s;
  s.ambient_ = canonical_rows.cols();
  s.basis_ = std::move(canonical_rows);
  return s;
}

std::optional<Vec> Subspace::try_coordinates(const Vec& v) const {
  if (v.size() != ambient_) throw Error("ambient dimension mismatch");
  // basis_ is RREF, so the pivot of row i is its first nonzero column and
  // coordinates are read off the pivot positions
  Vec coords;
  coords.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    std::size_t p = 0;
    while (p < ambient_ && basis_.at(i, p).is_zero()) ++p;
    coords.push_back(v[p]);
  }
  Vec rec = basis_.apply_row(coords);
  if (!(rec == v)) return std::nullopt;
  return coords;
}

Vec Subspace::coordinates(const Vec& v) const {
  auto c = try_coordinates(v);
  if (!c) throw Error("vector not contained in subspace");
  return *c;
}

Vec Subspace::from_coordinates(const Vec& coords) const {
  return basis_.apply_row(coords);
}

bool Subspace::contains(const Vec& v) const { return try_coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& o) const {
  for (std::size_t i = 0; i < o.dim(); ++i)
    if (!contains(o.basis_row(i))) return false;
  return true;
}

Subspace Subspace::sum(const Subspace& o) const {
  if (ambient_ != o.ambient_) throw Error("ambient dimension mismatch");
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < dim(); ++i) rows.push_back(basis_row(i));
  for (std::size_t i = 0; i < o.dim(); ++i) rows.push_back(o.basis_row(i));
  return span(field(), ambient_, rows);
}

Subspace Subspace::intersect(const Subspace& o) const {
  if (ambient_ != o.ambient_) throw Error("ambient dimension mismatch");
  const Field& f = field();
  // null space of [U^T | -V^T]: pairs (lambda, mu) with lambda U = mu V
  std::size_t k = dim(), m = o.dim();
  Mat d(f, ambient_, k + m);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < ambient_; ++i) d.at(i, j) = basis_.at(j, i);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < ambient_; ++i) d.at(i, k + j) = -o.basis_.at(j, i);
  Mat ns = nullspace_columns(d);
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < ns.rows(); ++r) {
    Vec full = ns.row(r);
    Vec lambda(full.begin(), full.begin() + k);
    rows.push_back(basis_.apply_row(lambda));
  }
  return span(f, ambient_, rows);
}

bool Subspace::operator==(const Subspace& o) const {
  return ambient_ == o.ambient_ && basis_ == o.basis_;
}

LinearMap::LinearMap(std::size_t domain_dim, std::size_t codomain_dim, Mat table)
    : table_(std::move(table)) {
  if (table_.rows() != domain_dim || table_.cols() != codomain_dim)
    throw Error("linear map table dimensions do not match declared dims");
}

LinearMap LinearMap::identity(const Field& f, std::size_t n) {
  return LinearMap(n, n, Mat::identity(f, n));
}

LinearMap LinearMap::zero(const Field& f, std::size_t domain, std::size_t codomain) {
  return LinearMap(domain, codomain, Mat(f, domain, codomain));
}

LinearMap LinearMap::then(const LinearMap& g) const {
  return LinearMap(domain_dim(), g.codomain_dim(), table_ * g.table());
}

LinearMap LinearMap::operator+(const LinearMap& o) const {
  return LinearMap(domain_dim(), codomain_dim(), table_ + o.table_);
}

LinearMap LinearMap::operator-(const LinearMap& o) const {
  return LinearMap(domain_dim(), codomain_dim(), table_ - o.table_);
}

LinearMap LinearMap::scaled(const Scalar& c) const {
  Mat t = table_;
  for (std::size_t i = 0; i < t.rows(); ++i)
    for (std::size_t j = 0; j < t.cols(); ++j) t.at(i, j) = c * t.at(i, j);
  return LinearMap(domain_dim(), codomain_dim(), t);
}

bool LinearMap::is_invertible() const {
  return domain_dim() == codomain_dim() && rank(table_) == domain_dim();
}

LinearMap LinearMap::inverse() const {
  if (domain_dim() != codomain_dim()) throw Error("inverse of non-square map");
  // find S with T S = I; rows convention keeps the same equation shape
  auto s = solve_columns(table_, Mat::identity(table_.field(), domain_dim()));
  if (!s) throw Error("map not invertible");
  return LinearMap(domain_dim(), domain_dim(), *s);
}

Subspace LinearMap::image_of(const Subspace& s) const {
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < s.dim(); ++i) rows.push_back(apply(s.basis_row(i)));
  return Subspace::span(table_.field(), codomain_dim(), rows);
}

Subspace LinearMap::image() const {
  return Subspace::from_canonical(row_canonical(table_));
}

Subspace LinearMap::kernel() const {
  // x table = 0  <=>  table^T x^T = 0
  return Subspace::from_canonical(nullspace_columns(table_.transpose()));
}

LinearMap map_from_pairs(const Subspace& domain, const Subspace& codomain,
                         const std::vector<Vec>& from, const std::vector<Vec>& to) {
  if (from.size() != to.size()) throw Error("map_from_pairs: size mismatch");
  const Field& f = domain.field();
  std::size_t k = domain.dim(), m = codomain.dim();
  std::vector<Vec> fc, tc;
  for (std::size_t i = 0; i < from.size(); ++i) {
    fc.push_back(domain.coordinates(from[i]));
    tc.push_back(codomain.coordinates(to[i]));
  }
  Mat a = Mat::from_rows(f, k, fc);
  if (rank(a) != k) throw Error("map_from_pairs: given vectors do not span the domain");
  Mat b = Mat::from_rows(f, m, tc);
  auto t = solve_columns(a, b);  // a * T = b
  if (!t) throw Error("map_from_pairs: inconsistent image assignments");
  return LinearMap(k, m, *t);
}

}  // namespace pact
