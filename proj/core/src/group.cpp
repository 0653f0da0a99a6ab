#include "pact/group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace pact {

void Group::finish(const char* what) {
  if (n_ == 0) throw Error(std::string(what) + ": empty group");
  if (labels_.size() != n_) throw Error(std::string(what) + ": label count mismatch");
  for (std::size_t i = 0; i < n_ * n_; ++i)
    if (table_[i] < 0 || static_cast<std::size_t>(table_[i]) >= n_)
      throw Error(std::string(what) + ": table entry out of range");
  // identity at index 0
  for (std::size_t x = 0; x < n_; ++x)
    if (mul(0, static_cast<int>(x)) != static_cast<int>(x) ||
        mul(static_cast<int>(x), 0) != static_cast<int>(x))
      throw Error(std::string(what) + ": element 0 is not an identity (fails at " +
                  labels_[x] + ")");
  // associativity with witness
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b)
      for (std::size_t c = 0; c < n_; ++c)
        if (mul(mul(a, b), static_cast<int>(c)) != mul(static_cast<int>(a), mul(b, c)))
          throw Error(std::string(what) + ": table not associative at (" + labels_[a] +
                      "," + labels_[b] + "," + labels_[c] + ")");
  inv_.assign(n_, -1);
  for (std::size_t a = 0; a < n_; ++a) {
    for (std::size_t b = 0; b < n_; ++b)
      if (mul(a, b) == 0 && mul(b, a) == 0) {
        inv_[a] = static_cast<int>(b);
        break;
      }
    if (inv_[a] < 0)
      throw Error(std::string(what) + ": element " + labels_[a] + " has no inverse");
  }
}

Group Group::cyclic(std::size_t n) {
  if (n == 0) throw Error("cyclic(0)");
  Group g{raw_tag{}};
  g.n_ = n;
  g.table_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) g.table_[a * n + b] = static_cast<int>((a + b) % n);
  g.labels_.push_back("1");
  for (std::size_t a = 1; a < n; ++a)
    g.labels_.push_back(a == 1 ? "g" : "g" + std::to_string(a));
  g.finish("cyclic");
  return g;
}

Group Group::klein_four() {
  Group g{raw_tag{}};
  g.n_ = 4;
  // indices: 1, a, b, ab
  const int t[16] = {0, 1, 2, 3, 1, 0, 3, 2, 2, 3, 0, 1, 3, 2, 1, 0};
  g.table_.assign(t, t + 16);
  g.labels_ = {"1", "a", "b", "ab"};
  g.finish("klein_four");
  return g;
}

Group Group::symmetric(std::size_t n) {
  if (n == 0 || n > 4) throw Error("symmetric(n) supports 1 <= n <= 4");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::size_t m = perms.size();
  Group g{raw_tag{}};
  g.n_ = m;
  g.table_.resize(m * m);
  auto index_of_perm = [&](const std::vector<int>& q) {
    return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      std::vector<int> q(n);
      for (std::size_t x = 0; x < n; ++x) q[x] = perms[a][perms[b][x]];
      g.table_[a * m + b] = index_of_perm(q);
    }
  for (std::size_t a = 0; a < m; ++a) {
    std::string s;
    for (std::size_t x = 0; x < n; ++x) s += std::to_string(perms[a][x] + 1);
    g.labels_.push_back(s);
  }
  g.finish("symmetric");
  return g;
}

Group Group::direct_product(const Group& a, const Group& b) {
  Group g{raw_tag{}};
  std::size_t na = a.order(), nb = b.order();
  g.n_ = na * nb;
  g.table_.resize(g.n_ * g.n_);
  for (std::size_t i = 0; i < g.n_; ++i)
    for (std::size_t j = 0; j < g.n_; ++j) {
      int xa = a.mul(static_cast<int>(i / nb), static_cast<int>(j / nb));
      int xb = b.mul(static_cast<int>(i % nb), static_cast<int>(j % nb));
      g.table_[i * g.n_ + j] = xa * static_cast<int>(nb) + xb;
    }
  for (std::size_t i = 0; i < g.n_; ++i)
    g.labels_.push_back(a.label(static_cast<int>(i / nb)) + "." +
                        b.label(static_cast<int>(i % nb)));
  g.finish("direct_product");
  return g;
}

Group Group::from_table(const std::vector<std::vector<int>>& table,
                        std::vector<std::string> labels) {
  Group g{raw_tag{}};
  g.n_ = table.size();
  for (const auto& row : table)
    if (row.size() != g.n_) throw Error("from_table: ragged table");
  g.table_.resize(g.n_ * g.n_);
  for (std::size_t i = 0; i < g.n_; ++i)
    for (std::size_t j = 0; j < g.n_; ++j) g.table_[i * g.n_ + j] = table[i][j];
  if (labels.empty()) {
    for (std::size_t i = 0; i < g.n_; ++i) g.labels_.push_back("x" + std::to_string(i));
    if (g.n_ > 0) g.labels_[0] = "1";
  } else {
    g.labels_ = std::move(labels);
  }
  g.finish("from_table");
  return g;
}

int Group::index_of(const std::string& label) const {
  if (label == "1") return 0;
  for (std::size_t i = 0; i < n_; ++i)
    if (labels_[i] == label) return static_cast<int>(i);
  return -1;
}

bool Group::is_abelian() const {
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

GroupSubset::GroupSubset(Group parent, std::vector<int> elems)
    : parent_(std::move(parent)), elems_(std::move(elems)) {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  for (int e : elems_)
    if (e < 0 || static_cast<std::size_t>(e) >= parent_.order())
      throw Error("subset element out of range");
}

bool GroupSubset::contains(int g) const {
  return std::binary_search(elems_.begin(), elems_.end(), g);
}

GroupSubset GroupSubset::translate(int g) const {
  std::vector<int> t;
  t.reserve(elems_.size());
  for (int a : elems_) t.push_back(parent_.mul(g, a));
  return GroupSubset(parent_, std::move(t));
}

GroupSubset GroupSubset::inverses() const {
  std::vector<int> t;
  t.reserve(elems_.size());
  for (int a : elems_) t.push_back(parent_.inv(a));
  return GroupSubset(parent_, std::move(t));
}

std::string GroupSubset::str() const {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (i) os << ",";
    os << parent_.label(elems_[i]);
  }
  os << "}";
  return os.str();
}

TranslateOrbit translate_orbit(const GroupSubset& a) {
  const Group& g = a.parent();
  if (!a.contains_identity()) throw Error("translate_orbit: subset must contain 1");

  TranslateOrbit orbit;
  for (std::size_t h = 0; h < g.order(); ++h)
    if (a.translate(static_cast<int>(h)) == a) orbit.stabilizer.push_back(static_cast<int>(h));

  // translates gA for g^{-1} in A, representative = minimal element index,
  // except that A itself is listed first with representative 1
  orbit.translates.push_back(a);
  orbit.reps.push_back(g.identity());
  for (std::size_t cand = 0; cand < g.order(); ++cand) {
    int c = static_cast<int>(cand);
    if (!a.contains(g.inv(c))) continue;
    GroupSubset t = a.translate(c);
    bool seen = false;
    for (const auto& known : orbit.translates)
      if (known == t) { seen = true; break; }
    if (!seen) {
      orbit.translates.push_back(t);
      orbit.reps.push_back(c);
    }
  }
  for (int r : orbit.reps) orbit.coset_reps.push_back(g.inv(r));

  // invariants: every translate contains 1; |A| = |H| * n; the coset
  // decomposition A = union H r_i^{-1} is exact and disjoint
  for (const auto& t : orbit.translates)
    if (!t.contains_identity()) throw Error("translate_orbit: translate missing identity");
  if (a.size() != orbit.stabilizer.size() * orbit.translates.size())
    throw Error("translate_orbit: |A| != |H| * n");
  std::vector<int> covered;
  for (int cr : orbit.coset_reps)
    for (int h : orbit.stabilizer) covered.push_back(g.mul(h, cr));
  std::sort(covered.begin(), covered.end());
  if (std::unique(covered.begin(), covered.end()) != covered.end())
    throw Error("translate_orbit: coset decomposition not disjoint");
  if (covered != a.elems()) throw Error("translate_orbit: coset decomposition misses A");
  return orbit;
}

SubgroupAsGroup subgroup_as_group(const Group& g, const std::vector<int>& elems) {
  std::vector<int> sorted = elems;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  auto pos = [&](int e) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), e);
    if (it == sorted.end() || *it != e) throw Error("subgroup_as_group: not closed");
    return static_cast<int>(it - sorted.begin());
  };
  if (sorted.empty() || sorted[0] != g.identity())
    throw Error("subgroup_as_group: identity missing");
  std::size_t m = sorted.size();
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) table[i][j] = pos(g.mul(sorted[i], sorted[j]));
  std::vector<std::string> labels;
  for (int e : sorted) labels.push_back(g.label(e));
  labels[0] = "1";
  SubgroupAsGroup out{Group::from_table(table, labels), sorted};
  return out;
}

}  // namespace pact
