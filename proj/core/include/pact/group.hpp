#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pact/field.hpp"

namespace pact {

/// Finite group given by a Cayley table. Constructors verify the group
/// axioms; element 0 is always the identity.
class Group {
public:
  /// Trivial group of order 1.
  Group() : n_(1), table_{0}, inv_{0}, labels_{"1"} {}

  static Group cyclic(std::size_t n);
  static Group klein_four();
  static Group symmetric(std::size_t n);  // n <= 4
  static Group direct_product(const Group& a, const Group& b);
  /// Explicit table of element indices; index 0 must be the identity.
  static Group from_table(const std::vector<std::vector<int>>& table,
                          std::vector<std::string> labels = {});

  std::size_t order() const { return n_; }
  int identity() const { return 0; }
  int mul(int a, int b) const { return table_[a * n_ + b]; }
  int inv(int a) const { return inv_[a]; }

  const std::string& label(int i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Index of a labelled element; "1" always names the identity. Returns -1
  /// when unknown.
  int index_of(const std::string& label) const;

  bool is_abelian() const;

  bool operator==(const Group& o) const { return table_ == o.table_ && n_ == o.n_; }

private:
  struct raw_tag {};
  explicit Group(raw_tag) : n_(0) {}
  void finish(const char* what);  // fills inv_, checks axioms

  std::size_t n_;
  std::vector<int> table_;
  std::vector<int> inv_;
  std::vector<std::string> labels_;
};

/// Subset of a group's elements, kept sorted.
class GroupSubset {
public:
  /// Empty subset of the trivial group.
  GroupSubset() = default;
  GroupSubset(Group parent, std::vector<int> elems);

  const Group& parent() const { return parent_; }
  const std::vector<int>& elems() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  bool contains(int g) const;
  bool contains_identity() const { return contains(parent_.identity()); }

  GroupSubset translate(int g) const;  // { g a : a in A }
  GroupSubset inverses() const;        // { a^{-1} : a in A }

  bool operator==(const GroupSubset& o) const { return elems_ == o.elems_; }

  std::string str() const;

private:
  Group parent_;
  std::vector<int> elems_;
};

/// H = St(A), the distinct translates gA (g^{-1} in A) each containing the
/// identity, deterministic representatives r_i with r_i A = A_i (r_1 = 1),
/// and the right-coset decomposition A = union of H r_i^{-1}.
struct TranslateOrbit {
  std::vector<int> stabilizer;          // sorted
  std::vector<GroupSubset> translates;  // A_1 = A first, then by minimal rep
  std::vector<int> reps;                // r_i, minimal label index, r_1 = identity
  std::vector<int> coset_reps;          // r_i^{-1}
};

TranslateOrbit translate_orbit(const GroupSubset& a);

/// Abstract group on the elements of a subgroup-closed subset, with the
/// mapping back to parent indices.
struct SubgroupAsGroup {
  Group group;
  std::vector<int> parent_elems;  // element i of group == parent_elems[i]
};

SubgroupAsGroup subgroup_as_group(const Group& g, const std::vector<int>& elems);

}  // namespace pact
