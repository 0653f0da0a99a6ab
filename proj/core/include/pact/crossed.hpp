#pragma once

#include <array>

#include "pact/paction.hpp"

namespace pact {

/// Skew group ring A x|_alpha G on basis (g, i), i indexing the canonical
/// basis of D_g; the product (a_g d_g)(b_h d_h) = alpha_g(alpha_{g^-1}(a_g)
/// b_h) d_{gh} is stored as structure constants with NO associativity
/// assumed.
class CrossedProduct {
public:
  static CrossedProduct build(const PartialAction& pa);

  const PartialAction& action() const { return pa_; }
  const MulTable& table() const { return table_; }
  std::size_t dim() const { return table_.dim(); }
  const Field& field() const { return table_.field(); }

  Vec mul(const Vec& x, const Vec& y) const { return table_.mul(x, y); }

  std::size_t offset(int g) const { return offsets_[g]; }
  std::pair<int, std::size_t> label(std::size_t idx) const { return labels_[idx]; }
  std::string label_str(std::size_t idx) const;

  /// a d_1 for an ambient element a of the base.
  Vec embed_base_vec(const Vec& a) const;
  /// a d_g for a in D_g.
  Vec delta_vec(int g, const Vec& a) const;

  /// First basis triple with (xy)z != x(yz), lexicographic in the flat basis
  /// order; nullopt when associative. `threads` 0 = respect PACT_THREADS.
  std::optional<std::array<std::size_t, 3>> nonassoc_witness(unsigned threads = 0) const;

  /// The crossed product as a verified associative algebra (throws when a
  /// witness exists); unit 1 d_1 attached when the base is unital.
  Algebra as_algebra() const;

private:
  CrossedProduct(PartialAction pa, MulTable t, std::vector<std::size_t> offs,
                 std::vector<std::pair<int, std::size_t>> labels)
      : pa_(std::move(pa)), table_(std::move(t)), offsets_(std::move(offs)),
        labels_(std::move(labels)) {}

  PartialAction pa_;
  MulTable table_;
  std::vector<std::size_t> offsets_;
  std::vector<std::pair<int, std::size_t>> labels_;
};

bool is_associative(const CrossedProduct& cp);

/// The embedding a -> a d_1 (injective and multiplicative even when the
/// crossed product is not associative).
struct BaseEmbedding {
  LinearMap map;  // base coords -> crossed coords
  bool injective = false;
  bool multiplicative = false;
};

BaseEmbedding embed_base(const CrossedProduct& cp);

/// Theorem route: condition (X) per group element. Equals brute force on
/// every action (cross-validated by the test corpus).
bool associativity_via_condition_x(const PartialAction& pa);
ConditionX condition_x_for(const PartialAction& pa, int g);

}  // namespace pact
