#pragma once

#include "pact/algebra.hpp"

namespace pact {

/// Pair (L, R) of linear maps on an algebra I with
///   L(ab) = L(a)b,  R(ab) = aR(b),  R(a)b = aL(b).
struct Multiplier {
  LinearMap left;
  LinearMap right;
};

bool satisfies_multiplier_conditions(const Algebra& i, const Multiplier& m,
                                     std::string* witness = nullptr);

/// M(I): canonical basis of the solution space of the multiplier conditions,
/// with the product (L,R)(L',R') = (L o L', R' o R) realized as an algebra on
/// that basis.
class MultiplierAlgebra {
public:
  explicit MultiplierAlgebra(Algebra ideal_algebra);

  const Algebra& ideal() const { return ideal_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Multiplier>& basis() const { return basis_; }
  /// The multiplier product algebra (always associative, unit = (id, id)).
  const Algebra& algebra() const { return alg_; }

  /// Coordinates of a multiplier in the canonical basis; throws when the
  /// pair is not a multiplier of I.
  Vec coordinates(const Multiplier& m) const;
  Multiplier from_coordinates(const Vec& coords) const;
  Vec identity_coords() const;

private:
  Algebra ideal_;
  std::vector<Multiplier> basis_;
  Subspace solution_;  // in stacked (L | R) coordinates, dim 2 d^2 ambient
  Algebra alg_;
};

MultiplierAlgebra multiplier_algebra(const Algebra& i);

/// phi : I -> M(I), x -> (L_x, R_x), verified multiplicative with
/// kernel = l.ann(I) cap r.ann(I) and phi(I) an ideal of M(I).
struct PhiEmbedding {
  MultiplierAlgebra m;
  AlgebraMorphism phi;       // I -> M(I)
  Subspace kernel;           // in I coordinates
  bool kernel_matches_annihilators = false;
  bool image_is_ideal = false;
  bool bijective = false;
};

PhiEmbedding phi_embedding(const Algebra& i);

/// psi : A -> M(I) for an ideal I of A, a -> (L_a|_I, R_a|_I).
struct PsiFromAmbient {
  MultiplierAlgebra m;
  AlgebraMorphism psi;  // A -> M(I)
  Subspace kernel;      // in A coordinates
};

PsiFromAmbient psi_from_ambient(const Ideal& i);

/// Checks R' o L = L o R' over all pairs of basis multipliers; the condition
/// is bilinear so basis pairs suffice. Witness is the first violating pair
/// in lexicographic order plus the first basis vector separating the two
/// composites.
struct LrAssociativity {
  bool holds = false;
  std::size_t first = 0, second = 0, vector_index = 0;  // valid when !holds
  std::string witness;
};

LrAssociativity is_lr_associative(const Algebra& i);
LrAssociativity is_lr_associative(const MultiplierAlgebra& m);

/// Transport along an isomorphism pi : I -> J,
/// (L, R) -> (pi o L o pi^{-1}, pi o R o pi^{-1}).
Multiplier transport_multiplier(const AlgebraMorphism& iso, const Multiplier& m);

/// Transport of the full basis, verified to give an algebra isomorphism
/// M(I) -> M(J) on structure constants.
AlgebraMorphism transport_multiplier_algebra(const AlgebraMorphism& iso,
                                             const MultiplierAlgebra& mi,
                                             const MultiplierAlgebra& mj);

}  // namespace pact
