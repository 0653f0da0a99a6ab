#pragma once

#include "pact/algebra.hpp"
#include "pact/group.hpp"

namespace pact {

/// Raw data of a partial action before verification: per group element an
/// ideal D_g and a map alpha_g : D_{g^{-1}} -> D_g written in the canonical
/// bases of the two subspaces.
struct PartialActionData {
  Group group;
  Algebra base;
  std::vector<Subspace> domains;  // indexed by group element
  std::vector<LinearMap> maps;
};

struct PactionReport {
  bool structural = false;     // shapes, D_1 = A, alpha_1 = id, alpha_g iso of algebras
  bool cond_i = false;
  bool cond_ii_prime = false;  // alpha_g(D_{g^-1} cap D_h) = D_g cap D_{gh}
  bool cond_iii_prime = false; // alpha_g alpha_h = alpha_{gh} on D_{h^-1} cap D_{(gh)^-1}
  bool cond_ii_weak = false;   // D_{(gh)^-1} >= alpha_h^{-1}(D_h cap D_{g^-1})
  bool cond_iii_weak = false;  // composition law on alpha_h^{-1}(D_h cap D_{g^-1})
  bool weak_agrees = false;    // (ii)+(iii) verdict == (ii')+(iii') verdict
  std::vector<std::string> violations;
  bool valid() const { return structural && cond_i && cond_ii_prime && cond_iii_prime; }
};

PactionReport verify_partial_action(const PartialActionData& data);

/// Verified partial action; construction re-runs the full axiom check and
/// throws on the first violation.
class PartialAction {
public:
  static PartialAction make(PartialActionData data);

  const Group& group() const { return data_.group; }
  const Algebra& base() const { return data_.base; }
  const Subspace& domain(int g) const { return data_.domains[g]; }
  const LinearMap& map(int g) const { return data_.maps[g]; }
  const PartialActionData& data() const { return data_; }

  /// alpha_g applied to an ambient vector of D_{g^{-1}}.
  Vec apply(int g, const Vec& v) const;
  Ideal domain_ideal(int g) const { return Ideal(data_.base, data_.domains[g]); }

private:
  explicit PartialAction(PartialActionData data) : data_(std::move(data)) {}
  PartialActionData data_;
};

/// Group acting by automorphisms; each beta_g is a full-dimension map.
struct GlobalActionData {
  Group group;
  Algebra algebra;
  std::vector<LinearMap> autos;
};

struct GlobalActionReport {
  bool ok = false;
  std::vector<std::string> violations;
};

GlobalActionReport verify_global_action(const GlobalActionData& data);

class GlobalAction {
public:
  static GlobalAction make(GlobalActionData data);

  const Group& group() const { return data_.group; }
  const Algebra& algebra() const { return data_.algebra; }
  const LinearMap& automorphism(int g) const { return data_.autos[g]; }
  Vec apply(int g, const Vec& v) const { return data_.autos[g].apply(v); }

  /// The same action seen as a partial action with every D_g = B.
  PartialAction as_partial() const;

private:
  explicit GlobalAction(GlobalActionData data) : data_(std::move(data)) {}
  GlobalActionData data_;
};

/// Restriction of a global action to an ideal: D_g = A cap beta_g(A),
/// alpha_g = beta_g restricted. Admissible iff the translates of A generate
/// the ambient algebra.
struct RestrictedAction {
  PartialAction action;   // on A as an algebra in its own right
  AlgebraMorphism include;  // A-as-algebra -> ambient B
  bool admissible = false;
};

RestrictedAction restrict_global(const GlobalAction& beta, const Ideal& a);

/// Equivalence of partial actions via phi : A -> A' (Def: phi(D_g) = D'_g
/// and alpha'_g o phi = phi o alpha_g on D_{g^-1}).
bool verify_equivalence(const PartialAction& pa, const PartialAction& pb,
                        const AlgebraMorphism& phi, std::string* witness = nullptr);

/// Units 1_g of the domains, when they all exist, plus the identity
/// alpha_g(1_{g^-1} 1_h) = 1_g 1_{gh} for all pairs.
struct UnitFamily {
  bool complete = false;
  std::vector<std::optional<Vec>> units;
  bool triviality_ok = false;  // only meaningful when complete
  std::vector<std::string> missing;
};

UnitFamily unit_family(const PartialAction& pa);

/// Single-g data for the local associativity condition; covers actions of
/// infinite groups one element at a time.
struct LocalActionSlice {
  Algebra base;
  Ideal d_minus;   // D_{g^-1}
  Ideal d_plus;    // D_g
  LinearMap alpha; // D_{g^-1} -> D_g in subspace coordinates
};

LocalActionSlice make_slice(const Algebra& base, const Subspace& d_minus,
                            const Subspace& d_plus, const LinearMap& alpha);
LocalActionSlice slice_of(const PartialAction& pa, int g);

/// Condition (X): alpha(alpha^{-1}(a b) c) = a alpha(alpha^{-1}(b) c) for a, c
/// over the base and b over D_g; trilinear, so basis triples decide it.
struct ConditionX {
  bool holds = false;
  std::size_t a = 0, b = 0, c = 0;  // witness basis indices when !holds
  Vec lhs, rhs;                     // the two sides at the witness
  std::string witness;
};

ConditionX condition_x_check(const LocalActionSlice& slice);

}  // namespace pact
