#pragma once

#include <cstdint>

#include "pact/crossed.hpp"

namespace pact {

/// Map pi : G -> B (B unital) with pi(1) = 1 and
///   pi(g) pi(h) pi(h^-1) = pi(gh) pi(h^-1),
///   pi(g^-1) pi(g) pi(h) = pi(g^-1) pi(gh).
struct PartialRep {
  Group group;
  Algebra target;
  std::vector<Vec> images;  // per group element
};

struct PrepReport {
  bool ok = false;
  std::string witness;
};

PrepReport verify_partial_rep(const PartialRep& pi);

/// eps_g = pi(g) pi(g^-1): commuting idempotents with
/// pi(g) eps_h = eps_{gh} pi(g) and eps_h pi(g) = pi(g) eps_{g^-1 h}.
struct EpsilonFamily {
  std::vector<Vec> eps;
  bool idempotent = false;
  bool commuting = false;
  bool one_star = false;
  bool ok() const { return idempotent && commuting && one_star; }
};

EpsilonFamily epsilon_family(const PartialRep& pi);

/// The partial action alpha^pi on the subalgebra A generated by the eps_g,
/// with D_g = eps_g A and alpha^pi_g(a) = pi(g) a pi(g^-1).
struct InducedAction {
  PartialAction action;    // on A in its own coordinates
  Algebra ambient;         // the representation target
  LinearMap include;       // A coords -> target coords
  std::vector<Vec> eps_in_a;  // eps_g in A coordinates
};

InducedAction induced_action(const PartialRep& pi);

/// pi_alpha : g -> 1_g d_g into the crossed product, which must be
/// associative and have a complete unit family.
PartialRep pi_alpha(const PartialAction& pa, const CrossedProduct& cp);
PartialRep pi_alpha(const PartialAction& pa);

/// phi_alpha : A' -> A on the subalgebra A' of A x| G generated by the
/// 1_g d_1, intertwining alpha^{pi_alpha} with alpha; `equivalence` is set
/// when A is generated by the units (then the actions are equivalent).
struct PhiAlpha {
  InducedAction induced;      // action of pi_alpha on A'
  Algebra a_prime;            // = induced.action.base()
  AlgebraMorphism phi;        // A' -> A
  bool intertwines = false;
  bool units_generate = false;
  bool equivalence = false;
};

PhiAlpha phi_alpha_map(const PartialAction& pa);

/// phi_pi : A x|_{alpha^pi} G -> B, sum a_g d_g -> sum a_g pi(g); verified
/// multiplicative with phi_pi o pi_{alpha^pi} = pi.
struct PhiPi {
  CrossedProduct crossed;
  LinearMap map;          // crossed coords -> target coords
  bool multiplicative = false;
  bool composes_to_pi = false;
  bool bijective = false;
};

PhiPi phi_pi(const PartialRep& pi, const InducedAction& ind);

/// Injectivity via a conditional expectation E : B -> B that kills the
/// phi-images of all a d_g with g != 1 and fixes those with g = 1.
/// Applicable when each right annihilator of D_g in D_g vanishes and the
/// restriction of phi to A is injective.
struct ExpectationResult {
  bool applicable = false;
  std::string why_not;
  bool injective = false;
};

ExpectationResult expectation_injectivity(const CrossedProduct& cp, const LinearMap& phi,
                                          const Algebra& target, const LinearMap& e);

/// Exel's inverse semigroup S(G) in the pair model: elements (E, g) with
/// {1, g} <= E <= G, product (E, g)(F, h) = (E u gF, gh), generators
/// [g] = ({1,g}, g).
class ExelSemigroup {
public:
  explicit ExelSemigroup(const Group& g);  // |G| <= 6

  const Group& group() const { return g_; }
  std::size_t size() const { return elems_.size(); }
  /// element = (mask, g); bit h of mask set iff h in E
  std::pair<std::uint32_t, int> element(std::size_t idx) const { return elems_[idx]; }
  std::size_t index_of(std::uint32_t mask, int g) const;
  std::size_t mul(std::size_t a, std::size_t b) const;
  std::size_t generator(int g) const;  // [g]
  std::size_t identity() const;        // [1]
  std::string label(std::size_t idx) const;

private:
  Group g_;
  std::vector<std::pair<std::uint32_t, int>> elems_;
};

ExelSemigroup exel_semigroup(const Group& g);

/// K_par(G) = K S(G) as an algebra on the semigroup basis.
Algebra kpar_algebra(const Field& f, const ExelSemigroup& s);

/// Independent rewriting oracle: congruence closure of all words over the
/// generators [g] under the defining relations
///   a) [g^-1][g][h] = [g^-1][gh]
///   b) [g][h][h^-1] = [gh][h^-1]
///   c) [1] = 1
/// Returns the number of congruence classes; `consistent_with` additionally
/// confirms that evaluation into the pair model is constant on classes and
/// a bijection onto it.
struct ExelOracle {
  std::size_t classes = 0;
  bool matches_pair_model = false;
};

ExelOracle exel_oracle(const Group& g, const ExelSemigroup& s);

/// tilde pi : g -> [g] in K_par(G), the induced action, and the mutually
/// inverse maps phi and psi of the crossed-product structure on K_par(G).
struct KparIso {
  ExelSemigroup s;
  Algebra kpar;
  PartialRep pi_tilde;
  InducedAction induced;
  PhiPi phi;             // A x| G -> K_par(G)
  LinearMap psi;         // K_par(G) -> A x| G, [g] -> eps_g d_g
  bool psi_matches_generators = false;
  bool mutually_inverse = false;
};

KparIso kpar_iso(const Field& f, const Group& g);

/// Elementary partial representation attached to a subset A of G containing
/// 1: groupoid of translates, its algebra K Gamma, the isomorphism tau onto
/// M_n(KH), the partial representation lambda into K Gamma, and pi = tau o
/// lambda.
struct ElementaryRepData {
  Group group;
  GroupSubset a_set;
  TranslateOrbit orbit;
  SubgroupAsGroup h;            // stabilizer as abstract group
  Algebra kgamma;               // groupoid algebra on morphism basis
  std::vector<std::pair<std::size_t, int>> gamma_basis;  // (object index, g)
  Algebra target;               // M_n(KH)
  AlgebraMorphism tau;          // K Gamma -> M_n(KH), verified iso
  std::vector<Vec> lambda;      // lambda(g) in K Gamma coordinates
  PartialRep pi;                // tau o lambda
  std::size_t n() const { return orbit.translates.size(); }
  /// flat index of e_{ij}(h) in the target basis (i, j zero-based)
  std::size_t unit_index(std::size_t i, std::size_t j, std::size_t hidx) const {
    return (i * n() + j) * h.group.order() + hidx;
  }
};

ElementaryRepData elementary_rep(const Field& f, const GroupSubset& a);

/// K^n x|_{alpha^pi} G -> M_n(KH): phi_pi with surjectivity certified by
/// hitting every matrix unit and injectivity by the diagonal-trace
/// expectation.
struct IsoBis {
  InducedAction induced;
  PhiPi phi;
  bool hits_all_units = false;
  ExpectationResult expectation;
  bool isomorphism = false;
};

IsoBis iso_bis(const ElementaryRepData& erd);

/// g with alpha^pi_g(e_ii) = e_jj (exists for all pairs: the action is
/// transitive on the minimal idempotents).
int transitivity_witness(const ElementaryRepData& erd, const InducedAction& ind,
                         std::size_t i, std::size_t j);

/// Elementary grading of M_n(KH) by G: deg e_{ij}(h) = r_i h r_j^{-1} in
/// terms of the stored translate representatives. Verified to make phi_pi a
/// graded isomorphism.
struct ElementaryGrading {
  std::vector<int> degree;      // per target basis index
  bool phi_graded = false;      // image of each a d_g homogeneous of degree g
  bool multiplicative = false;  // deg(xy) = deg(x) deg(y) on nonzero products
};

ElementaryGrading elementary_grading(const ElementaryRepData& erd, const IsoBis& iso);

/// f_S = prod_{g in S} 1_g prod_{g notin S} (1 - 1_g) for a partial action
/// on K^n with complete unit family.
Vec f_s_product(const PartialAction& pa, const UnitFamily& uf, const std::vector<int>& s);

/// Inverse construction of the correspondence: from a partial action on the
/// product field K^n (with St(A_1) of index n in A_1) back to an elementary
/// representation with the same partial action.
struct ElementaryCorrespondence {
  std::vector<std::vector<int>> a_sets;  // A_i(alpha) per coordinate
  ElementaryRepData erd;                 // built from A_1(alpha)
  std::vector<std::size_t> coord_of_translate;  // translate index -> pa coordinate
  bool f_checks = false;        // f_{A_i} = e_ii, f_S = 0 otherwise, star4
  bool action_equal = false;    // alpha^{pi'} == alpha exactly (after alignment)
  bool reps_equivalent = false; // phi_{pi'} o pi_alpha = pi'
};

ElementaryCorrespondence action_to_elementary(const PartialAction& pa);

}  // namespace pact
