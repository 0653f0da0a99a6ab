#pragma once

#include "pact/crossed.hpp"

namespace pact {

/// Global action (B, beta) together with the embedding phi : A -> B
/// realizing the partial action as an admissible restriction.
struct EnvelopingAction {
  PartialAction pa;
  GlobalAction ambient;
  AlgebraMorphism embed;  // A -> B
};

/// Existence criterion: every D_g has a unit (base unital).
bool has_enveloping(const PartialAction& pa);

struct EnvelopeReport {
  bool embed_ok = false;       // phi injective multiplicative
  bool image_ideal = false;    // phi(A) ideal of B
  bool cond_i = false;         // phi(D_g) = phi(A) cap beta_g(phi(A))
  bool cond_ii = false;        // phi o alpha_g = beta_g o phi on D_{g^-1}
  bool cond_iii = false;       // B generated by the translates of phi(A)
  std::vector<std::string> violations;
  bool ok() const { return embed_ok && image_ideal && cond_i && cond_ii && cond_iii; }
};

EnvelopeReport verify_enveloping(const PartialAction& pa, const GlobalAction& beta,
                                 const AlgebraMorphism& embed);

/// Construction inside the function algebra F(G, A): beta_g permutes blocks
/// by left translation, phi(a)|_g = alpha_{g^-1}(a 1_g), and B is the
/// subalgebra generated by the translates of phi(A). The result is verified
/// in full, including the identity
/// alpha_{h^-1 g}(a 1_{g^-1 h}) = alpha_{h^-1}(alpha_g(a) 1_h).
EnvelopingAction build_enveloping(const PartialAction& pa);

/// Uniqueness: the map beta1_g(phi1(a)) -> beta2_g(phi2(a)) extended
/// linearly; throws if it fails to be a well-defined equivariant
/// isomorphism (cannot happen for verified enveloping data).
AlgebraMorphism compare_envelopings(const PartialAction& pa, const EnvelopingAction& e1,
                                    const EnvelopingAction& e2);

/// a_g d_g -> phi(a_g) d_g : A x| G -> B x| G, injective and multiplicative.
struct CrossedEmbedding {
  CrossedProduct source;      // A x| G
  CrossedProduct target;      // B x| G
  LinearMap map;
  bool injective = false;
  bool multiplicative = false;
};

CrossedEmbedding embed_crossed(const PartialAction& pa, const EnvelopingAction& e);

/// Morita context (R, R', M, N, tau, tau') for R = A x| G, R' = B x| G with
/// M = sums of c_g d_g, c_g in phi(A), and N = sums with c_g in
/// beta_g(phi(A)); the pairings are multiplication in B x| G.
struct MoritaContext {
  CrossedEmbedding emb;
  Subspace m;  // in B x| G coordinates
  Subspace n;
  bool m_right_ideal = false;
  bool n_left_ideal = false;
  bool r_m_closed = false;   // (A x| G) M inside M
  bool n_r_closed = false;   // N (A x| G) inside N
  bool mn_equals_r = false;  // span(MN) = embedded A x| G
  bool nm_equals_rp = false; // span(NM) = B x| G
  bool compat = false;       // tau/tau' compatibility identities
  bool ok() const {
    return m_right_ideal && n_left_ideal && r_m_closed && n_r_closed && mn_equals_r &&
           nm_equals_rp && compat;
  }
};

MoritaContext morita_context(const PartialAction& pa, const EnvelopingAction& e);

}  // namespace pact
