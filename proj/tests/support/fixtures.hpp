#pragma once

#include <random>
#include <string>

#include "pact/envelope.hpp"
#include "pact/preps.hpp"

namespace pact::fixtures {

/// Four-dimensional unital algebra on {1, t, u, v} with tv = vt = u and all
/// other products of t, u, v zero.
inline Algebra counter_algebra(const Field& f) {
  MulTable t(f, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    t.set_basis_product(0, i, unit_vec(f, 4, i));
    t.set_basis_product(i, 0, unit_vec(f, 4, i));
  }
  t.set_basis_product(1, 3, unit_vec(f, 4, 2));
  t.set_basis_product(3, 1, unit_vec(f, 4, 2));
  return Algebra(f, 4, std::move(t), unit_vec(f, 4, 0), {"1", "t", "u", "v"});
}

/// Z/2 acting partially with D_g = span{u, v} and alpha_g the u <-> v swap.
inline PartialAction counter_action(const Field& f) {
  Algebra a = counter_algebra(f);
  Ideal iv = Ideal::generated(a, {a.basis_vec(3)});
  PartialActionData d;
  d.group = Group::cyclic(2);
  d.base = a;
  d.domains = {Subspace::full(f, 4), iv.space()};
  Mat swap(f, 2, 2);
  swap.at(0, 1) = Scalar::one(f);
  swap.at(1, 0) = Scalar::one(f);
  d.maps = {LinearMap::identity(f, 4), LinearMap(2, 2, swap)};
  return PartialAction::make(std::move(d));
}

/// Z/2 on K^3 swapping the first two coordinates.
inline GlobalAction k3_swap_action(const Field& f) {
  Algebra b = Algebra::product_field(f, 3);
  Mat swap(f, 3, 3);
  swap.at(0, 1) = Scalar::one(f);
  swap.at(1, 0) = Scalar::one(f);
  swap.at(2, 2) = Scalar::one(f);
  GlobalActionData d;
  d.group = Group::cyclic(2);
  d.algebra = b;
  d.autos = {LinearMap::identity(f, 3), LinearMap(3, 3, swap)};
  return GlobalAction::make(std::move(d));
}

/// Restriction of the swap action to the ideal on coordinates {1, 3}.
inline RestrictedAction k3_restriction(const Field& f) {
  GlobalAction beta = k3_swap_action(f);
  Ideal a(beta.algebra(), Subspace::span(f, 3, {unit_vec(f, 3, 0), unit_vec(f, 3, 2)}));
  return restrict_global(beta, a);
}

/// The T(3, K) slice: D_minus = span{e12, e13}, D_plus = span{e13, e23},
/// alpha(x e12 + y e13) = y e13 + x e23.
inline LocalActionSlice t3_slice(const Field& f) {
  Algebra t3 = Algebra::upper_triangular(f, 3);
  // basis order: e11 e12 e13 e22 e23 e33 -> indices 1, 2, 4
  Subspace dm = Subspace::span(f, 6, {unit_vec(f, 6, 1), unit_vec(f, 6, 2)});
  Subspace dp = Subspace::span(f, 6, {unit_vec(f, 6, 2), unit_vec(f, 6, 4)});
  Mat m(f, 2, 2);
  m.at(0, 1) = Scalar::one(f);  // e12 -> e23 (second basis vector of dp)
  m.at(1, 0) = Scalar::one(f);  // e13 -> e13 (first)
  return make_slice(t3, dm, dp, LinearMap(2, 2, m));
}

/// Deterministic pseudo-random restricted partial actions over semiprime
/// bases: a block algebra (K, M_2 or QS_3) copied over the points of a
/// permutation action of a small group, restricted to a subset of blocks,
/// optionally twisted by an inner automorphism.
struct CorpusCase {
  RestrictedAction ra;
  std::string descr;
};

class CorpusGen {
public:
  explicit CorpusGen(std::uint32_t seed) : rng_(seed) {}

  CorpusCase next_k_blocks() { return make_case(0); }
  CorpusCase next_m2_blocks() { return make_case(1); }
  CorpusCase next_qs3_blocks() { return make_case(2); }

  /// Resamples until the crossed product stays within the requested size
  /// (rational cases get expensive fast).
  CorpusCase next_bounded(int block_type, std::size_t max_crossed_dim) {
    for (;;) {
      CorpusCase c = make_case(block_type);
      std::size_t cp_dim = 0;
      for (std::size_t e = 0; e < c.ra.action.group().order(); ++e)
        cp_dim += c.ra.action.domain(static_cast<int>(e)).dim();
      if (cp_dim <= max_crossed_dim) return c;
    }
  }

private:
  std::mt19937 rng_;

  std::size_t pick(std::size_t n) { return rng_() % n; }

  Group pick_group() {
    switch (pick(4)) {
      case 0: return Group::cyclic(2);
      case 1: return Group::cyclic(3);
      case 2: return Group::cyclic(4);
      default: return Group::klein_four();
    }
  }

  // permutation action of g on points = disjoint union of coset spaces
  static std::vector<std::vector<int>> coset_action(const Group& g,
                                                    const std::vector<int>& subgroup) {
    // left cosets xH, action h . (xH) = (hx)H
    std::vector<std::vector<int>> cosets;
    std::vector<int> seen(g.order(), 0);
    for (std::size_t x = 0; x < g.order(); ++x) {
      if (seen[x]) continue;
      std::vector<int> coset;
      for (int h : subgroup) {
        int e = g.mul(static_cast<int>(x), h);
        coset.push_back(e);
        seen[e] = 1;
      }
      std::sort(coset.begin(), coset.end());
      cosets.push_back(std::move(coset));
    }
    std::vector<std::vector<int>> perm(g.order(), std::vector<int>(cosets.size()));
    for (std::size_t e = 0; e < g.order(); ++e)
      for (std::size_t c = 0; c < cosets.size(); ++c) {
        int moved = g.mul(static_cast<int>(e), cosets[c][0]);
        for (std::size_t d = 0; d < cosets.size(); ++d)
          if (std::binary_search(cosets[d].begin(), cosets[d].end(), moved))
            perm[e][c] = static_cast<int>(d);
      }
    return perm;
  }

  std::vector<int> pick_subgroup(const Group& g) {
    // cyclic subgroup generated by a random element
    int x = static_cast<int>(pick(g.order()));
    std::vector<int> sub{g.identity()};
    int cur = x;
    while (cur != g.identity()) {
      sub.push_back(cur);
      cur = g.mul(cur, x);
    }
    std::sort(sub.begin(), sub.end());
    return sub;
  }

  Vec random_invertible(const Algebra& block) {
    const Field& f = block.field();
    for (;;) {
      Vec w = zero_vec(f, block.dim());
      for (std::size_t i = 0; i < block.dim(); ++i)
        w[i] = Scalar::of(f, static_cast<long>(pick(5)) - 2);
      // left multiplication must be invertible
      Mat lw(f, block.dim(), block.dim());
      for (std::size_t i = 0; i < block.dim(); ++i)
        lw.set_row(i, block.mul(w, block.basis_vec(i)));
      if (rank(lw) == block.dim()) return w;
    }
  }

  CorpusCase make_case(int block_type) {
    Field f = Field::rationals();
    if (block_type != 2) {
      switch (pick(4)) {
        case 0: f = Field::rationals(); break;
        case 1: f = Field::prime(2); break;
        case 2: f = Field::prime(3); break;
        default: f = Field::prime(5); break;
      }
    }
    Algebra block = block_type == 0   ? Algebra::product_field(f, 1)
                    : block_type == 1 ? Algebra::matrix(f, 2)
                                      : Algebra::group_algebra(f, Group::symmetric(3));
    Group g = pick_group();

    // k-block cases may afford more points than the heavier blocks
    std::size_t max_points = block_type == 0 ? 6 : (block_type == 1 ? 4 : 2);
    std::vector<std::vector<int>> perm;
    for (;;) {
      perm = coset_action(g, pick_subgroup(g));
      if (perm[0].size() <= max_points) break;
    }
    std::size_t points = perm[0].size();

    Algebra ambient = Algebra::function_algebra(block, points);
    const std::size_t bd = block.dim();

    // beta_g: permute blocks, then conjugate inside each block
    std::vector<Vec> twist;
    bool use_twist = block_type != 0 && pick(2) == 0;
    for (std::size_t p = 0; p < points; ++p)
      twist.push_back(use_twist ? random_invertible(block)
                                : *block.unit());
    auto conj_map = [&](std::size_t p) {
      // x -> w x w^{-1} on block p, as a bd x bd table
      Mat lw(f, bd, bd), rw(f, bd, bd);
      for (std::size_t i = 0; i < bd; ++i)
        lw.set_row(i, block.mul(twist[p], block.basis_vec(i)));
      LinearMap left(bd, bd, lw);
      for (std::size_t i = 0; i < bd; ++i)
        rw.set_row(i, block.mul(block.basis_vec(i), twist[p]));
      LinearMap right(bd, bd, rw);
      return right.inverse().then(left);  // x w^{-1} then w (x w^{-1})
    };
    std::vector<LinearMap> conj;
    for (std::size_t p = 0; p < points; ++p) conj.push_back(conj_map(p));

    GlobalActionData gd;
    gd.group = g;
    gd.algebra = ambient;
    for (std::size_t e = 0; e < g.order(); ++e) {
      Mat t(f, ambient.dim(), ambient.dim());
      for (std::size_t p = 0; p < points; ++p) {
        std::size_t dest = static_cast<std::size_t>(perm[e][p]);
        // gamma beta gamma^{-1}: undo the twist at p, move, twist at dest
        LinearMap local = conj[p].inverse().then(conj[dest]);
        for (std::size_t i = 0; i < bd; ++i) {
          Vec img = local.apply(unit_vec(f, bd, i));
          for (std::size_t k = 0; k < bd; ++k) t.at(p * bd + i, dest * bd + k) = img[k];
        }
      }
      gd.autos.push_back(LinearMap(ambient.dim(), ambient.dim(), std::move(t)));
    }
    GlobalAction beta = GlobalAction::make(std::move(gd));

    // restrict to a random nonempty subset of blocks
    std::size_t subset_mask = 1 + pick((1u << points) - 1);
    std::vector<Vec> gens;
    for (std::size_t p = 0; p < points; ++p)
      if (subset_mask & (1u << p))
        for (std::size_t i = 0; i < bd; ++i) gens.push_back(unit_vec(f, ambient.dim(), p * bd + i));
    Ideal a(ambient, Subspace::span(f, ambient.dim(), gens));

    std::string descr = std::string(block_type == 0   ? "K-blocks"
                                    : block_type == 1 ? "M2-blocks"
                                                      : "QS3-blocks") +
                        " over " + f.str() + ", |G|=" + std::to_string(g.order()) +
                        ", points=" + std::to_string(points) +
                        ", mask=" + std::to_string(subset_mask) + (use_twist ? ", twisted" : "");
    return CorpusCase{restrict_global(beta, a), descr};
  }
};

}  // namespace pact::fixtures
