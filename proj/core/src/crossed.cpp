#include "pact/crossed.hpp"

#include <cstdlib>
#include <thread>

namespace pact {

namespace {

unsigned thread_count(unsigned requested) {
  if (requested) return requested;
  if (const char* env = std::getenv("PACT_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

}  // namespace

CrossedProduct CrossedProduct::build(const PartialAction& pa) {
  const Group& g = pa.group();
  const Algebra& a = pa.base();
  const Field& f = a.field();

  std::vector<std::size_t> offsets;
  std::vector<std::pair<int, std::size_t>> labels;
  std::size_t dim = 0;
  for (std::size_t e = 0; e < g.order(); ++e) {
    offsets.push_back(dim);
    for (std::size_t i = 0; i < pa.domain(static_cast<int>(e)).dim(); ++i)
      labels.emplace_back(static_cast<int>(e), i);
    dim += pa.domain(static_cast<int>(e)).dim();
  }

  MulTable t(f, dim);
  for (std::size_t x = 0; x < dim; ++x)
    for (std::size_t y = 0; y < dim; ++y) {
      auto [ge, i] = labels[x];
      auto [he, j] = labels[y];
      int gh = g.mul(ge, he);
      Vec ag = pa.domain(ge).basis_row(i);
      Vec bh = pa.domain(he).basis_row(j);
      // alpha_g(alpha_{g^-1}(a_g) b_h)
      Vec inner = a.mul(pa.apply(g.inv(ge), ag), bh);
      Vec prod = pa.apply(ge, inner);
      Vec coords = pa.domain(gh).coordinates(prod);
      Vec row = zero_vec(f, dim);
      for (std::size_t k = 0; k < coords.size(); ++k) row[offsets[gh] + k] = coords[k];
      t.set_basis_product(x, y, std::move(row));
    }
  return CrossedProduct(pa, std::move(t), std::move(offsets), std::move(labels));
}

std::string CrossedProduct::label_str(std::size_t idx) const {
  auto [ge, i] = labels_[idx];
  return "(" + pa_.group().label(ge) + "," + std::to_string(i + 1) + ")";
}

Vec CrossedProduct::embed_base_vec(const Vec& a) const {
  return delta_vec(pa_.group().identity(), a);
}

Vec CrossedProduct::delta_vec(int g, const Vec& a) const {
  Vec coords = pa_.domain(g).coordinates(a);
  Vec out = zero_vec(field(), dim());
  for (std::size_t k = 0; k < coords.size(); ++k) out[offsets_[g] + k] = coords[k];
  return out;
}

std::optional<std::array<std::size_t, 3>> CrossedProduct::nonassoc_witness(
    unsigned threads) const {
  std::size_t d = dim();
  unsigned T = thread_count(threads);
  if (T > d) T = static_cast<unsigned>(d ? d : 1);

  auto scan = [&](std::size_t x_begin, std::size_t x_end)
      -> std::optional<std::array<std::size_t, 3>> {
    for (std::size_t x = x_begin; x < x_end; ++x)
      for (std::size_t y = 0; y < d; ++y) {
        const Vec& xy = table_.basis_product(x, y);
        for (std::size_t z = 0; z < d; ++z) {
          Vec lhs = zero_vec(field(), d);
          for (std::size_t k = 0; k < d; ++k)
            if (!xy[k].is_zero()) add_scaled(lhs, xy[k], table_.basis_product(k, z));
          const Vec& yz = table_.basis_product(y, z);
          Vec rhs = zero_vec(field(), d);
          for (std::size_t k = 0; k < d; ++k)
            if (!yz[k].is_zero()) add_scaled(rhs, yz[k], table_.basis_product(x, k));
          if (!(lhs == rhs)) return std::array<std::size_t, 3>{x, y, z};
        }
      }
    return std::nullopt;
  };

  if (T <= 1) return scan(0, d);

  // partition the first index; merge to the minimal witness
  std::vector<std::optional<std::array<std::size_t, 3>>> results(T);
  std::vector<std::thread> pool;
  std::size_t chunk = (d + T - 1) / T;
  for (unsigned t = 0; t < T; ++t) {
    std::size_t b = t * chunk, e = std::min(d, b + chunk);
    pool.emplace_back([&, t, b, e] { results[t] = scan(b, e); });
  }
  for (auto& th : pool) th.join();
  for (unsigned t = 0; t < T; ++t)
    if (results[t]) return results[t];
  return std::nullopt;
}

bool is_associative(const CrossedProduct& cp) { return !cp.nonassoc_witness().has_value(); }

Algebra CrossedProduct::as_algebra() const {
  std::optional<Vec> unit;
  if (pa_.base().is_unital()) unit = embed_base_vec(*pa_.base().unit());
  std::vector<std::string> names;
  for (std::size_t i = 0; i < dim(); ++i) names.push_back(label_str(i));
  try {
    // the Algebra constructor is the associativity gate
    return Algebra(field(), dim(), table_, std::move(unit), std::move(names));
  } catch (const NonAssociativeError& e) {
    throw Error(std::string("crossed product is not associative; witness (") +
                label_str(e.triple[0]) + "," + label_str(e.triple[1]) + "," +
                label_str(e.triple[2]) + ")");
  }
}

BaseEmbedding embed_base(const CrossedProduct& cp) {
  const Algebra& a = cp.action().base();
  Mat table(cp.field(), a.dim(), cp.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    table.set_row(i, cp.embed_base_vec(a.basis_vec(i)));
  BaseEmbedding out{LinearMap(a.dim(), cp.dim(), std::move(table)), false, false};
  out.injective = rank(out.map.table()) == a.dim();
  out.multiplicative = true;
  for (std::size_t i = 0; i < a.dim() && out.multiplicative; ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Vec lhs = out.map.apply(a.table().basis_product(i, j));
      Vec rhs = cp.mul(out.map.apply(a.basis_vec(i)), out.map.apply(a.basis_vec(j)));
      if (!(lhs == rhs)) {
        out.multiplicative = false;
        break;
      }
    }
  return out;
}

ConditionX condition_x_for(const PartialAction& pa, int g) {
  return condition_x_check(slice_of(pa, g));
}

bool associativity_via_condition_x(const PartialAction& pa) {
  for (std::size_t e = 0; e < pa.group().order(); ++e)
    if (!condition_x_for(pa, static_cast<int>(e)).holds) return false;
  return true;
}

}  // namespace pact
