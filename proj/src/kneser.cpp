#include "ekrlab/kneser.hpp"

namespace ekrlab {

std::size_t KneserGraph::edge_count() const {
  std::size_t e = 0;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = i + 1; j < size(); ++j) e += adjacent(i, j) ? 1 : 0;
  }
  return e;
}

bool KneserGraph::is_independent(const std::vector<Mask>& sets) const {
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      if (adjacent_sets(sets[i], sets[j])) return false;
    }
  }
  return true;
}

KneserGraph kneser(int n, int k) {
  if (n < 1 || n > kMaxGround) throw ParamError("Kneser ground size must be in [1, 62]");
  if (k < 0 || k > n) throw ParamError("Kneser subset size must be in [0, n]");
  return KneserGraph{n, k, k_subsets(ground_mask(n), k)};
}

std::uint64_t alpha_kneser_formula(int n, int k) {
  if (n < 1 || k < 0 || k > n) throw ParamError("alpha_kneser_formula needs 0 <= k <= n, n >= 1");
  if (k == 0) return 1;
  return n >= 2 * k ? binomial(n - 1, k - 1) : binomial(n, k);
}

ProductGraph product(const KneserGraph& g, const KneserGraph& h) {
  if (g.n + h.n > kMaxGround) throw ParamError("product ground set exceeds 62 elements");
  const std::uint64_t total = checked_mul(g.size(), h.size());
  if (total > kMaxProductVertices) throw OverflowError("product has too many vertices: " + std::to_string(total));
  ProductGraph out{g, h, {}};
  out.vertices.reserve(static_cast<std::size_t>(total));
  for (Mask a : g.vertices) {
    for (Mask b : h.vertices) out.vertices.push_back({a, b});
  }
  return out;
}

std::uint64_t alpha_product_formula(int n, int ki, int M, int i) {
  if (n < 1 || ki < 1 || M < 1 || i < 1) throw ParamError("alpha_product_formula needs positive arguments");
  if (ki > n || i > M) throw ParamError("alpha_product_formula needs ki <= n and i <= M");
  if (2 * ki <= n && 2 * i <= M) {
    // m >= n k / (k - i) with m = n + M, k = ki + i, compared as integers.
    const long long m = n + M;
    const long long k = ki + i;
    if (m * ki >= static_cast<long long>(n) * k) return checked_mul(binomial(n - 1, ki - 1), binomial(M, i));
    return checked_mul(binomial(n, ki), binomial(M - 1, i - 1));
  }
  return checked_mul(binomial(n, ki), binomial(M, i));
}

std::vector<ProductVertex> inject_layer(const Family& layer, const Params& p, int i) {
  if (layer.m() != p.m() || layer.k() != p.k()) throw ParamError("layer ground parameters do not match (m, k)");
  if (i < 1 || i > p.layers()) throw ParamError("layer index out of range");
  std::vector<ProductVertex> out;
  out.reserve(layer.size());
  for (Mask f : layer.members()) {
    const Mask a = f & p.inner();
    const Mask b = f & p.outer();
    if (cardinality(a) != p.k() - i || cardinality(b) != i) {
      throw ParamError("member " + format_braced(f) + " does not belong to layer " + std::to_string(i));
    }
    out.push_back({a, b >> p.n()});
  }
  return out;
}

IntersectionGraph to_graph(const KneserGraph& g) {
  IntersectionGraph out(g.vertices, g.n);
  out.set_symmetry({ground_mask(g.n)});
  return out;
}

ProductVertex decode_product_vertex(const ProductGraph& g, Mask code) {
  return {code & ground_mask(g.left.n), code >> g.left.n};
}

IntersectionGraph to_graph(const ProductGraph& g) {
  std::vector<Mask> codes;
  codes.reserve(g.size());
  for (const auto& v : g.vertices) codes.push_back(v.left | (v.right << g.left.n));
  const int shift = g.left.n;
  const Mask low = ground_mask(shift);
  IntersectionGraph out(std::move(codes), g.left.n + g.right.n, [&](Mask a, Mask b) {
    return g.adjacent({a & low, a >> shift}, {b & low, b >> shift});
  });
  out.set_symmetry({low, ground_mask(g.right.n) << shift});
  return out;
}

}  // namespace ekrlab
