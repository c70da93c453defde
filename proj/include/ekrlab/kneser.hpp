#pragma once

// Kneser graphs KG(n,k), their direct products, and the layer injection
// that maps one layer of a canonical partition into a product.

#include <cstdint>
#include <vector>

#include "ekrlab/common.hpp"
#include "ekrlab/family.hpp"
#include "ekrlab/solver.hpp"

namespace ekrlab {

/// k-subsets of [n], adjacent when disjoint. Edgeless when n < 2k or k = 0.
struct KneserGraph {
  int n = 0;
  int k = 0;
  std::vector<Mask> vertices;

  std::size_t size() const { return vertices.size(); }
  bool adjacent(std::size_t i, std::size_t j) const { return i != j && (vertices[i] & vertices[j]) == 0; }
  bool adjacent_sets(Mask a, Mask b) const { return a != b && (a & b) == 0; }
  std::size_t edge_count() const;
  bool is_independent(const std::vector<Mask>& sets) const;
};

KneserGraph kneser(int n, int k);

/// Independence number from the Erdős–Ko–Rado theorem (edgeless case: all vertices).
std::uint64_t alpha_kneser_formula(int n, int k);

struct ProductVertex {
  Mask left = 0;   // subset of [n_left]
  Mask right = 0;  // subset of [n_right]
  friend bool operator==(const ProductVertex&, const ProductVertex&) = default;
  friend auto operator<=>(const ProductVertex&, const ProductVertex&) = default;
};

/// Direct product: (a1,b1) ~ (a2,b2) iff a1 ~ a2 and b1 ~ b2.
struct ProductGraph {
  KneserGraph left;
  KneserGraph right;
  std::vector<ProductVertex> vertices;  // left-major

  std::size_t size() const { return vertices.size(); }
  bool adjacent(const ProductVertex& u, const ProductVertex& v) const {
    return left.adjacent_sets(u.left, v.left) && right.adjacent_sets(u.right, v.right);
  }
};

inline constexpr std::size_t kMaxProductVertices = std::size_t{1} << 20;

ProductGraph product(const KneserGraph& g, const KneserGraph& h);

/// Closed form for alpha(KG(n, ki) x KG(M, i)), with m = n + M and k = ki + i.
std::uint64_t alpha_product_formula(int n, int ki, int M, int i);

/// Maps each member F of a layer to (F ∩ [n], {b - n : b ∈ F, b > n}).
std::vector<ProductVertex> inject_layer(const Family& layer, const Params& p, int i);

/// Solver graphs. Both carry the symmetry partition of their ground set.
IntersectionGraph to_graph(const KneserGraph& g);
/// Product vertices are encoded as left | right << n_left.
IntersectionGraph to_graph(const ProductGraph& g);
ProductVertex decode_product_vertex(const ProductGraph& g, Mask code);

}  // namespace ekrlab
