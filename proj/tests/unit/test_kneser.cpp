#include <doctest.h>

#include "ekrlab/kneser.hpp"
#include "oracles.hpp"

using namespace ekrlab;

namespace {

oracle::Adjacency product_adjacency(const ProductGraph& g) {
  oracle::Adjacency adj(g.size(), std::vector<bool>(g.size(), false));
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) {
      const auto& u = g.vertices[i];
      const auto& v = g.vertices[j];
      adj[i][j] = u.left != v.left && (u.left & v.left) == 0 && u.right != v.right && (u.right & v.right) == 0;
    }
  }
  return adj;
}

}  // namespace

TEST_SUITE("kneser") {
  TEST_CASE("Kneser graph examples") {
    const KneserGraph p = kneser(5, 2);
    CHECK(p.size() == 10);
    CHECK(p.edge_count() == 15);
    CHECK(kneser(4, 2).edge_count() == 3);
    CHECK(kneser(3, 2).edge_count() == 0);
    CHECK(kneser(3, 2).size() == 3);
    CHECK(kneser(4, 0).size() == 1);
    CHECK(kneser(4, 4).edge_count() == 0);
    CHECK_THROWS_AS(kneser(3, 4), ParamError);
    CHECK_THROWS_AS(kneser(0, 0), ParamError);
    CHECK_THROWS_AS(kneser(63, 2), ParamError);
  }

  TEST_CASE("solver graph of a Kneser graph matches its adjacency") {
    const KneserGraph g = kneser(6, 2);
    const IntersectionGraph ig = to_graph(g);
    CHECK(ig.size() == g.size());
    CHECK(ig.edge_count() == g.edge_count());
    for (std::size_t i = 0; i < g.size(); ++i) {
      for (std::size_t j = 0; j < g.size(); ++j) CHECK(ig.adjacent(i, j) == g.adjacent(i, j));
    }
  }

  TEST_CASE("independence formula examples") {
    CHECK(alpha_kneser_formula(5, 2) == 4);
    CHECK(alpha_kneser_formula(3, 2) == 3);
    CHECK(alpha_kneser_formula(9, 4) == 56);
    CHECK(alpha_kneser_formula(4, 0) == 1);
    CHECK(oracle::alpha(oracle::disjointness(kneser(5, 2).vertices)) == 4);
  }

  TEST_CASE("independence formula agrees with the solver for n <= 9, k <= 4") {
    for (int n = 1; n <= 9; ++n) {
      for (int k = 1; k <= std::min(n, 4); ++k) {
        const MisResult r = max_independent_set(to_graph(kneser(n, k)), Budget{});
        CHECK(r.proved);
        CHECK(r.alpha == alpha_kneser_formula(n, k));
      }
    }
  }

  TEST_CASE("product examples") {
    const ProductGraph a = product(kneser(5, 2), kneser(4, 1));
    CHECK(a.size() == 40);
    CHECK(a.vertices.front() == ProductVertex{mask_of({1, 2}), mask_of({1})});
    CHECK(a.vertices[1] == ProductVertex{mask_of({1, 2}), mask_of({2})});
    const ProductGraph b = product(kneser(3, 2), kneser(4, 2));
    CHECK(to_graph(b).edge_count() == 0);
    const ProductGraph c = product(kneser(4, 2), kneser(4, 2));
    CHECK(c.size() == 36);
    const IntersectionGraph ic = to_graph(c);
    for (std::size_t i = 0; i < ic.size(); ++i) CHECK(ic.degree(i) == 1);
    CHECK_THROWS_AS(product(kneser(40, 1), kneser(30, 1)), ParamError);
    CHECK_THROWS_AS(product(kneser(30, 15), kneser(2, 1)), OverflowError);
  }

  TEST_CASE("product solver graph matches the direct adjacency") {
    const ProductGraph g = product(kneser(5, 2), kneser(4, 1));
    const IntersectionGraph ig = to_graph(g);
    const auto adj = product_adjacency(g);
    for (std::size_t i = 0; i < g.size(); ++i) {
      CHECK(decode_product_vertex(g, ig.vertex(i)) == g.vertices[i]);
      for (std::size_t j = 0; j < g.size(); ++j) CHECK(ig.adjacent(i, j) == adj[i][j]);
    }
  }

  TEST_CASE("product alpha by brute force") {
    const ProductGraph g = product(kneser(5, 2), kneser(4, 1));
    CHECK(oracle::alpha(product_adjacency(g)) == 16);
    CHECK(max_independent_set(to_graph(g), Budget{}).alpha == 16);
  }

  TEST_CASE("closed form examples") {
    CHECK(alpha_product_formula(5, 2, 4, 1) == 16);
    CHECK(alpha_product_formula(5, 3, 4, 1) == 40);
    CHECK(alpha_product_formula(4, 2, 2, 2) == 6);
    // tie m ki = n k takes the first branch; both branches give 6 here
    CHECK(alpha_product_formula(4, 2, 2, 1) == 6);
    CHECK(alpha_product_formula(6, 2, 6, 3) == std::max<std::uint64_t>(5 * 20, 15 * 10));
    CHECK_THROWS_AS(alpha_product_formula(0, 1, 2, 1), ParamError);
  }

  TEST_CASE("closed form agrees with the factor maximum") {
    for (int n = 1; n <= 7; ++n) {
      for (int ki = 1; ki <= n; ++ki) {
        for (int M = 1; M <= 7; ++M) {
          for (int i = 1; i <= M; ++i) {
            const std::uint64_t a = alpha_kneser_formula(n, ki) * oracle::choose(M, i);
            const std::uint64_t b = oracle::choose(n, ki) * alpha_kneser_formula(M, i);
            CHECK(alpha_product_formula(n, ki, M, i) == std::max(a, b));
          }
        }
      }
    }
  }

  TEST_CASE("layer injection") {
    const Params p = Params::make(8, 5, 4);
    const Family one(8, 4, {mask_of({1, 2, 3, 7})});
    const auto img = inject_layer(one, p, 1);
    REQUIRE(img.size() == 1);
    CHECK(img[0] == ProductVertex{mask_of({1, 2, 3}), mask_of({2})});
    CHECK(inject_layer(Family(8, 4), p, 1).empty());
    CHECK_THROWS_AS(inject_layer(one, p, 2), ParamError);
    CHECK_THROWS_AS(inject_layer(one, p, 3), ParamError);

    const Params q = Params::make(9, 5, 4);
    const Family layer = canonical_partition(build_H_t(q, 1), q).layers[1];
    const auto pts = inject_layer(layer, q, 2);
    CHECK(pts.size() == 24);
    const ProductGraph g = product(kneser(5, 2), kneser(4, 2));
    for (std::size_t a = 0; a < pts.size(); ++a) {
      for (std::size_t b = 0; b < pts.size(); ++b) CHECK_FALSE(g.adjacent(pts[a], pts[b]));
    }
  }

  TEST_CASE("injection is injective and reflects disjointness") {
    const Params p = Params::make(9, 5, 4);
    for (int i = 1; i <= p.layers(); ++i) {
      std::vector<Mask> layer;
      for (Mask s : k_subsets(ground_mask(9), 4)) {
        if (cardinality(s & p.inner()) == 4 - i) layer.push_back(s);
      }
      const Family f(9, 4, layer);
      const auto img = inject_layer(f, p, i);
      const ProductGraph g = product(kneser(5, 4 - i), kneser(4, i));
      for (std::size_t a = 0; a < img.size(); ++a) {
        for (std::size_t b = 0; b < img.size(); ++b) {
          if (a != b) CHECK(img[a] != img[b]);
          CHECK(g.adjacent(img[a], img[b]) == (a != b && (layer[a] & layer[b]) == 0));
        }
      }
    }
  }
}
