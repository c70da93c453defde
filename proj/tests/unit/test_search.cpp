#include <doctest.h>

#include <set>

#include "ekrlab/search.hpp"
#include "oracles.hpp"

using namespace ekrlab;

namespace {

std::vector<Mask> members(const Family& f) { return {f.members().begin(), f.members().end()}; }

std::set<std::vector<Mask>> full_set(const SearchOutcome& s) {
  std::set<std::vector<Mask>> out;
  for (const MaximumFamily& mf : *s.maxima) out.insert(members(mf.family));
  return out;
}

const Budget kBudget{};

}  // namespace

TEST_SUITE("search") {
  TEST_CASE("alpha examples") {
    CHECK(alpha_mnk(Params::make(7, 4, 3), kBudget).alpha == 13);
    CHECK(alpha_mnk(Params::make(10, 5, 3), kBudget).alpha == 10);
    CHECK(alpha_mnk(Params::make(9, 5, 4), kBudget).alpha == 53);
    CHECK(alpha_mnk(Params::make(4, 3, 2), kBudget).alpha == 3);
  }

  TEST_CASE("witness is a proved (m,n,k) family") {
    for (int m = 3; m <= 10; ++m) {
      for (int k = 2; k <= 4; ++k) {
        for (int n = k; n < 2 * k; ++n) {
          if (2 * k > m) continue;
          const Params p = Params::make(m, n, k);
          const SearchOutcome s = alpha_mnk(p, kBudget);
          CHECK(s.proved);
          CHECK(s.alpha >= h_value(p));
          CHECK(s.witness.size() == s.alpha);
          CHECK(is_mnk_family(s.witness, p));
        }
      }
    }
  }

  TEST_CASE("alpha agrees with the brute force oracle") {
    for (auto [m, n, k] : std::vector<std::array<int, 3>>{{4, 3, 2}, {5, 3, 2}, {6, 3, 2}, {8, 3, 2}, {6, 4, 3}, {7, 4, 3}, {6, 5, 3}, {7, 5, 3}}) {
      CAPTURE(m);
      CAPTURE(n);
      CAPTURE(k);
      const auto mx = oracle::mnk_maxima(m, n, k);
      CHECK(alpha_mnk(Params::make(m, n, k), kBudget).alpha == mx.front().size());
    }
  }

  TEST_CASE("full enumeration matches the oracle") {
    for (auto [m, n, k] : std::vector<std::array<int, 3>>{{4, 3, 2}, {6, 4, 3}, {7, 4, 3}, {6, 3, 2}, {7, 5, 3}}) {
      CAPTURE(m);
      CAPTURE(n);
      CAPTURE(k);
      const auto mx = oracle::mnk_maxima(m, n, k);
      const SearchOutcome s = enumerate_max_mnk(Params::make(m, n, k), EnumerationMode::full, kBudget);
      REQUIRE(s.maxima.has_value());
      CHECK(s.maxima_complete);
      CHECK(s.maximum_count == mx.size());
      CHECK(full_set(s) == std::set<std::vector<Mask>>(mx.begin(), mx.end()));
    }
  }

  TEST_CASE("enumeration counts") {
    CHECK(enumerate_max_mnk(Params::make(4, 3, 2), EnumerationMode::full, kBudget).maximum_count == 1);
    CHECK(enumerate_max_mnk(Params::make(6, 4, 3), EnumerationMode::full, kBudget).maximum_count == 64);
    CHECK(enumerate_max_mnk(Params::make(7, 4, 3), EnumerationMode::full, kBudget).maximum_count == 8);
  }

  TEST_CASE("orbit mode sums to the full count") {
    for (auto [m, n, k] : std::vector<std::array<int, 3>>{{6, 4, 3}, {7, 4, 3}, {8, 5, 3}, {9, 5, 4}}) {
      const Params p = Params::make(m, n, k);
      const SearchOutcome full = enumerate_max_mnk(p, EnumerationMode::full, kBudget);
      const SearchOutcome orb = enumerate_max_mnk(p, EnumerationMode::orbit, kBudget);
      CHECK(orb.maximum_count == full.maximum_count);
      std::uint64_t sum = 0;
      for (const MaximumFamily& mf : *orb.maxima) sum += mf.orbit_size;
      CHECK(sum == full.maxima->size());
      // Each representative is the least member of its orbit.
      const YoungGroup g({p.inner(), p.outer()});
      for (const MaximumFamily& mf : *orb.maxima) {
        const auto orbit = g.orbit(members(mf.family), 1 << 20);
        CHECK(orbit->size() == mf.orbit_size);
        CHECK(orbit->front() == members(mf.family));
      }
    }
  }

  TEST_CASE("maxima are closed under the symmetry group") {
    const Params p = Params::make(8, 5, 3);
    const SearchOutcome s = enumerate_max_mnk(p, EnumerationMode::full, kBudget);
    const auto all = full_set(s);
    const YoungGroup g({p.inner(), p.outer()});
    for (const auto& f : all) {
      for (std::size_t i = 0; i < g.generator_count(); ++i) CHECK(all.count(g.apply(i, f)) == 1);
    }
  }

  TEST_CASE("families reaching h include every H_t") {
    for (auto [m, n, k] : std::vector<std::array<int, 3>>{{9, 5, 4}, {10, 5, 3}, {7, 4, 3}, {10, 6, 4}}) {
      const Params p = Params::make(m, n, k);
      const SearchOutcome s = enumerate_max_mnk(p, EnumerationMode::full, kBudget);
      if (s.alpha != h_value(p)) continue;
      const auto all = full_set(s);
      for (int t = 1; t <= p.layers(); ++t) CHECK(all.count(members(build_H_t(p, t))) == 1);
    }
  }

  TEST_CASE("labels are attached") {
    const SearchOutcome s = enumerate_max_mnk(Params::make(9, 5, 4), EnumerationMode::orbit, kBudget);
    for (const MaximumFamily& mf : *s.maxima) CHECK_FALSE(mf.labels.empty());
  }

  TEST_CASE("budget exhaustion") {
    Budget tiny;
    tiny.node_limit = 2;
    const SearchOutcome s = enumerate_max_mnk(Params::make(13, 6, 5), EnumerationMode::orbit, tiny);
    CHECK_FALSE(s.proved);
    CHECK_FALSE(s.maxima_complete);
    CHECK(s.witness.size() == s.alpha);
  }

  TEST_CASE("unconstrained intersecting families") {
    const SearchOutcome s = max_intersecting(7, 3, EnumerationMode::full, kBudget);
    CHECK(s.alpha == 15);
    CHECK(s.maximum_count == 7);
    const SearchOutcome t = max_intersecting(6, 3, EnumerationMode::orbit, kBudget);
    CHECK(t.alpha == 10);
    CHECK(t.maximum_count == oracle::maximum_sets(oracle::disjointness(oracle::k_sets(6, 3))).sets.size());
  }

  TEST_CASE("cross intersecting examples") {
    const CrossIntersectingOutcome r = cross_intersecting_max(5, 2, 2);
    CHECK(r.exhaustive);
    CHECK(r.bound == 8);
    CHECK(r.max_sum == 8);
    for (Mask a : r.a_family) {
      for (Mask b : r.b_family) CHECK((a & b) != 0);
    }
    CHECK(r.a_family.size() + r.b_family.size() == r.max_sum);
  }

  TEST_CASE("cross intersecting agrees with the oracle") {
    for (auto [x, a, b] : std::vector<std::array<int, 3>>{{2, 1, 1}, {3, 1, 1}, {3, 1, 2}, {4, 1, 1}, {4, 1, 2}, {4, 2, 2}, {5, 1, 3}, {5, 2, 2}, {4, 1, 3}}) {
      CAPTURE(x);
      CAPTURE(a);
      CAPTURE(b);
      const CrossIntersectingOutcome r = cross_intersecting_max(x, a, b);
      CHECK(r.exhaustive);
      CHECK(r.max_sum == oracle::cross_max(x, a, b));
    }
  }

  TEST_CASE("cross intersecting beyond the cap") {
    const CrossIntersectingOutcome r = cross_intersecting_max(12, 3, 4);
    CHECK_FALSE(r.exhaustive);
    CHECK(r.a_family.size() == 1);
    CHECK(r.max_sum == 1 + oracle::choose(12, 4) - oracle::choose(9, 4));
    CHECK_THROWS_AS(cross_intersecting_max(3, 2, 2), ParamError);
    CHECK_THROWS_AS(cross_intersecting_max(6, 3, 2), ParamError);
  }

  TEST_CASE("two layer universe") {
    CHECK(two_layer_star_value(4, 4, 3, 1, 10) == 38);
    const TwoLayerOutcome r = two_layer_max(4, 4, 3, 1, 10, kBudget);
    CHECK(r.search.proved);
    CHECK(r.search.alpha == 44);
    CHECK(r.search.alpha >= r.star_value);
    CHECK_FALSE(r.equals_star);
    CHECK(r.search.witness.size() == r.search.alpha);
    CHECK(is_intersecting(r.search.witness));
    for (Mask s : r.search.witness.members()) {
      const int t = cardinality(s & ground_mask(4));
      CHECK((t == 3 || t == 1));
    }
    CHECK_THROWS_AS(two_layer_max(4, 4, 2, 2, 10, kBudget), ParamError);
    CHECK_THROWS_AS(two_layer_max(4, 4, 3, 1, 4, kBudget), ParamError);
  }
}
