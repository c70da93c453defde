#pragma once

// One checker per claim. Each compares exact search results against the
// closed forms and shape characterizations and returns a Verdict.

#include <array>
#include <string>
#include <vector>

#include <json.hpp>

#include "ekrlab/family.hpp"
#include "ekrlab/kneser.hpp"
#include "ekrlab/search.hpp"
#include "ekrlab/solver.hpp"

namespace ekrlab {

using Json = nlohmann::ordered_json;

struct Verdict {
  std::string claim;
  Json params = Json::object();
  Json expected = Json::object();
  Json computed = Json::object();
  bool pass = false;
  bool proved = true;         // false when a budget ran out before a conclusion
  Json counterexample;        // null unless the verdict fails on a concrete object
  SearchStats stats;

  /// {claim, params, expected, computed, pass, proved, counterexample?, stats?}
  Json to_json(bool with_stats = true) const;
};

Json family_json(const Family& f);
Json sets_json(const std::vector<Mask>& sets);

Verdict verify_ekr(int m, int k, const Budget& budget);
Verdict verify_hm(int m, int k, const Budget& budget);
Verdict verify_m_equals_2k(int k, int n, const Budget& budget);
Verdict verify_n_2k_minus_1(int m, int k, const Budget& budget);
Verdict verify_n_2k_minus_2(int m, int k, const Budget& budget);
Verdict verify_n_2k_minus_3(int m, int k, const Budget& budget);
Verdict verify_zhang(int n1, int k1, int n2, int k2, const Budget& budget);
Verdict verify_xfm(int x, int a, int b);
Verdict verify_fuf(int n, int k, int c, int d, int m_lo, int m_hi, const Budget& budget);
Verdict verify_theorem11(int n, int k, int m_lo, int m_hi, const Budget& budget);
/// Exact solver against a subset dynamic program on `count` small graphs.
Verdict verify_solver_oracle(int count, const Budget& budget);

/// Maximum intersecting families in C([2k-2], k-1) by plain backtracking
/// (no solver involved). Limited to C(2k-2, k-1) <= 24.
std::vector<std::vector<Mask>> brute_force_half_families(int k);

struct ObservationReport {
  std::size_t pairs_checked = 0;
  std::size_t bucket_violations = 0;
  bool inequality_holds = true;
  std::size_t s = 0;                // complementary pairs with F(A_j) nonempty
  std::uint64_t inequality_rhs = 0;
  Json first_violation;             // null when clean
};

/// Bucket bound and counting inequality for a family at n = 2k - 3.
ObservationReport check_observation(const Family& f, const Params& p);

/// The deterministic graphs behind verify_solver_oracle.
std::vector<IntersectionGraph> oracle_graphs(int count);

/// Zhang products: factors KG(n,k) with 1 <= k <= 3, k <= n <= 6, ordered
/// pairs whose product has at most 200 vertices.
std::vector<std::array<int, 4>> zhang_products();

/// Cross-intersecting triples with a <= b <= 3 and a + b <= x <= 7.
std::vector<std::array<int, 3>> xfm_triples();

/// The desk-scale suite behind `verify all --preset desk`.
std::vector<Verdict> desk_suite(const Budget& budget);

}  // namespace ekrlab
