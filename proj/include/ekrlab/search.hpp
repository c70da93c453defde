#pragma once

// Exact search over families of k-subsets: alpha(m,n,k), enumeration of all
// maximum families, the two-layer universe, and cross-intersecting pairs.
//
// Budget overruns never throw. They clear `proved` (and `maxima_complete`),
// keeping the best family found so far.

#include <cstdint>
#include <optional>
#include <vector>

#include "ekrlab/family.hpp"
#include "ekrlab/solver.hpp"
#include "ekrlab/symmetry.hpp"

namespace ekrlab {

enum class EnumerationMode { full, orbit };

struct MaximumFamily {
  Family family;               // orbit mode: least member of the orbit
  std::uint64_t orbit_size = 1;
  std::vector<Label> labels;   // empty outside the (m,n,k) setting
};

struct SearchOutcome {
  std::size_t alpha = 0;
  Family witness{1, 1};
  bool proved = false;
  std::optional<std::vector<MaximumFamily>> maxima;
  bool maxima_complete = false;
  std::uint64_t maximum_count = 0;  // sum of orbit sizes
  SearchStats stats;
};

/// Largest number of stored family members while expanding orbits.
inline constexpr std::size_t kMaxStoredMembers = std::size_t{1} << 24;

SearchOutcome alpha_mnk(const Params& p, const Budget& budget);
SearchOutcome enumerate_max_mnk(const Params& p, EnumerationMode mode, const Budget& budget);

/// Maximum intersecting families in C([m],k), without a trace constraint.
SearchOutcome max_intersecting(int m, int k, EnumerationMode mode, const Budget& budget);

struct TwoLayerOutcome {
  SearchOutcome search;
  std::uint64_t star_value = 0;
  bool equals_star = false;
  bool all_common = false;       // every maximum has a common element
  bool all_common_in_n = false;  // ... lying in [n]
};

/// Maximum intersecting families inside {F ∈ C([m],k) : |F ∩ [n]| ∈ {c, d}}.
TwoLayerOutcome two_layer_max(int n, int k, int c, int d, int m, const Budget& budget);
std::uint64_t two_layer_star_value(int n, int k, int c, int d, int m);

struct CrossIntersectingOutcome {
  std::uint64_t bound = 0;
  bool exhaustive = false;
  std::uint64_t max_sum = 0;  // exhaustive maximum, or the witness value
  std::vector<Mask> a_family;
  std::vector<Mask> b_family;
};

/// Exhaustive search runs while C(x,a) <= 24 and C(x,b) <= 64. Beyond that
/// the result is the star witness: A = {[a]}, B = every b-set meeting [a].
inline constexpr std::uint64_t kCrossSmallSideCap = 24;
inline constexpr std::uint64_t kCrossLargeSideCap = 64;

CrossIntersectingOutcome cross_intersecting_max(int x, int a, int b);

}  // namespace ekrlab
