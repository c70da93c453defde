#include "ekrlab/search.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <unordered_set>

namespace ekrlab {
namespace {

struct SetListHash {
  std::size_t operator()(const SetList& s) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (Mask x : s) {
      h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

struct Universe {
  int m = 0;
  int k = 0;
  std::vector<Mask> sets;
  std::vector<Mask> required;
  std::vector<Mask> parts;
  std::vector<Mask> seed;  // feasible family, contains required
};

Budget remaining(const Budget& b, const SearchStats& used) {
  Budget out = b;
  out.node_limit = used.nodes >= b.node_limit ? 0 : b.node_limit - used.nodes;
  const auto spent = std::chrono::milliseconds(static_cast<long long>(used.seconds * 1000.0));
  out.time_limit = spent >= b.time_limit ? std::chrono::milliseconds(0) : b.time_limit - spent;
  return out;
}

VertexList indices(const IntersectionGraph& g, const std::vector<Mask>& sets) {
  VertexList out;
  out.reserve(sets.size());
  for (Mask s : sets) {
    auto i = g.index_of(s);
    if (!i) throw std::logic_error("set " + format_braced(s) + " missing from the search universe");
    out.push_back(*i);
  }
  return out;
}

std::vector<Mask> masks(const IntersectionGraph& g, const VertexList& list) {
  std::vector<Mask> out;
  out.reserve(list.size());
  for (std::size_t v : list) out.push_back(g.vertex(v));
  std::sort(out.begin(), out.end());
  return out;
}

SearchOutcome solve(const Universe& u, const Budget& budget, std::optional<EnumerationMode> mode,
                    const std::optional<Params>& classify) {
  IntersectionGraph g(u.sets, u.m);
  g.require(indices(g, u.required));
  g.set_symmetry(u.parts);

  const MisResult r = max_independent_set(g, budget, indices(g, u.seed));
  SearchOutcome out;
  out.alpha = r.alpha;
  out.witness = Family(u.m, u.k, masks(g, r.witness));
  out.proved = r.proved;
  out.stats = r.stats;
  if (!mode || !r.proved) return out;

  const YoungGroup group(u.parts);
  std::unordered_set<SetList, SetListHash> seen;
  std::vector<std::pair<SetList, std::uint64_t>> orbits;
  std::size_t stored = 0;
  bool overflow = false;
  const std::size_t width = std::max<std::size_t>(r.alpha, 1);
  const EnumerationResult e = enumerate_independent_sets(g, r.alpha, remaining(budget, r.stats), [&](const VertexList& list) {
    SetList fam = masks(g, list);
    if (seen.count(fam)) return true;
    auto orb = group.orbit(fam, (kMaxStoredMembers - stored) / width);
    if (!orb) {
      overflow = true;
      return false;
    }
    stored += orb->size() * width;
    orbits.emplace_back(orb->front(), orb->size());
    for (auto& member : *orb) seen.insert(std::move(member));
    return true;
  });
  out.stats.nodes += e.stats.nodes;
  out.stats.seconds += e.stats.seconds;
  out.maxima_complete = e.complete && !overflow;

  std::vector<std::pair<SetList, std::uint64_t>> listed;
  if (*mode == EnumerationMode::orbit) {
    listed = std::move(orbits);
  } else {
    listed.reserve(seen.size());
    for (const auto& fam : seen) listed.emplace_back(fam, 1);
  }
  std::sort(listed.begin(), listed.end());
  out.maxima.emplace();
  out.maxima->reserve(listed.size());
  for (auto& [fam, size] : listed) {
    MaximumFamily mf{Family(u.m, u.k, std::move(fam)), size, {}};
    if (classify) mf.labels = classify_family(mf.family, *classify);
    out.maximum_count += size;
    out.maxima->push_back(std::move(mf));
  }
  return out;
}

Universe mnk_universe(const Params& p) {
  Universe u;
  u.m = p.m();
  u.k = p.k();
  for (Mask s : k_subsets(ground_mask(p.m()), p.k())) {
    if (cardinality(s & p.inner()) >= p.trace_min()) u.sets.push_back(s);
  }
  const Family base = base_family(p);
  u.required.assign(base.members().begin(), base.members().end());
  u.parts = {p.inner(), p.outer()};
  const Family h1 = build_H_t(p, 1);
  u.seed.assign(h1.members().begin(), h1.members().end());
  return u;
}

std::vector<Mask> star_in(const std::vector<Mask>& sets, int t) {
  std::vector<Mask> out;
  for (Mask s : sets) {
    if (s & element_bit(t)) out.push_back(s);
  }
  return out;
}

}  // namespace

SearchOutcome alpha_mnk(const Params& p, const Budget& budget) {
  return solve(mnk_universe(p), budget, std::nullopt, std::nullopt);
}

SearchOutcome enumerate_max_mnk(const Params& p, EnumerationMode mode, const Budget& budget) {
  return solve(mnk_universe(p), budget, mode, p);
}

SearchOutcome max_intersecting(int m, int k, EnumerationMode mode, const Budget& budget) {
  if (m < 1 || m > kMaxGround || k < 1 || k > m) throw ParamError("max_intersecting needs 1 <= k <= m <= 62");
  Universe u;
  u.m = m;
  u.k = k;
  u.sets = k_subsets(ground_mask(m), k);
  u.parts = {ground_mask(m)};
  u.seed = 2 * k <= m ? star_in(u.sets, 1) : u.sets;
  return solve(u, budget, mode, std::nullopt);
}

std::uint64_t two_layer_star_value(int n, int k, int c, int d, int m) {
  return checked_add(checked_mul(binomial(n - 1, c - 1), binomial(m - n, k - c)),
                     checked_mul(binomial(n - 1, d - 1), binomial(m - n, k - d)));
}

TwoLayerOutcome two_layer_max(int n, int k, int c, int d, int m, const Budget& budget) {
  if (!(d < c && c < k)) throw ParamError("two-layer universe needs d < c < k");
  if (c + d != n) throw ParamError("two-layer universe needs c + d = n");
  if (!(k <= n && n < 2 * k - 3)) throw ParamError("two-layer universe needs k <= n < 2k - 3");
  if (!(n < m) || m > kMaxGround) throw ParamError("two-layer universe needs n < m <= 62");

  Universe u;
  u.m = m;
  u.k = k;
  const Mask inner = ground_mask(n);
  for (Mask s : k_subsets(ground_mask(m), k)) {
    const int t = cardinality(s & inner);
    if (t == c || t == d) u.sets.push_back(s);
  }
  u.parts = {inner, ground_mask(m) & ~inner};
  std::vector<Mask> inner_star = star_in(u.sets, 1);
  std::vector<Mask> outer_star = star_in(u.sets, n + 1);
  u.seed = outer_star.size() > inner_star.size() ? outer_star : inner_star;

  TwoLayerOutcome out;
  out.search = solve(u, budget, EnumerationMode::orbit, std::nullopt);
  out.star_value = two_layer_star_value(n, k, c, d, m);
  out.equals_star = out.search.proved && out.search.alpha == out.star_value;
  if (out.search.maxima_complete) {
    out.all_common = true;
    out.all_common_in_n = true;
    for (const auto& mf : *out.search.maxima) {
      const Mask common = mf.family.empty() ? 0 : mf.family.common();
      out.all_common = out.all_common && common != 0;
      out.all_common_in_n = out.all_common_in_n && (common & inner) != 0;
    }
  }
  return out;
}

CrossIntersectingOutcome cross_intersecting_max(int x, int a, int b) {
  if (a < 1 || b < 1) throw ParamError("cross-intersecting sizes must be positive");
  if (a > b) throw ParamError("cross-intersecting search needs a <= b");
  if (a + b > x) throw ParamError("cross-intersecting search needs a + b <= x");
  if (x > kMaxGround) throw ParamError("ground set exceeds 62 elements");

  CrossIntersectingOutcome out;
  out.bound = binomial(x, b) - binomial(x - a, b) + 1;
  const std::vector<Mask> as = k_subsets(ground_mask(x), a);
  const std::vector<Mask> bs = k_subsets(ground_mask(x), b);

  if (as.size() > kCrossSmallSideCap || bs.size() > kCrossLargeSideCap) {
    const Mask first = ground_mask(a);
    out.a_family = {first};
    for (Mask s : bs) {
      if (s & first) out.b_family.push_back(s);
    }
    out.max_sum = 1 + out.b_family.size();
    return out;
  }

  // For a fixed A the best B is every b-set meeting all of A, so a search
  // over subsets of the smaller side is exhaustive.
  const std::uint64_t all_b = bs.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bs.size()) - 1;
  std::vector<std::uint64_t> meets(as.size(), 0);
  for (std::size_t i = 0; i < as.size(); ++i) {
    for (std::size_t j = 0; j < bs.size(); ++j) {
      if (as[i] & bs[j]) meets[i] |= std::uint64_t{1} << j;
    }
  }
  std::uint64_t best = 0;
  std::uint64_t best_a = 0;
  std::uint64_t best_b = 0;
  auto dfs = [&](auto&& self, std::size_t i, std::uint64_t chosen, int count, std::uint64_t inter) -> void {
    if (count > 0 && inter != 0) {
      const std::uint64_t v = static_cast<std::uint64_t>(count) + static_cast<std::uint64_t>(std::popcount(inter));
      if (v > best) {
        best = v;
        best_a = chosen;
        best_b = inter;
      }
    }
    if (i == as.size() || inter == 0) return;
    if (static_cast<std::uint64_t>(count) + (as.size() - i) + static_cast<std::uint64_t>(std::popcount(inter)) <= best) return;
    self(self, i + 1, chosen | (std::uint64_t{1} << i), count + 1, inter & meets[i]);
    self(self, i + 1, chosen, count, inter);
  };
  dfs(dfs, 0, 0, 0, all_b);

  out.exhaustive = true;
  out.max_sum = best;
  for (std::size_t i = 0; i < as.size(); ++i) {
    if (best_a >> i & 1U) out.a_family.push_back(as[i]);
  }
  for (std::size_t j = 0; j < bs.size(); ++j) {
    if (best_b >> j & 1U) out.b_family.push_back(bs[j]);
  }
  return out;
}

}  // namespace ekrlab
