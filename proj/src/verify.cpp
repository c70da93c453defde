#include "ekrlab/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace ekrlab {
namespace {

Json set_json(Mask s) { return Json(elements(s)); }

void absorb(Verdict& v, const SearchStats& s) {
  v.stats.nodes += s.nodes;
  v.stats.seconds += s.seconds;
}

bool finished(const SearchOutcome& o) { return o.proved && (!o.maxima || o.maxima_complete); }

Verdict start(std::string claim, Json params) {
  Verdict v;
  v.claim = std::move(claim);
  v.params = std::move(params);
  return v;
}

Verdict& unfinished(Verdict& v) {
  v.proved = false;
  v.pass = false;
  return v;
}

Json counter(const std::string& reason, const Family& f) {
  return Json{{"reason", reason}, {"m", f.m()}, {"k", f.k()}, {"family", family_json(f)}};
}

std::optional<int> star_center(const Family& f) {
  const Mask c = f.common();
  if (f.empty() || c == 0) return std::nullopt;
  if (f.size() != binomial(f.m() - 1, f.k() - 1)) return std::nullopt;
  return std::countr_zero(c) + 1;
}

std::set<SetList> family_set(const std::vector<MaximumFamily>& maxima) {
  std::set<SetList> out;
  for (const auto& mf : maxima) out.emplace(mf.family.members().begin(), mf.family.members().end());
  return out;
}

SetList as_list(const Family& f) { return SetList(f.members().begin(), f.members().end()); }

// alpha of an induced subgraph by dynamic programming over vertex subsets.
std::size_t subset_dp_alpha(const IntersectionGraph& g) {
  const std::size_t n = g.size();
  if (n > 24) throw ParamError("subset oracle limited to 24 vertices");
  std::vector<std::uint32_t> nbr(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (g.adjacent(i, j)) nbr[i] |= 1U << j;
    }
  }
  std::uint32_t start = n == 32 ? ~0U : (1U << n) - 1;
  std::size_t bonus = 0;
  for (std::size_t r : g.required()) {
    if (start >> r & 1U) {
      start &= ~(nbr[r] | (1U << r));
      ++bonus;
    }
  }
  std::vector<std::uint8_t> dp(std::size_t{1} << n, 0);
  for (std::uint32_t s = 1; s < (1U << n); ++s) {
    const int v = std::countr_zero(s);
    const std::uint32_t without = s & ~(1U << v);
    dp[s] = std::max<std::uint8_t>(dp[without], static_cast<std::uint8_t>(1 + dp[without & ~nbr[v]]));
  }
  return dp[start] + bonus;
}

}  // namespace

Json Verdict::to_json(bool with_stats) const {
  Json out{{"claim", claim}, {"params", params}, {"expected", expected}, {"computed", computed},
           {"pass", pass}, {"proved", proved}};
  if (!counterexample.is_null()) out["counterexample"] = counterexample;
  if (with_stats) out["stats"] = Json{{"nodes", stats.nodes}, {"seconds", stats.seconds}};
  return out;
}

Json sets_json(const std::vector<Mask>& sets) {
  Json out = Json::array();
  for (Mask s : sets) out.push_back(set_json(s));
  return out;
}

Json family_json(const Family& f) { return sets_json(SetList(f.members().begin(), f.members().end())); }

Verdict verify_ekr(int m, int k, const Budget& budget) {
  if (!(k > 0 && 2 * k < m)) throw ParamError("verify ekr needs 0 < 2k < m");
  Verdict v = start("ekr", {{"m", m}, {"k", k}});
  const std::uint64_t expect = binomial(m - 1, k - 1);
  v.expected = {{"alpha", expect}, {"shape", "STAR"}, {"star_count", m}};

  const Params p = Params::make(m, k, k);
  const SearchOutcome con = enumerate_max_mnk(p, EnumerationMode::full, budget);
  absorb(v, con.stats);
  if (!finished(con)) return unfinished(v);
  const SearchOutcome all = max_intersecting(m, k, EnumerationMode::full, budget);
  absorb(v, all.stats);
  if (!finished(all)) return unfinished(v);

  std::set<int> centers;
  const Family* odd = nullptr;
  for (const auto& mf : *all.maxima) {
    if (auto t = star_center(mf.family)) centers.insert(*t);
    else if (!odd) odd = &mf.family;
  }
  for (const auto& mf : *con.maxima) {
    if (!has_label(mf.labels, LabelKind::star) && !odd) odd = &mf.family;
  }
  v.computed = {{"alpha", con.alpha},
                {"h", h_value(p)},
                {"unconstrained_alpha", all.alpha},
                {"maximum_count", all.maximum_count},
                {"star_count", centers.size()},
                {"constrained_maximum_count", con.maximum_count},
                {"all_star", odd == nullptr}};
  v.pass = con.alpha == expect && all.alpha == expect && h_value(p) == expect && odd == nullptr &&
           all.maximum_count == static_cast<std::uint64_t>(m) && centers.size() == static_cast<std::size_t>(m);
  if (odd) v.counterexample = counter("maximum family is not a star", *odd);
  else if (con.alpha != expect) v.counterexample = counter("maximum family size differs from the expected alpha", con.witness);
  else if (all.alpha != expect) v.counterexample = counter("maximum family size differs from the expected alpha", all.witness);
  return v;
}

Verdict verify_hm(int m, int k, const Budget& budget) {
  if (!(k > 1 && 2 * k < m)) throw ParamError("verify hm needs 2 <= k and 2k < m");
  Verdict v = start("hm", {{"m", m}, {"k", k}});
  const std::uint64_t expect = binomial(m - 1, k - 1) - binomial(m - 1 - k, k - 1) + 1;
  v.expected = {{"alpha", expect}, {"shape", k == 3 ? "M1 or M2" : "M1"}, {"m2_present", k == 3}};

  const Params p = Params::make(m, k + 1, k);
  const SearchOutcome o = enumerate_max_mnk(p, EnumerationMode::orbit, budget);
  absorb(v, o.stats);
  if (!finished(o)) return unfinished(v);

  std::uint64_t m1 = 0;
  std::uint64_t m2 = 0;
  const Family* odd = nullptr;
  for (const auto& mf : *o.maxima) {
    if (has_label(mf.labels, LabelKind::m1) || has_label(mf.labels, LabelKind::h_t)) m1 += mf.orbit_size;
    else if (has_label(mf.labels, LabelKind::m2)) {
      m2 += mf.orbit_size;
      if (k != 3 && !odd) odd = &mf.family;
    } else if (!odd) {
      odd = &mf.family;
    }
  }
  v.computed = {{"alpha", o.alpha}, {"h", h_value(p)}, {"maximum_count", o.maximum_count},
                {"m1_count", m1}, {"m2_count", m2}, {"m2_present", m2 > 0}};
  v.pass = o.alpha == expect && h_value(p) == expect && odd == nullptr && (m2 > 0) == (k == 3);
  if (odd) v.counterexample = counter(k == 3 ? "maximum family is neither M1 nor M2" : "maximum family is not M1-shaped", *odd);
  else if (o.alpha != expect) v.counterexample = counter("maximum family size differs from the expected alpha", o.witness);
  else if (!v.pass) v.counterexample = counter("no M2-shaped maximum found; an M1-shaped one is shown", o.maxima->front().family);
  return v;
}

Verdict verify_m_equals_2k(int k, int n, const Budget& budget) {
  if (!(k >= 1 && k <= n && n < 2 * k)) throw ParamError("verify m2k needs k <= n < 2k");
  const int m = 2 * k;
  Verdict v = start("m2k", {{"k", k}, {"n", n}});
  const Params p = Params::make(m, n, k);
  const std::uint64_t expect = binomial(m, k) / 2;
  std::uint64_t free_pairs = 0;
  std::vector<std::pair<Mask, Mask>> pairs;
  for (Mask a : k_subsets(ground_mask(m), k)) {
    const Mask b = ground_mask(m) & ~a;
    if (a < b) {
      pairs.emplace_back(a, b);
      if ((a & ~p.inner()) && (b & ~p.inner())) ++free_pairs;
    }
  }
  const std::uint64_t expect_count = free_pairs >= 64 ? 0 : std::uint64_t{1} << free_pairs;
  v.expected = {{"alpha", expect}, {"maximum_count", expect_count}, {"shape", "one set from each complementary pair"}};

  const SearchOutcome o = enumerate_max_mnk(p, EnumerationMode::full, budget);
  absorb(v, o.stats);
  if (!finished(o)) return unfinished(v);
  const Family* odd = nullptr;
  for (const auto& mf : *o.maxima) {
    bool ok = mf.family.size() == expect;
    for (auto [a, b] : pairs) {
      const bool ha = mf.family.contains(a);
      const bool hb = mf.family.contains(b);
      if (ha == hb) ok = false;
      if ((a & ~p.inner()) == 0 && !ha) ok = false;
      if ((b & ~p.inner()) == 0 && !hb) ok = false;
    }
    if (!ok) {
      odd = &mf.family;
      break;
    }
  }
  v.computed = {{"alpha", o.alpha}, {"h", h_value(p)}, {"maximum_count", o.maximum_count}, {"pair_structure", odd == nullptr}};
  v.pass = o.alpha == expect && h_value(p) == expect && odd == nullptr && o.maximum_count == expect_count;
  if (odd) v.counterexample = counter("maximum family does not pick one set per complementary pair", *odd);
  else if (o.alpha != expect) v.counterexample = counter("maximum family size differs from the expected alpha", o.witness);
  return v;
}

Verdict verify_n_2k_minus_1(int m, int k, const Budget& budget) {
  if (!(k >= 1 && 2 * k < m)) throw ParamError("verify n2k1 needs 1 <= k and 2k < m");
  Verdict v = start("n2k1", {{"m", m}, {"k", k}});
  const Params p = Params::make(m, 2 * k - 1, k);
  const std::uint64_t expect = binomial(2 * k - 1, k);
  const Family base = base_family(p);
  v.expected = {{"alpha", expect}, {"maximum_count", 1}, {"family", family_json(base)}};

  const SearchOutcome o = enumerate_max_mnk(p, EnumerationMode::full, budget);
  absorb(v, o.stats);
  if (!finished(o)) return unfinished(v);
  v.computed = {{"alpha", o.alpha}, {"h", h_value(p)}, {"maximum_count", o.maximum_count},
                {"unique_is_base", o.maxima->size() == 1 && o.maxima->front().family == base}};
  v.pass = o.alpha == expect && h_value(p) == expect && o.maximum_count == 1 && o.maxima->front().family == base;
  if (!v.pass) {
    for (const auto& mf : *o.maxima) {
      if (!(mf.family == base)) {
        v.counterexample = counter("maximum family other than the base", mf.family);
        break;
      }
    }
    if (v.counterexample.is_null()) v.counterexample = counter("maximum family size differs from the expected alpha", o.witness);
  }
  return v;
}

std::vector<std::vector<Mask>> brute_force_half_families(int k) {
  if (k < 2) throw ParamError("half families need k >= 2");
  const int g = 2 * k - 2;
  const std::vector<Mask> sets = k_subsets(ground_mask(g), k - 1);
  if (sets.size() > 24) throw ParamError("brute-force oracle limited to C(2k-2, k-1) <= 24");
  const std::size_t n = sets.size();
  std::vector<std::uint32_t> meets(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (sets[i] & sets[j]) meets[i] |= 1U << j;
    }
  }
  std::vector<std::vector<Mask>> best;
  std::size_t best_size = 0;
  std::vector<Mask> cur;
  auto dfs = [&](auto&& self, std::size_t i, std::uint32_t allowed) -> void {
    if (cur.size() + (n - i) < best_size) return;
    if (i == n) {
      if (cur.size() > best_size) {
        best_size = cur.size();
        best.clear();
      }
      best.push_back(cur);
      return;
    }
    if (allowed >> i & 1U) {
      cur.push_back(sets[i]);
      self(self, i + 1, allowed & meets[i]);
      cur.pop_back();
    }
    self(self, i + 1, allowed);
  };
  dfs(dfs, 0, (1U << n) - 1);
  std::sort(best.begin(), best.end());
  return best;
}

Verdict verify_n_2k_minus_2(int m, int k, const Budget& budget) {
  if (!(k >= 3 && 2 * k < m)) throw ParamError("verify n2k2 needs k >= 3 and 2k < m");
  Verdict v = start("n2k2", {{"m", m}, {"k", k}});
  const Params p = Params::make(m, 2 * k - 2, k);
  const auto stars = brute_force_half_families(k);
  const Family base = base_family(p);
  std::set<SetList> expected;
  for (const auto& fs : stars) {
    std::vector<Mask> members(base.members().begin(), base.members().end());
    for (Mask f : fs) {
      for (int b = 2 * k - 1; b <= m; ++b) members.push_back(f | element_bit(b));
    }
    expected.insert(as_list(Family(m, k, std::move(members))));
  }
  const std::uint64_t expect = h_value(p);
  v.expected = {{"alpha", expect}, {"fstar_count", stars.size()}, {"maximum_count", expected.size()}};

  const SearchOutcome o = enumerate_max_mnk(p, EnumerationMode::full, budget);
  absorb(v, o.stats);
  if (!finished(o)) return unfinished(v);
  const std::set<SetList> got = family_set(*o.maxima);
  std::optional<SetList> unexpected;
  std::optional<SetList> missing;
  for (const auto& f : got) {
    if (!expected.count(f)) {
      unexpected = f;
      break;
    }
  }
  for (const auto& f : expected) {
    if (!got.count(f)) {
      missing = f;
      break;
    }
  }
  v.computed = {{"alpha", o.alpha}, {"h", h_value(p)}, {"fstar_count", stars.size()},
                {"maximum_count", o.maximum_count}, {"bijection", !unexpected && !missing}};
  v.pass = o.alpha == expect && !unexpected && !missing;
  if (unexpected) v.counterexample = counter("maximum family not built from a maximum F*", Family(m, k, *unexpected));
  else if (missing) v.counterexample = counter("family built from a maximum F* is not a maximum", Family(m, k, *missing));
  else if (o.alpha != expect) v.counterexample = counter("maximum family size differs from h", o.witness);
  return v;
}

ObservationReport check_observation(const Family& f, const Params& p) {
  const int k = p.k();
  const int m = p.m();
  if (p.n() != 2 * k - 3) throw ParamError("the bucket bound applies at n = 2k - 3");
  ObservationReport r;
  std::map<Mask, std::size_t> bucket;
  for (Mask s : f.members()) ++bucket[s & p.inner()];
  const std::uint64_t cap = static_cast<std::uint64_t>(m - 2 * k + 3);
  for (Mask a : k_subsets(p.inner(), k - 1)) {
    const Mask comp = p.inner() & ~a;
    const std::size_t fa = bucket.count(a) ? bucket[a] : 0;
    const std::size_t fc = bucket.count(comp) ? bucket[comp] : 0;
    ++r.pairs_checked;
    if (fa == 0) continue;
    ++r.s;
    if (fa + fc > cap) {
      ++r.bucket_violations;
      if (r.first_violation.is_null()) {
        r.first_violation = {{"A", set_json(a)}, {"A_complement", set_json(comp)}, {"sizes", {fa, fc}}, {"cap", cap}};
      }
    }
  }
  const std::uint64_t nn = binomial(2 * k - 3, k - 1);
  r.inequality_rhs = binomial(2 * k - 3, k) + r.s * cap + (nn - r.s) * binomial(m - 2 * k + 3, 2);
  r.inequality_holds = f.size() <= r.inequality_rhs;
  return r;
}

Verdict verify_n_2k_minus_3(int m, int k, const Budget& budget) {
  if (!(k >= 4 && m >= 2 * k + 1)) throw ParamError("verify n2k3 needs k >= 4 and m >= 2k + 1");
  Verdict v = start("n2k3", {{"m", m}, {"k", k}});
  const Params p = Params::make(m, 2 * k - 3, k);
  std::set<SetList> expected;
  for (int t = 1; t <= p.n(); ++t) expected.insert(as_list(build_H_t(p, t)));
  const std::uint64_t expect = h_value(p);
  v.expected = {{"alpha", expect}, {"maximum_count", expected.size()}, {"shape", "H_T"}};

  const SearchOutcome o = enumerate_max_mnk(p, EnumerationMode::full, budget);
  absorb(v, o.stats);
  if (!finished(o)) return unfinished(v);
  const std::set<SetList> got = family_set(*o.maxima);
  std::size_t bucket_violations = 0;
  std::size_t inequality_violations = 0;
  for (const auto& mf : *o.maxima) {
    const ObservationReport r = check_observation(mf.family, p);
    bucket_violations += r.bucket_violations;
    inequality_violations += r.inequality_holds ? 0 : 1;
    if ((r.bucket_violations || !r.inequality_holds) && v.counterexample.is_null()) {
      v.counterexample = counter("maximum family violates the bucket bound or the counting inequality", mf.family);
      v.counterexample["detail"] = r.first_violation;
    }
  }
  v.computed = {{"alpha", o.alpha}, {"h", h_value(p)}, {"maximum_count", o.maximum_count},
                {"only_h_t", got == expected}, {"bucket_violations", bucket_violations},
                {"inequality_violations", inequality_violations}};
  v.pass = o.alpha == expect && got == expected && bucket_violations == 0 && inequality_violations == 0;
  if (v.counterexample.is_null() && !v.pass) {
    for (const auto& f : got) {
      if (!expected.count(f)) {
        v.counterexample = counter("maximum family is not of the form H_t", Family(m, k, f));
        break;
      }
    }
    if (v.counterexample.is_null()) v.counterexample = counter("maximum family size differs from h", o.witness);
  }
  return v;
}

Verdict verify_zhang(int n1, int k1, int n2, int k2, const Budget& budget) {
  Verdict v = start("zhang", {{"n1", n1}, {"k1", k1}, {"n2", n2}, {"k2", k2}});
  if (k1 < 1 || k2 < 1) throw ParamError("verify zhang needs positive subset sizes");
  const KneserGraph g = kneser(n1, k1);
  const KneserGraph h = kneser(n2, k2);
  if (g.size() * h.size() > 200) throw ParamError("verify zhang limited to products with at most 200 vertices");
  const ProductGraph gh = product(g, h);

  const MisResult ga = max_independent_set(to_graph(g), budget);
  const MisResult ha = max_independent_set(to_graph(h), budget);
  const IntersectionGraph pg = to_graph(gh);
  const MisResult pa = max_independent_set(pg, budget);
  absorb(v, ga.stats);
  absorb(v, ha.stats);
  absorb(v, pa.stats);
  if (!ga.proved || !ha.proved || !pa.proved) return unfinished(v);

  const std::uint64_t left = ga.alpha * h.size();
  const std::uint64_t right = g.size() * ha.alpha;
  const std::uint64_t formula = std::max(left, right);
  const std::uint64_t lemma = alpha_product_formula(n1, k1, n2, k2);
  const bool guard = 2 * k1 <= n1 && 2 * k2 <= n2;
  v.expected = {{"alpha", formula}, {"closed_form", lemma}, {"closed_form_guard", guard},
                {"structure", "every maximum set is a preimage of an independent set of an achieving factor"}};

  const bool left_achieves = left == pa.alpha;
  const bool right_achieves = right == pa.alpha;
  const EnumerationResult e = enumerate_independent_sets(pg, pa.alpha, budget, [&](const VertexList& list) {
    std::vector<Mask> ls;
    std::vector<Mask> rs;
    for (std::size_t i : list) {
      const ProductVertex pv = decode_product_vertex(gh, pg.vertex(i));
      ls.push_back(pv.left);
      rs.push_back(pv.right);
    }
    std::sort(ls.begin(), ls.end());
    ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
    std::sort(rs.begin(), rs.end());
    rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
    if ((left_achieves && g.is_independent(ls)) || (right_achieves && h.is_independent(rs))) return true;
    Json set = Json::array();
    for (std::size_t i : list) {
      const ProductVertex pv = decode_product_vertex(gh, pg.vertex(i));
      set.push_back(Json::array({set_json(pv.left), set_json(pv.right)}));
    }
    v.counterexample = {{"reason", "maximum independent set whose projections are not independent in an achieving factor"},
                        {"set", set}, {"left_projection", sets_json(ls)}, {"right_projection", sets_json(rs)}};
    return false;
  });
  absorb(v, e.stats);
  if (!e.complete && !e.stopped) return unfinished(v);
  v.computed = {{"alpha", pa.alpha}, {"alpha_left", ga.alpha}, {"alpha_right", ha.alpha},
                {"size_left", g.size()}, {"size_right", h.size()}, {"maxima_visited", e.visited},
                {"projection_ok", v.counterexample.is_null()}};
  v.pass = pa.alpha == formula && lemma == pa.alpha && v.counterexample.is_null();
  if (v.counterexample.is_null() && !v.pass) {
    Json set = Json::array();
    for (std::size_t i : pa.witness) {
      const ProductVertex pv = decode_product_vertex(gh, pg.vertex(i));
      set.push_back(Json::array({set_json(pv.left), set_json(pv.right)}));
    }
    v.counterexample = {{"reason", "maximum independent set size differs from the formula"}, {"set", set}};
  }
  return v;
}

Verdict verify_xfm(int x, int a, int b) {
  Verdict v = start("xfm", {{"x", x}, {"a", a}, {"b", b}});
  const CrossIntersectingOutcome c = cross_intersecting_max(x, a, b);
  if (!c.exhaustive) throw ParamError("instance exceeds the brute-force cap");
  bool valid = !c.a_family.empty() && !c.b_family.empty() && c.a_family.size() + c.b_family.size() == c.max_sum;
  for (Mask s : c.a_family) {
    for (Mask t : c.b_family) valid = valid && (s & t) != 0;
  }
  v.expected = {{"max_sum", c.bound}, {"bound", c.bound}};
  v.computed = {{"max_sum", c.max_sum}, {"exhaustive", true}, {"witness_valid", valid},
                {"a_family", sets_json(c.a_family)}, {"b_family", sets_json(c.b_family)}};
  v.pass = valid && c.max_sum == c.bound;
  if (!v.pass) {
    v.counterexample = {{"reason", c.max_sum > c.bound ? "cross-intersecting pair exceeds the bound" : "maximum falls short of the bound"},
                        {"a_family", sets_json(c.a_family)}, {"b_family", sets_json(c.b_family)}};
  }
  return v;
}

Verdict verify_fuf(int n, int k, int c, int d, int m_lo, int m_hi, const Budget& budget) {
  if (m_lo > m_hi) throw ParamError("empty sweep");
  Verdict v = start("fuf", {{"n", n}, {"k", k}, {"c", c}, {"d", d}, {"m_lo", m_lo}, {"m_hi", m_hi}});
  const std::uint64_t threshold = fuf_threshold(n, k, d);
  v.expected = {{"alpha_at_least_star", true}, {"persistence", true}, {"threshold", threshold}};
  Json rows = Json::array();
  bool above = true;
  bool persists = true;
  std::optional<int> onset;
  for (int m = m_lo; m <= m_hi; ++m) {
    const TwoLayerOutcome t = two_layer_max(n, k, c, d, m, budget);
    absorb(v, t.search.stats);
    if (!finished(t.search)) {
      v.computed = {{"rows", rows}, {"stopped_at", m}};
      return unfinished(v);
    }
    const bool property = t.equals_star && t.all_common_in_n;
    rows.push_back({{"m", m}, {"alpha", t.search.alpha}, {"star_value", t.star_value},
                    {"equals_star", t.equals_star}, {"common_element", t.all_common},
                    {"common_element_in_n", t.all_common_in_n}, {"maximum_count", t.search.maximum_count},
                    {"orbits", t.search.maxima->size()}});
    if (t.search.alpha < t.star_value && above) {
      above = false;
      v.counterexample = counter("search maximum below the star value", t.search.witness);
    }
    if (property && !onset) onset = m;
    if (onset && !property && persists) {
      persists = false;
      const Family* odd = &t.search.witness;
      for (const auto& mf : *t.search.maxima) {
        if ((mf.family.common() & ground_mask(n)) == 0) {
          odd = &mf.family;
          break;
        }
      }
      if (v.counterexample.is_null()) v.counterexample = counter("maximum without a common element after the onset", *odd);
    }
  }
  v.computed = {{"rows", rows}, {"onset", onset ? Json(*onset) : Json(nullptr)}, {"alpha_at_least_star", above},
                {"persistence", persists}, {"threshold", threshold}};
  v.pass = above && persists;
  return v;
}

Verdict verify_theorem11(int n, int k, int m_lo, int m_hi, const Budget& budget) {
  if (!(k <= n && n < 2 * k - 3)) throw ParamError("verify theorem11 needs k <= n < 2k - 3");
  if (m_lo > m_hi) throw ParamError("empty sweep");
  Verdict v = start("theorem11", {{"n", n}, {"k", k}, {"m_lo", m_lo}, {"m_hi", m_hi}});
  const bool asserted = n == k;
  v.expected = {{"asserted", asserted}, {"alpha_equals_h", asserted ? Json(true) : Json(nullptr)},
                {"only_h_t", asserted ? Json(true) : Json(nullptr)}};
  Json rows = Json::array();
  std::optional<int> onset;
  bool persists = true;
  bool all_hold = true;
  for (int m = m_lo; m <= m_hi; ++m) {
    const Params p = Params::make(m, n, k);
    const SearchOutcome o = enumerate_max_mnk(p, EnumerationMode::orbit, budget);
    absorb(v, o.stats);
    if (!finished(o)) {
      v.computed = {{"rows", rows}, {"stopped_at", m}};
      return unfinished(v);
    }
    const std::uint64_t h = h_value(p);
    const Family* odd = nullptr;
    for (const auto& mf : *o.maxima) {
      if (!has_label(mf.labels, LabelKind::h_t)) {
        odd = &mf.family;
        break;
      }
    }
    const bool holds = o.alpha == h && odd == nullptr;
    rows.push_back({{"m", m}, {"alpha", o.alpha}, {"h", h}, {"alpha_equals_h", o.alpha == h},
                    {"only_h_t", odd == nullptr}, {"maximum_count", o.maximum_count}});
    if (holds && !onset) onset = m;
    if (onset && !holds) persists = false;
    if (!holds) {
      all_hold = false;
      if (asserted && v.counterexample.is_null()) {
        v.counterexample = odd ? counter("maximum family is not of the form H_t", *odd)
                               : counter("maximum family larger than h", o.witness);
      }
    }
  }
  v.computed = {{"rows", rows}, {"onset", onset ? Json(*onset) : Json(nullptr)}, {"persists", persists}};
  v.pass = asserted ? all_hold : true;
  return v;
}

std::vector<IntersectionGraph> oracle_graphs(int count) {
  std::vector<IntersectionGraph> out;
  out.reserve(static_cast<std::size_t>(std::max(count, 0)));
  for (int i = 0; i < count; ++i) {
    const int ground = 4 + i % 5;
    const int k = 1 + (i / 5) % 3;
    std::vector<Mask> sets = k_subsets(ground_mask(ground), k);
    const bool full = sets.size() <= 24;
    if (!full) {
      std::mt19937_64 rng(0x5eed0000ULL + static_cast<std::uint64_t>(i));
      for (std::size_t j = 0; j < 24; ++j) {
        const std::size_t pick = j + static_cast<std::size_t>(rng() % (sets.size() - j));
        std::swap(sets[j], sets[pick]);
      }
      sets.resize(24);
      std::sort(sets.begin(), sets.end());
    }
    IntersectionGraph g(sets, ground);
    const bool required = i % 4 == 3;
    if (required) g.require({0});
    if (full && !required) g.set_symmetry({ground_mask(ground)});
    out.push_back(std::move(g));
  }
  return out;
}

Verdict verify_solver_oracle(int count, const Budget& budget) {
  Verdict v = start("solver", {{"graphs", count}});
  v.expected = {{"mismatches", 0}};
  std::size_t mismatches = 0;
  std::size_t index = 0;
  for (const IntersectionGraph& g : oracle_graphs(count)) {
    const MisResult r = max_independent_set(g, budget);
    absorb(v, r.stats);
    if (!r.proved) return unfinished(v);
    const std::size_t oracle = subset_dp_alpha(g);
    if (r.alpha != oracle || !g.is_independent(r.witness)) {
      ++mismatches;
      if (v.counterexample.is_null()) {
        std::vector<Mask> w;
        for (std::size_t i : r.witness) w.push_back(g.vertex(i));
        v.counterexample = {{"reason", "solver and subset oracle disagree"}, {"graph", index},
                            {"vertices", sets_json(g.vertices())}, {"solver_alpha", r.alpha},
                            {"oracle_alpha", oracle}, {"witness", sets_json(w)}};
      }
    }
    ++index;
  }
  v.computed = {{"mismatches", mismatches}};
  v.pass = mismatches == 0;
  return v;
}

std::vector<std::array<int, 4>> zhang_products() {
  std::vector<std::pair<int, int>> factors;
  for (int k = 1; k <= 3; ++k) {
    for (int n = k; n <= 6; ++n) factors.emplace_back(n, k);
  }
  std::vector<std::array<int, 4>> out;
  for (auto [n1, k1] : factors) {
    for (auto [n2, k2] : factors) {
      if (binomial(n1, k1) * binomial(n2, k2) <= 200) out.push_back({n1, k1, n2, k2});
    }
  }
  return out;
}

std::vector<std::array<int, 3>> xfm_triples() {
  std::vector<std::array<int, 3>> out;
  for (int b = 1; b <= 3; ++b) {
    for (int a = 1; a <= b; ++a) {
      for (int x = a + b; x <= 7; ++x) {
        if (binomial(x, a) <= kCrossSmallSideCap && binomial(x, b) <= kCrossLargeSideCap) out.push_back({x, a, b});
      }
    }
  }
  return out;
}

std::vector<Verdict> desk_suite(const Budget& budget) {
  std::vector<Verdict> out;
  for (auto [m, k] : std::vector<std::pair<int, int>>{{5, 2}, {6, 2}, {7, 2}, {7, 3}, {8, 3}, {9, 4}})
    out.push_back(verify_ekr(m, k, budget));
  for (auto [m, k] : std::vector<std::pair<int, int>>{{7, 3}, {8, 3}, {9, 4}}) out.push_back(verify_hm(m, k, budget));
  for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 3}, {3, 4}, {3, 5}}) out.push_back(verify_m_equals_2k(k, n, budget));
  for (auto [m, k] : std::vector<std::pair<int, int>>{{6, 2}, {7, 3}, {12, 4}}) out.push_back(verify_n_2k_minus_1(m, k, budget));
  for (auto [m, k] : std::vector<std::pair<int, int>>{{7, 3}, {8, 3}, {11, 4}}) out.push_back(verify_n_2k_minus_2(m, k, budget));
  for (auto [m, k] : std::vector<std::pair<int, int>>{{9, 4}, {10, 4}}) out.push_back(verify_n_2k_minus_3(m, k, budget));
  for (auto [n1, k1, n2, k2] : zhang_products()) out.push_back(verify_zhang(n1, k1, n2, k2, budget));
  for (auto [x, a, b] : xfm_triples()) out.push_back(verify_xfm(x, a, b));
  out.push_back(verify_solver_oracle(100, budget));
  out.push_back(verify_fuf(4, 4, 3, 1, 6, 12, budget));
  out.push_back(verify_theorem11(4, 4, 9, 12, budget));
  std::stable_sort(out.begin(), out.end(), [](const Verdict& a, const Verdict& b) { return a.claim < b.claim; });
  return out;
}

}  // namespace ekrlab
