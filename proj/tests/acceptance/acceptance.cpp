// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
//
// Library verdicts are cross-checked against the brute-force routines in
// oracles.hpp and against values recomputed here from the definitions.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "ekrlab/verify.hpp"
#include "oracles.hpp"

using namespace ekrlab;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    else detail += "; " + why;
    ok = false;
  }
  void expect(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs >= limit_s) o.fail("runtime " + std::to_string(secs) + " s exceeds " + std::to_string(limit_s) + " s");
  if (!o.ok) ++failures;
  std::printf("criterion %2d %-38s %s (%.2f s)%s%s\n", id, title.c_str(), o.ok ? "PASS" : "FAIL", secs,
              o.detail.empty() ? "" : ": ", o.detail.c_str());
  std::fflush(stdout);
}

std::string tag(int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

// h(m,n,k) counted from the definition of H_1.
std::uint64_t h_count(int m, int n, int k) {
  const Mask inner = (Mask{1} << n) - 1;
  std::uint64_t h = 0;
  for (Mask s : oracle::k_sets(m, k)) {
    const int tr = oracle::popcount(s & inner);
    if ((s & ~inner) == 0 || ((s & 1U) && tr >= n - k + 1)) ++h;
  }
  return h;
}

// H_t built from its definition.
std::vector<Mask> h_family(int m, int n, int k, int t) {
  const Mask inner = (Mask{1} << n) - 1;
  const Mask tb = Mask{1} << (t - 1);
  std::vector<Mask> out;
  for (Mask s : oracle::k_sets(m, k)) {
    if ((s & ~inner) == 0 || ((s & tb) && oracle::popcount(s & inner) >= n - k + 1)) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Mask> as_list(const Family& f) { return {f.members().begin(), f.members().end()}; }

std::set<std::vector<Mask>> family_set(const SearchOutcome& o) {
  std::set<std::vector<Mask>> out;
  for (const auto& mf : *o.maxima) out.insert(as_list(mf.family));
  return out;
}

Mask common_of(const std::vector<Mask>& f) {
  Mask c = ~Mask{0};
  for (Mask s : f) c &= s;
  return f.empty() ? 0 : c;
}

// Plain exhaustive maximum independent set: branch on the first free vertex.
std::size_t exhaustive_alpha(const oracle::Adjacency& adj, std::vector<bool> free, std::size_t from) {
  while (from < free.size() && !free[from]) ++from;
  if (from == free.size()) return 0;
  free[from] = false;
  const std::size_t without = exhaustive_alpha(adj, free, from + 1);
  for (std::size_t j = 0; j < free.size(); ++j) {
    if (adj[from][j]) free[j] = false;
  }
  return std::max(without, 1 + exhaustive_alpha(adj, free, from + 1));
}

void print_verdict_issue(Outcome& o, const Verdict& v, const std::string& where) {
  if (!v.proved) o.fail(where + " ran out of budget");
  else if (!v.pass) o.fail(where + " failed: " + v.counterexample.dump());
}

}  // namespace

int main() {
  const Budget budget = Budget::from_env();

  criterion(1, "EKR reproduction", 60, [&](Outcome& o) {
    for (auto [m, k] : std::vector<std::pair<int, int>>{{5, 2}, {6, 2}, {7, 2}, {7, 3}, {8, 3}, {9, 4}}) {
      const Verdict v = verify_ekr(m, k, budget);
      print_verdict_issue(o, v, "ekr" + tag(m, k));
      o.expect(v.computed["alpha"] == oracle::choose(m - 1, k - 1), "alpha differs from C(m-1,k-1) at " + tag(m, k));
      o.expect(v.computed["star_count"] == m, "star count differs from m at " + tag(m, k));
      if (oracle::choose(m, k) <= 21) {
        const oracle::Maxima mx = oracle::maximum_sets(oracle::disjointness(oracle::k_sets(m, k)));
        o.expect(mx.alpha == oracle::choose(m - 1, k - 1), "oracle alpha mismatch at " + tag(m, k));
        o.expect(mx.sets.size() == static_cast<std::size_t>(m), "oracle maximum count mismatch at " + tag(m, k));
        o.expect(v.computed["maximum_count"] == mx.sets.size(), "library maximum count differs from oracle at " + tag(m, k));
      }
    }
  });

  criterion(2, "Hilton-Milner reproduction", 120, [&](Outcome& o) {
    for (auto [m, k] : std::vector<std::pair<int, int>>{{7, 3}, {8, 3}, {9, 4}}) {
      const Verdict v = verify_hm(m, k, budget);
      print_verdict_issue(o, v, "hm" + tag(m, k));
      const std::uint64_t hm = oracle::choose(m - 1, k - 1) - oracle::choose(m - 1 - k, k - 1) + 1;
      o.expect(v.computed["alpha"] == hm, "alpha differs from the HM value at " + tag(m, k));
      o.expect(v.computed["m2_present"] == (k == 3), "M2 presence wrong at " + tag(m, k));
      if (k == 3) {
        // Count M2 shapes among brute-force maxima: some triple X meets every member twice.
        const auto mx = oracle::mnk_maxima(m, k + 1, k);
        std::size_t m2 = 0;
        for (const auto& f : mx) {
          bool any = false;
          for (Mask x : oracle::k_sets(m, 3)) {
            bool all = f.size() == static_cast<std::size_t>(3 * oracle::choose(m - 3, k - 2) + oracle::choose(m - 3, k - 3));
            for (Mask s : f) all = all && oracle::popcount(s & x) >= 2;
            any = any || all;
          }
          m2 += any ? 1 : 0;
        }
        o.expect(m2 > 0, "oracle finds no M2 maximum at " + tag(m, k));
        o.expect(v.computed["m2_count"] == m2, "M2 count differs from oracle at " + tag(m, k));
        o.expect(v.computed["maximum_count"] == mx.size(), "maximum count differs from oracle at " + tag(m, k));
      }
    }
  });

  criterion(3, "m = 2k", 60, [&](Outcome& o) {
    for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 3}, {3, 4}, {3, 5}}) {
      const Verdict v = verify_m_equals_2k(k, n, budget);
      print_verdict_issue(o, v, "m2k" + tag(k, n));
      o.expect(v.computed["alpha"] == oracle::choose(2 * k, k) / 2, "alpha differs from C(2k,k)/2 at " + tag(k, n));
    }
    const auto mx = oracle::mnk_maxima(6, 4, 3);
    o.expect(mx.size() == 64, "oracle count at (3,4) is " + std::to_string(mx.size()));
    const SearchOutcome s = enumerate_max_mnk(Params::make(6, 4, 3), EnumerationMode::full, budget);
    o.expect(s.maxima_complete && s.maximum_count == mx.size(), "library count differs from oracle at (3,4)");
    o.expect(family_set(s) == std::set<std::vector<Mask>>(mx.begin(), mx.end()), "enumerated maxima differ from oracle at (3,4)");
  });

  criterion(4, "n = 2k-1", 10, [&](Outcome& o) {
    for (auto [m, k] : std::vector<std::pair<int, int>>{{6, 2}, {7, 3}, {12, 4}}) {
      const Verdict v = verify_n_2k_minus_1(m, k, budget);
      print_verdict_issue(o, v, "n2k1" + tag(m, k));
      o.expect(v.computed["alpha"] == oracle::choose(2 * k - 1, k), "alpha differs from C(2k-1,k) at " + tag(m, k));
      o.expect(v.computed["maximum_count"] == 1, "maximum not unique at " + tag(m, k));
    }
    for (auto [m, k] : std::vector<std::pair<int, int>>{{6, 2}, {7, 3}}) {
      const auto mx = oracle::mnk_maxima(m, 2 * k - 1, k);
      o.expect(mx.size() == 1 && mx.front().size() == oracle::choose(2 * k - 1, k), "oracle disagrees at " + tag(m, k));
    }
  });

  criterion(5, "n = 2k-2", 120, [&](Outcome& o) {
    // F*: maximum intersecting families of 2-sets of [4].
    const oracle::Maxima fstar = oracle::maximum_sets(oracle::disjointness(oracle::k_sets(4, 2)));
    std::size_t stars = 0;
    std::size_t triangles = 0;
    for (const auto& idx : fstar.sets) {
      std::vector<Mask> f;
      for (std::size_t i : idx) f.push_back(oracle::k_sets(4, 2)[i]);
      (common_of(f) ? stars : triangles) += 1;
    }
    o.expect(stars == 4 && triangles == 4, "oracle F* split is " + std::to_string(stars) + "+" + std::to_string(triangles));
    o.expect(brute_force_half_families(3).size() == fstar.sets.size(), "library F* count differs from oracle");
    for (auto [m, k] : std::vector<std::pair<int, int>>{{7, 3}, {8, 3}}) {
      const Verdict v = verify_n_2k_minus_2(m, k, budget);
      print_verdict_issue(o, v, "n2k2" + tag(m, k));
      o.expect(v.computed["alpha"] == h_count(m, 2 * k - 2, k), "alpha differs from h at " + tag(m, k));
      const auto mx = oracle::mnk_maxima(m, 2 * k - 2, k);
      o.expect(mx.size() == fstar.sets.size(), "oracle maxima do not biject with F* at " + tag(m, k));
      o.expect(mx.front().size() == h_count(m, 2 * k - 2, k), "oracle alpha differs from h at " + tag(m, k));
      // Each oracle maximum is C([4],3) plus F x {b} for b outside, F a maximum F*.
      std::set<std::vector<Mask>> built;
      for (const auto& idx : fstar.sets) {
        std::vector<Mask> fam = oracle::k_sets(4, 3);
        for (std::size_t i : idx) {
          for (int b = 5; b <= m; ++b) fam.push_back(oracle::k_sets(4, 2)[i] | (Mask{1} << (b - 1)));
        }
        std::sort(fam.begin(), fam.end());
        built.insert(fam);
      }
      o.expect(built == std::set<std::vector<Mask>>(mx.begin(), mx.end()), "oracle maxima are not the F* lifts at " + tag(m, k));
      const SearchOutcome s = enumerate_max_mnk(Params::make(m, 2 * k - 2, k), EnumerationMode::full, budget);
      o.expect(family_set(s) == built, "library maxima are not the F* lifts at " + tag(m, k));
    }
  });

  criterion(6, "n = 2k-3", 600, [&](Outcome& o) {
    for (auto [m, want] : std::vector<std::pair<int, std::uint64_t>>{{9, 53}, {10, 75}}) {
      const int k = 4;
      const int n = 5;
      o.expect(h_count(m, n, k) == want, "h recount at m=" + std::to_string(m));
      const Verdict v = verify_n_2k_minus_3(m, k, budget);
      print_verdict_issue(o, v, "n2k3" + tag(m, k));
      o.expect(v.computed["alpha"] == want, "alpha differs from h at m=" + std::to_string(m));
      const SearchOutcome s = enumerate_max_mnk(Params::make(m, n, k), EnumerationMode::full, budget);
      std::set<std::vector<Mask>> hs;
      for (int t = 1; t <= n; ++t) hs.insert(h_family(m, n, k, t));
      o.expect(s.maxima_complete && family_set(s) == hs, "maxima are not exactly the five H_t at m=" + std::to_string(m));
      for (const auto& mf : *s.maxima) {
        o.expect(has_label(mf.labels, LabelKind::h_t), "maximum without an H_T label at m=" + std::to_string(m));
      }
    }
  });

  criterion(7, "Kneser products", 120, [&](Outcome& o) {
    std::vector<std::string> bad;
    for (const auto& [n1, k1, n2, k2] : zhang_products()) {
      const Verdict v = verify_zhang(n1, k1, n2, k2, budget);
      if (!v.proved) {
        o.fail("budget exhausted");
        continue;
      }
      o.expect(v.computed["alpha"] == v.expected["alpha"], "alpha differs from max(a(G)|H|, |G|a(H))");
      if (v.expected["closed_form_guard"] == true) {
        o.expect(v.computed["alpha"] == v.expected["closed_form"], "closed form mismatch");
      }
      if (v.pass) continue;
      std::ostringstream os;
      os << "KG(" << n1 << "," << k1 << ")xKG(" << n2 << "," << k2 << ")";
      bad.push_back(os.str());
      // The reported set must really be a maximum independent set with two dependent projections.
      if (!v.counterexample.contains("set")) continue;
      std::vector<std::pair<Mask, Mask>> set;
      for (const Json& pr : v.counterexample["set"]) {
        Mask a = 0, b = 0;
        for (const Json& e : pr[0]) a |= Mask{1} << (e.get<int>() - 1);
        for (const Json& e : pr[1]) b |= Mask{1} << (e.get<int>() - 1);
        set.emplace_back(a, b);
      }
      bool independent = set.size() == v.computed["alpha"].get<std::size_t>();
      std::vector<Mask> ls, rs;
      for (std::size_t i = 0; i < set.size(); ++i) {
        ls.push_back(set[i].first);
        rs.push_back(set[i].second);
        for (std::size_t j = i + 1; j < set.size(); ++j) {
          independent = independent && ((set[i].first & set[j].first) != 0 || (set[i].second & set[j].second) != 0);
        }
      }
      o.expect(independent, "reported set is not a maximum independent set");
      o.expect(!oracle::intersecting(ls) && !oracle::intersecting(rs), "reported projections are not both dependent");
    }
    if (!bad.empty()) {
      std::string list;
      for (const auto& s : bad) list += (list.empty() ? "" : " ") + s;
      o.fail("projection structure fails on " + std::to_string(bad.size()) + " products: " + list);
    }
  });

  criterion(8, "cross-intersecting bound", 300, [&](Outcome& o) {
    std::size_t checked = 0;
    for (int x = 2; x <= 7; ++x) {
      for (int a = 1; a <= 3; ++a) {
        for (int b = a; b <= 3; ++b) {
          if (a + b > x) continue;
          const std::uint64_t bound = oracle::choose(x, b) - oracle::choose(x - a, b) + 1;
          const CrossIntersectingOutcome c = cross_intersecting_max(x, a, b);
          o.expect(c.bound == bound, "bound mismatch at x=" + std::to_string(x));
          if (!c.exhaustive) continue;
          ++checked;
          const Verdict v = verify_xfm(x, a, b);
          print_verdict_issue(o, v, "xfm(" + std::to_string(x) + "," + std::to_string(a) + "," + std::to_string(b) + ")");
          o.expect(c.max_sum == bound, "brute-force maximum differs from the bound");
          if (oracle::choose(x, a) + oracle::choose(x, b) <= 20) {
            o.expect(oracle::cross_max(x, a, b) == bound, "oracle maximum differs from the bound");
          }
        }
      }
    }
    o.expect(checked > 0, "no triple within the cap");
  });

  criterion(9, "bucket bound and counting inequality", 600, [&](Outcome& o) {
    std::size_t families = 0;
    for (auto [m, k] : std::vector<std::pair<int, int>>{{9, 4}, {10, 4}, {11, 4}, {12, 4}, {11, 5}}) {
      const int n = 2 * k - 3;
      const SearchOutcome s = enumerate_max_mnk(Params::make(m, n, k), EnumerationMode::full, budget);
      if (!s.maxima_complete) {
        o.fail("enumeration incomplete at " + tag(m, k));
        continue;
      }
      const Mask inner = (Mask{1} << n) - 1;
      const std::uint64_t cap = static_cast<std::uint64_t>(m - 2 * k + 3);
      for (const auto& mf : *s.maxima) {
        ++families;
        std::map<Mask, std::uint64_t> bucket;
        for (Mask f : mf.family.members()) ++bucket[f & inner];
        std::uint64_t sv = 0;
        std::uint64_t pairs = 0;
        for (Mask a : oracle::k_sets(n, k - 1)) {
          ++pairs;
          const std::uint64_t fa = bucket[a];
          if (fa == 0) continue;
          ++sv;
          o.expect(fa + bucket[inner & ~a] <= cap, "bucket bound violated at " + tag(m, k));
        }
        const std::uint64_t rhs = oracle::choose(n, k) + sv * cap + (pairs - sv) * oracle::choose(static_cast<int>(cap), 2);
        o.expect(mf.family.size() <= rhs, "counting inequality violated at " + tag(m, k));
        const ObservationReport r = check_observation(mf.family, Params::make(m, n, k));
        o.expect(r.bucket_violations == 0 && r.inequality_holds && r.s == sv && r.inequality_rhs == rhs,
                 "library observation report disagrees at " + tag(m, k));
      }
    }
    o.detail = o.ok ? std::to_string(families) + " families checked" : o.detail;
  });

  criterion(10, "solver oracle equivalence", 60, [&](Outcome& o) {
    const std::vector<IntersectionGraph> graphs = oracle_graphs(100);
    o.expect(graphs.size() == 100, "wrong number of graphs");
    std::size_t mismatches = 0;
    for (const IntersectionGraph& g : graphs) {
      o.expect(g.size() <= 24, "graph above 24 vertices");
      oracle::Adjacency adj(g.size(), std::vector<bool>(g.size(), false));
      for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t j = 0; j < g.size(); ++j) adj[i][j] = (g.vertex(i) & g.vertex(j)) == 0 && i != j;
      }
      std::vector<bool> free(g.size(), true);
      std::size_t bonus = 0;
      for (std::size_t r : g.required()) {
        if (!free[r]) continue;
        ++bonus;
        free[r] = false;
        for (std::size_t j = 0; j < g.size(); ++j) {
          if (adj[r][j]) free[j] = false;
        }
      }
      const std::size_t want = bonus + exhaustive_alpha(adj, free, 0);
      const MisResult r = max_independent_set(g, budget);
      if (!r.proved || r.alpha != want) ++mismatches;
    }
    o.expect(mismatches == 0, std::to_string(mismatches) + " mismatches");
    const Verdict v = verify_solver_oracle(100, budget);
    print_verdict_issue(o, v, "solver");
  });

  criterion(11, "two-layer sweep", 600, [&](Outcome& o) {
    const Verdict v = verify_fuf(4, 4, 3, 1, 6, 12, budget);
    print_verdict_issue(o, v, "fuf");
    if (!v.proved) return;
    std::printf("    m  alpha  star  equal  common  common_in_n  maxima  orbits\n");
    bool started = false;
    for (const Json& row : v.computed["rows"]) {
      const int m = row["m"].get<int>();
      std::uint64_t star = 0;
      for (Mask s : oracle::k_sets(m, 4)) {
        const int tr = oracle::popcount(s & 0xFU);
        if ((s & 1U) && (tr == 3 || tr == 1)) ++star;
      }
      o.expect(row["star_value"] == star, "star value recount differs at m=" + std::to_string(m));
      o.expect(row["alpha"].get<std::uint64_t>() >= star, "alpha below the star value at m=" + std::to_string(m));
      const bool property = row["equals_star"] == true && row["common_element_in_n"] == true;
      if (started) o.expect(property, "property lost at m=" + std::to_string(m));
      started = started || property;
      std::printf("  %3d  %5llu  %4llu  %5s  %6s  %11s  %6llu  %6llu\n", m,
                  static_cast<unsigned long long>(row["alpha"].get<std::uint64_t>()),
                  static_cast<unsigned long long>(star), row["equals_star"] == true ? "yes" : "no",
                  row["common_element"] == true ? "yes" : "no", row["common_element_in_n"] == true ? "yes" : "no",
                  static_cast<unsigned long long>(row["maximum_count"].get<std::uint64_t>()),
                  static_cast<unsigned long long>(row["orbits"].get<std::uint64_t>()));
    }
  });

  std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
