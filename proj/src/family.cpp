#include "ekrlab/family.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace ekrlab {

SubsetCode::SubsetCode(Mask b, int ground) : bits(b), m(ground) {
  if (ground < 1 || ground > kMaxGround) throw ParamError("ground set size must be in [1, 62]");
  if ((b & ~ground_mask(ground)) != 0) throw ParamError("set " + format_braced(b) + " is not inside [" + std::to_string(ground) + "]");
}

SubsetCode SubsetCode::of(int m, const std::vector<int>& elems) { return SubsetCode(mask_of(elems), m); }

Params Params::make(int m, int n, int k) {
  if (!(0 < k && k <= n && n < 2 * k && 2 * k <= m)) {
    throw ParamError("parameters (m=" + std::to_string(m) + ", n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                     ") violate 0 < k <= n < 2k <= m");
  }
  if (m > kMaxGround) throw ParamError("m = " + std::to_string(m) + " exceeds the ground-set cap of 62");
  return Params(m, n, k);
}

Family::Family(int m, int k, std::vector<Mask> members) : m_(m), k_(k), members_(std::move(members)) {
  check_ground();
  const Mask ground = ground_mask(m);
  for (Mask s : members_) {
    if ((s & ~ground) != 0) throw ParamError("member " + format_braced(s) + " is not a subset of [" + std::to_string(m) + "]");
    if (cardinality(s) != k) throw ParamError("member " + format_braced(s) + " does not have " + std::to_string(k) + " elements");
  }
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

void Family::check_ground() const {
  if (m_ < 1 || m_ > kMaxGround) throw ParamError("ground set size must be in [1, 62]");
  if (k_ < 0 || k_ > m_) throw ParamError("set size k must lie in [0, m]");
}

bool Family::contains(Mask set) const { return std::binary_search(members_.begin(), members_.end(), set); }

Mask Family::common() const {
  Mask c = ground_mask(m_);
  for (Mask s : members_) c &= s;
  return c;
}

std::vector<std::uint64_t> h_summands(const Params& p) {
  std::vector<std::uint64_t> out{binomial(p.n(), p.k())};
  for (int i = 1; i <= p.layers(); ++i) {
    out.push_back(checked_mul(binomial(p.n() - 1, p.k() - i - 1), binomial(p.m() - p.n(), i)));
  }
  return out;
}

std::uint64_t h_value(const Params& p) {
  std::uint64_t total = 0;
  for (std::uint64_t s : h_summands(p)) total = checked_add(total, s);
  return total;
}

Family base_family(const Params& p) { return Family(p.m(), p.k(), k_subsets(p.inner(), p.k())); }

Family build_H_t(const Params& p, int t) {
  if (t < 1 || t > p.n()) throw ParamError("t = " + std::to_string(t) + " is not in [" + std::to_string(p.n()) + "]");
  std::vector<Mask> members = k_subsets(p.inner(), p.k());
  const Mask tb = element_bit(t);
  for (int i = 1; i <= p.layers(); ++i) {
    for (Mask a : k_subsets(p.inner() & ~tb, p.k() - i - 1)) {
      for (Mask b : k_subsets(p.outer(), i)) members.push_back(a | b | tb);
    }
  }
  return Family(p.m(), p.k(), std::move(members));
}

std::string kind_name(LabelKind kind) {
  switch (kind) {
    case LabelKind::star: return "STAR";
    case LabelKind::h_t: return "H_T";
    case LabelKind::m1: return "M1";
    case LabelKind::m2: return "M2";
    case LabelKind::hybrid_2k2: return "HYBRID_2K2";
    case LabelKind::other: break;
  }
  return "OTHER";
}

namespace {

void require_hm_range(int m, int k) {
  if (!(0 < 2 * k && 2 * k < m)) throw ParamError("need 0 < 2k < m (m=" + std::to_string(m) + ", k=" + std::to_string(k) + ")");
  if (m > kMaxGround) throw ParamError("m exceeds the ground-set cap of 62");
}

}  // namespace

Family build_M1(int m, int k, const SubsetCode& a, int t) {
  require_hm_range(m, k);
  if (a.m != m) throw ParamError("A must be a subset of [m]");
  if (a.size() != k) throw ParamError("A must have exactly k elements");
  if (t < 1 || t > m) throw ParamError("t is not in [m]");
  if (a.contains(t)) throw ParamError("t must not belong to A");
  std::vector<Mask> members{a.bits};
  const Mask tb = element_bit(t);
  for (Mask b : k_subsets(ground_mask(m), k)) {
    if ((b & tb) != 0 && (b & a.bits) != 0) members.push_back(b);
  }
  return Family(m, k, std::move(members));
}

Family build_M2(int m, int k, const SubsetCode& x) {
  require_hm_range(m, k);
  if (x.m != m) throw ParamError("X must be a subset of [m]");
  if (x.size() != 3) throw ParamError("X must have exactly 3 elements");
  std::vector<Mask> members;
  for (Mask b : k_subsets(ground_mask(m), k)) {
    if (cardinality(b & x.bits) >= 2) members.push_back(b);
  }
  return Family(m, k, std::move(members));
}

std::optional<std::pair<Mask, Mask>> disjoint_pair(const Family& f) {
  const auto s = f.members();
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if ((s[i] & s[j]) == 0) return std::pair{s[i], s[j]};
    }
  }
  return std::nullopt;
}

bool is_intersecting(const Family& f) { return !disjoint_pair(f).has_value(); }

bool is_mnk_family(const Family& f, const Params& p) {
  if (f.m() != p.m() || f.k() != p.k()) return false;
  for (Mask b : k_subsets(p.inner(), p.k())) {
    if (!f.contains(b)) return false;
  }
  return is_intersecting(f);
}

bool trace_constraint_holds(const Family& f, const Params& p) {
  return std::all_of(f.members().begin(), f.members().end(),
                     [&](Mask s) { return cardinality(s & p.inner()) >= p.trace_min(); });
}

CanonicalPartition canonical_partition(const Family& f, const Params& p) {
  if (f.m() != p.m() || f.k() != p.k()) throw ParamError("family ground parameters do not match (m, k)");
  if (auto pair = disjoint_pair(f)) {
    throw ParamError("family is not intersecting: " + format_braced(pair->first) + " and " + format_braced(pair->second) +
                     " are disjoint");
  }
  for (Mask b : k_subsets(p.inner(), p.k())) {
    if (!f.contains(b)) throw ParamError("family misses base member " + format_braced(b));
  }
  std::vector<Mask> base;
  std::vector<std::vector<Mask>> layers(static_cast<std::size_t>(p.layers()));
  for (Mask s : f.members()) {
    const int trace = cardinality(s & p.inner());
    if (trace < p.trace_min()) {
      throw ParamError("member " + format_braced(s) + " meets [n] in " + std::to_string(trace) + " < " +
                       std::to_string(p.trace_min()) + " elements");
    }
    if (trace == p.k()) {
      base.push_back(s);
    } else {
      layers[static_cast<std::size_t>(p.k() - trace - 1)].push_back(s);
    }
  }
  CanonicalPartition out{Family(p.m(), p.k(), std::move(base)), {}};
  for (auto& layer : layers) out.layers.emplace_back(p.m(), p.k(), std::move(layer));
  return out;
}

std::string Label::name() const {
  switch (kind) {
    case LabelKind::star:
      return "STAR(" + std::to_string(t) + ")";
    case LabelKind::h_t:
      return "H_T(" + std::to_string(t) + ")";
    case LabelKind::m1:
      return "M1(" + format_braced(set) + ";" + std::to_string(t) + ")";
    case LabelKind::m2:
      return "M2(" + format_braced(set) + ")";
    case LabelKind::hybrid_2k2: {
      std::string s = "HYBRID_2K2(";
      for (std::size_t i = 0; i < trace_family.size(); ++i) {
        if (i > 0) s += ",";
        s += format_braced(trace_family[i]);
      }
      return s + ")";
    }
    case LabelKind::other:
      break;
  }
  return "OTHER";
}

namespace {

std::optional<Label> match_hybrid(const Family& f) {
  const int k = f.k();
  const int m = f.m();
  const int inner_size = 2 * k - 2;
  if (k < 2 || m < 2 * k - 1) return std::nullopt;
  const Mask inner = ground_mask(inner_size);
  const int outside = m - inner_size;
  std::vector<Mask> traces;
  std::size_t base_count = 0;
  std::size_t raised = 0;
  for (Mask s : f.members()) {
    const int tr = cardinality(s & inner);
    if (tr == k) {
      ++base_count;
    } else if (tr == k - 1) {
      ++raised;
      traces.push_back(s & inner);
    } else {
      return std::nullopt;
    }
  }
  if (base_count != binomial(inner_size, k)) return std::nullopt;
  std::sort(traces.begin(), traces.end());
  traces.erase(std::unique(traces.begin(), traces.end()), traces.end());
  // Each trace must be lifted by every outside element.
  if (raised != traces.size() * static_cast<std::size_t>(outside)) return std::nullopt;
  if (traces.size() != binomial(2 * k - 3, k - 2)) return std::nullopt;
  const Family star_family(m, k - 1, traces);
  if (!is_intersecting(star_family)) return std::nullopt;
  Label l;
  l.kind = LabelKind::hybrid_2k2;
  l.trace_family = traces;
  return l;
}

}  // namespace

std::vector<Label> classify_family(const Family& f, const Params& p) {
  std::vector<Label> labels;
  const int m = f.m();
  const int k = f.k();
  if (!f.empty()) {
    for (int t : elements(f.common())) labels.push_back({LabelKind::star, t, 0, {}});
  }
  if (f.m() == p.m() && f.k() == p.k()) {
    const std::uint64_t h = h_value(p);
    if (f.size() == h) {
      for (int t = 1; t <= p.n(); ++t) {
        if (build_H_t(p, t) == f) labels.push_back({LabelKind::h_t, t, 0, {}});
      }
    }
  }
  if (0 < 2 * k && 2 * k < m && !f.empty()) {
    const std::uint64_t m1_size = binomial(m - 1, k - 1) - binomial(m - 1 - k, k - 1) + 1;
    if (f.size() == m1_size) {
      for (int t = 1; t <= m; ++t) {
        const Mask tb = element_bit(t);
        std::optional<Mask> outsider;
        std::size_t outsiders = 0;
        for (Mask s : f.members()) {
          if ((s & tb) == 0) {
            outsider = s;
            ++outsiders;
          }
        }
        if (outsiders == 1 && build_M1(m, k, SubsetCode(*outsider, m), t) == f) {
          labels.push_back({LabelKind::m1, t, *outsider, {}});
        }
      }
    }
    const std::uint64_t m2_size = checked_add(checked_mul(3, binomial(m - 3, k - 2)), binomial(m - 3, k - 3));
    if (f.size() == m2_size && k >= 2) {
      for (Mask x : k_subsets(ground_mask(m), 3)) {
        // F ⊆ M2(X) with equal size means F = M2(X).
        const bool inside = std::all_of(f.members().begin(), f.members().end(),
                                        [x](Mask s) { return cardinality(s & x) >= 2; });
        if (inside) labels.push_back({LabelKind::m2, 0, x, {}});
      }
    }
  }
  if (p.n() == 2 * p.k() - 2 && p.m() == m && p.k() == k) {
    if (auto hy = match_hybrid(f)) labels.push_back(*hy);
  }
  if (labels.empty()) labels.push_back({LabelKind::other, 0, 0, {}});
  return labels;
}

bool has_label(const std::vector<Label>& labels, LabelKind kind) {
  return std::any_of(labels.begin(), labels.end(), [kind](const Label& l) { return l.kind == kind; });
}

std::uint64_t fuf_threshold(int n, int k, int d) {
  if (!(0 <= d && d < k && k <= n)) throw ParamError("fuf_threshold needs 0 <= d < k <= n");
  const int e = k - d;
  if (e >= 64) throw OverflowError("exponent k - d too large");
  // 2n (n/2)^e C(n, floor(n/2)) = 2n n^e C / 2^e, and the least integer above x is floor(x) + 1.
  std::uint64_t num = checked_mul(2 * static_cast<std::uint64_t>(n), binomial(n, n / 2));
  for (int i = 0; i < e; ++i) num = checked_mul(num, static_cast<std::uint64_t>(n));
  return checked_add(num >> e, 1);
}

void write_family(std::ostream& out, const Family& f, bool header) {
  if (header) out << "# m=" << f.m() << " k=" << f.k() << "\n";
  for (Mask s : f.members()) out << format_set(s) << "\n";
}

std::string format_family(const Family& f) {
  std::ostringstream os;
  write_family(os, f);
  return os.str();
}

namespace {

void parse_header(const std::string& line, std::optional<int>& m, std::optional<int>& k) {
  std::istringstream is(line.substr(1));
  std::string tok;
  while (is >> tok) {
    try {
      if (tok.rfind("m=", 0) == 0) m = std::stoi(tok.substr(2));
      if (tok.rfind("k=", 0) == 0) k = std::stoi(tok.substr(2));
    } catch (const std::exception&) {
      throw ParamError("malformed header token: " + tok);
    }
  }
}

}  // namespace

Family read_family(std::istream& in, std::optional<int> m, std::optional<int> k) {
  std::optional<int> hm;
  std::optional<int> hk;
  std::vector<Mask> sets;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      parse_header(line.substr(first), hm, hk);
      continue;
    }
    std::istringstream is(line);
    std::string tok;
    Mask s = 0;
    int prev = 0;
    while (is >> tok) {
      int e = 0;
      try {
        std::size_t used = 0;
        e = std::stoi(tok, &used);
        if (used != tok.size()) throw ParamError("");
      } catch (const std::exception&) {
        throw ParamError("line " + std::to_string(lineno) + ": not an integer: '" + tok + "'");
      }
      if (e < 1 || e > kMaxGround) throw ParamError("line " + std::to_string(lineno) + ": element out of range");
      if (e <= prev) throw ParamError("line " + std::to_string(lineno) + ": elements must be strictly increasing");
      prev = e;
      s |= element_bit(e);
    }
    sets.push_back(s);
  }
  const std::optional<int> mm = m ? m : hm;
  const std::optional<int> kk = k ? k : hk;
  int gm = 0;
  if (mm) {
    gm = *mm;
  } else {
    for (Mask s : sets) gm = std::max(gm, 64 - std::countl_zero(s));
  }
  int gk = 0;
  if (kk) {
    gk = *kk;
  } else if (!sets.empty()) {
    gk = cardinality(sets.front());
  }
  if (gm < 1) throw ParamError("cannot determine the ground set size (empty family without header)");
  return Family(gm, gk, std::move(sets));
}

}  // namespace ekrlab
