#include "ekrlab/solver.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <string>
#include <unordered_map>

namespace ekrlab {

Budget Budget::from_env() {
  Budget b;
  if (const char* env = std::getenv("EKRLAB_BUDGET_SECS"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const double secs = std::strtod(env, &end);
    if (end == env || secs <= 0) throw ParamError(std::string("EKRLAB_BUDGET_SECS is not a positive number: ") + env);
    b.time_limit = std::chrono::milliseconds(static_cast<long long>(secs * 1000.0));
  }
  return b;
}

IntersectionGraph::IntersectionGraph(std::vector<Mask> vertices, int ground)
    : IntersectionGraph(std::move(vertices), ground, [](Mask a, Mask b) { return (a & b) == 0; }) {}

IntersectionGraph::IntersectionGraph(std::vector<Mask> vertices, int ground, const Adjacency& adjacent)
    : vertices_(std::move(vertices)), ground_(ground) {
  if (ground < 0 || ground > kMaxGround) throw ParamError("ground set size out of range");
  build(adjacent);
}

void IntersectionGraph::build(const Adjacency& adjacent) {
  const std::size_t n = vertices_.size();
  words_ = std::max<std::size_t>(1, (n + 63) / 64);
  rows_.assign(n * words_, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (adjacent(vertices_[i], vertices_[j])) {
        rows_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
        rows_[j * words_ + i / 64] |= std::uint64_t{1} << (i % 64);
      }
    }
  }
}

std::size_t IntersectionGraph::degree(std::size_t i) const {
  std::size_t d = 0;
  for (std::size_t w = 0; w < words_; ++w) d += static_cast<std::size_t>(std::popcount(rows_[i * words_ + w]));
  return d;
}

std::size_t IntersectionGraph::edge_count() const {
  std::size_t total = 0;
  for (std::size_t i = 0; i < size(); ++i) total += degree(i);
  return total / 2;
}

std::optional<std::size_t> IntersectionGraph::index_of(Mask vertex) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i] == vertex) return i;
  }
  return std::nullopt;
}

void IntersectionGraph::require(VertexList required) {
  std::sort(required.begin(), required.end());
  required.erase(std::unique(required.begin(), required.end()), required.end());
  for (std::size_t v : required) {
    if (v >= size()) throw ParamError("required vertex index out of range");
  }
  if (!is_independent(required)) throw InfeasibleError("required vertices are not pairwise non-adjacent");
  required_ = std::move(required);
  check_symmetry();
}

void IntersectionGraph::set_symmetry(std::vector<Mask> parts) {
  Mask seen = 0;
  for (Mask p : parts) {
    if ((seen & p) != 0) throw ParamError("symmetry parts overlap");
    seen |= p;
  }
  parts_ = std::move(parts);
  check_symmetry();
}

// The required set must be invariant under a generating set of the declared group.
void IntersectionGraph::check_symmetry() const {
  if (parts_.empty() || required_.empty()) return;
  std::vector<Mask> req;
  for (std::size_t r : required_) req.push_back(vertices_[r]);
  std::sort(req.begin(), req.end());
  auto invariant = [&](const std::vector<int>& img) {
    std::vector<Mask> out;
    for (Mask s : req) {
      Mask t = 0;
      for (int e : elements(s)) t |= element_bit(img[static_cast<std::size_t>(e)]);
      out.push_back(t);
    }
    std::sort(out.begin(), out.end());
    return out == req;
  };
  for (Mask part : parts_) {
    const std::vector<int> elems = elements(part);
    if (elems.size() < 2) continue;
    std::vector<int> swap(kMaxGround + 1);
    for (int i = 0; i <= kMaxGround; ++i) swap[static_cast<std::size_t>(i)] = i;
    std::vector<int> cycle = swap;
    std::swap(swap[static_cast<std::size_t>(elems[0])], swap[static_cast<std::size_t>(elems[1])]);
    for (std::size_t i = 0; i < elems.size(); ++i) cycle[static_cast<std::size_t>(elems[i])] = elems[(i + 1) % elems.size()];
    if (!invariant(swap) || !invariant(cycle)) throw ParamError("required vertices are not invariant under the symmetry");
  }
}

bool IntersectionGraph::is_independent(const VertexList& set) const {
  for (std::size_t a = 0; a < set.size(); ++a) {
    for (std::size_t b = a + 1; b < set.size(); ++b) {
      if (adjacent(set[a], set[b])) return false;
    }
  }
  return true;
}

namespace {

template <std::size_t W>
struct Bits {
  std::array<std::uint64_t, W> w{};

  void set(std::size_t i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return (w[i >> 6] >> (i & 63)) & 1U; }
  bool none() const {
    for (auto x : w) {
      if (x != 0) return false;
    }
    return true;
  }
  int count() const {
    int c = 0;
    for (auto x : w) c += std::popcount(x);
    return c;
  }
  int first() const {
    for (std::size_t i = 0; i < W; ++i) {
      if (w[i] != 0) return static_cast<int>(i * 64 + static_cast<std::size_t>(std::countr_zero(w[i])));
    }
    return -1;
  }
  int count_and(const Bits& o) const {
    int c = 0;
    for (std::size_t i = 0; i < W; ++i) c += std::popcount(w[i] & o.w[i]);
    return c;
  }
  Bits& operator&=(const Bits& o) {
    for (std::size_t i = 0; i < W; ++i) w[i] &= o.w[i];
    return *this;
  }
  Bits& andnot(const Bits& o) {
    for (std::size_t i = 0; i < W; ++i) w[i] &= ~o.w[i];
    return *this;
  }
  friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < W; ++i) {
      std::uint64_t x = w[i];
      while (x != 0) {
        f(static_cast<int>(i * 64 + static_cast<std::size_t>(std::countr_zero(x))));
        x &= x - 1;
      }
    }
  }
};

class Clock {
 public:
  explicit Clock(const Budget& b)
      : start_(std::chrono::steady_clock::now()), deadline_(start_ + b.time_limit), node_limit_(b.node_limit) {}

  // Returns false once either limit is exceeded.
  bool tick() {
    if (exceeded_) return false;
    ++nodes_;
    if (nodes_ > node_limit_) exceeded_ = true;
    if ((nodes_ & 1023U) == 0 && std::chrono::steady_clock::now() > deadline_) exceeded_ = true;
    return !exceeded_;
  }
  bool exceeded() const { return exceeded_; }
  SearchStats stats() const {
    return {nodes_, std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count()};
  }

 private:
  std::chrono::steady_clock::time_point start_;
  std::chrono::steady_clock::time_point deadline_;
  std::uint64_t node_limit_;
  std::uint64_t nodes_ = 0;
  bool exceeded_ = false;
};

template <std::size_t W>
class Engine {
  using B = Bits<W>;

 public:
  Engine(const IntersectionGraph& g, const Budget& budget, bool symmetric)
      : n_(g.size()), adj_(g.size()), vmask_(g.vertices()), clock_(budget) {
    for (std::size_t v = 0; v < n_; ++v) {
      const std::uint64_t* row = g.row(v);
      for (std::size_t w = 0; w < g.words(); ++w) adj_[v].w[w] = row[w];
    }
    if (symmetric) parts_ = g.symmetry_parts();
    symmetric_ = symmetric && nontrivial(parts_);
    clique_of_.assign(n_, 0);
    clique_start_.assign(n_ + 1, 0);
    members_.reserve(n_);
    removed_.assign(n_, 0);
    remover_.assign(n_, 0);
    rem_.assign(n_, 0);
    rem_stamp_.assign(n_, 0);
    forced_.assign(n_, 0);
    fv_.assign(n_, 0);
    dead_.assign(n_, 0);
    inv_.assign(n_, 0);
    for (std::size_t r : g.required()) {
      cur_.push_back(static_cast<int>(r));
      root_.set(r);
    }
    B excluded = root_;
    for (std::size_t r : g.required()) excluded.w = or_words(excluded.w, adj_[r].w);
    for (std::size_t v = 0; v < n_; ++v) {
      if (!excluded.test(v)) candidates_.set(v);
    }
  }

  void optimize(const std::optional<VertexList>& incumbent) {
    enumerate_ = false;
    best_ = static_cast<int>(cur_.size());
    best_set_ = cur_;
    if (incumbent) {
      best_ = static_cast<int>(incumbent->size());
      best_set_.assign(incumbent->begin(), incumbent->end());
    }
    search(candidates_, parts_);
  }

  void enumerate(std::size_t target, const SetVisitor& visit) {
    enumerate_ = true;
    target_ = static_cast<int>(target);
    visit_ = &visit;
    if (cur_.size() <= target) search(candidates_, parts_);
  }

  int best() const { return best_; }
  VertexList best_set() const {
    VertexList out(best_set_.begin(), best_set_.end());
    std::sort(out.begin(), out.end());
    return out;
  }
  bool exceeded() const { return clock_.exceeded(); }
  bool stopped() const { return stop_; }
  std::size_t visited() const { return visited_; }
  SearchStats stats() const { return clock_.stats(); }

 private:
  static std::array<std::uint64_t, W> or_words(std::array<std::uint64_t, W> a, const std::array<std::uint64_t, W>& b) {
    for (std::size_t i = 0; i < W; ++i) a[i] |= b[i];
    return a;
  }

  static bool nontrivial(const std::vector<Mask>& parts) {
    return std::any_of(parts.begin(), parts.end(), [](Mask p) { return cardinality(p) > 1; });
  }

  static std::vector<Mask> refine(const std::vector<Mask>& parts, Mask by) {
    std::vector<Mask> out;
    out.reserve(parts.size() + 4);
    for (Mask p : parts) {
      if ((p & by) != 0) out.push_back(p & by);
      if ((p & ~by) != 0) out.push_back(p & ~by);
    }
    return out;
  }

  bool same_orbit(int u, int v, const std::vector<Mask>& parts) const {
    const Mask a = vmask_[static_cast<std::size_t>(u)];
    const Mask b = vmask_[static_cast<std::size_t>(v)];
    for (Mask p : parts) {
      if (cardinality(a & p) != cardinality(b & p)) return false;
    }
    return true;
  }

  void leaf() {
    const int size = static_cast<int>(cur_.size());
    if (enumerate_) {
      if (size == target_) {
        ++visited_;
        VertexList out(cur_.begin(), cur_.end());
        std::sort(out.begin(), out.end());
        if (!(*visit_)(out)) stop_ = true;
      }
    } else if (size > best_) {
      best_ = size;
      best_set_ = cur_;
    }
  }

  void search(const B& in, const std::vector<Mask>& parts) {
    if (stop_ || !clock_.tick()) return;
    B p = in;
    B iso;
    int branch = -1;
    int branch_deg = -1;
    p.for_each([&](int v) {
      const int d = adj_[static_cast<std::size_t>(v)].count_and(p);
      if (d == 0) {
        iso.set(static_cast<std::size_t>(v));
      } else if (d > branch_deg) {
        branch_deg = d;
        branch = v;
      }
    });
    const std::size_t mark = cur_.size();
    iso.for_each([&](int v) { cur_.push_back(v); });
    p.andnot(iso);

    const int have = static_cast<int>(cur_.size());
    if (enumerate_ && have > target_) {
      cur_.resize(mark);
      return;
    }
    if (branch < 0 || (enumerate_ && have == target_)) {
      if (branch < 0) leaf();
      cur_.resize(mark);
      return;
    }
    const int need = (enumerate_ ? target_ : best_ + 1) - have;
    if (bound(p, need) < need) {
      cur_.resize(mark);
      return;
    }

    const auto bv = static_cast<std::size_t>(branch);
    const bool sym = symmetric_ && nontrivial(parts);
    B orbit;
    orbit.set(bv);
    if (sym) {
      p.for_each([&](int u) {
        if (u != branch && same_orbit(u, branch, parts)) orbit.set(static_cast<std::size_t>(u));
      });
    }

    B with = p;
    with.andnot(adj_[bv]);
    with.reset(bv);
    cur_.push_back(branch);
    if (sym) {
      search(with, refine(parts, vmask_[bv]));
    } else {
      search(with, parts);
    }
    cur_.pop_back();

    B without = p;
    without.andnot(orbit);
    search(without, parts);
    cur_.resize(mark);
  }

  // Upper bound on the independence number of the subgraph induced by p.
  // Stops refining as soon as the bound drops below `need`.
  int bound(const B& p, int need) {
    B uncovered = p;
    int ncl = 0;
    members_.clear();
    while (!uncovered.none()) {
      const int v = uncovered.first();
      uncovered.reset(static_cast<std::size_t>(v));
      clique_start_[static_cast<std::size_t>(ncl)] = static_cast<int>(members_.size());
      members_.push_back(v);
      clique_of_[static_cast<std::size_t>(v)] = ncl;
      B cand = uncovered & adj_[static_cast<std::size_t>(v)];
      while (!cand.none()) {
        const int u = cand.first();
        members_.push_back(u);
        clique_of_[static_cast<std::size_t>(u)] = ncl;
        uncovered.reset(static_cast<std::size_t>(u));
        cand &= adj_[static_cast<std::size_t>(u)];
      }
      ++ncl;
    }
    clique_start_[static_cast<std::size_t>(ncl)] = static_cast<int>(members_.size());
    int ub = ncl;
    if (ub < need) return ub;

    ++epoch_;
    cover_ = &p;
    for (int c = 0; c < ncl; ++c) {
      if (clique_size(c) != 1 || dead_[static_cast<std::size_t>(c)] == epoch_) continue;
      if (propagate(c, members_[static_cast<std::size_t>(clique_start_[static_cast<std::size_t>(c)])])) {
        for (int x : involved_) dead_[static_cast<std::size_t>(x)] = epoch_;
        if (--ub < need) return ub;
      }
    }
    for (int c = 0; c < ncl; ++c) {
      if (clique_size(c) != 2 || dead_[static_cast<std::size_t>(c)] == epoch_) continue;
      const int a = members_[static_cast<std::size_t>(clique_start_[static_cast<std::size_t>(c)])];
      const int b = members_[static_cast<std::size_t>(clique_start_[static_cast<std::size_t>(c)]) + 1];
      if (!propagate(c, a)) continue;
      failed_ = involved_;
      if (!propagate(c, b)) continue;
      for (int x : failed_) dead_[static_cast<std::size_t>(x)] = epoch_;
      for (int x : involved_) dead_[static_cast<std::size_t>(x)] = epoch_;
      if (--ub < need) return ub;
    }
    return ub;
  }

  int clique_size(int c) const {
    return clique_start_[static_cast<std::size_t>(c) + 1] - clique_start_[static_cast<std::size_t>(c)];
  }

  // Unit propagation over the live cliques of the cover, starting with
  // vertex v0 chosen from clique c0. On conflict, involved_ holds the
  // cliques that together cannot each contribute a vertex.
  bool propagate(int c0, int v0) {
    const std::uint32_t s = ++pstamp_;
    queue_.clear();
    for (int k = clique_start_[static_cast<std::size_t>(c0)]; k < clique_start_[static_cast<std::size_t>(c0) + 1]; ++k) {
      const auto u = static_cast<std::size_t>(members_[static_cast<std::size_t>(k)]);
      if (static_cast<int>(u) == v0) continue;
      removed_[u] = s;
      remover_[u] = c0;
    }
    forced_[static_cast<std::size_t>(c0)] = s;
    fv_[static_cast<std::size_t>(c0)] = v0;
    queue_.push_back(c0);
    for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
      const int j = queue_[qi];
      const auto v = static_cast<std::size_t>(fv_[static_cast<std::size_t>(j)]);
      int conflict = -1;
      const B nb = adj_[v] & *cover_;
      nb.for_each([&](int u) {
        if (conflict >= 0) return;
        const auto uu = static_cast<std::size_t>(u);
        const int i = clique_of_[uu];
        const auto ii = static_cast<std::size_t>(i);
        if (i == j || dead_[ii] == epoch_ || removed_[uu] == s) return;
        removed_[uu] = s;
        remover_[uu] = j;
        if (rem_stamp_[ii] != s) {
          rem_stamp_[ii] = s;
          rem_[ii] = clique_size(i);
        }
        --rem_[ii];
        if (forced_[ii] == s) {
          if (fv_[ii] == u) conflict = i;
          return;
        }
        if (rem_[ii] == 0) {
          conflict = i;
        } else if (rem_[ii] == 1) {
          for (int k = clique_start_[ii]; k < clique_start_[ii + 1]; ++k) {
            const int w = members_[static_cast<std::size_t>(k)];
            if (removed_[static_cast<std::size_t>(w)] != s) {
              fv_[ii] = w;
              break;
            }
          }
          forced_[ii] = s;
          queue_.push_back(i);
        }
      });
      if (conflict >= 0) {
        analyze(conflict, s);
        return true;
      }
    }
    return false;
  }

  void analyze(int conflict, std::uint32_t s) {
    involved_.clear();
    stack_.clear();
    inv_[static_cast<std::size_t>(conflict)] = s;
    stack_.push_back(conflict);
    while (!stack_.empty()) {
      const int x = stack_.back();
      stack_.pop_back();
      involved_.push_back(x);
      const auto xx = static_cast<std::size_t>(x);
      for (int k = clique_start_[xx]; k < clique_start_[xx + 1]; ++k) {
        const auto u = static_cast<std::size_t>(members_[static_cast<std::size_t>(k)]);
        if (removed_[u] != s) continue;
        const auto r = static_cast<std::size_t>(remover_[u]);
        if (inv_[r] != s) {
          inv_[r] = s;
          stack_.push_back(remover_[u]);
        }
      }
    }
  }

  std::size_t n_;
  std::vector<B> adj_;
  std::vector<Mask> vmask_;
  std::vector<Mask> parts_;
  bool symmetric_ = false;
  Clock clock_;
  B root_;
  B candidates_;

  std::vector<int> cur_;
  int best_ = 0;
  std::vector<int> best_set_;
  bool enumerate_ = false;
  int target_ = 0;
  const SetVisitor* visit_ = nullptr;
  bool stop_ = false;
  std::size_t visited_ = 0;

  // bound scratch
  const B* cover_ = nullptr;
  std::vector<int> clique_of_;
  std::vector<int> clique_start_;
  std::vector<int> members_;
  std::vector<std::uint32_t> removed_;
  std::vector<int> remover_;
  std::vector<int> rem_;
  std::vector<std::uint32_t> rem_stamp_;
  std::vector<std::uint32_t> forced_;
  std::vector<int> fv_;
  std::vector<std::uint32_t> dead_;
  std::vector<std::uint32_t> inv_;
  std::vector<int> queue_;
  std::vector<int> stack_;
  std::vector<int> involved_;
  std::vector<int> failed_;
  std::uint32_t epoch_ = 0;
  std::uint32_t pstamp_ = 0;
};

template <class F>
auto dispatch(std::size_t n, F&& f) {
  const std::size_t words = std::max<std::size_t>(1, (n + 63) / 64);
  if (words <= 1) return f(std::integral_constant<std::size_t, 1>{});
  if (words <= 2) return f(std::integral_constant<std::size_t, 2>{});
  if (words <= 3) return f(std::integral_constant<std::size_t, 3>{});
  if (words <= 4) return f(std::integral_constant<std::size_t, 4>{});
  if (words <= 6) return f(std::integral_constant<std::size_t, 6>{});
  if (words <= 8) return f(std::integral_constant<std::size_t, 8>{});
  if (words <= 16) return f(std::integral_constant<std::size_t, 16>{});
  if (words <= 32) return f(std::integral_constant<std::size_t, 32>{});
  throw ParamError("graph too large for the exact solver (" + std::to_string(n) + " vertices, limit 2048)");
}

}  // namespace

MisResult max_independent_set(const IntersectionGraph& g, const Budget& budget,
                              const std::optional<VertexList>& incumbent) {
  if (incumbent) {
    if (!g.is_independent(*incumbent)) throw ParamError("incumbent is not an independent set");
    for (std::size_t r : g.required()) {
      if (std::find(incumbent->begin(), incumbent->end(), r) == incumbent->end())
        throw ParamError("incumbent misses a required vertex");
    }
  }
  std::optional<VertexList> seed = incumbent;
  if (!seed) {
    // Greedy start so that an exhausted budget still reports a solution.
    VertexList greedy = g.required();
    for (std::size_t v = 0; v < g.size(); ++v) {
      bool free = true;
      for (std::size_t u : greedy) free = free && u != v && !g.adjacent(u, v);
      if (free) greedy.push_back(v);
    }
    std::sort(greedy.begin(), greedy.end());
    seed = std::move(greedy);
  }
  return dispatch(g.size(), [&](auto w) {
    Engine<decltype(w)::value> engine(g, budget, true);
    engine.optimize(seed);
    MisResult r;
    r.alpha = static_cast<std::size_t>(engine.best());
    r.witness = engine.best_set();
    r.proved = !engine.exceeded();
    r.stats = engine.stats();
    return r;
  });
}

EnumerationResult enumerate_independent_sets(const IntersectionGraph& g, std::size_t alpha, const Budget& budget,
                                             const SetVisitor& visit, bool use_symmetry) {
  return dispatch(g.size(), [&](auto w) {
    Engine<decltype(w)::value> engine(g, budget, use_symmetry);
    engine.enumerate(alpha, visit);
    EnumerationResult r;
    r.stopped = engine.stopped();
    r.complete = !engine.exceeded() && !engine.stopped();
    r.visited = engine.visited();
    r.stats = engine.stats();
    return r;
  });
}

}  // namespace ekrlab
