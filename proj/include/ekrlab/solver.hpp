#pragma once

// Exact maximum independent set search over disjointness-type graphs.
//
// The engine is a bitset branch and bound. The pruning bound is a greedy
// clique cover tightened by unit propagation over the cover (each clique can
// contribute at most one vertex; a propagation conflict proves a group of
// cliques contributes at least one less than its size). When the graph
// carries a symmetry partition of its ground set, branching is orbital: the
// search either includes a representative of an orbit of the current Young
// subgroup or excludes the whole orbit.

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ekrlab/common.hpp"

namespace ekrlab {

struct Budget {
  std::uint64_t node_limit = 100'000'000;
  std::chrono::milliseconds time_limit{300'000};

  /// Default budget, with the time limit overridden by EKRLAB_BUDGET_SECS.
  static Budget from_env();
};

struct SearchStats {
  std::uint64_t nodes = 0;
  double seconds = 0.0;
};

class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using VertexList = std::vector<std::size_t>;

/// Vertex list of ground masks plus an adjacency predicate, stored densely.
///
/// Required vertices must belong to every solution. A symmetry partition
/// declares that every permutation of the ground set fixing each part
/// setwise maps the vertex set, the adjacency, and the required set onto
/// themselves.
class IntersectionGraph {
 public:
  using Adjacency = std::function<bool(Mask, Mask)>;

  /// Disjointness graph: distinct vertices are adjacent iff their masks are disjoint.
  IntersectionGraph(std::vector<Mask> vertices, int ground);
  IntersectionGraph(std::vector<Mask> vertices, int ground, const Adjacency& adjacent);

  std::size_t size() const { return vertices_.size(); }
  int ground() const { return ground_; }
  Mask vertex(std::size_t i) const { return vertices_[i]; }
  const std::vector<Mask>& vertices() const { return vertices_; }
  bool adjacent(std::size_t i, std::size_t j) const {
    return (rows_[i * words_ + j / 64] >> (j % 64)) & 1U;
  }
  std::size_t degree(std::size_t i) const;
  std::size_t edge_count() const;
  std::size_t words() const { return words_; }
  const std::uint64_t* row(std::size_t i) const { return rows_.data() + i * words_; }

  std::optional<std::size_t> index_of(Mask vertex) const;

  /// Throws InfeasibleError when two required vertices are adjacent, and
  /// ParamError when a declared symmetry does not preserve them.
  void require(VertexList required);
  const VertexList& required() const { return required_; }

  void set_symmetry(std::vector<Mask> parts);
  const std::vector<Mask>& symmetry_parts() const { return parts_; }

  bool is_independent(const VertexList& set) const;

 private:
  void build(const Adjacency& adjacent);
  void check_symmetry() const;

  std::vector<Mask> vertices_;
  int ground_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
  VertexList required_;
  std::vector<Mask> parts_;
};

struct MisResult {
  std::size_t alpha = 0;
  VertexList witness;  // sorted, includes required vertices
  bool proved = false;
  SearchStats stats;
};

/// Exact independence number and one witness. `incumbent`, if given, must be
/// an independent set containing the required vertices; it seeds the search.
MisResult max_independent_set(const IntersectionGraph& g, const Budget& budget,
                              const std::optional<VertexList>& incumbent = std::nullopt);

/// Receives each maximum set found; return false to stop the enumeration.
using SetVisitor = std::function<bool(const VertexList&)>;

struct EnumerationResult {
  bool complete = false;  // search space fully explored (not stopped, no budget hit)
  bool stopped = false;   // visitor asked to stop
  std::size_t visited = 0;
  SearchStats stats;
};

/// Visits every independent set of size `alpha` containing the required
/// vertices. With a symmetry partition only orbit representatives are
/// guaranteed: every orbit of solutions is visited at least once.
EnumerationResult enumerate_independent_sets(const IntersectionGraph& g, std::size_t alpha,
                                             const Budget& budget, const SetVisitor& visit,
                                             bool use_symmetry = true);

}  // namespace ekrlab
