#pragma once

// Subset families over a ground set [m], the standard constructions, and
// the closed-form counts that go with them.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ekrlab/common.hpp"

namespace ekrlab {

/// A subset of [m] carried together with its ground size.
struct SubsetCode {
  Mask bits = 0;
  int m = 0;

  SubsetCode() = default;
  SubsetCode(Mask b, int ground);  // throws ParamError if a bit lies outside [m]
  static SubsetCode of(int m, const std::vector<int>& elems);

  int size() const { return cardinality(bits); }
  bool contains(int element) const { return element >= 1 && element <= m && (bits & element_bit(element)) != 0; }
  friend bool operator==(const SubsetCode&, const SubsetCode&) = default;
};

/// The triple (m, n, k) with 0 < k <= n < 2k <= m and m <= kMaxGround.
class Params {
 public:
  static Params make(int m, int n, int k);  // throws ParamError

  int m() const { return m_; }
  int n() const { return n_; }
  int k() const { return k_; }
  int trace_min() const { return n_ - k_ + 1; }
  int layers() const { return 2 * k_ - n_ - 1; }
  Mask inner() const { return ground_mask(n_); }
  Mask outer() const { return ground_mask(m_) & ~ground_mask(n_); }

  friend bool operator==(const Params&, const Params&) = default;

 private:
  Params(int m, int n, int k) : m_(m), n_(n), k_(k) {}
  int m_;
  int n_;
  int k_;
};

/// Canonical, duplicate-free family of k-subsets of [m], sorted by mask value.
class Family {
 public:
  Family(int m, int k) : m_(m), k_(k) { check_ground(); }
  Family(int m, int k, std::vector<Mask> members);  // sorts, dedups, validates

  int m() const { return m_; }
  int k() const { return k_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  std::span<const Mask> members() const { return members_; }
  bool contains(Mask set) const;
  /// Intersection of all members; the full ground set for an empty family.
  Mask common() const;

  friend bool operator==(const Family&, const Family&) = default;

 private:
  void check_ground() const;

  int m_;
  int k_;
  std::vector<Mask> members_;
};

std::uint64_t h_value(const Params& p);

/// Per-layer summands of h_value: [C(n,k), C(n-1,k-2)C(m-n,1), ...].
std::vector<std::uint64_t> h_summands(const Params& p);

Family build_H_t(const Params& p, int t);
Family build_M1(int m, int k, const SubsetCode& a, int t);
Family build_M2(int m, int k, const SubsetCode& x);

/// All k-subsets of [n] viewed inside [m].
Family base_family(const Params& p);

bool is_intersecting(const Family& f);
/// First disjoint pair, if any.
std::optional<std::pair<Mask, Mask>> disjoint_pair(const Family& f);

bool is_mnk_family(const Family& f, const Params& p);
bool trace_constraint_holds(const Family& f, const Params& p);

struct CanonicalPartition {
  Family base;
  std::vector<Family> layers;  // layers[i - 1] holds members with |F ∩ [n]| = k - i
};

CanonicalPartition canonical_partition(const Family& f, const Params& p);

enum class LabelKind { star, h_t, m1, m2, hybrid_2k2, other };

struct Label {
  LabelKind kind = LabelKind::other;
  int t = 0;                   // star, h_t, m1
  Mask set = 0;                // m1: A, m2: X
  std::vector<Mask> trace_family;  // hybrid_2k2: the (k-1)-family F*

  std::string name() const;    // e.g. "H_T(2)", "M1({1,2,3};4)"
  friend bool operator==(const Label&, const Label&) = default;
};

/// Every matching label, tested in the order STAR, H_T, M1, M2, HYBRID_2K2;
/// {OTHER} when nothing matches.
std::vector<Label> classify_family(const Family& f, const Params& p);

bool has_label(const std::vector<Label>& labels, LabelKind kind);
/// "STAR", "H_T", "M1", "M2", "HYBRID_2K2" or "OTHER".
std::string kind_name(LabelKind kind);

std::uint64_t fuf_threshold(int n, int k, int d);

/// Text format: one set per line, 1-based increasing elements separated by
/// single spaces. Blank lines and '#' lines are skipped on input; a
/// "# m=<m> k=<k>" header is honoured when present.
void write_family(std::ostream& out, const Family& f, bool header = true);
std::string format_family(const Family& f);

/// Reads a family. Explicit m and k win over the header; without either,
/// m is the largest element seen and k the size of the first set.
/// Throws ParamError on malformed input.
Family read_family(std::istream& in, std::optional<int> m = std::nullopt, std::optional<int> k = std::nullopt);

}  // namespace ekrlab
