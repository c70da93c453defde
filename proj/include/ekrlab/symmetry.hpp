#pragma once

// Young subgroups S(P1) x ... x S(Pr) of the symmetric group on [m], acting
// on subsets and on families of subsets.

#include <cstddef>
#include <optional>
#include <vector>

#include "ekrlab/common.hpp"

namespace ekrlab {

using SetList = std::vector<Mask>;  // sorted ascending

class YoungGroup {
 public:
  /// Parts must be pairwise disjoint; elements outside every part are fixed.
  explicit YoungGroup(std::vector<Mask> parts);

  const std::vector<Mask>& parts() const { return parts_; }
  /// |G| as a product of factorials; throws OverflowError past 2^64.
  std::uint64_t order() const;

  /// Generators: per part of size >= 2, one transposition and one full cycle.
  std::size_t generator_count() const { return generators_.size(); }
  Mask apply(std::size_t generator, Mask set) const;
  SetList apply(std::size_t generator, const SetList& family) const;

  /// Orbit of a family, sorted. Returns nullopt if it would exceed `cap`.
  std::optional<std::vector<SetList>> orbit(const SetList& family, std::size_t cap) const;

  /// Lexicographically least member of the orbit.
  std::optional<SetList> canonical(const SetList& family, std::size_t cap) const;

 private:
  std::vector<Mask> parts_;
  std::vector<std::vector<int>> generators_;  // image of each bit position
};

}  // namespace ekrlab
