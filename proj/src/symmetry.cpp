#include "ekrlab/symmetry.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace ekrlab {

YoungGroup::YoungGroup(std::vector<Mask> parts) : parts_(std::move(parts)) {
  Mask seen = 0;
  for (Mask part : parts_) {
    if (part & seen) throw ParamError("symmetry parts overlap");
    seen |= part;
    const std::vector<int> elems = elements(part);
    if (elems.size() < 2) continue;
    std::vector<int> identity(kMaxGround);
    for (int b = 0; b < kMaxGround; ++b) identity[b] = b;
    std::vector<int> swap = identity;
    std::swap(swap[elems[0] - 1], swap[elems[1] - 1]);
    generators_.push_back(std::move(swap));
    if (elems.size() > 2) {
      std::vector<int> cycle = identity;
      for (std::size_t i = 0; i < elems.size(); ++i) cycle[elems[i] - 1] = elems[(i + 1) % elems.size()] - 1;
      generators_.push_back(std::move(cycle));
    }
  }
}

std::uint64_t YoungGroup::order() const {
  std::uint64_t out = 1;
  for (Mask part : parts_) {
    for (int i = 2; i <= cardinality(part); ++i) out = checked_mul(out, static_cast<std::uint64_t>(i));
  }
  return out;
}

Mask YoungGroup::apply(std::size_t generator, Mask set) const {
  const auto& img = generators_.at(generator);
  Mask out = 0;
  while (set) {
    const int b = std::countr_zero(set);
    set &= set - 1;
    out |= Mask{1} << img[b];
  }
  return out;
}

SetList YoungGroup::apply(std::size_t generator, const SetList& family) const {
  SetList out;
  out.reserve(family.size());
  for (Mask s : family) out.push_back(apply(generator, s));
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::vector<SetList>> YoungGroup::orbit(const SetList& family, std::size_t cap) const {
  std::set<SetList> seen{family};
  std::deque<const SetList*> queue{&*seen.begin()};
  while (!queue.empty()) {
    const SetList* cur = queue.front();
    queue.pop_front();
    for (std::size_t g = 0; g < generators_.size(); ++g) {
      auto [it, fresh] = seen.insert(apply(g, *cur));
      if (!fresh) continue;
      if (seen.size() > cap) return std::nullopt;
      queue.push_back(&*it);
    }
  }
  return std::vector<SetList>(seen.begin(), seen.end());
}

std::optional<SetList> YoungGroup::canonical(const SetList& family, std::size_t cap) const {
  auto orb = orbit(family, cap);
  if (!orb) return std::nullopt;
  return orb->front();
}

}  // namespace ekrlab
