#include "ekrlab/common.hpp"

#include <algorithm>

namespace ekrlab {

std::vector<int> elements(Mask bits) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(cardinality(bits)));
  while (bits != 0) {
    out.push_back(std::countr_zero(bits) + 1);
    bits &= bits - 1;
  }
  return out;
}

Mask mask_of(const std::vector<int>& elems) {
  Mask bits = 0;
  for (int e : elems) {
    if (e < 1 || e > kMaxGround) throw ParamError("element out of range: " + std::to_string(e));
    bits |= element_bit(e);
  }
  return bits;
}

namespace {

void collect_subsets(const std::vector<int>& pool, std::size_t from, int left, Mask acc,
                     std::vector<Mask>& out) {
  if (left == 0) {
    out.push_back(acc);
    return;
  }
  for (std::size_t i = from; i + static_cast<std::size_t>(left) <= pool.size(); ++i) {
    collect_subsets(pool, i + 1, left - 1, acc | element_bit(pool[i]), out);
  }
}

}  // namespace

std::vector<Mask> k_subsets(Mask universe, int k) {
  std::vector<Mask> out;
  if (k < 0 || k > cardinality(universe)) return out;
  collect_subsets(elements(universe), 0, k, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::string format_set(Mask bits) {
  std::string s;
  for (int e : elements(bits)) {
    if (!s.empty()) s += ' ';
    s += std::to_string(e);
  }
  return s;
}

std::string format_braced(Mask bits) {
  std::string s = "{";
  bool first = true;
  for (int e : elements(bits)) {
    if (!first) s += ',';
    s += std::to_string(e);
    first = false;
  }
  return s + "}";
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in product");
  return r;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in sum");
  return r;
}

std::uint64_t binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  // r * (n - i) is always divisible by (i + 1) once r = C(n, i).
  unsigned __int128 r = 1;
  for (long long i = 0; i < k; ++i) {
    r = r * static_cast<unsigned __int128>(n - i) / static_cast<unsigned __int128>(i + 1);
    if (r > UINT64_MAX) throw OverflowError("binomial(" + std::to_string(n) + "," + std::to_string(k) + ") overflows");
  }
  return static_cast<std::uint64_t>(r);
}

}  // namespace ekrlab
