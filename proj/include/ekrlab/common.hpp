#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ekrlab {

/// Membership mask over a ground set [m]: element i (1-based) is bit i-1.
using Mask = std::uint64_t;

/// Largest supported ground set. Masks keep two spare high bits.
inline constexpr int kMaxGround = 62;

/// Raised for any parameter outside an operation's precondition.
class ParamError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an exact integer result does not fit in 64 bits.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

inline int cardinality(Mask bits) { return std::popcount(bits); }

inline Mask element_bit(int element) { return Mask{1} << (element - 1); }

/// Mask of the interval [lo, hi] (1-based, inclusive); empty when lo > hi.
inline Mask interval_mask(int lo, int hi) {
  if (lo > hi) return 0;
  const Mask upto_hi = hi >= 64 ? ~Mask{0} : (Mask{1} << hi) - 1;
  const Mask below_lo = (Mask{1} << (lo - 1)) - 1;
  return upto_hi & ~below_lo;
}

inline Mask ground_mask(int m) { return interval_mask(1, m); }

/// Elements of a mask in increasing order, 1-based.
std::vector<int> elements(Mask bits);

Mask mask_of(const std::vector<int>& elems);

/// All k-subsets of `universe`, in increasing mask order.
std::vector<Mask> k_subsets(Mask universe, int k);

/// Space-separated 1-based elements, e.g. "1 2 5".
std::string format_set(Mask bits);

/// Compact form used inside labels, e.g. "{1,2,5}".
std::string format_braced(Mask bits);

/// Exact binomial coefficient; 0 when k < 0 or k > n. Throws OverflowError.
std::uint64_t binomial(long long n, long long k);

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_add(std::uint64_t a, std::uint64_t b);

}  // namespace ekrlab
