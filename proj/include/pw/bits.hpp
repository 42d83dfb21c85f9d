#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace pw {

using Mask = std::uint64_t;

inline constexpr Mask bit(int i) { return Mask{1} << i; }

inline constexpr Mask full_mask(int n) {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

inline constexpr bool has(Mask m, int i) { return (m >> i) & 1u; }

inline constexpr bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }

inline int popcount(Mask m) { return std::popcount(m); }

// Calls f(i) for each set bit, lowest first.
template <typename F>
inline void for_each_bit(Mask m, F&& f) {
  while (m) {
    int i = std::countr_zero(m);
    f(i);
    m &= m - 1;
  }
}

inline std::vector<int> bits_of(Mask m) {
  std::vector<int> out;
  for_each_bit(m, [&](int i) { out.push_back(i); });
  return out;
}

// Canonical set order: by cardinality, then by the sorted member list
// compared lexicographically ({0} before {1}, {0,2} before {1,2}).
inline bool canonical_less(Mask a, Mask b) {
  int ca = popcount(a), cb = popcount(b);
  if (ca != cb) return ca < cb;
  if (a == b) return false;
  Mask diff = a ^ b;
  int low = std::countr_zero(diff);
  return has(a, low);
}

}  // namespace pw
