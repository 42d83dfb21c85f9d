#pragma once

#include <cstddef>
#include <cstdint>

namespace pw {

// Size bounds for the exhaustive operations. Everything that can blow up
// takes one of these; the defaults match the standard corpus.
struct Limits {
  int max_enumerated_poset = 6;            // enumeratePosets
  std::uint64_t max_upset_family = 1u << 16;  // 2^size bound for allUpsets
  int max_oracle_lattice = 16;             // subset-enumeration prime filters
  std::uint64_t max_search_family = 1u << 24;  // downset / ideal searches
  std::uint64_t max_maps = 1u << 22;       // monotone maps, hom searches
};

inline const Limits& default_limits() {
  static const Limits limits{};
  return limits;
}

// Hard representation bound: point sets are 64-bit masks.
inline constexpr int kMaxPoints = 64;

}  // namespace pw
