#include <cassert>

#include "pw/kernels.hpp"

namespace pw::kernels::scalar {

namespace {

inline bool passes(Mask m, std::span<const Clause> clauses) {
  for (const Clause& c : clauses)
    if (!satisfies(m, c)) return false;
  return true;
}

}  // namespace

void filter_masks(std::span<const Mask> in, std::span<const Clause> clauses, std::vector<Mask>& out) {
  for (Mask m : in)
    if (passes(m, clauses)) out.push_back(m);
}

void filter_range(Mask count, std::span<const Clause> clauses, std::vector<Mask>& out) {
  for (Mask m = 0; m < count; ++m)
    if (passes(m, clauses)) out.push_back(m);
}

Mask union_where_subset(std::span<const Mask> keys, std::span<const Mask> values, Mask bound) {
  assert(keys.size() == values.size());
  Mask acc = 0;
  for (std::size_t i = 0; i < keys.size(); ++i)
    if (subset_of(keys[i], bound)) acc |= values[i];
  return acc;
}

Mask intersect_where_superset(std::span<const Mask> keys, std::span<const Mask> values, Mask bound,
                              Mask init) {
  assert(keys.size() == values.size());
  Mask acc = init;
  for (std::size_t i = 0; i < keys.size(); ++i)
    if (subset_of(bound, keys[i])) acc &= values[i];
  return acc;
}

}  // namespace pw::kernels::scalar
