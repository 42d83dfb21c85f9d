#pragma once

// Bulk mask kernels behind the exhaustive searches. Every entry point has a
// portable scalar implementation and, on x86-64 builds, an AVX2 variant; the
// dispatcher picks AVX2 when the running CPU supports it. Both variants are
// required to produce identical output (tests/test_kernels.cpp).

#include <span>
#include <string_view>
#include <vector>

#include "pw/bits.hpp"

namespace pw::kernels {

// A Horn-style constraint on a subset m:  premise ⊆ m  implies  m ∩ conclusion ≠ ∅.
// An empty conclusion forbids the premise outright; an empty premise demands
// that m meets the conclusion.
struct Clause {
  Mask premise = 0;
  Mask conclusion = 0;
};

inline bool satisfies(Mask m, const Clause& c) {
  return (m & c.premise) != c.premise || (m & c.conclusion) != 0;
}

enum class Backend { Scalar, Avx2 };

std::string_view backend_name(Backend b);
bool backend_available(Backend b);
Backend active_backend();
// Pins the dispatcher (used by the equivalence tests and the CLI's
// --kernel flag). Throws pw::Error if the backend is not available.
void force_backend(Backend b);
void reset_backend();

// Appends to `out`, in input order, every mask of `in` satisfying all clauses.
void filter_masks(std::span<const Mask> in, std::span<const Clause> clauses, std::vector<Mask>& out);

// Same as filter_masks over the dense range 0, 1, ..., count-1.
void filter_range(Mask count, std::span<const Clause> clauses, std::vector<Mask>& out);

// OR of values[i] over all i with keys[i] ⊆ bound.
Mask union_where_subset(std::span<const Mask> keys, std::span<const Mask> values, Mask bound);

// AND of values[i] over all i with bound ⊆ keys[i]; `init` when no key qualifies.
Mask intersect_where_superset(std::span<const Mask> keys, std::span<const Mask> values, Mask bound,
                              Mask init);

namespace scalar {
void filter_masks(std::span<const Mask> in, std::span<const Clause> clauses, std::vector<Mask>& out);
void filter_range(Mask count, std::span<const Clause> clauses, std::vector<Mask>& out);
Mask union_where_subset(std::span<const Mask> keys, std::span<const Mask> values, Mask bound);
Mask intersect_where_superset(std::span<const Mask> keys, std::span<const Mask> values, Mask bound,
                              Mask init);
}  // namespace scalar

#if defined(PW_HAVE_AVX2)
namespace avx2 {
void filter_masks(std::span<const Mask> in, std::span<const Clause> clauses, std::vector<Mask>& out);
void filter_range(Mask count, std::span<const Clause> clauses, std::vector<Mask>& out);
Mask union_where_subset(std::span<const Mask> keys, std::span<const Mask> values, Mask bound);
Mask intersect_where_superset(std::span<const Mask> keys, std::span<const Mask> values, Mask bound,
                              Mask init);
}  // namespace avx2
#endif

}  // namespace pw::kernels
