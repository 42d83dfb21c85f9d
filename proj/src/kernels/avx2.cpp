// AVX2 variants: four 64-bit masks per register. Compiled with -mavx2 and
// only ever called after the dispatcher has confirmed CPU support.

#include <immintrin.h>

#include <cassert>

#include "pw/kernels.hpp"

namespace pw::kernels::avx2 {

namespace {

// Lane-wise violation flags (all-ones in a lane that fails some clause).
inline __m256i violations(__m256i m, std::span<const Clause> clauses) {
  const __m256i zero = _mm256_setzero_si256();
  const __m256i ones = _mm256_set1_epi64x(-1);
  __m256i viol = zero;
  for (const Clause& c : clauses) {
    const __m256i p = _mm256_set1_epi64x(static_cast<long long>(c.premise));
    const __m256i q = _mm256_set1_epi64x(static_cast<long long>(c.conclusion));
    const __m256i premise_holds = _mm256_cmpeq_epi64(_mm256_and_si256(m, p), p);
    const __m256i conclusion_empty = _mm256_cmpeq_epi64(_mm256_and_si256(m, q), zero);
    viol = _mm256_or_si256(viol, _mm256_and_si256(premise_holds, conclusion_empty));
    if (_mm256_testc_si256(viol, ones)) break;
  }
  return viol;
}

inline int survivor_bits(__m256i viol) {
  return ~_mm256_movemask_pd(_mm256_castsi256_pd(viol)) & 0xF;
}

inline void emit(int survivors, const Mask* lanes, std::vector<Mask>& out) {
  for (int lane = 0; lane < 4; ++lane)
    if (survivors & (1 << lane)) out.push_back(lanes[lane]);
}

inline Mask horizontal_or(__m256i v) {
  alignas(32) Mask lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), v);
  return lanes[0] | lanes[1] | lanes[2] | lanes[3];
}

inline Mask horizontal_and(__m256i v) {
  alignas(32) Mask lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), v);
  return lanes[0] & lanes[1] & lanes[2] & lanes[3];
}

}  // namespace

void filter_masks(std::span<const Mask> in, std::span<const Clause> clauses, std::vector<Mask>& out) {
  std::size_t i = 0;
  for (; i + 4 <= in.size(); i += 4) {
    const __m256i m = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in.data() + i));
    emit(survivor_bits(violations(m, clauses)), in.data() + i, out);
  }
  for (; i < in.size(); ++i) {
    bool ok = true;
    for (const Clause& c : clauses)
      if (!satisfies(in[i], c)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(in[i]);
  }
}

void filter_range(Mask count, std::span<const Clause> clauses, std::vector<Mask>& out) {
  const __m256i step = _mm256_set1_epi64x(4);
  __m256i m = _mm256_set_epi64x(3, 2, 1, 0);
  Mask base = 0;
  alignas(32) Mask lanes[4];
  for (; base + 4 <= count; base += 4) {
    int survivors = survivor_bits(violations(m, clauses));
    if (survivors) {
      lanes[0] = base;
      lanes[1] = base + 1;
      lanes[2] = base + 2;
      lanes[3] = base + 3;
      emit(survivors, lanes, out);
    }
    m = _mm256_add_epi64(m, step);
  }
  for (; base < count; ++base) {
    bool ok = true;
    for (const Clause& c : clauses)
      if (!satisfies(base, c)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(base);
  }
}

Mask union_where_subset(std::span<const Mask> keys, std::span<const Mask> values, Mask bound) {
  assert(keys.size() == values.size());
  const __m256i zero = _mm256_setzero_si256();
  const __m256i b = _mm256_set1_epi64x(static_cast<long long>(bound));
  __m256i acc = zero;
  std::size_t i = 0;
  for (; i + 4 <= keys.size(); i += 4) {
    const __m256i k = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(keys.data() + i));
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(values.data() + i));
    // andnot(b, k) = k & ~bound
    const __m256i inside = _mm256_cmpeq_epi64(_mm256_andnot_si256(b, k), zero);
    acc = _mm256_or_si256(acc, _mm256_and_si256(inside, v));
  }
  Mask out = horizontal_or(acc);
  for (; i < keys.size(); ++i)
    if (subset_of(keys[i], bound)) out |= values[i];
  return out;
}

Mask intersect_where_superset(std::span<const Mask> keys, std::span<const Mask> values, Mask bound,
                              Mask init) {
  assert(keys.size() == values.size());
  const __m256i zero = _mm256_setzero_si256();
  const __m256i ones = _mm256_set1_epi64x(-1);
  const __m256i b = _mm256_set1_epi64x(static_cast<long long>(bound));
  __m256i acc = ones;
  std::size_t i = 0;
  for (; i + 4 <= keys.size(); i += 4) {
    const __m256i k = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(keys.data() + i));
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(values.data() + i));
    // andnot(k, b) = bound & ~key
    const __m256i covers = _mm256_cmpeq_epi64(_mm256_andnot_si256(k, b), zero);
    acc = _mm256_and_si256(acc, _mm256_or_si256(v, _mm256_xor_si256(covers, ones)));
  }
  Mask out = init & horizontal_and(acc);
  for (; i < keys.size(); ++i)
    if (subset_of(bound, keys[i])) out &= values[i];
  return out;
}

}  // namespace pw::kernels::avx2
