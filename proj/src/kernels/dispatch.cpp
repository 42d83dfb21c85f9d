#include <atomic>

#include "pw/errors.hpp"
#include "pw/kernels.hpp"

namespace pw::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(PW_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported;
#else
  return false;
#endif
}

Backend detect() { return cpu_has_avx2() ? Backend::Avx2 : Backend::Scalar; }

std::atomic<Backend>& current() {
  static std::atomic<Backend> backend{detect()};
  return backend;
}

}  // namespace

std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::Scalar:
      return "scalar";
    case Backend::Avx2:
      return "avx2";
  }
  return "?";
}

bool backend_available(Backend b) { return b == Backend::Scalar || cpu_has_avx2(); }

Backend active_backend() { return current().load(std::memory_order_relaxed); }

void force_backend(Backend b) {
  if (!backend_available(b))
    throw Error("kernel backend '" + std::string(backend_name(b)) + "' is not available on this CPU/build");
  current().store(b, std::memory_order_relaxed);
}

void reset_backend() { current().store(detect(), std::memory_order_relaxed); }

#if defined(PW_HAVE_AVX2)
#define PW_DISPATCH(fn, ...)                                                   \
  (active_backend() == Backend::Avx2 ? avx2::fn(__VA_ARGS__) : scalar::fn(__VA_ARGS__))
#else
#define PW_DISPATCH(fn, ...) scalar::fn(__VA_ARGS__)
#endif

void filter_masks(std::span<const Mask> in, std::span<const Clause> clauses, std::vector<Mask>& out) {
  PW_DISPATCH(filter_masks, in, clauses, out);
}

void filter_range(Mask count, std::span<const Clause> clauses, std::vector<Mask>& out) {
  PW_DISPATCH(filter_range, count, clauses, out);
}

Mask union_where_subset(std::span<const Mask> keys, std::span<const Mask> values, Mask bound) {
  return PW_DISPATCH(union_where_subset, keys, values, bound);
}

Mask intersect_where_superset(std::span<const Mask> keys, std::span<const Mask> values, Mask bound,
                              Mask init) {
  return PW_DISPATCH(intersect_where_superset, keys, values, bound, init);
}

#undef PW_DISPATCH

}  // namespace pw::kernels
