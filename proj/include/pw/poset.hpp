#pragma once

// Finite posets, point sets bound to them, monotone maps, and the
// enumeration machinery the rest of the library stands on.
//
// Points are numbered 0..size-1 and a poset holds at most 64 of them, so a
// set of points is a single 64-bit mask and union/intersection/complement
// are one instruction each. The order is stored as per-point principal
// upset and downset masks; `leq` is a bit test.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pw/bits.hpp"
#include "pw/errors.hpp"
#include "pw/limits.hpp"

namespace pw {

using Cover = std::pair<int, int>;

class Poset {
 public:
  // The empty poset.
  Poset();

  // Reflexive-transitive closure of `covers` on `size` points. Throws
  // IndexError for out-of-range points and CycleError if the closure is not
  // antisymmetric.
  static Poset from_covers(int size, std::span<const Cover> covers, std::vector<std::string> labels = {});

  // From principal upsets: up[p] must contain p and be transitively closed.
  static Poset from_up_masks(std::vector<Mask> up, std::vector<std::string> labels = {});

  static Poset chain(int n);
  static Poset antichain(int n);

  int size() const { return static_cast<int>(up_.size()); }
  bool empty() const { return up_.empty(); }
  Mask all() const { return full_mask(size()); }

  bool leq(int p, int q) const { return has(up_[p], q); }
  bool less(int p, int q) const { return p != q && leq(p, q); }
  bool comparable(int p, int q) const { return leq(p, q) || leq(q, p); }

  // Principal upset ↑p and downset ↓p (both contain p).
  Mask up(int p) const { return up_[p]; }
  Mask down(int p) const { return down_[p]; }
  const std::vector<Mask>& up_masks() const { return up_; }

  // Hasse diagram, sorted lexicographically.
  std::vector<Cover> covers() const;

  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(int p) const;

  // Identity of this poset value; copies share it, independently built
  // posets never do. PointSets remember it to catch cross-poset mixing.
  std::uint64_t id() const { return id_; }

  Poset dual() const;
  // Point p of the result is point `order[p]` of this poset.
  Poset relabeled(std::span<const int> order) const;

  // Structural equality of the order relation (labels and identity ignored).
  bool same_order(const Poset& other) const { return up_ == other.up_; }

 private:
  Poset(std::vector<Mask> up, std::vector<std::string> labels);

  std::vector<Mask> up_;
  std::vector<Mask> down_;
  std::vector<std::string> labels_;
  std::uint64_t id_;
};

inline Poset make_poset(std::span<const Cover> covers, int size) { return Poset::from_covers(size, covers); }

// A subset of a particular poset's points.
class PointSet {
 public:
  PointSet(const Poset& owner, Mask members);
  static PointSet empty_of(const Poset& owner) { return PointSet(owner, 0); }
  static PointSet all_of(const Poset& owner) { return PointSet(owner, owner.all()); }
  static PointSet of(const Poset& owner, std::initializer_list<int> points);

  Mask mask() const { return mask_; }
  std::uint64_t owner() const { return owner_; }
  int universe_size() const { return universe_; }
  bool contains(int p) const { return has(mask_, p); }
  int count() const { return popcount(mask_); }
  bool is_empty() const { return mask_ == 0; }
  std::vector<int> points() const { return bits_of(mask_); }

  // Throws BindingError unless this set belongs to `P`.
  void check_bound_to(const Poset& P) const;

  PointSet operator|(const PointSet& o) const;
  PointSet operator&(const PointSet& o) const;
  PointSet operator-(const PointSet& o) const;
  PointSet complement() const;
  bool subset_of(const PointSet& o) const;

  bool operator==(const PointSet& o) const {
    return owner_ == o.owner_ && mask_ == o.mask_;
  }

 private:
  PointSet(std::uint64_t owner, int universe, Mask members) : owner_(owner), universe_(universe), mask_(members) {}
  void check_same(const PointSet& o) const;

  std::uint64_t owner_;
  int universe_;
  Mask mask_;
};

// Mask-level calculus (no binding checks; used in the hot loops).
Mask up_closure(const Poset& P, Mask s);
Mask down_closure(const Poset& P, Mask s);
bool is_upset(const Poset& P, Mask s);
bool is_downset(const Poset& P, Mask s);
Mask min_elements(const Poset& P, Mask s);
Mask max_elements(const Poset& P, Mask s);

PointSet up_closure(const Poset& P, const PointSet& s);
PointSet down_closure(const Poset& P, const PointSet& s);
PointSet min_elements(const Poset& P, const PointSet& s);
PointSet max_elements(const Poset& P, const PointSet& s);

// Every upset exactly once, ordered by (cardinality, member list). Filters
// all 2^size subsets through the mask kernels; CapacityError when 2^size
// exceeds limits.max_upset_family.
std::vector<Mask> all_upset_masks(const Poset& P, const Limits& limits = default_limits());
std::vector<PointSet> all_upsets(const Poset& P, const Limits& limits = default_limits());

// Upsets/downsets by depth-first search, for posets too wide for the dense
// filter. Same canonical order. CapacityError past `max_count` results.
std::vector<Mask> upsets_by_search(const Poset& P, std::uint64_t max_count);
std::vector<Mask> downsets_by_search(const Poset& P, std::uint64_t max_count);

// A linear extension: p < q implies p appears before q.
std::vector<int> linear_extension(const Poset& P);

class MonotoneMap {
 public:
  // Throws NotMonotone if p ≤ q does not imply image[p] ≤ image[q], and
  // IndexError on a malformed image.
  MonotoneMap(Poset source, Poset target, std::vector<int> image);
  static MonotoneMap identity(const Poset& P);

  const Poset& source() const { return source_; }
  const Poset& target() const { return target_; }
  const std::vector<int>& image() const { return image_; }
  int operator()(int p) const { return image_[p]; }

  // Preimage of a target point set, as a source mask.
  Mask preimage(Mask target_set) const;

  // (*this) after `first`: p ↦ this(first(p)).
  MonotoneMap after(const MonotoneMap& first) const;

  bool operator==(const MonotoneMap& o) const { return image_ == o.image_; }

 private:
  Poset source_;
  Poset target_;
  std::vector<int> image_;
};

// All monotone maps P → Q, lexicographic in the image vector.
std::vector<MonotoneMap> monotone_maps(const Poset& P, const Poset& Q, const Limits& limits = default_limits());

// Canonical labelling. `order[i]` is the original point placed at position
// i; `code` packs the relabelled order relation row-major (off-diagonal
// entries only matter). Defined for size ≤ 8.
struct CanonicalForm {
  std::vector<int> order;
  Mask code = 0;
};

CanonicalForm canonical_form(const Poset& P);
Poset canonical_poset(const Poset& P);
bool isomorphic(const Poset& P, const Poset& Q);

// One representative per isomorphism class of n-point posets, each in
// canonical labelling, sorted by canonical code.
std::vector<Poset> enumerate_posets(int n, const Limits& limits = default_limits());

}  // namespace pw
