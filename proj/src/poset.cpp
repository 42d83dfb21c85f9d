#include "pw/poset.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>

#include "pw/kernels.hpp"

namespace pw {

namespace {

std::uint64_t next_id() {
  static std::atomic<std::uint64_t> counter{1};
  return counter.fetch_add(1, std::memory_order_relaxed);
}

void check_size(int n) {
  if (n < 0 || n > kMaxPoints)
    throw CapacityError("poset size " + std::to_string(n) + " outside 0.." + std::to_string(kMaxPoints));
}

}  // namespace

Poset::Poset() : id_(next_id()) {}

Poset::Poset(std::vector<Mask> up, std::vector<std::string> labels)
    : up_(std::move(up)), down_(up_.size(), 0), labels_(std::move(labels)), id_(next_id()) {
  const int n = size();
  for (int p = 0; p < n; ++p)
    for_each_bit(up_[p], [&](int q) { down_[q] |= bit(p); });
}

Poset Poset::from_covers(int size, std::span<const Cover> covers, std::vector<std::string> labels) {
  check_size(size);
  if (!labels.empty() && static_cast<int>(labels.size()) != size)
    throw IndexError("label count " + std::to_string(labels.size()) + " does not match size " +
                     std::to_string(size));
  std::vector<Mask> up(size);
  for (int p = 0; p < size; ++p) up[p] = bit(p);
  for (auto [p, q] : covers) {
    if (p < 0 || p >= size || q < 0 || q >= size)
      throw IndexError("cover (" + std::to_string(p) + "," + std::to_string(q) + ") out of range for size " +
                       std::to_string(size));
    up[p] |= bit(q);
  }
  // Transitive closure, Warshall style on rows.
  for (int k = 0; k < size; ++k)
    for (int p = 0; p < size; ++p)
      if (has(up[p], k)) up[p] |= up[k];
  for (int p = 0; p < size; ++p)
    for_each_bit(up[p] & ~bit(p), [&](int q) {
      if (has(up[q], p))
        throw CycleError("points " + std::to_string(p) + " and " + std::to_string(q) +
                         " lie on a cycle of the cover relation");
    });
  return Poset(std::move(up), std::move(labels));
}

Poset Poset::from_up_masks(std::vector<Mask> up, std::vector<std::string> labels) {
  const int n = static_cast<int>(up.size());
  check_size(n);
  const Mask all = full_mask(n);
  for (int p = 0; p < n; ++p) {
    if (!subset_of(up[p], all)) throw IndexError("order row " + std::to_string(p) + " references missing points");
    if (!has(up[p], p)) throw Error("order is not reflexive at point " + std::to_string(p));
  }
  for (int p = 0; p < n; ++p)
    for_each_bit(up[p], [&](int q) {
      if (!subset_of(up[q], up[p])) throw Error("order is not transitive at point " + std::to_string(p));
      if (q != p && has(up[q], p))
        throw CycleError("points " + std::to_string(p) + " and " + std::to_string(q) + " violate antisymmetry");
    });
  if (!labels.empty() && static_cast<int>(labels.size()) != n) throw IndexError("label count mismatch");
  return Poset(std::move(up), std::move(labels));
}

Poset Poset::chain(int n) {
  std::vector<Cover> covers;
  for (int i = 0; i + 1 < n; ++i) covers.emplace_back(i, i + 1);
  return from_covers(n, covers);
}

Poset Poset::antichain(int n) { return from_covers(n, {}); }

std::vector<Cover> Poset::covers() const {
  std::vector<Cover> out;
  const int n = size();
  for (int p = 0; p < n; ++p) {
    Mask strict = up_[p] & ~bit(p);
    for_each_bit(strict, [&](int q) {
      // q covers p iff nothing strictly between them.
      Mask between = strict & down_[q] & ~bit(q);
      if (between == 0) out.emplace_back(p, q);
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string Poset::label(int p) const {
  if (p >= 0 && p < static_cast<int>(labels_.size()) && !labels_[p].empty()) return labels_[p];
  return "p" + std::to_string(p);
}

Poset Poset::dual() const { return Poset(down_, labels_); }

Poset Poset::relabeled(std::span<const int> order) const {
  const int n = size();
  if (static_cast<int>(order.size()) != n) throw IndexError("relabelling has wrong length");
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) {
    if (order[i] < 0 || order[i] >= n || pos[order[i]] != -1) throw IndexError("relabelling is not a permutation");
    pos[order[i]] = i;
  }
  std::vector<Mask> up(n, 0);
  std::vector<std::string> labels;
  if (!labels_.empty()) labels.resize(n);
  for (int i = 0; i < n; ++i) {
    for_each_bit(up_[order[i]], [&](int q) { up[i] |= bit(pos[q]); });
    if (!labels_.empty()) labels[i] = labels_[order[i]];
  }
  return Poset(std::move(up), std::move(labels));
}

// --- PointSet ---------------------------------------------------------------

PointSet::PointSet(const Poset& owner, Mask members) : owner_(owner.id()), universe_(owner.size()), mask_(members) {
  if (!pw::subset_of(members, owner.all())) throw IndexError("point set references points outside the poset");
}

PointSet PointSet::of(const Poset& owner, std::initializer_list<int> points) {
  Mask m = 0;
  for (int p : points) {
    if (p < 0 || p >= owner.size()) throw IndexError("point " + std::to_string(p) + " out of range");
    m |= bit(p);
  }
  return PointSet(owner, m);
}

void PointSet::check_bound_to(const Poset& P) const {
  if (owner_ != P.id()) throw BindingError("point set belongs to a different poset");
}

void PointSet::check_same(const PointSet& o) const {
  if (owner_ != o.owner_) throw BindingError("point sets belong to different posets");
}

PointSet PointSet::operator|(const PointSet& o) const {
  check_same(o);
  return PointSet(owner_, universe_, mask_ | o.mask_);
}

PointSet PointSet::operator&(const PointSet& o) const {
  check_same(o);
  return PointSet(owner_, universe_, mask_ & o.mask_);
}

PointSet PointSet::operator-(const PointSet& o) const {
  check_same(o);
  return PointSet(owner_, universe_, mask_ & ~o.mask_);
}

PointSet PointSet::complement() const { return PointSet(owner_, universe_, full_mask(universe_) & ~mask_); }

bool PointSet::subset_of(const PointSet& o) const {
  check_same(o);
  return pw::subset_of(mask_, o.mask_);
}

// --- closure calculus -------------------------------------------------------

Mask up_closure(const Poset& P, Mask s) {
  Mask out = 0;
  for_each_bit(s, [&](int p) { out |= P.up(p); });
  return out;
}

Mask down_closure(const Poset& P, Mask s) {
  Mask out = 0;
  for_each_bit(s, [&](int p) { out |= P.down(p); });
  return out;
}

bool is_upset(const Poset& P, Mask s) { return up_closure(P, s) == s; }
bool is_downset(const Poset& P, Mask s) { return down_closure(P, s) == s; }

Mask min_elements(const Poset& P, Mask s) {
  Mask out = 0;
  for_each_bit(s, [&](int p) {
    if ((P.down(p) & s) == bit(p)) out |= bit(p);
  });
  return out;
}

Mask max_elements(const Poset& P, Mask s) {
  Mask out = 0;
  for_each_bit(s, [&](int p) {
    if ((P.up(p) & s) == bit(p)) out |= bit(p);
  });
  return out;
}

PointSet up_closure(const Poset& P, const PointSet& s) {
  s.check_bound_to(P);
  return PointSet(P, up_closure(P, s.mask()));
}

PointSet down_closure(const Poset& P, const PointSet& s) {
  s.check_bound_to(P);
  return PointSet(P, down_closure(P, s.mask()));
}

PointSet min_elements(const Poset& P, const PointSet& s) {
  s.check_bound_to(P);
  return PointSet(P, min_elements(P, s.mask()));
}

PointSet max_elements(const Poset& P, const PointSet& s) {
  s.check_bound_to(P);
  return PointSet(P, max_elements(P, s.mask()));
}

// --- upset families ---------------------------------------------------------

std::vector<Mask> all_upset_masks(const Poset& P, const Limits& limits) {
  const int n = P.size();
  if (n >= 63 || (Mask{1} << n) > limits.max_upset_family)
    throw CapacityError("allUpsets: 2^" + std::to_string(n) + " subsets exceed the configured bound " +
                        std::to_string(limits.max_upset_family));
  std::vector<kernels::Clause> clauses;
  for (auto [p, q] : P.covers()) clauses.push_back({bit(p), bit(q)});
  std::vector<Mask> out;
  kernels::filter_range(Mask{1} << n, clauses, out);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<PointSet> all_upsets(const Poset& P, const Limits& limits) {
  std::vector<PointSet> out;
  for (Mask m : all_upset_masks(P, limits)) out.emplace_back(P, m);
  return out;
}

std::vector<int> linear_extension(const Poset& P) {
  std::vector<int> order(P.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return popcount(P.down(a)) < popcount(P.down(b)); });
  return order;
}

std::vector<Mask> upsets_by_search(const Poset& P, std::uint64_t max_count) {
  // Decide points top-down; a point may join only if everything above it did.
  std::vector<int> order = linear_extension(P);
  std::reverse(order.begin(), order.end());
  std::vector<Mask> out;
  const int n = P.size();
  auto rec = [&](auto&& self, int depth, Mask current) -> void {
    if (depth == n) {
      if (out.size() >= max_count)
        throw CapacityError("upset search exceeded " + std::to_string(max_count) + " results");
      out.push_back(current);
      return;
    }
    const int p = order[depth];
    self(self, depth + 1, current);
    if (subset_of(P.up(p) & ~bit(p), current)) self(self, depth + 1, current | bit(p));
  };
  rec(rec, 0, Mask{0});
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<Mask> downsets_by_search(const Poset& P, std::uint64_t max_count) {
  return upsets_by_search(P.dual(), max_count);
}

// --- monotone maps ----------------------------------------------------------

MonotoneMap::MonotoneMap(Poset source, Poset target, std::vector<int> image)
    : source_(std::move(source)), target_(std::move(target)), image_(std::move(image)) {
  const int n = source_.size();
  if (static_cast<int>(image_.size()) != n) throw IndexError("map image has wrong length");
  for (int v : image_)
    if (v < 0 || v >= target_.size()) throw IndexError("map image out of range");
  for (int p = 0; p < n; ++p)
    for_each_bit(source_.up(p), [&](int q) {
      if (!target_.leq(image_[p], image_[q]))
        throw NotMonotone("map is not monotone at " + std::to_string(p) + " <= " + std::to_string(q));
    });
}

MonotoneMap MonotoneMap::identity(const Poset& P) {
  std::vector<int> image(P.size());
  std::iota(image.begin(), image.end(), 0);
  return MonotoneMap(P, P, std::move(image));
}

Mask MonotoneMap::preimage(Mask target_set) const {
  Mask out = 0;
  for (int p = 0; p < source_.size(); ++p)
    if (has(target_set, image_[p])) out |= bit(p);
  return out;
}

MonotoneMap MonotoneMap::after(const MonotoneMap& first) const {
  if (!first.target_.same_order(source_)) throw BindingError("composition of maps with mismatched posets");
  std::vector<int> image(first.source_.size());
  for (int p = 0; p < first.source_.size(); ++p) image[p] = image_[first.image_[p]];
  return MonotoneMap(first.source_, target_, std::move(image));
}

std::vector<MonotoneMap> monotone_maps(const Poset& P, const Poset& Q, const Limits& limits) {
  const int n = P.size(), m = Q.size();
  double space = 1;
  for (int i = 0; i < n; ++i) space *= m;
  if (space > static_cast<double>(limits.max_maps))
    throw CapacityError("monotone map search space " + std::to_string(m) + "^" + std::to_string(n) +
                        " exceeds the configured bound");
  std::vector<MonotoneMap> out;
  std::vector<int> image(n, 0);
  // Assign points in index order; check constraints against earlier points.
  auto rec = [&](auto&& self, int p) -> void {
    if (p == n) {
      out.emplace_back(P, Q, image);
      return;
    }
    for (int v = 0; v < m; ++v) {
      bool ok = true;
      for (int q = 0; q < p && ok; ++q) {
        if (P.leq(q, p) && !Q.leq(image[q], v)) ok = false;
        if (P.leq(p, q) && !Q.leq(v, image[q])) ok = false;
      }
      if (!ok) continue;
      image[p] = v;
      self(self, p + 1);
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace pw
