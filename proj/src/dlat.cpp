#include "pw/dlat.hpp"

#include <algorithm>
#include <unordered_map>

#include "pw/kernels.hpp"

namespace pw {

namespace {

std::string set_name(const Poset& P, Mask s) {
  std::string out = "{";
  bool first = true;
  for_each_bit(s, [&](int p) {
    if (!first) out += ",";
    out += P.label(p);
    first = false;
  });
  return out + "}";
}

// Least element of `candidates` w.r.t. the order, if it exists.
int least_of(const Poset& order, Mask candidates) {
  int found = -1;
  for_each_bit(candidates, [&](int c) {
    if (found == -1 && subset_of(candidates, order.up(c))) found = c;
  });
  return found;
}

int greatest_of(const Poset& order, Mask candidates) {
  int found = -1;
  for_each_bit(candidates, [&](int c) {
    if (found == -1 && subset_of(candidates, order.down(c))) found = c;
  });
  return found;
}

std::string triple(const FinDLat& L, Elem a, Elem b, Elem c) {
  return "a=" + L.name(a) + ", b=" + L.name(b) + ", c=" + L.name(c);
}

}  // namespace

// --- construction -----------------------------------------------------------

FinDLat FinDLat::from_order(const Poset& order, std::vector<std::string> names) {
  const int n = order.size();
  if (n == 0) throw NotALatticeError("a bounded lattice needs at least one element");
  auto d = std::make_shared<Data>();
  d->order = order;
  d->join.resize(n * n);
  d->meet.resize(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int j = least_of(order, order.up(a) & order.up(b));
      int m = greatest_of(order, order.down(a) & order.down(b));
      if (j < 0 || m < 0)
        throw NotALatticeError("elements " + std::to_string(a) + " and " + std::to_string(b) +
                               " have no " + (j < 0 ? "join" : "meet"));
      d->join[a * n + b] = static_cast<std::uint8_t>(j);
      d->meet[a * n + b] = static_cast<std::uint8_t>(m);
    }
  d->bottom = least_of(order, order.all());
  d->top = greatest_of(order, order.all());
  if (d->bottom < 0 || d->top < 0) throw NotALatticeError("order has no bottom or no top");
  if (!names.empty() && static_cast<int>(names.size()) != n) throw IndexError("element name count mismatch");
  d->names = std::move(names);
  return FinDLat(std::move(d));
}

FinDLat birkhoff_lattice(const Poset& P, const Limits& limits) {
  std::vector<Mask> sets = all_upset_masks(P, limits);
  const int n = static_cast<int>(sets.size());
  if (n > kMaxPoints)
    throw CapacityError("Birkhoff lattice has " + std::to_string(n) + " elements; at most " +
                        std::to_string(kMaxPoints) + " are supported");
  std::unordered_map<Mask, int> index;
  for (int i = 0; i < n; ++i) index.emplace(sets[i], i);

  std::vector<Mask> up(n, 0);
  std::vector<std::string> names(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (subset_of(sets[a], sets[b])) up[a] |= bit(b);
    names[a] = set_name(P, sets[a]);
  }
  auto d = std::make_shared<FinDLat::Data>();
  d->order = Poset::from_up_masks(std::move(up));
  d->join.resize(n * n);
  d->meet.resize(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      d->join[a * n + b] = static_cast<std::uint8_t>(index.at(sets[a] | sets[b]));
      d->meet[a * n + b] = static_cast<std::uint8_t>(index.at(sets[a] & sets[b]));
    }
  d->bottom = 0;
  d->top = n - 1;
  d->names = std::move(names);
  d->birkhoff = P;
  d->sets = std::move(sets);
  return FinDLat(std::move(d));
}

FinDLat::FinDLat() : FinDLat(birkhoff_lattice(Poset())) {}

FinDLat chain_lattice(int n) {
  if (n < 1) throw IndexError("a chain lattice needs at least one element");
  return birkhoff_lattice(Poset::chain(n - 1));
}

Elem FinDLat::join_all(Mask elems) const {
  Elem acc = bottom();
  for_each_bit(elems, [&](int a) { acc = join(acc, a); });
  return acc;
}

Elem FinDLat::meet_all(Mask elems) const {
  Elem acc = top();
  for_each_bit(elems, [&](int a) { acc = meet(acc, a); });
  return acc;
}

std::string FinDLat::name(Elem a) const {
  if (a >= 0 && a < static_cast<int>(d_->names.size()) && !d_->names[a].empty()) return d_->names[a];
  return "e" + std::to_string(a);
}

bool FinDLat::is_distributive() const {
  const int n = size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (meet(a, join(b, c)) != join(meet(a, b), meet(a, c))) return false;
  return true;
}

void FinDLat::validate_distributive() const {
  const int n = size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (meet(a, join(b, c)) != join(meet(a, b), meet(a, c)))
          throw DistributivityError("a ∧ (b ∨ c) ≠ (a ∧ b) ∨ (a ∧ c) at " + triple(*this, a, b, c));
}

// --- way-below and friends --------------------------------------------------

std::vector<Mask> ideals(const FinDLat& L, const Limits& limits) {
  std::vector<Mask> downsets = downsets_by_search(L.order(), limits.max_search_family);
  std::vector<kernels::Clause> clauses;
  clauses.push_back({0, L.all()});  // nonempty
  const int n = L.size();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (!L.order().comparable(a, b)) clauses.push_back({bit(a) | bit(b), bit(L.join(a, b))});
  std::vector<Mask> out;
  kernels::filter_masks(downsets, clauses, out);
  return out;
}

const std::vector<Mask>& FinDLat::way_below_table() const {
  std::call_once(d_->wb_once, [this] {
    // a ≪ b iff a lies in every ideal I with b ≤ ⋁I.
    std::vector<Mask> ids = ideals(*this);
    std::vector<Mask> below_join(ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i) below_join[i] = order().down(join_all(ids[i]));
    std::vector<Mask> table(size());
    for (Elem b = 0; b < size(); ++b)
      table[b] = kernels::intersect_where_superset(below_join, ids, bit(b), all());
    d_->wb = std::move(table);
  });
  return d_->wb;
}

bool way_below(const FinDLat& L, Elem a, Elem b) { return L.leq(a, b); }

bool way_below_oracle(const FinDLat& L, Elem a, Elem b) { return has(L.way_below_table()[b], a); }

Mask compact_elements(const FinDLat& L) {
  Mask out = 0;
  for (Elem a = 0; a < L.size(); ++a)
    if (way_below_oracle(L, a, a)) out |= bit(a);
  return out;
}

Mask join_irreducibles(const FinDLat& L) {
  Mask out = 0;
  const int n = L.size();
  for (Elem j = 0; j < n; ++j) {
    if (j == L.bottom()) continue;
    // j is join-irreducible iff the elements strictly below it join to
    // something strictly below it.
    Mask strictly_below = L.order().down(j) & ~bit(j);
    if (L.join_all(strictly_below) != j) out |= bit(j);
  }
  return out;
}

Elem pseudocomplement(const FinDLat& L, Elem a) {
  Mask disjoint = 0;
  for (Elem x = 0; x < L.size(); ++x)
    if (L.meet(a, x) == L.bottom()) disjoint |= bit(x);
  return L.join_all(disjoint);
}

bool well_inside(const FinDLat& L, Elem a, Elem b) { return L.join(pseudocomplement(L, a), b) == L.top(); }

Mask complemented_elements(const FinDLat& L) {
  Mask out = 0;
  for (Elem a = 0; a < L.size(); ++a)
    if (well_inside(L, a, a)) out |= bit(a);
  return out;
}

std::vector<Mask> prime_filters(const FinDLat& L, const Limits& limits) {
  std::vector<Mask> upsets = upsets_by_search(L.order(), limits.max_search_family);
  // A filter is completely prime iff its complement is an ideal closed under
  // the joins that exist; finitely that is: contains 1, misses 0, closed
  // under binary meets, and a ∨ b ∈ F forces a ∈ F or b ∈ F.
  std::vector<kernels::Clause> clauses;
  clauses.push_back({0, bit(L.top())});
  clauses.push_back({bit(L.bottom()), 0});
  const int n = L.size();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (!L.order().comparable(a, b)) {
        clauses.push_back({bit(a) | bit(b), bit(L.meet(a, b))});
        clauses.push_back({bit(L.join(a, b)), bit(a) | bit(b)});
      }
  std::vector<Mask> out;
  kernels::filter_masks(upsets, clauses, out);
  return out;
}

// --- frame predicates -------------------------------------------------------

namespace {

struct NamedFrame {
  FramePredicate p;
  std::string_view name;
};

constexpr NamedFrame kFrameNames[] = {
    {FramePredicate::CompactFrame, "compactFrame"},
    {FramePredicate::Continuous, "continuous"},
    {FramePredicate::Algebraic, "algebraic"},
    {FramePredicate::Arithmetic, "arithmetic"},
    {FramePredicate::Coherent, "coherent"},
    {FramePredicate::StablyContinuous, "stablyContinuous"},
    {FramePredicate::StablyCompact, "stablyCompact"},
    {FramePredicate::Regular, "regular"},
    {FramePredicate::CompactRegular, "compactRegular"},
    {FramePredicate::ZeroDimensional, "zeroDimensional"},
    {FramePredicate::Stone, "stone"},
    {FramePredicate::Spatial, "spatial"},
};

Check fail(std::string why) { return Check{false, std::move(why)}; }

// a = ⋁{b ∈ basis : b ≤ a} for every a.
Check generated_by(const FinDLat& L, Mask basis, std::string_view what) {
  for (Elem a = 0; a < L.size(); ++a)
    if (L.join_all(basis & L.order().down(a)) != a)
      return fail(L.name(a) + " is not the join of the " + std::string(what) + " elements below it");
  return {};
}

Check compact_frame(const FinDLat& L) {
  if (!way_below_oracle(L, L.top(), L.top())) return fail("top is not compact");
  return {};
}

Check continuous(const FinDLat& L) {
  const auto& wb = L.way_below_table();
  for (Elem a = 0; a < L.size(); ++a)
    if (L.join_all(wb[a]) != a) return fail(L.name(a) + " is not the join of the elements way below it");
  return {};
}

Check stable_way_below(const FinDLat& L) {
  const auto& wb = L.way_below_table();
  const int n = L.size();
  for (Elem b = 0; b < n; ++b)
    for (Elem c = 0; c < n; ++c) {
      Mask both = wb[b] & wb[c];
      Mask missing = both & ~wb[L.meet(b, c)];
      if (missing) {
        Elem a = std::countr_zero(missing);
        return fail("way-below is not stable: " + triple(L, a, b, c));
      }
    }
  return {};
}

Check regular(const FinDLat& L) {
  for (Elem a = 0; a < L.size(); ++a) {
    Mask inside = 0;
    for (Elem b = 0; b < L.size(); ++b)
      if (well_inside(L, b, a)) inside |= bit(b);
    if (L.join_all(inside) != a) return fail(L.name(a) + " is not the join of the elements well inside it");
  }
  return {};
}

Check spatial(const FinDLat& L) {
  std::vector<Mask> filters = prime_filters(L);
  for (Elem a = 0; a < L.size(); ++a)
    for (Elem b = 0; b < L.size(); ++b) {
      if (L.leq(a, b)) continue;
      bool separated = std::any_of(filters.begin(), filters.end(),
                                   [&](Mask F) { return has(F, a) && !has(F, b); });
      if (!separated) return fail("no completely prime filter contains " + L.name(a) + " and misses " + L.name(b));
    }
  return {};
}

Check both(Check first, const auto& second) {
  if (!first) return first;
  return second();
}

}  // namespace

FramePredicate parse_frame_predicate(std::string_view name) {
  for (const auto& [p, n] : kFrameNames)
    if (n == name) return p;
  throw UnknownPredicate("unknown frame predicate '" + std::string(name) + "'");
}

std::string_view to_string(FramePredicate p) {
  for (const auto& [q, n] : kFrameNames)
    if (q == p) return n;
  return "?";
}

const std::vector<FramePredicate>& all_frame_predicates() {
  static const std::vector<FramePredicate> all = [] {
    std::vector<FramePredicate> v;
    for (const auto& e : kFrameNames) v.push_back(e.p);
    return v;
  }();
  return all;
}

Check frame_check(const FinDLat& L, FramePredicate p) {
  switch (p) {
    case FramePredicate::CompactFrame:
      return compact_frame(L);
    case FramePredicate::Continuous:
      return continuous(L);
    case FramePredicate::Algebraic:
      return generated_by(L, compact_elements(L), "compact");
    case FramePredicate::Arithmetic:
      return both(frame_check(L, FramePredicate::Algebraic), [&] { return stable_way_below(L); });
    case FramePredicate::Coherent:
      return both(frame_check(L, FramePredicate::Arithmetic), [&] { return compact_frame(L); });
    case FramePredicate::StablyContinuous:
      return both(continuous(L), [&] { return stable_way_below(L); });
    case FramePredicate::StablyCompact:
      return both(frame_check(L, FramePredicate::StablyContinuous), [&] { return compact_frame(L); });
    case FramePredicate::Regular:
      return regular(L);
    case FramePredicate::CompactRegular:
      return both(regular(L), [&] { return compact_frame(L); });
    case FramePredicate::ZeroDimensional:
      return generated_by(L, complemented_elements(L), "complemented");
    case FramePredicate::Stone:
      return both(compact_frame(L), [&] { return frame_check(L, FramePredicate::ZeroDimensional); });
    case FramePredicate::Spatial:
      return spatial(L);
  }
  throw UnknownPredicate("unhandled frame predicate");
}

bool frame_predicate(const FinDLat& L, FramePredicate p) { return frame_check(L, p).holds; }

bool frame_predicate(const FinDLat& L, std::string_view name) {
  return frame_predicate(L, parse_frame_predicate(name));
}

// --- homomorphisms ----------------------------------------------------------

LatticeHom::LatticeHom(FinDLat source, FinDLat target, std::vector<Elem> image)
    : source_(std::move(source)), target_(std::move(target)), image_(std::move(image)) {
  const int n = source_.size();
  if (static_cast<int>(image_.size()) != n) throw IndexError("hom image has wrong length");
  for (Elem v : image_)
    if (v < 0 || v >= target_.size()) throw IndexError("hom image out of range");
  lattice_hom_ = true;
  for (Elem a = 0; a < n && lattice_hom_; ++a)
    for (Elem b = 0; b < n; ++b)
      if (image_[source_.join(a, b)] != target_.join(image_[a], image_[b]) ||
          image_[source_.meet(a, b)] != target_.meet(image_[a], image_[b])) {
        lattice_hom_ = false;
        break;
      }
  frame_hom_ = lattice_hom_ && image_[source_.bottom()] == target_.bottom() && image_[source_.top()] == target_.top();
}

LatticeHom LatticeHom::identity(const FinDLat& L) {
  std::vector<Elem> image(L.size());
  for (Elem a = 0; a < L.size(); ++a) image[a] = a;
  return LatticeHom(L, L, std::move(image));
}

LatticeHom LatticeHom::after(const LatticeHom& first) const {
  if (!first.target_.same_as(source_)) throw BindingError("composition of homs with mismatched lattices");
  std::vector<Elem> image(first.source_.size());
  for (Elem a = 0; a < first.source_.size(); ++a) image[a] = image_[first.image_[a]];
  return LatticeHom(first.source_, target_, std::move(image));
}

namespace {

struct NamedHom {
  HomPredicate p;
  std::string_view name;
};

constexpr NamedHom kHomNames[] = {
    {HomPredicate::LatticeHom, "latticeHom"},
    {HomPredicate::FrameHom, "frameHom"},
    {HomPredicate::CoherentHom, "coherentHom"},
    {HomPredicate::ProperHom, "properHom"},
};

Check lattice_hom_check(const LatticeHom& h) {
  const FinDLat& L = h.source();
  const FinDLat& M = h.target();
  for (Elem a = 0; a < L.size(); ++a)
    for (Elem b = 0; b < L.size(); ++b) {
      if (h(L.meet(a, b)) != M.meet(h(a), h(b)))
        return fail("h(" + L.name(a) + " ∧ " + L.name(b) + ") = " + M.name(h(L.meet(a, b))) + " but h(a) ∧ h(b) = " +
                    M.name(M.meet(h(a), h(b))));
      if (h(L.join(a, b)) != M.join(h(a), h(b)))
        return fail("h(" + L.name(a) + " ∨ " + L.name(b) + ") = " + M.name(h(L.join(a, b))) + " but h(a) ∨ h(b) = " +
                    M.name(M.join(h(a), h(b))));
    }
  return {};
}

Check frame_hom_check(const LatticeHom& h) {
  Check c = lattice_hom_check(h);
  if (!c) return c;
  if (h(h.source().bottom()) != h.target().bottom()) return fail("h(0) ≠ 0");
  if (h(h.source().top()) != h.target().top()) return fail("h(1) ≠ 1");
  return {};
}

}  // namespace

HomPredicate parse_hom_predicate(std::string_view name) {
  for (const auto& [p, n] : kHomNames)
    if (n == name) return p;
  throw UnknownPredicate("unknown hom predicate '" + std::string(name) + "'");
}

std::string_view to_string(HomPredicate p) {
  for (const auto& [q, n] : kHomNames)
    if (q == p) return n;
  return "?";
}

Check hom_check(const LatticeHom& h, HomPredicate p) {
  switch (p) {
    case HomPredicate::LatticeHom:
      return lattice_hom_check(h);
    case HomPredicate::FrameHom:
      return frame_hom_check(h);
    case HomPredicate::CoherentHom: {
      Check c = frame_hom_check(h);
      if (!c) return c;
      Mask target_compact = compact_elements(h.target());
      Mask source_compact = compact_elements(h.source());
      for (Elem a : bits_of(source_compact))
        if (!has(target_compact, h(a)))
          return fail("compact " + h.source().name(a) + " maps to non-compact " + h.target().name(h(a)));
      return {};
    }
    case HomPredicate::ProperHom: {
      Check c = frame_hom_check(h);
      if (!c) return c;
      const auto& wb_source = h.source().way_below_table();
      const auto& wb_target = h.target().way_below_table();
      for (Elem b = 0; b < h.source().size(); ++b)
        for (Elem a : bits_of(wb_source[b]))
          if (!has(wb_target[h(b)], h(a)))
            return fail(h.source().name(a) + " ≪ " + h.source().name(b) + " but the images are not way below");
      return {};
    }
  }
  throw UnknownPredicate("unhandled hom predicate");
}

bool hom_predicate(const LatticeHom& h, HomPredicate p) { return hom_check(h, p).holds; }

std::vector<LatticeHom> enumerate_homs(const FinDLat& L, const FinDLat& M, HomPredicate kind, const Limits& limits) {
  const int n = L.size(), m = M.size();
  const bool bounded = kind != HomPredicate::LatticeHom;
  const std::vector<int> order = linear_extension(L.order());
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;

  // Elements that are joins of two strictly smaller elements have a forced
  // image; only the bottom and the join-irreducibles branch.
  std::vector<std::pair<int, int>> split(n, {-1, -1});
  std::vector<std::vector<std::pair<int, int>>> join_pairs(n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = x + 1; y < n; ++y) {
      Elem d = L.join(x, y);
      if (d == x || d == y) continue;
      join_pairs[d].emplace_back(x, y);
      if (split[d].first < 0) split[d] = {x, y};
    }

  std::vector<Elem> image(n, -1);
  std::vector<std::vector<Elem>> found;
  auto consistent = [&](int t) {
    const Elem c = order[t];
    const Elem v = image[c];
    for (int s = 0; s < t; ++s) {
      const Elem x = order[s];
      if (image[L.meet(x, c)] != M.meet(image[x], v)) return false;
    }
    for (auto [x, y] : join_pairs[c])
      if (M.join(image[x], image[y]) != v) return false;
    return true;
  };
  auto rec = [&](auto&& self, int t) -> void {
    if (t == n) {
      if (found.size() >= limits.max_maps)
        throw CapacityError("hom enumeration exceeded " + std::to_string(limits.max_maps) + " results");
      found.push_back(image);
      return;
    }
    const Elem c = order[t];
    auto attempt = [&](Elem v) {
      if (bounded && c == L.top() && v != M.top()) return;
      image[c] = v;
      if (consistent(t)) self(self, t + 1);
      image[c] = -1;
    };
    if (bounded && c == L.bottom()) {
      attempt(M.bottom());
    } else if (split[c].first >= 0) {
      attempt(M.join(image[split[c].first], image[split[c].second]));
    } else {
      for (Elem v = 0; v < m; ++v) attempt(v);
    }
  };
  rec(rec, 0);

  std::sort(found.begin(), found.end());
  std::vector<LatticeHom> out;
  for (auto& img : found) {
    LatticeHom h(L, M, std::move(img));
    if (kind == HomPredicate::LatticeHom || kind == HomPredicate::FrameHom || hom_predicate(h, kind))
      out.push_back(std::move(h));
  }
  return out;
}

}  // namespace pw
