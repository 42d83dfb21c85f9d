// Prime-filter spaces, Stone maps, round trips and hom dualization.

#include "pw/duality.hpp"

#include <algorithm>

#include "pw/kernels.hpp"

namespace pw {

namespace {

// Assembles the record from an ordered list of prime filters.
StoneMapRecord record_from_filters(const FinDLat& L, std::vector<Mask> filters, std::vector<std::string> labels,
                                   const Limits& limits) {
  const int n = static_cast<int>(filters.size());
  std::vector<Mask> up(n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (subset_of(filters[x], filters[y])) up[x] |= bit(y);
  StoneMapRecord rec{L, FinPriestley(Poset::from_up_masks(std::move(up), std::move(labels)), limits),
                     std::move(filters), std::vector<Mask>(L.size(), 0)};
  for (int x = 0; x < n; ++x) for_each_bit(rec.filters[x], [&](int a) { rec.phi[a] |= bit(x); });
  return rec;
}

int find_filter(const StoneMapRecord& rec, Mask F) {
  auto it = std::find(rec.filters.begin(), rec.filters.end(), F);
  return it == rec.filters.end() ? -1 : static_cast<int>(it - rec.filters.begin());
}

}  // namespace

StoneMapRecord priestley_space_of(const FinDLat& L, const Limits& limits) {
  const Mask J = join_irreducibles(L);
  std::vector<Mask> filters;
  std::vector<std::string> labels;
  if (const auto& P = L.birkhoff_poset()) {
    // Element ↑p is the join-irreducible behind point p.
    const auto& sets = L.birkhoff_sets();
    for (int p = 0; p < P->size(); ++p) {
      auto it = std::find(sets.begin(), sets.end(), P->up(p));
      const Elem j = static_cast<Elem>(it - sets.begin());
      filters.push_back(L.order().up(j));
    }
    labels = P->labels();
  } else {
    for_each_bit(J, [&](int j) { filters.push_back(L.order().up(j)); });
  }
  return record_from_filters(L, std::move(filters), std::move(labels), limits);
}

StoneMapRecord priestley_space_oracle(const FinDLat& L, const Limits& limits) {
  const int n = L.size();
  if (n > limits.max_oracle_lattice)
    throw CapacityError("prime filter oracle limited to lattices of at most " +
                        std::to_string(limits.max_oracle_lattice) + " elements");
  std::vector<kernels::Clause> clauses;
  clauses.push_back({0, L.all()});              // nonempty
  clauses.push_back({bit(L.bottom()), 0});      // proper
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (a != b && L.leq(a, b)) clauses.push_back({bit(a), bit(b)});            // upward closed
      if (a < b) clauses.push_back({bit(a) | bit(b), bit(L.meet(a, b))});        // meet closed
      if (a <= b) clauses.push_back({bit(L.join(a, b)), bit(a) | bit(b)});        // prime
    }
  std::vector<Mask> filters;
  kernels::filter_range(Mask{1} << n, clauses, filters);
  std::sort(filters.begin(), filters.end(), canonical_less);
  return record_from_filters(L, std::move(filters), {}, limits);
}

std::optional<std::vector<int>> stone_iso(const StoneMapRecord& a, const StoneMapRecord& b) {
  if (a.filters.size() != b.filters.size() || a.phi.size() != b.phi.size()) return std::nullopt;
  const int n = static_cast<int>(a.filters.size());
  std::vector<int> map(n);
  Mask hit = 0;
  for (int x = 0; x < n; ++x) {
    map[x] = find_filter(b, a.filters[x]);
    if (map[x] < 0 || has(hit, map[x])) return std::nullopt;
    hit |= bit(map[x]);
  }
  const Poset& P = a.space.points();
  const Poset& Q = b.space.points();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (P.leq(x, y) != Q.leq(map[x], map[y])) return std::nullopt;
  for (std::size_t e = 0; e < a.phi.size(); ++e) {
    Mask image = 0;
    for_each_bit(a.phi[e], [&](int x) { image |= bit(map[x]); });
    if (image != b.phi[e]) return std::nullopt;
  }
  return map;
}

FinDLat clop_up_lattice(const FinPriestley& X, const Limits& limits) { return birkhoff_lattice(X.points(), limits); }

SpaceMap dualize_hom(const LatticeHom& h, const StoneMapRecord& target_space, const StoneMapRecord& source_space) {
  if (!h.is_frame_hom()) throw NotFrameHom("only frame homomorphisms dualize");
  const FinDLat& L = h.source();
  std::vector<int> image(target_space.filters.size());
  for (std::size_t x = 0; x < image.size(); ++x) {
    Mask pre = 0;
    for (Elem a = 0; a < L.size(); ++a)
      if (has(target_space.filters[x], h(a))) pre |= bit(a);
    image[x] = find_filter(source_space, pre);
    if (image[x] < 0) throw Error("preimage of a prime filter is not a prime filter");
  }
  return SpaceMap(target_space.space, source_space.space, std::move(image));
}

SpaceMap dualize_hom(const LatticeHom& h) {
  return dualize_hom(h, priestley_space_of(h.target()), priestley_space_of(h.source()));
}

void check_stone_map_iso(const StoneMapRecord& rec) {
  const FinDLat& L = rec.lattice;
  const Poset& X = rec.space.points();
  const int n = L.size();
  if (static_cast<int>(rec.phi.size()) != n) throw IsoFailure("phi does not cover the lattice", n, -1);
  for (Elem a = 0; a < n; ++a)
    if (!subset_of(rec.phi[a], X.all()) || !is_upset(X, rec.phi[a]))
      throw IsoFailure("phi(" + L.name(a) + ") is not an upset", a, a);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (a != b && rec.phi[a] == rec.phi[b])
        throw IsoFailure("phi identifies " + L.name(a) + " and " + L.name(b), a, b);
      if (L.leq(a, b) != subset_of(rec.phi[a], rec.phi[b]))
        throw IsoFailure("phi does not preserve and reflect order at " + L.name(a) + ", " + L.name(b), a, b);
    }
  const auto& ups = rec.space.clopen_upsets();
  if (ups.size() != static_cast<std::size_t>(n))
    throw IsoFailure("phi misses " + std::to_string(ups.size() - n) + " clopen upsets", -1, -1);
}

FrameRoundTrip round_trip_frame(const FinDLat& L, const Limits& limits) {
  FrameRoundTrip out{priestley_space_of(L, limits), FinDLat(), {}};
  check_stone_map_iso(out.record);
  out.upsets = clop_up_lattice(out.record.space, limits);
  const auto& sets = out.upsets.birkhoff_sets();
  for (Elem a = 0; a < L.size(); ++a) {
    auto it = std::find(sets.begin(), sets.end(), out.record.phi[a]);
    if (it == sets.end()) throw IsoFailure("phi(" + L.name(a) + ") is not a clopen upset", a, a);
    out.map.push_back(static_cast<Elem>(it - sets.begin()));
  }
  for (Elem a = 0; a < L.size(); ++a)
    for (Elem b = 0; b < L.size(); ++b)
      if (out.map[L.join(a, b)] != out.upsets.join(out.map[a], out.map[b]) ||
          out.map[L.meet(a, b)] != out.upsets.meet(out.map[a], out.map[b]))
        throw IsoFailure("phi is not a lattice homomorphism at " + L.name(a) + ", " + L.name(b), a, b);
  return out;
}

SpaceRoundTrip round_trip_space(const FinPriestley& X, const Limits& limits) {
  SpaceRoundTrip out{clop_up_lattice(X, limits), StoneMapRecord{}, {}};
  out.record = priestley_space_of(out.upsets, limits);
  const auto& sets = out.upsets.birkhoff_sets();
  Mask hit = 0;
  for (int x = 0; x < X.size(); ++x) {
    Mask eps = 0;
    for (Elem u = 0; u < out.upsets.size(); ++u)
      if (has(sets[u], x)) eps |= bit(u);
    const int y = find_filter(out.record, eps);
    if (y < 0) throw IsoFailure("the clopen upsets containing a point do not form a point of the dual", x, -1);
    if (has(hit, y)) throw IsoFailure("two points share their clopen upsets", x, y);
    hit |= bit(y);
    out.map.push_back(y);
  }
  if (hit != out.record.space.all()) throw IsoFailure("the point map misses a prime filter", -1, -1);
  const Poset& P = X.points();
  const Poset& Q = out.record.space.points();
  for (int x = 0; x < X.size(); ++x)
    for (int y = 0; y < X.size(); ++y)
      if (P.leq(x, y) != Q.leq(out.map[x], out.map[y]))
        throw IsoFailure("the point map does not preserve and reflect order", x, y);
  return out;
}

bool phi_join_law(const StoneMapRecord& rec, Mask S) {
  Mask united = 0;
  for_each_bit(S, [&](int s) { united |= rec.phi[s]; });
  return rec.phi[rec.lattice.join_all(S)] == rec.space.closure(united);
}

}  // namespace pw
