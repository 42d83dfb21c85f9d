// Finite Priestley spaces: operator calculus and predicates.

#include "pw/priestley.hpp"

#include <algorithm>
#include <numeric>

#include "pw/kernels.hpp"

namespace pw {

namespace {

Check fail(std::string why) { return Check{false, std::move(why)}; }

Check both(Check first, const auto& second) {
  if (!first) return first;
  return second();
}

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

// Connected components of the comparability graph.
std::vector<Mask> comparability_components(const Poset& P) {
  std::vector<Mask> comps;
  Mask seen = 0;
  for (int p = 0; p < P.size(); ++p) {
    if (has(seen, p)) continue;
    Mask comp = bit(p);
    for (;;) {
      Mask grown = comp;
      for_each_bit(comp, [&](int q) { grown |= P.up(q) | P.down(q); });
      if (grown == comp) break;
      comp = grown;
    }
    seen |= comp;
    comps.push_back(comp);
  }
  return comps;
}

}  // namespace

FinPriestley::FinPriestley(Poset points, const Limits& limits) {
  auto d = std::make_shared<Data>();
  d->points = std::move(points);
  d->limits = limits;
  d_ = std::move(d);
}

const std::vector<Mask>& FinPriestley::clopen_upsets() const {
  std::call_once(d_->upsets_once, [&] {
    std::vector<Mask> ups = all_upset_masks(d_->points, d_->limits);
    for (Mask u : ups) {
      if (is_clopen(u)) d_->clop_up.push_back(u);
      if (is_open(u)) d_->open_up.push_back(u);
      if (is_closed(u)) d_->closed_up.push_back(u);
    }
    for (Mask w : d_->open_up) d_->open_cl.push_back(closure(w));
    for (Mask v : d_->clop_up) d_->clop_down.push_back(down_closure(d_->points, v));
  });
  return d_->clop_up;
}

const std::vector<Mask>& FinPriestley::open_upsets() const {
  clopen_upsets();
  return d_->open_up;
}

const std::vector<Mask>& FinPriestley::closed_upsets() const {
  clopen_upsets();
  return d_->closed_up;
}

const std::vector<Mask>& FinPriestley::open_upset_closures() const {
  clopen_upsets();
  return d_->open_cl;
}

const std::vector<Mask>& FinPriestley::clopen_upset_downsets() const {
  clopen_upsets();
  return d_->clop_down;
}

const std::vector<Mask>& FinPriestley::clopen_scott_upsets() const {
  std::call_once(d_->scott_once, [&] {
    for (Mask u : clopen_upsets())
      if (is_scott_upset(*this, u)) d_->scott.push_back(u);
  });
  return d_->scott;
}

const std::vector<Mask>& FinPriestley::clopen_bisets() const {
  std::call_once(d_->bisets_once, [&] {
    std::vector<Mask> comps = comparability_components(points());
    if (comps.size() >= 63 || (Mask{1} << comps.size()) > d_->limits.max_upset_family)
      throw CapacityError("too many comparability components to list bisets");
    const Mask count = Mask{1} << comps.size();
    for (Mask pick = 0; pick < count; ++pick) {
      Mask s = 0;
      for_each_bit(pick, [&](int i) { s |= comps[i]; });
      if (is_clopen(s)) d_->bisets.push_back(s);
    }
    std::sort(d_->bisets.begin(), d_->bisets.end(), canonical_less);
  });
  return d_->bisets;
}

Mask spatial_part(const FinPriestley& X) {
  Mask y = 0;
  for (int p = 0; p < X.size(); ++p)
    if (X.is_clopen(X.points().down(p))) y |= bit(p);
  return y;
}

PointSet spatial_part_set(const FinPriestley& X) { return PointSet(X.points(), spatial_part(X)); }

bool clop_way_below(const FinPriestley& X, Mask V, Mask U) {
  for (Mask W : X.open_upsets())
    if (subset_of(U, X.closure(W)) && !subset_of(V, W)) return false;
  return true;
}

Mask kernel(const FinPriestley& X, Mask U) {
  // V ≪ U iff V lies inside every open upset W with U ⊆ cl W.
  const Mask bound = kernels::intersect_where_superset(X.open_upset_closures(), X.open_upsets(), U, X.all());
  const auto& clop = X.clopen_upsets();
  return kernels::union_where_subset(clop, clop, bound);
}

bool is_scott_upset_by_minimal_points(const FinPriestley& X, Mask F) {
  if (!X.is_closed(F) || !is_upset(X.points(), F)) return false;
  return subset_of(min_elements(X.points(), F), spatial_part(X));
}

bool is_scott_upset_by_closure_reflection(const FinPriestley& X, Mask F) {
  if (!X.is_closed(F) || !is_upset(X.points(), F)) return false;
  for (Mask U : X.open_upsets())
    if (subset_of(F, X.closure(U)) && !subset_of(F, U)) return false;
  return true;
}

bool is_scott_upset(const FinPriestley& X, Mask F) {
  const bool by_min = is_scott_upset_by_minimal_points(X, F);
  const bool by_cl = is_scott_upset_by_closure_reflection(X, F);
  if (by_min != by_cl)
    throw Error("Scott upset formulations disagree on " + set_name(X.points(), F));
  return by_min;
}

Mask core(const FinPriestley& X, Mask U) {
  const auto& scott = X.clopen_scott_upsets();
  return kernels::union_where_subset(scott, scott, U);
}

bool clop_well_inside(const FinPriestley& X, Mask V, Mask U) { return subset_of(down_closure(X.points(), V), U); }

Mask regular_part(const FinPriestley& X, Mask U) {
  return kernels::union_where_subset(X.clopen_upset_downsets(), X.clopen_upsets(), U);
}

bool is_biset(const FinPriestley& X, Mask S) {
  return X.is_clopen(S) && is_upset(X.points(), S) && is_downset(X.points(), S);
}

Mask center(const FinPriestley& X, Mask U) {
  const auto& bisets = X.clopen_bisets();
  return kernels::union_where_subset(bisets, bisets, U);
}

bool dense_in(const FinPriestley& X, Mask O, Mask U) { return X.closure(O) == U; }

namespace {

PointSet bound_result(const FinPriestley& X, const PointSet& U, Mask (*op)(const FinPriestley&, Mask)) {
  U.check_bound_to(X.points());
  return PointSet(X.points(), op(X, U.mask()));
}

}  // namespace

PointSet kernel(const FinPriestley& X, const PointSet& U) { return bound_result(X, U, &kernel); }
PointSet core(const FinPriestley& X, const PointSet& U) { return bound_result(X, U, &core); }
PointSet regular_part(const FinPriestley& X, const PointSet& U) { return bound_result(X, U, &regular_part); }
PointSet center(const FinPriestley& X, const PointSet& U) { return bound_result(X, U, &center); }

namespace {

struct LSpaceName {
  LSpacePredicate p;
  std::string_view name;
};

constexpr LSpaceName kLSpaceNames[] = {
    {LSpacePredicate::Esakia, "esakia"},
    {LSpacePredicate::ExtremallyOrderDisconnected, "extremallyOrderDisconnected"},
    {LSpacePredicate::ContinuousL, "continuousL"},
    {LSpacePredicate::AlgebraicL, "algebraicL"},
    {LSpacePredicate::KernelStable, "kernelStable"},
    {LSpacePredicate::LCompact, "lCompact"},
    {LSpacePredicate::ArithmeticL, "arithmeticL"},
    {LSpacePredicate::CoherentL, "coherentL"},
    {LSpacePredicate::StablyContinuousL, "stablyContinuousL"},
    {LSpacePredicate::StablyCompactL, "stablyCompactL"},
    {LSpacePredicate::RegularL, "regularL"},
    {LSpacePredicate::CompactRegularL, "compactRegularL"},
    {LSpacePredicate::ZeroDimL, "zeroDimL"},
    {LSpacePredicate::StoneL, "stoneL"},
};

// op(U) is dense in U for every clopen upset U.
Check dense_everywhere(const FinPriestley& X, Mask (*op)(const FinPriestley&, Mask), std::string_view what) {
  for (Mask U : X.clopen_upsets())
    if (!dense_in(X, op(X, U), U))
      return fail(std::string(what) + " of " + set_name(X.points(), U) + " is not dense in it");
  return {};
}

Check esakia(const FinPriestley& X) {
  // Downset of each clopen is clopen; all subsets are candidates.
  const int n = X.size();
  if (n > 20) throw CapacityError("esakia check enumerates all subsets; space too large");
  for (Mask s = 0; s < (Mask{1} << n); ++s)
    if (X.is_clopen(s) && !X.is_clopen(down_closure(X.points(), s)))
      return fail("downset of clopen " + set_name(X.points(), s) + " is not clopen");
  return {};
}

Check extremally_order_disconnected(const FinPriestley& X) {
  for (Mask U : X.open_upsets())
    if (!X.is_open(X.closure(U))) return fail("closure of " + set_name(X.points(), U) + " is not open");
  return {};
}

Check kernel_stable(const FinPriestley& X) {
  const auto& clop = X.clopen_upsets();
  for (Mask U : clop)
    for (Mask V : clop)
      if (kernel(X, U & V) != (kernel(X, U) & kernel(X, V)))
        return fail("ker does not preserve the intersection of " + set_name(X.points(), U) + " and " +
                    set_name(X.points(), V));
  return {};
}

Check l_compact(const FinPriestley& X) {
  if (kernel(X, X.all()) != X.all()) return fail("X is not its own kernel");
  return {};
}

}  // namespace

LSpacePredicate parse_lspace_predicate(std::string_view name) {
  for (const auto& [p, n] : kLSpaceNames)
    if (n == name) return p;
  throw UnknownPredicate("unknown L-space predicate '" + std::string(name) + "'");
}

std::string_view to_string(LSpacePredicate p) {
  for (const auto& [q, n] : kLSpaceNames)
    if (q == p) return n;
  return "?";
}

const std::vector<LSpacePredicate>& all_lspace_predicates() {
  static const std::vector<LSpacePredicate> all = [] {
    std::vector<LSpacePredicate> v;
    for (const auto& e : kLSpaceNames) v.push_back(e.p);
    return v;
  }();
  return all;
}

Check lspace_check(const FinPriestley& X, LSpacePredicate p) {
  using P = LSpacePredicate;
  switch (p) {
    case P::Esakia:
      return esakia(X);
    case P::ExtremallyOrderDisconnected:
      return extremally_order_disconnected(X);
    case P::ContinuousL:
      return dense_everywhere(X, &kernel, "ker");
    case P::AlgebraicL:
      return dense_everywhere(X, &core, "core");
    case P::KernelStable:
      return kernel_stable(X);
    case P::LCompact:
      return l_compact(X);
    case P::ArithmeticL:
      return both(kernel_stable(X), [&] { return lspace_check(X, P::AlgebraicL); });
    case P::CoherentL:
      return both(l_compact(X), [&] { return lspace_check(X, P::ArithmeticL); });
    case P::StablyContinuousL:
      return both(kernel_stable(X), [&] { return lspace_check(X, P::ContinuousL); });
    case P::StablyCompactL:
      return both(l_compact(X), [&] { return lspace_check(X, P::StablyContinuousL); });
    case P::RegularL:
      return dense_everywhere(X, &regular_part, "reg");
    case P::CompactRegularL:
      return both(l_compact(X), [&] { return lspace_check(X, P::RegularL); });
    case P::ZeroDimL:
      return dense_everywhere(X, &center, "cen");
    case P::StoneL:
      return both(l_compact(X), [&] { return lspace_check(X, P::ZeroDimL); });
  }
  throw UnknownPredicate("unhandled L-space predicate");
}

bool lspace_predicate(const FinPriestley& X, LSpacePredicate p) { return lspace_check(X, p).holds; }

bool lspace_predicate(const FinPriestley& X, std::string_view name) {
  return lspace_predicate(X, parse_lspace_predicate(name));
}

SpaceMap::SpaceMap(FinPriestley source, FinPriestley target, std::vector<int> image)
    : source_(std::move(source)),
      target_(std::move(target)),
      map_(source_.points(), target_.points(), std::move(image)) {}

SpaceMap SpaceMap::identity(const FinPriestley& X) {
  std::vector<int> image(X.size());
  std::iota(image.begin(), image.end(), 0);
  return SpaceMap(X, X, std::move(image));
}

SpaceMap SpaceMap::after(const SpaceMap& first) const {
  return SpaceMap(first.source_, target_, map_.after(first.map_).image());
}

namespace {

constexpr std::pair<MapPredicate, std::string_view> kMapNames[] = {
    {MapPredicate::LMorphism, "lMorphism"},
    {MapPredicate::ProperL, "properL"},
    {MapPredicate::CoherentL, "coherentL"},
};

Check l_morphism(const SpaceMap& f) {
  const FinPriestley& X = f.source();
  const FinPriestley& Z = f.target();
  const int n = Z.size();
  if (n > 20) throw CapacityError("continuity check enumerates all subsets; target too large");
  for (Mask s = 0; s < (Mask{1} << n); ++s)
    if (Z.is_clopen(s) && !X.is_clopen(f.preimage(s)))
      return fail("preimage of clopen " + set_name(Z.points(), s) + " is not clopen");
  for (Mask U : Z.open_upsets())
    if (f.preimage(Z.closure(U)) != X.closure(f.preimage(U)))
      return fail("preimage does not commute with closure at " + set_name(Z.points(), U));
  return {};
}

Check preimage_inclusion(const SpaceMap& f, Mask (*op)(const FinPriestley&, Mask), std::string_view what) {
  for (Mask U : f.target().clopen_upsets())
    if (!subset_of(f.preimage(op(f.target(), U)), op(f.source(), f.preimage(U))))
      return fail("preimage of " + std::string(what) + " " + set_name(f.target().points(), U) + " escapes " +
                  std::string(what) + " of the preimage");
  return {};
}

}  // namespace

MapPredicate parse_map_predicate(std::string_view name) {
  for (const auto& [p, n] : kMapNames)
    if (n == name) return p;
  throw UnknownPredicate("unknown map predicate '" + std::string(name) + "'");
}

std::string_view to_string(MapPredicate p) {
  for (const auto& [q, n] : kMapNames)
    if (q == p) return n;
  return "?";
}

Check map_check(const SpaceMap& f, MapPredicate p) {
  switch (p) {
    case MapPredicate::LMorphism:
      return l_morphism(f);
    case MapPredicate::ProperL:
      return preimage_inclusion(f, &kernel, "ker");
    case MapPredicate::CoherentL:
      return preimage_inclusion(f, &core, "core");
  }
  throw UnknownPredicate("unhandled map predicate");
}

bool map_predicate(const SpaceMap& f, MapPredicate p) { return map_check(f, p).holds; }

bool PointSpace::is_open(Mask s) const { return std::find(opens.begin(), opens.end(), s) != opens.end(); }

bool PointSpace::is_closed(Mask s) const { return is_open(full_mask(size) & ~s); }

std::vector<Mask> PointSpace::closed_sets() const {
  std::vector<Mask> out;
  for (Mask o : opens) out.push_back(full_mask(size) & ~o);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

Mask PointSpace::closure(Mask s) const {
  Mask c = full_mask(size);
  for (Mask o : opens)
    if ((o & s) == 0) c &= ~o;
  return c;
}

bool PointSpace::is_compact(Mask) const {
  // Finitely many opens, so every open cover is already finite.
  return true;
}

PointSpace point_space(const FinPriestley& X) {
  PointSpace Y;
  const Mask y = spatial_part(X);
  Y.origin = bits_of(y);
  Y.size = static_cast<int>(Y.origin.size());
  auto restrict = [&](Mask U) {
    Mask r = 0;
    for (int i = 0; i < Y.size; ++i)
      if (has(U, Y.origin[i])) r |= bit(i);
    return r;
  };
  for (Mask U : X.clopen_upsets()) Y.opens.push_back(restrict(U & y));
  std::sort(Y.opens.begin(), Y.opens.end(), canonical_less);
  Y.opens.erase(std::unique(Y.opens.begin(), Y.opens.end()), Y.opens.end());
  return Y;
}

namespace {

constexpr std::pair<PointSpacePredicate, std::string_view> kPointNames[] = {
    {PointSpacePredicate::Sober, "sober"},
    {PointSpacePredicate::Compact, "compact"},
    {PointSpacePredicate::CompactlyBased, "compactlyBased"},
    {PointSpacePredicate::StablyCompactlyBased, "stablyCompactlyBased"},
    {PointSpacePredicate::Spectral, "spectral"},
    {PointSpacePredicate::Hausdorff, "hausdorff"},
    {PointSpacePredicate::ZeroDimensional, "zeroDimensional"},
    {PointSpacePredicate::StoneSpace, "stoneSpace"},
};

std::string point_set_name(const PointSpace& Y, Mask s) {
  std::string out = "{";
  bool first = true;
  for_each_bit(s, [&](int i) {
    if (!first) out += ",";
    out += "p" + std::to_string(Y.origin.empty() ? i : Y.origin[i]);
    first = false;
  });
  return out + "}";
}

bool irreducible(const PointSpace& Y, Mask C, const std::vector<Mask>& closed) {
  if (C == 0) return false;
  for (Mask A : closed) {
    if (A == C || !subset_of(A, C)) continue;
    for (Mask B : closed)
      if (B != C && subset_of(B, C) && (A | B) == C) return false;
  }
  (void)Y;
  return true;
}

Check sober(const PointSpace& Y) {
  const std::vector<Mask> closed = Y.closed_sets();
  for (Mask C : closed) {
    if (!irreducible(Y, C, closed)) continue;
    int generic = 0;
    for (int y = 0; y < Y.size; ++y)
      if (Y.closure(bit(y)) == C) ++generic;
    if (generic != 1)
      return fail("irreducible closed set " + point_set_name(Y, C) + " is the closure of " +
                  std::to_string(generic) + " points");
  }
  return {};
}

// Each point of each open U lies in some basic V ⊆ U.
Check basis(const PointSpace& Y, const std::vector<Mask>& basic, std::string_view what) {
  for (Mask U : Y.opens)
    for (int y = 0; y < Y.size; ++y) {
      if (!has(U, y)) continue;
      bool found = std::any_of(basic.begin(), basic.end(), [&](Mask V) { return has(V, y) && subset_of(V, U); });
      if (!found)
        return fail("no " + std::string(what) + " open around p" + std::to_string(Y.origin.empty() ? y : Y.origin[y]) +
                    " inside " + point_set_name(Y, U));
    }
  return {};
}

std::vector<Mask> compact_opens(const PointSpace& Y) {
  std::vector<Mask> out;
  for (Mask U : Y.opens)
    if (Y.is_compact(U)) out.push_back(U);
  return out;
}

Check compactly_based(const PointSpace& Y) { return basis(Y, compact_opens(Y), "compact"); }

Check compact_intersections(const PointSpace& Y) {
  const std::vector<Mask> ko = compact_opens(Y);
  for (Mask A : ko)
    for (Mask B : ko)
      if (!Y.is_compact(A & B)) return fail("intersection of two compact opens is not compact");
  return {};
}

Check compact_space(const PointSpace& Y) {
  if (!Y.is_compact(full_mask(Y.size))) return fail("space is not compact");
  return {};
}

Check hausdorff(const PointSpace& Y) {
  for (int x = 0; x < Y.size; ++x)
    for (int y = x + 1; y < Y.size; ++y) {
      bool separated = false;
      for (Mask U : Y.opens) {
        if (!has(U, x) || has(U, y)) continue;
        separated = std::any_of(Y.opens.begin(), Y.opens.end(),
                                [&](Mask V) { return has(V, y) && (U & V) == 0; });
        if (separated) break;
      }
      if (!separated)
        return fail("p" + std::to_string(Y.origin.empty() ? x : Y.origin[x]) + " and p" +
                    std::to_string(Y.origin.empty() ? y : Y.origin[y]) + " have no disjoint neighbourhoods");
    }
  return {};
}

Check zero_dimensional(const PointSpace& Y) {
  std::vector<Mask> clopens;
  for (Mask U : Y.opens)
    if (Y.is_closed(U)) clopens.push_back(U);
  return basis(Y, clopens, "clopen");
}

}  // namespace

PointSpacePredicate parse_point_space_predicate(std::string_view name) {
  for (const auto& [p, n] : kPointNames)
    if (n == name) return p;
  throw UnknownPredicate("unknown point-space predicate '" + std::string(name) + "'");
}

std::string_view to_string(PointSpacePredicate p) {
  for (const auto& [q, n] : kPointNames)
    if (q == p) return n;
  return "?";
}

const std::vector<PointSpacePredicate>& all_point_space_predicates() {
  static const std::vector<PointSpacePredicate> all = [] {
    std::vector<PointSpacePredicate> v;
    for (const auto& e : kPointNames) v.push_back(e.first);
    return v;
  }();
  return all;
}

Check point_space_check(const PointSpace& Y, PointSpacePredicate p) {
  using P = PointSpacePredicate;
  switch (p) {
    case P::Sober:
      return sober(Y);
    case P::Compact:
      return compact_space(Y);
    case P::CompactlyBased:
      return compactly_based(Y);
    case P::StablyCompactlyBased:
      return both(both(sober(Y), [&] { return compactly_based(Y); }), [&] { return compact_intersections(Y); });
    case P::Spectral:
      return both(point_space_check(Y, P::StablyCompactlyBased), [&] { return compact_space(Y); });
    case P::Hausdorff:
      return hausdorff(Y);
    case P::ZeroDimensional:
      return zero_dimensional(Y);
    case P::StoneSpace:
      return both(both(zero_dimensional(Y), [&] { return compact_space(Y); }), [&] { return hausdorff(Y); });
  }
  throw UnknownPredicate("unhandled point-space predicate");
}

bool point_space_predicate(const PointSpace& Y, PointSpacePredicate p) { return point_space_check(Y, p).holds; }

}  // namespace pw
