#pragma once

// Finite Priestley spaces and the L-space operator calculus: way-below on
// clopen upsets, kernel, core, regular part, center, Scott upsets, bisets,
// the spatial part with its point-space topology, and predicates on spaces,
// on L-morphisms and on point spaces.
//
// A finite Priestley space is a finite poset carrying the discrete
// topology, so every subset is clopen. The topology is not stored; every
// formula that mentions closure, interior or clopenness goes through the
// member functions below, which keeps the definitional formulas intact.

#include <memory>
#include <mutex>
#include <string_view>
#include <vector>

#include "pw/dlat.hpp"
#include "pw/poset.hpp"

namespace pw {

class FinPriestley {
 public:
  FinPriestley() : FinPriestley(Poset()) {}
  explicit FinPriestley(Poset points, const Limits& limits = default_limits());

  const Poset& points() const { return d_->points; }
  int size() const { return d_->points.size(); }
  Mask all() const { return d_->points.all(); }

  // Topological structure (discrete on finite carriers).
  Mask closure(Mask s) const { return s; }
  Mask interior(Mask s) const { return s; }
  bool is_open(Mask s) const { return interior(s) == s; }
  bool is_closed(Mask s) const { return closure(s) == s; }
  bool is_clopen(Mask s) const { return is_open(s) && is_closed(s); }

  // ClopUp(X), in canonical upset order. Open upsets and closed upsets are
  // exposed separately so formulas quantify over the family they name.
  const std::vector<Mask>& clopen_upsets() const;
  const std::vector<Mask>& open_upsets() const;
  const std::vector<Mask>& closed_upsets() const;
  // cl W for each W in open_upsets(), and ↓V for each V in clopen_upsets().
  const std::vector<Mask>& open_upset_closures() const;
  const std::vector<Mask>& clopen_upset_downsets() const;

  // Cached derived families (computed on first use).
  const std::vector<Mask>& clopen_scott_upsets() const;  // ClopSUp(X)
  const std::vector<Mask>& clopen_bisets() const;        // ClopBi(X)

  const Limits& limits() const { return d_->limits; }

 private:
  struct Data {
    Poset points;
    Limits limits;
    mutable std::once_flag upsets_once;
    mutable std::vector<Mask> clop_up, open_up, closed_up, open_cl, clop_down;
    mutable std::once_flag scott_once;
    mutable std::vector<Mask> scott;
    mutable std::once_flag bisets_once;
    mutable std::vector<Mask> bisets;
  };
  std::shared_ptr<const Data> d_;
};

// Y = {y : ↓y is clopen}.
Mask spatial_part(const FinPriestley& X);
PointSet spatial_part_set(const FinPriestley& X);

// V ≪ U: for each open upset W, U ⊆ cl W implies V ⊆ W.
bool clop_way_below(const FinPriestley& X, Mask V, Mask U);
// ker U = ⋃{V ∈ ClopUp(X) : V ≪ U}.
Mask kernel(const FinPriestley& X, Mask U);

// Closed upset whose minimal points lie in the spatial part.
bool is_scott_upset_by_minimal_points(const FinPriestley& X, Mask F);
// Closed upset F with: F ⊆ cl U implies F ⊆ U, for each open upset U.
bool is_scott_upset_by_closure_reflection(const FinPriestley& X, Mask F);
// Evaluates both; throws pw::Error if they disagree.
bool is_scott_upset(const FinPriestley& X, Mask F);

// core U = ⋃{V ⊆ U : V ∈ ClopSUp(X)}.
Mask core(const FinPriestley& X, Mask U);

// V ≺ U iff ↓V ⊆ U; reg U = ⋃{V ∈ ClopUp(X) : V ≺ U}.
bool clop_well_inside(const FinPriestley& X, Mask V, Mask U);
Mask regular_part(const FinPriestley& X, Mask U);

bool is_biset(const FinPriestley& X, Mask S);
// cen U = ⋃{V ∈ ClopBi(X) : V ⊆ U}.
Mask center(const FinPriestley& X, Mask U);

// cl(O) = U.
bool dense_in(const FinPriestley& X, Mask O, Mask U);

// PointSet façades for the public surface.
PointSet kernel(const FinPriestley& X, const PointSet& U);
PointSet core(const FinPriestley& X, const PointSet& U);
PointSet regular_part(const FinPriestley& X, const PointSet& U);
PointSet center(const FinPriestley& X, const PointSet& U);

enum class LSpacePredicate {
  Esakia,
  ExtremallyOrderDisconnected,
  ContinuousL,
  AlgebraicL,
  KernelStable,
  LCompact,
  ArithmeticL,
  CoherentL,
  StablyContinuousL,
  StablyCompactL,
  RegularL,
  CompactRegularL,
  ZeroDimL,
  StoneL,
};

LSpacePredicate parse_lspace_predicate(std::string_view name);
std::string_view to_string(LSpacePredicate p);
const std::vector<LSpacePredicate>& all_lspace_predicates();

Check lspace_check(const FinPriestley& X, LSpacePredicate p);
bool lspace_predicate(const FinPriestley& X, LSpacePredicate p);
bool lspace_predicate(const FinPriestley& X, std::string_view name);

// A monotone map between finite Priestley spaces.
class SpaceMap {
 public:
  SpaceMap(FinPriestley source, FinPriestley target, std::vector<int> image);
  static SpaceMap identity(const FinPriestley& X);

  const FinPriestley& source() const { return source_; }
  const FinPriestley& target() const { return target_; }
  const MonotoneMap& map() const { return map_; }
  const std::vector<int>& image() const { return map_.image(); }
  Mask preimage(Mask target_set) const { return map_.preimage(target_set); }

  // (*this) after `first`.
  SpaceMap after(const SpaceMap& first) const;

  bool operator==(const SpaceMap& o) const { return map_ == o.map_; }

 private:
  FinPriestley source_;
  FinPriestley target_;
  MonotoneMap map_;
};

enum class MapPredicate { LMorphism, ProperL, CoherentL };

MapPredicate parse_map_predicate(std::string_view name);
std::string_view to_string(MapPredicate p);

Check map_check(const SpaceMap& f, MapPredicate p);
bool map_predicate(const SpaceMap& f, MapPredicate p);

// A finite topological space given by its family of open sets (each a mask
// over 0..size-1). `origin[i]` is the point of the parent space it came from.
struct PointSpace {
  int size = 0;
  std::vector<Mask> opens;
  std::vector<int> origin;

  bool is_open(Mask s) const;
  bool is_closed(Mask s) const;
  bool is_clopen(Mask s) const { return is_open(s) && is_closed(s); }
  std::vector<Mask> closed_sets() const;
  // Least closed set containing s.
  Mask closure(Mask s) const;
  // Every open cover of s has a finite subcover.
  bool is_compact(Mask s) const;
};

// The spatial part with its topology {U ∩ Y : U ∈ ClopUp(X)}.
PointSpace point_space(const FinPriestley& X);

enum class PointSpacePredicate {
  Sober,
  Compact,
  CompactlyBased,
  StablyCompactlyBased,
  Spectral,
  Hausdorff,
  ZeroDimensional,
  StoneSpace,
};

PointSpacePredicate parse_point_space_predicate(std::string_view name);
std::string_view to_string(PointSpacePredicate p);
const std::vector<PointSpacePredicate>& all_point_space_predicates();

Check point_space_check(const PointSpace& Y, PointSpacePredicate p);
bool point_space_predicate(const PointSpace& Y, PointSpacePredicate p);

}  // namespace pw
