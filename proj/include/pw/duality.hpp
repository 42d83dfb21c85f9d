#pragma once

// Finite Priestley duality: the prime-filter space of a lattice with its
// Stone map, the clopen-upset lattice of a space, dualization of frame
// homomorphisms, the two round-trip isomorphisms, and the theorem
// validators that tie lattice-side and space-side predicates together.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pw/dlat.hpp"
#include "pw/priestley.hpp"

namespace pw {

struct StoneMapRecord {
  FinDLat lattice;
  FinPriestley space;
  // filters[x] is the prime filter (a set of lattice elements) behind point x.
  std::vector<Mask> filters;
  // phi[a] = {x : a ∈ filters[x]}.
  std::vector<Mask> phi;
};

// Fast path: one point per join-irreducible j, carrying the filter ↑j.
// For a Birkhoff lattice of P, point i is the filter of the upset ↑i, so the
// space is P itself (same labels).
StoneMapRecord priestley_space_of(const FinDLat& L, const Limits& limits = default_limits());

// Oracle: filters every subset of L down to the prime filters. Points are
// ordered by their filter in canonical mask order. CapacityError above
// limits.max_oracle_lattice elements.
StoneMapRecord priestley_space_oracle(const FinDLat& L, const Limits& limits = default_limits());

// The unique bijection between the two records' points that matches
// filters, if it is an order-isomorphism commuting with phi.
std::optional<std::vector<int>> stone_iso(const StoneMapRecord& a, const StoneMapRecord& b);

FinDLat clop_up_lattice(const FinPriestley& X, const Limits& limits = default_limits());

// f(x) = h⁻¹[x] as a map X_M → X_L, between the given records (which must
// be the spaces of h's target and source). Throws NotFrameHom.
SpaceMap dualize_hom(const LatticeHom& h, const StoneMapRecord& target_space, const StoneMapRecord& source_space);
SpaceMap dualize_hom(const LatticeHom& h);

// φ : L → ClopUp(X_L). `map[a]` is the element of `upsets` that φ(a) is.
struct FrameRoundTrip {
  StoneMapRecord record;
  FinDLat upsets;
  std::vector<Elem> map;
};

// ε : X → X_{ClopUp(X)}. `map[x]` is the point of `record.space` hit by x.
struct SpaceRoundTrip {
  FinDLat upsets;
  StoneMapRecord record;
  std::vector<int> map;
};

// Throws IsoFailure naming an offending pair when phi is not a bounded
// lattice isomorphism onto the upsets of the record's space.
void check_stone_map_iso(const StoneMapRecord& rec);

FrameRoundTrip round_trip_frame(const FinDLat& L, const Limits& limits = default_limits());
SpaceRoundTrip round_trip_space(const FinPriestley& X, const Limits& limits = default_limits());

// φ(⋁S) = cl(⋃{φ(s) : s ∈ S}).
bool phi_join_law(const StoneMapRecord& rec, Mask S);

enum class Validator {
  CoreChain,
  CompactCharacterization,
  AlgebraicEquivalence,
  ScottExtensions,
  ProperCoherent,
  ScottStable,
  ArithmeticEquivalence,
  CoherentEquivalence,
  CenSubReg,
  StoneCollapse,
  ZeroDimEquivalence,
  StoneEquivalence,
};

Validator parse_validator(std::string_view name);
std::string_view to_string(Validator v);
const std::vector<Validator>& all_validators();

struct ValidationReport {
  std::string lattice;
  Validator validator = Validator::CoreChain;
  bool pass = true;
  // Names the first failing instance (element, upset, map) when !pass.
  std::map<std::string, std::string> witness;
  // Truth values of the statement's sides for the lattice as a whole.
  std::map<std::string, bool> sides;
  std::int64_t micros = 0;
};

// Evaluates every side of the statement from the definitions. `partners`
// are the other lattices quantified over by properCoherent (homs in both
// directions to each partner with at most as many join-irreducibles as L);
// L itself is always included.
ValidationReport validate(Validator v, const FinDLat& L, std::string lattice_id = {},
                          std::span<const FinDLat> partners = {});

}  // namespace pw
