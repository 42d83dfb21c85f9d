#pragma once

// Finite bounded distributive lattices (= finite frames) with the
// frame-theoretic operators: way-below, compact and complemented elements,
// pseudocomplement, well-inside, the frame predicates, and homomorphisms.
//
// Elements are indices 0..size-1 (at most 64, so element sets are masks).
// A FinDLat is a cheap handle to immutable shared tables.

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pw/poset.hpp"

namespace pw {

using Elem = int;

class FinDLat {
 public:
  // The one-element lattice.
  FinDLat();
  // Lattice given by its order. Joins and meets are derived from the order;
  // throws NotALatticeError if some pair lacks a join or meet, or the order
  // has no bottom/top. Distributivity is NOT checked here (see
  // validate_distributive).
  static FinDLat from_order(const Poset& order, std::vector<std::string> names = {});

  int size() const { return static_cast<int>(d_->order.size()); }
  Mask all() const { return full_mask(size()); }
  const Poset& order() const { return d_->order; }
  bool leq(Elem a, Elem b) const { return d_->order.leq(a, b); }
  Elem join(Elem a, Elem b) const { return d_->join[a * size() + b]; }
  Elem meet(Elem a, Elem b) const { return d_->meet[a * size() + b]; }
  Elem bottom() const { return d_->bottom; }
  Elem top() const { return d_->top; }
  // Join/meet of a finite element set (empty join = bottom, empty meet = top).
  Elem join_all(Mask elems) const;
  Elem meet_all(Mask elems) const;

  std::string name(Elem a) const;
  const std::vector<std::string>& names() const { return d_->names; }

  // Present when the lattice was built as the upsets of a poset; element a
  // is then the upset birkhoff_sets()[a] of birkhoff_poset().
  const std::optional<Poset>& birkhoff_poset() const { return d_->birkhoff; }
  const std::vector<Mask>& birkhoff_sets() const { return d_->sets; }

  bool is_distributive() const;
  // Throws DistributivityError naming a witness triple.
  void validate_distributive() const;

  // Definitional way-below table: entry b is {a : a ≪ b}, computed from the
  // ideals of the lattice. Computed once per lattice on first use.
  const std::vector<Mask>& way_below_table() const;

  // Structural identity (same order, same tables).
  bool same_as(const FinDLat& o) const { return d_ == o.d_ || d_->order.same_order(o.d_->order); }

  // Shared immutable tables behind the handle.
  struct Data {
    Poset order;
    std::vector<std::uint8_t> join;
    std::vector<std::uint8_t> meet;
    Elem bottom = 0;
    Elem top = 0;
    std::vector<std::string> names;
    std::optional<Poset> birkhoff;
    std::vector<Mask> sets;
    mutable std::once_flag wb_once;
    mutable std::vector<Mask> wb;
  };

 private:
  friend FinDLat birkhoff_lattice(const Poset&, const Limits&);
  explicit FinDLat(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

// Upsets of P under inclusion: join = union, meet = intersection. Elements
// follow the canonical upset order, so element 0 is ∅ (bottom) and the last
// element is P itself (top).
FinDLat birkhoff_lattice(const Poset& P, const Limits& limits = default_limits());

FinDLat chain_lattice(int n);

Mask join_irreducibles(const FinDLat& L);

// Nonempty ideals (downsets closed under binary joins).
std::vector<Mask> ideals(const FinDLat& L, const Limits& limits = default_limits());

// Way-below. The fast path uses the finite collapse (every element of a
// finite lattice is compact, so a ≪ b iff a ≤ b); the oracle quantifies over
// all ideals I with b ≤ ⋁I and requires a ∈ I.
bool way_below(const FinDLat& L, Elem a, Elem b);
bool way_below_oracle(const FinDLat& L, Elem a, Elem b);

// K(L) via the oracle.
Mask compact_elements(const FinDLat& L);

Elem pseudocomplement(const FinDLat& L, Elem a);
bool well_inside(const FinDLat& L, Elem a, Elem b);
// C(L) = {a : a ≺ a}.
Mask complemented_elements(const FinDLat& L);

// Completely prime filters. On a finite lattice these are the prime
// filters; found by searching the upsets of the lattice order.
std::vector<Mask> prime_filters(const FinDLat& L, const Limits& limits = default_limits());

enum class FramePredicate {
  CompactFrame,
  Continuous,
  Algebraic,
  Arithmetic,
  Coherent,
  StablyContinuous,
  StablyCompact,
  Regular,
  CompactRegular,
  ZeroDimensional,
  Stone,
  Spatial,
};

FramePredicate parse_frame_predicate(std::string_view name);
std::string_view to_string(FramePredicate p);
const std::vector<FramePredicate>& all_frame_predicates();

// Outcome of a literal predicate evaluation; `witness` explains a failure.
struct Check {
  bool holds = true;
  std::string witness;
  explicit operator bool() const { return holds; }
};

Check frame_check(const FinDLat& L, FramePredicate p);
bool frame_predicate(const FinDLat& L, FramePredicate p);
bool frame_predicate(const FinDLat& L, std::string_view name);

class LatticeHom {
 public:
  // Any element map; the predicates tell what kind of map it is.
  LatticeHom(FinDLat source, FinDLat target, std::vector<Elem> image);
  static LatticeHom identity(const FinDLat& L);

  const FinDLat& source() const { return source_; }
  const FinDLat& target() const { return target_; }
  const std::vector<Elem>& image() const { return image_; }
  Elem operator()(Elem a) const { return image_[a]; }

  bool is_lattice_hom() const { return lattice_hom_; }
  bool is_frame_hom() const { return frame_hom_; }

  // (*this) after `first`.
  LatticeHom after(const LatticeHom& first) const;

  bool operator==(const LatticeHom& o) const { return image_ == o.image_; }

 private:
  FinDLat source_;
  FinDLat target_;
  std::vector<Elem> image_;
  bool lattice_hom_ = false;
  bool frame_hom_ = false;
};

enum class HomPredicate { LatticeHom, FrameHom, CoherentHom, ProperHom };

HomPredicate parse_hom_predicate(std::string_view name);
std::string_view to_string(HomPredicate p);

Check hom_check(const LatticeHom& h, HomPredicate p);
bool hom_predicate(const LatticeHom& h, HomPredicate p);

// All maps L → M satisfying `kind`, ordered lexicographically by image.
std::vector<LatticeHom> enumerate_homs(const FinDLat& L, const FinDLat& M, HomPredicate kind,
                                       const Limits& limits = default_limits());

}  // namespace pw
