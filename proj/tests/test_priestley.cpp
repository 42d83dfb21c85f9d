#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "pw/priestley.hpp"

using namespace pw;

namespace {

std::vector<FinPriestley> corpus_spaces(int max_points) {
  std::vector<FinPriestley> out;
  for (int n = 0; n <= max_points; ++n)
    for (const Poset& P : enumerate_posets(n)) out.emplace_back(P);
  return out;
}

bool subset(Mask a, Mask b) { return (a & ~b) == 0; }

// ⋃{V ∈ family : keep(V)}, spelled out without the kernels.
template <class Keep>
Mask union_of(const std::vector<Mask>& family, Keep keep) {
  Mask out = 0;
  for (Mask v : family)
    if (keep(v)) out |= v;
  return out;
}

bool is_antichain(const Poset& P) {
  for (int p = 0; p < P.size(); ++p)
    for (int q = 0; q < P.size(); ++q)
      if (P.less(p, q)) return false;
  return true;
}

const FinPriestley two_chain{Poset::chain(2)};
const FinPriestley anti2{Poset::antichain(2)};

}  // namespace

TEST_CASE("spatial part") {
  CHECK(spatial_part(two_chain) == 3);
  CHECK(spatial_part(FinPriestley(Poset::antichain(3))) == 7);
  CHECK(spatial_part(FinPriestley()) == 0);
  for (const FinPriestley& X : corpus_spaces(5)) CHECK(spatial_part(X) == X.all());
}

TEST_CASE("clopen upsets are the upsets") {
  for (const FinPriestley& X : corpus_spaces(4)) {
    CHECK(X.clopen_upsets() == all_upset_masks(X.points()));
    CHECK(X.open_upsets() == X.clopen_upsets());
    CHECK(X.closed_upsets() == X.clopen_upsets());
  }
}

TEST_CASE("way below on clopen upsets and kernel") {
  CHECK(clop_way_below(two_chain, 0, 2));
  CHECK(clop_way_below(two_chain, 2, 2));
  CHECK_FALSE(clop_way_below(two_chain, 3, 2));
  CHECK(kernel(two_chain, 2) == 2);
  for (const FinPriestley& X : corpus_spaces(4)) {
    CHECK(kernel(X, 0) == 0);
    for (Mask U : X.clopen_upsets()) {
      for (Mask V : X.clopen_upsets()) CHECK(clop_way_below(X, V, U) == subset(V, U));
      CHECK(kernel(X, U) == union_of(X.clopen_upsets(), [&](Mask V) { return clop_way_below(X, V, U); }));
    }
  }
}

TEST_CASE("scott upsets and core") {
  const FinPriestley X3{Poset::chain(3)};
  CHECK(is_scott_upset(X3, X3.all()));
  CHECK(is_scott_upset(two_chain, 2));
  CHECK_FALSE(is_scott_upset(two_chain, 1));
  CHECK(core(X3, X3.all()) == X3.all());
  CHECK(core(two_chain, 2) == 2);
}

TEST_CASE("well inside and regular part") {
  CHECK_FALSE(clop_well_inside(two_chain, 2, 2));
  CHECK(regular_part(two_chain, 2) == 0);
  CHECK(regular_part(two_chain, 3) == 3);
  CHECK(regular_part(anti2, 1) == 1);
}

TEST_CASE("bisets and center") {
  CHECK(two_chain.clopen_bisets() == std::vector<Mask>{0, 3});
  CHECK(center(two_chain, 2) == 0);
  CHECK(anti2.clopen_bisets() == std::vector<Mask>{0, 1, 2, 3});
  CHECK(center(anti2, 1) == 1);
  for (const FinPriestley& X : corpus_spaces(5)) {
    std::vector<Mask> literal;
    for (Mask s = 0; s <= X.all(); ++s)
      if (is_upset(X.points(), s) && is_downset(X.points(), s)) literal.push_back(s);
    auto got = X.clopen_bisets();
    std::sort(got.begin(), got.end());
    CHECK(got == literal);
    CHECK(center(X, X.all()) == X.all());
  }
}

TEST_CASE("operator lemmas over the corpus") {
  for (const FinPriestley& X : corpus_spaces(5)) {
    const auto& ups = X.clopen_upsets();
    const auto& scott = X.clopen_scott_upsets();
    for (Mask U : ups) {
      const Mask k = kernel(X, U), c = core(X, U);
      CHECK(subset(c, k));
      CHECK(subset(k, U));
      CHECK(k == U);
      CHECK(c == U);
      CHECK(is_scott_upset_by_minimal_points(X, U) == is_scott_upset_by_closure_reflection(X, U));
      CHECK(is_scott_upset(X, U) == (c == U));
      CHECK(subset(center(X, U), regular_part(X, U)));
      CHECK(regular_part(X, U) ==
            union_of(ups, [&](Mask V) { return subset(down_closure(X.points(), V), U); }));
      CHECK(dense_in(X, U, U));
      for (Mask V : ups)
        if (subset(U, V)) {
          CHECK(subset(core(X, U), core(X, V)));
          CHECK(subset(kernel(X, U), kernel(X, V)));
        }
    }
    // Non-upsets are never Scott upsets.
    for (Mask s = 0; s <= X.all(); ++s)
      if (!is_upset(X.points(), s)) CHECK_FALSE(is_scott_upset(X, s));

    bool closed_under_meet = true;
    for (Mask a : scott)
      for (Mask b : scott)
        if (std::find(scott.begin(), scott.end(), a & b) == scott.end()) closed_under_meet = false;
    CHECK((lspace_predicate(X, LSpacePredicate::AlgebraicL) && lspace_predicate(X, LSpacePredicate::KernelStable)) ==
          closed_under_meet);

    if (lspace_predicate(X, LSpacePredicate::StoneL)) {
      auto bi = X.clopen_bisets();
      auto sc = scott;
      std::sort(bi.begin(), bi.end());
      std::sort(sc.begin(), sc.end());
      CHECK(bi == sc);
      for (Mask U : ups) CHECK(center(X, U) == core(X, U));
      CHECK(lspace_predicate(X, LSpacePredicate::RegularL));
      CHECK(lspace_predicate(X, LSpacePredicate::LCompact));
    }
  }
}

TEST_CASE("point set façades keep the binding") {
  const Poset& P = two_chain.points();
  const PointSet top = PointSet::of(P, {1});
  CHECK(kernel(two_chain, top) == top);
  CHECK(core(two_chain, top) == top);
  CHECK(regular_part(two_chain, top).is_empty());
  CHECK(center(two_chain, top).is_empty());
  CHECK_THROWS_AS(kernel(two_chain, PointSet::of(Poset::chain(2), {1})), BindingError);
}

TEST_CASE("L-space predicates") {
  CHECK_FALSE(lspace_predicate(two_chain, "zeroDimL"));
  CHECK_FALSE(lspace_check(two_chain, LSpacePredicate::ZeroDimL).witness.empty());
  for (int n = 0; n <= 5; ++n) CHECK(lspace_predicate(FinPriestley(Poset::antichain(n)), "stoneL"));
  CHECK_THROWS_AS(lspace_predicate(two_chain, "nope"), UnknownPredicate);
  for (const FinPriestley& X : corpus_spaces(5)) {
    CHECK(lspace_predicate(X, LSpacePredicate::Esakia));
    CHECK(lspace_predicate(X, LSpacePredicate::ExtremallyOrderDisconnected));
    CHECK(lspace_predicate(X, LSpacePredicate::AlgebraicL));
    CHECK(lspace_predicate(X, LSpacePredicate::ContinuousL));
    CHECK(lspace_predicate(X, LSpacePredicate::ArithmeticL));
    const bool stone = lspace_predicate(X, LSpacePredicate::StoneL);
    CHECK(stone == is_antichain(X.points()));
    CHECK(lspace_predicate(X, LSpacePredicate::ZeroDimL) == stone);
    CHECK(lspace_predicate(X, LSpacePredicate::ZeroDimL) ==
          point_space_predicate(point_space(X), PointSpacePredicate::ZeroDimensional));
  }
}

TEST_CASE("map predicates") {
  for (MapPredicate p : {MapPredicate::LMorphism, MapPredicate::ProperL, MapPredicate::CoherentL})
    CHECK(map_predicate(SpaceMap::identity(two_chain), p));
  const FinPriestley point{Poset::chain(1)};
  for (const FinPriestley& X : corpus_spaces(4)) {
    const SpaceMap f(X, point, std::vector<int>(X.size(), 0));
    CHECK(map_predicate(f, MapPredicate::CoherentL));
  }
  CHECK_THROWS_AS(SpaceMap(two_chain, two_chain, {1, 0}), NotMonotone);
}

TEST_CASE("every monotone map between small corpus spaces is proper and coherent") {
  const auto spaces = corpus_spaces(3);
  for (const FinPriestley& X : spaces)
    for (const FinPriestley& Z : spaces)
      for (const MonotoneMap& m : monotone_maps(X.points(), Z.points())) {
        const SpaceMap f(X, Z, m.image());
        CHECK(map_predicate(f, MapPredicate::LMorphism));
        CHECK(map_predicate(f, MapPredicate::ProperL));
        CHECK(map_predicate(f, MapPredicate::CoherentL));
      }
}

TEST_CASE("space map composition") {
  const FinPriestley X3{Poset::chain(3)};
  const SpaceMap f(X3, two_chain, {0, 0, 1});
  const SpaceMap g(two_chain, X3, {1, 2});
  CHECK(f.after(g).image() == std::vector<int>{0, 1});
  CHECK(f.after(SpaceMap::identity(X3)) == f);
}

TEST_CASE("point spaces") {
  const PointSpace Y = point_space(two_chain);
  CHECK(Y.size == 2);
  CHECK(Y.is_open(2));
  CHECK_FALSE(Y.is_open(1));
  CHECK(Y.closure(2) == 3);
  CHECK_FALSE(point_space_predicate(Y, PointSpacePredicate::StoneSpace));
  CHECK(point_space_predicate(point_space(FinPriestley(Poset::antichain(3))), PointSpacePredicate::StoneSpace));
  CHECK_THROWS_AS(parse_point_space_predicate("nope"), UnknownPredicate);

  for (const FinPriestley& X : corpus_spaces(5)) {
    const PointSpace S = point_space(X);
    // Opens are the upsets; closed sets are the downsets.
    auto closed = S.closed_sets();
    std::sort(closed.begin(), closed.end());
    std::vector<Mask> downs;
    for (Mask s = 0; s <= X.all(); ++s)
      if (is_downset(X.points(), s)) downs.push_back(s);
    CHECK(closed == downs);
    CHECK(point_space_predicate(S, PointSpacePredicate::Sober));
    CHECK(point_space_predicate(S, PointSpacePredicate::Compact));
    CHECK(point_space_predicate(S, PointSpacePredicate::CompactlyBased));
    CHECK(point_space_predicate(S, PointSpacePredicate::StablyCompactlyBased));
    CHECK(point_space_predicate(S, PointSpacePredicate::Spectral));
    const bool discrete = is_antichain(X.points());
    CHECK(point_space_predicate(S, PointSpacePredicate::Hausdorff) == discrete);
    CHECK(point_space_predicate(S, PointSpacePredicate::StoneSpace) == discrete);
  }
}
