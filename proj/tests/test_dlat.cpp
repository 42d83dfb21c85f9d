#include "doctest.h"
#include "oracles.hpp"
#include "pw/dlat.hpp"

using namespace pw;

namespace {

// B2 = upsets of the 2-antichain: 0 = ∅, a = {0}, b = {1}, 1 = {0,1}.
FinDLat b2() { return birkhoff_lattice(Poset::antichain(2)); }
// 3-chain 0 < m < 1.
FinDLat c3() { return chain_lattice(3); }

Mask full(int n) { return full_mask(n); }

std::vector<FinDLat> corpus_lattices(int max_points) {
  std::vector<FinDLat> out;
  for (int n = 0; n <= max_points; ++n)
    for (const Poset& P : enumerate_posets(n)) out.push_back(birkhoff_lattice(P));
  return out;
}

bool boolean_by_brute_force(const FinDLat& L) {
  for (int a = 0; a < L.size(); ++a) {
    bool has_complement = false;
    for (int b = 0; b < L.size(); ++b)
      if (oracle::sup(L, bit(a) | bit(b)) == L.top() && oracle::inf(L, bit(a) | bit(b)) == L.bottom())
        has_complement = true;
    if (!has_complement) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("birkhoffLattice") {
  const FinDLat L = b2();
  CHECK(L.size() == 4);
  CHECK(L.join(1, 2) == 3);
  CHECK(L.meet(1, 2) == 0);
  CHECK(c3().size() == 3);
  CHECK(birkhoff_lattice(Poset::chain(2)).birkhoff_sets() == std::vector<Mask>{0, 2, 3});
  const FinDLat one = birkhoff_lattice(Poset());
  CHECK(one.size() == 1);
  CHECK(one.bottom() == one.top());
  CHECK(FinDLat().size() == 1);
}

TEST_CASE("join and meet tables agree with the order") {
  for (const FinDLat& L : corpus_lattices(4))
    for (int a = 0; a < L.size(); ++a)
      for (int b = 0; b < L.size(); ++b) {
        CHECK(L.join(a, b) == oracle::sup(L, bit(a) | bit(b)));
        CHECK(L.meet(a, b) == oracle::inf(L, bit(a) | bit(b)));
      }
}

TEST_CASE("join irreducibles") {
  CHECK(join_irreducibles(b2()) == (bit(1) | bit(2)));
  CHECK(join_irreducibles(c3()) == (bit(1) | bit(2)));
  CHECK(join_irreducibles(chain_lattice(2)) == bit(1));
  for (const FinDLat& L : corpus_lattices(4)) {
    Mask want = 0;
    for (int j = 0; j < L.size(); ++j) {
      if (j == L.bottom()) continue;
      bool irreducible = true;
      for (int a = 0; a < L.size(); ++a)
        for (int b = 0; b < L.size(); ++b)
          if (L.join(a, b) == j && a != j && b != j) irreducible = false;
      if (irreducible) want |= bit(j);
    }
    CHECK(join_irreducibles(L) == want);
  }
}

TEST_CASE("birkhoff lattices are distributive with join-irreducibles dual to P") {
  for (int n = 0; n <= 5; ++n)
    for (const Poset& P : enumerate_posets(n)) {
      const FinDLat L = birkhoff_lattice(P);
      CHECK(L.is_distributive());
      const auto J = bits_of(join_irreducibles(L));
      oracle::Rel r(J.size(), std::vector<bool>(J.size()));
      for (std::size_t i = 0; i < J.size(); ++i)
        for (std::size_t k = 0; k < J.size(); ++k) r[i][k] = L.leq(J[i], J[k]);
      // ↑p ⊆ ↑q iff q ≤ p.
      CHECK(isomorphic(Poset::from_up_masks([&] {
                         std::vector<Mask> up(J.size());
                         for (std::size_t i = 0; i < J.size(); ++i)
                           for (std::size_t k = 0; k < J.size(); ++k)
                             if (r[i][k]) up[i] |= bit(static_cast<int>(k));
                         return up;
                       }()),
                       P.dual()));
    }
}

TEST_CASE("non-distributive and non-lattice orders") {
  const std::vector<Cover> m3{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}};
  const FinDLat M3 = FinDLat::from_order(Poset::from_covers(5, m3));
  CHECK_FALSE(M3.is_distributive());
  CHECK_THROWS_AS(M3.validate_distributive(), DistributivityError);

  const std::vector<Cover> n5{{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}};
  const FinDLat N5 = FinDLat::from_order(Poset::from_covers(5, n5));
  CHECK_FALSE(N5.is_distributive());
  CHECK_THROWS_AS(N5.validate_distributive(), DistributivityError);

  const std::vector<Cover> bowtie{{0, 2}, {0, 3}, {1, 2}, {1, 3}};
  CHECK_THROWS_AS(FinDLat::from_order(Poset::from_covers(4, bowtie)), NotALatticeError);
  CHECK_THROWS_AS(FinDLat::from_order(Poset::antichain(2)), NotALatticeError);
}

TEST_CASE("way below") {
  CHECK(way_below_oracle(b2(), 1, 3));
  CHECK_FALSE(way_below_oracle(c3(), 2, 1));
  CHECK_FALSE(way_below(c3(), 2, 1));
  for (const FinDLat& L : corpus_lattices(3))
    for (int b = 0; b < L.size(); ++b) CHECK(way_below_oracle(L, L.bottom(), b));
}

TEST_CASE("ideal oracle, directed-set oracle and fast path agree") {
  for (const FinDLat& L : corpus_lattices(5)) {
    const bool small = L.size() <= 8;
    for (int a = 0; a < L.size(); ++a)
      for (int b = 0; b < L.size(); ++b) {
        const bool fast = way_below(L, a, b);
        CHECK(fast == L.leq(a, b));
        CHECK(way_below_oracle(L, a, b) == fast);
        if (small) CHECK(oracle::way_below_directed(L, a, b) == fast);
      }
  }
}

TEST_CASE("compact elements") {
  CHECK(compact_elements(b2()) == full(4));
  CHECK(compact_elements(FinDLat()) == full(1));
  CHECK(compact_elements(c3()) == full(3));
  for (const FinDLat& L : corpus_lattices(5)) CHECK(compact_elements(L) == L.all());
}

TEST_CASE("pseudocomplement and well inside") {
  const FinDLat B = b2(), C = c3();
  CHECK(pseudocomplement(B, 1) == 2);
  CHECK(pseudocomplement(C, 1) == 0);
  CHECK(pseudocomplement(B, 0) == 3);
  CHECK(well_inside(B, 1, 1));
  CHECK_FALSE(well_inside(C, 1, 1));
  CHECK(complemented_elements(B) == full(4));
  CHECK(complemented_elements(C) == (bit(0) | bit(2)));
  CHECK(complemented_elements(chain_lattice(2)) == full(2));

  for (const FinDLat& L : corpus_lattices(4))
    for (int a = 0; a < L.size(); ++a) {
      // Largest x with a ∧ x = 0, by search.
      int best = -1;
      for (int x = 0; x < L.size(); ++x)
        if (L.meet(a, x) == L.bottom() && (best < 0 || L.leq(best, x))) best = x;
      CHECK(pseudocomplement(L, a) == best);
      CHECK(L.meet(a, pseudocomplement(L, a)) == L.bottom());
      CHECK(well_inside(L, L.bottom(), a));
      for (int b = 0; b < L.size(); ++b)
        if (well_inside(L, a, b)) CHECK(way_below_oracle(L, a, b));
    }
}

TEST_CASE("frame predicates") {
  CHECK(frame_predicate(b2(), "stone"));
  CHECK_FALSE(frame_predicate(c3(), "zeroDimensional"));
  CHECK_THROWS_AS(frame_predicate(b2(), "bogus"), UnknownPredicate);
  const Check c = frame_check(c3(), FramePredicate::ZeroDimensional);
  CHECK_FALSE(c.holds);
  CHECK_FALSE(c.witness.empty());
}

TEST_CASE("frame predicate invariants over the corpus") {
  for (const FinDLat& L : corpus_lattices(5)) {
    CHECK(frame_predicate(L, FramePredicate::Algebraic));
    CHECK(frame_predicate(L, FramePredicate::Arithmetic));
    CHECK(frame_predicate(L, FramePredicate::Continuous));
    CHECK(frame_predicate(L, FramePredicate::Spatial));
    CHECK(frame_predicate(L, FramePredicate::Coherent) == frame_predicate(L, FramePredicate::CompactFrame));
    const bool boolean = boolean_by_brute_force(L);
    const bool stone = frame_predicate(L, FramePredicate::Stone);
    CHECK(stone == (frame_predicate(L, FramePredicate::ZeroDimensional) &&
                    frame_predicate(L, FramePredicate::CompactFrame)));
    CHECK(stone == boolean);
    CHECK(frame_predicate(L, FramePredicate::Regular) == frame_predicate(L, FramePredicate::ZeroDimensional));
    CHECK(frame_predicate(L, FramePredicate::CompactRegular) == stone);
  }
}

TEST_CASE("prime filters match the subset oracle") {
  for (const FinDLat& L : corpus_lattices(4)) {
    if (L.size() > 10) continue;
    auto got = prime_filters(L);
    std::sort(got.begin(), got.end());
    CHECK(got == oracle::prime_filters(L));
  }
}

TEST_CASE("hom predicates") {
  const FinDLat B = b2(), C = c3(), two = chain_lattice(2);
  const LatticeHom id = LatticeHom::identity(B);
  for (HomPredicate p : {HomPredicate::LatticeHom, HomPredicate::FrameHom, HomPredicate::CoherentHom,
                         HomPredicate::ProperHom})
    CHECK(hom_predicate(id, p));

  const LatticeHom up(C, two, {0, 1, 1});
  CHECK(hom_predicate(up, HomPredicate::FrameHom));
  CHECK(hom_predicate(up, HomPredicate::CoherentHom));

  const LatticeHom both(B, two, {0, 1, 1, 1});
  CHECK_FALSE(hom_predicate(both, HomPredicate::FrameHom));
  CHECK_FALSE(hom_check(both, HomPredicate::FrameHom).witness.empty());
  CHECK_THROWS_AS(parse_hom_predicate("nope"), UnknownPredicate);
}

TEST_CASE("enumerateHoms") {
  const FinDLat two = chain_lattice(2);
  CHECK(enumerate_homs(two, two, HomPredicate::FrameHom).size() == 1);
  CHECK(enumerate_homs(c3(), two, HomPredicate::FrameHom).size() == 2);
  CHECK(enumerate_homs(b2(), two, HomPredicate::FrameHom).size() == 2);
}

TEST_CASE("enumerateHoms matches brute force, and coherent iff proper") {
  std::vector<FinDLat> small;
  for (const FinDLat& L : corpus_lattices(3))
    if (L.size() <= 5) small.push_back(L);
  for (const FinDLat& L : small)
    for (const FinDLat& M : small) {
      const auto homs = enumerate_homs(L, M, HomPredicate::FrameHom);
      auto want = oracle::bounded_homs(L, M);
      std::sort(want.begin(), want.end());
      CAPTURE(L.size());
      CAPTURE(M.size());
      REQUIRE(homs.size() == want.size());
      for (std::size_t i = 0; i < homs.size(); ++i) {
        CHECK(homs[i].image() == want[i]);
        CHECK(homs[i].is_lattice_hom());
        CHECK(hom_predicate(homs[i], HomPredicate::CoherentHom) == hom_predicate(homs[i], HomPredicate::ProperHom));
        CHECK(hom_predicate(homs[i], HomPredicate::ProperHom));
      }
    }
}

TEST_CASE("hom composition") {
  const FinDLat C = c3(), two = chain_lattice(2);
  const LatticeHom h(C, two, {0, 0, 1});
  const LatticeHom g = LatticeHom::identity(two);
  CHECK(g.after(h) == h);
  CHECK(h.after(LatticeHom::identity(C)) == h);
}
