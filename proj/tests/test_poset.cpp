#include <algorithm>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "pw/poset.hpp"

using namespace pw;

namespace {

Poset from_relation(const oracle::Rel& r) {
  std::vector<Mask> up(r.size(), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < r.size(); ++j)
      if (r[i][j]) up[i] |= bit(static_cast<int>(j));
  return Poset::from_up_masks(up);
}

std::vector<Mask> sorted(std::vector<Mask> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("makePoset") {
  const Poset anti = make_poset({}, 2);
  CHECK(anti.size() == 2);
  CHECK_FALSE(anti.comparable(0, 1));

  const std::vector<Cover> c01{{0, 1}};
  const Poset chain = make_poset(c01, 2);
  CHECK(chain.less(0, 1));
  CHECK_FALSE(chain.leq(1, 0));

  const std::vector<Cover> cyc{{0, 1}, {1, 0}};
  CHECK_THROWS_AS(make_poset(cyc, 2), CycleError);
  const std::vector<Cover> bad{{0, 2}};
  CHECK_THROWS_AS(make_poset(bad, 2), IndexError);

  const std::vector<Cover> longer{{0, 1}, {1, 2}, {2, 0}};
  CHECK_THROWS_AS(make_poset(longer, 3), CycleError);
}

TEST_CASE("covers are the Hasse diagram") {
  const std::vector<Cover> c{{0, 1}, {1, 2}, {0, 2}};
  CHECK(Poset::from_covers(3, c).covers() == std::vector<Cover>{{0, 1}, {1, 2}});
}

TEST_CASE("up and down closure") {
  const Poset chain = Poset::chain(2);
  CHECK(up_closure(chain, PointSet::of(chain, {0})) == PointSet::of(chain, {0, 1}));
  CHECK(down_closure(chain, PointSet::of(chain, {1})) == PointSet::of(chain, {0, 1}));
  const Poset anti = Poset::antichain(2);
  CHECK(up_closure(anti, PointSet::of(anti, {0})) == PointSet::of(anti, {0}));

  const Poset other = Poset::chain(2);
  CHECK_THROWS_AS(up_closure(other, PointSet::of(chain, {0})), BindingError);
  CHECK_THROWS_AS(PointSet::of(chain, {0}) | PointSet::of(other, {1}), BindingError);
}

TEST_CASE("closures are closure operators") {
  for (int n = 0; n <= 4; ++n)
    for (const auto& r : oracle::labelled_orders(n)) {
      const Poset P = from_relation(r);
      for (Mask s = 0; s <= P.all(); ++s) {
        const Mask u = up_closure(P, s), d = down_closure(P, s);
        CHECK((s & ~u) == 0);
        CHECK(up_closure(P, u) == u);
        CHECK(is_upset(P, u));
        CHECK((s & ~d) == 0);
        CHECK(down_closure(P, d) == d);
        CHECK(is_downset(P, d));
        for (Mask t = s; t <= P.all(); t = (t + 1) | s) {
          CHECK((u & ~up_closure(P, t)) == 0);
          if (t == P.all()) break;
        }
      }
    }
}

TEST_CASE("allUpsets") {
  CHECK(all_upset_masks(Poset()) == std::vector<Mask>{0});
  CHECK(all_upset_masks(Poset::antichain(2)) == std::vector<Mask>{0, 1, 2, 3});
  CHECK(all_upset_masks(Poset::chain(2)) == std::vector<Mask>{0, 2, 3});

  for (int n = 0; n <= 6; ++n) {
    CHECK(all_upset_masks(Poset::chain(n)).size() == static_cast<std::size_t>(n + 1));
    CHECK(all_upset_masks(Poset::antichain(n)).size() == (std::size_t{1} << n));
  }

  Limits tight;
  tight.max_upset_family = 8;
  CHECK_THROWS_AS(all_upset_masks(Poset::antichain(4), tight), CapacityError);
}

TEST_CASE("allUpsets matches the subset oracle and is a distributive lattice") {
  for (int n = 0; n <= 4; ++n)
    for (const auto& r : oracle::labelled_orders(n)) {
      const Poset P = from_relation(r);
      const auto ups = all_upset_masks(P);
      const auto want = oracle::upsets(r);
      CHECK(sorted(ups) == want);
      CHECK(upsets_by_search(P, 1 << 20) == ups);
      for (std::size_t i = 1; i < ups.size(); ++i) {
        const int a = popcount(ups[i - 1]), b = popcount(ups[i]);
        CHECK((a < b || (a == b && bits_of(ups[i - 1]) < bits_of(ups[i]))));
      }
      for (Mask u : ups)
        for (Mask v : ups) {
          CHECK(std::binary_search(want.begin(), want.end(), u | v));
          CHECK(is_upset(P, u & v));
        }
    }
}

TEST_CASE("min and max elements") {
  const Poset c2 = Poset::chain(2);
  CHECK(min_elements(c2, PointSet::of(c2, {0, 1})) == PointSet::of(c2, {0}));
  const Poset anti = Poset::antichain(2);
  CHECK(min_elements(anti, PointSet::all_of(anti)) == PointSet::all_of(anti));
  const Poset c3 = Poset::chain(3);
  CHECK(min_elements(c3, PointSet::of(c3, {1, 2})) == PointSet::of(c3, {1}));
  CHECK(max_elements(c3, PointSet::of(c3, {0, 1})) == PointSet::of(c3, {1}));

  for (const auto& r : oracle::labelled_orders(4)) {
    const Poset P = from_relation(r);
    for (Mask s = 0; s <= P.all(); ++s) {
      const Mask m = min_elements(P, s);
      CHECK((m & ~s) == 0);
      CHECK(up_closure(P, m) == up_closure(P, s));
    }
  }
}

TEST_CASE("isomorphism") {
  const std::vector<Cover> c10{{1, 0}};
  CHECK(isomorphic(Poset::chain(2), Poset::from_covers(2, c10)));
  CHECK_FALSE(isomorphic(Poset::chain(2), Poset::antichain(2)));
  const std::vector<Cover> vee{{0, 2}, {1, 2}}, wedge{{2, 0}, {2, 1}};
  CHECK_FALSE(isomorphic(Poset::from_covers(3, vee), Poset::from_covers(3, wedge)));
  CHECK(isomorphic(Poset::from_covers(3, vee).dual(), Poset::from_covers(3, wedge)));
}

TEST_CASE("isomorphism agrees with brute-force relabelling") {
  const auto orders = oracle::labelled_orders(4);
  std::mt19937 rng(5);
  for (int k = 0; k < 2000; ++k) {
    const auto& a = orders[rng() % orders.size()];
    const auto& b = orders[rng() % orders.size()];
    CHECK(isomorphic(from_relation(a), from_relation(b)) == oracle::brute_isomorphic(a, b));
  }
  for (const auto& r : orders) {
    const Poset P = from_relation(r);
    const Poset C = canonical_poset(P);
    CHECK(oracle::brute_isomorphic(oracle::relation(C), r));
    const CanonicalForm f = canonical_form(P);
    CHECK(P.relabeled(f.order).same_order(C));
  }
}

TEST_CASE("labelled poset counts from the relation oracle") {
  const std::vector<std::size_t> labelled{1, 1, 3, 19, 219};
  for (int n = 0; n <= 4; ++n) CHECK(oracle::labelled_orders(n).size() == labelled[n]);
}

TEST_CASE("enumeratePosets reproduces the brute-force class counts") {
  for (int n = 0; n <= 5; ++n) {
    const auto reps = enumerate_posets(n);
    CAPTURE(n);
    CHECK(static_cast<int>(reps.size()) == oracle::unlabelled_count(n));
    std::set<std::vector<bool>> seen;
    for (const Poset& P : reps) CHECK(seen.insert(oracle::permutation_canon(oracle::relation(P))).second);
  }
  CHECK(enumerate_posets(0).size() == 1);
  CHECK(enumerate_posets(2).size() == 2);
  CHECK(enumerate_posets(5).size() == 63);
  CHECK_THROWS_AS(enumerate_posets(7), CapacityError);
}

TEST_CASE("monotone maps") {
  CHECK(monotone_maps(Poset::chain(1), Poset::chain(2)).size() == 2);
  CHECK(monotone_maps(Poset::chain(2), Poset::chain(2)).size() == 3);
  CHECK(monotone_maps(Poset::antichain(2), Poset::chain(2)).size() == 4);
  CHECK_THROWS_AS(MonotoneMap(Poset::chain(2), Poset::chain(2), {1, 0}), NotMonotone);

  const auto orders3 = oracle::labelled_orders(3);
  for (const auto& p : orders3)
    for (const auto& q : orders3)
      CHECK(static_cast<long long>(monotone_maps(from_relation(p), from_relation(q)).size()) ==
            oracle::monotone_count(p, q));
}

TEST_CASE("linear extensions respect the order") {
  for (const Poset& P : enumerate_posets(5)) {
    const auto ext = linear_extension(P);
    std::vector<int> pos(P.size());
    for (int i = 0; i < P.size(); ++i) pos[ext[i]] = i;
    for (int p = 0; p < P.size(); ++p)
      for (int q = 0; q < P.size(); ++q)
        if (P.less(p, q)) CHECK(pos[p] < pos[q]);
  }
}

TEST_CASE("empty poset is a first-class value") {
  const Poset E;
  CHECK(E.size() == 0);
  CHECK(all_upset_masks(E).size() == 1);
  CHECK(monotone_maps(E, Poset::chain(2)).size() == 1);
  CHECK(monotone_maps(Poset::chain(1), E).empty());
  CHECK(isomorphic(E, Poset::antichain(0)));
}
