// Canonical forms and isomorphism-class enumeration of small posets.

#include <algorithm>
#include <map>
#include <set>

#include "pw/poset.hpp"

namespace pw {

namespace {

constexpr int kMaxCanonical = 8;

std::vector<int> levels(const Poset& P) {
  std::vector<int> level(P.size(), 0);
  for (int p : linear_extension(P))
    for_each_bit(P.down(p) & ~bit(p), [&](int q) { level[p] = std::max(level[p], level[q] + 1); });
  return level;
}

// Replaces each signature by its rank among the distinct signatures.
std::vector<int> rank_signatures(const std::vector<std::vector<int>>& sig) {
  std::vector<std::vector<int>> sorted = sig;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> out(sig.size());
  for (std::size_t i = 0; i < sig.size(); ++i)
    out[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[i]) - sorted.begin());
  return out;
}

int class_count(const std::vector<int>& color) {
  return color.empty() ? 0 : *std::max_element(color.begin(), color.end()) + 1;
}

std::vector<int> refined_colors(const Poset& P) {
  const int n = P.size();
  const std::vector<int> level = levels(P);
  std::vector<std::vector<int>> sig(n);
  for (int p = 0; p < n; ++p)
    sig[p] = {popcount(P.down(p)) - 1, popcount(P.up(p)) - 1, level[p]};
  std::vector<int> color = rank_signatures(sig);
  for (;;) {
    for (int p = 0; p < n; ++p) {
      std::vector<int> below, above;
      for_each_bit(P.down(p) & ~bit(p), [&](int q) { below.push_back(color[q]); });
      for_each_bit(P.up(p) & ~bit(p), [&](int q) { above.push_back(color[q]); });
      std::sort(below.begin(), below.end());
      std::sort(above.begin(), above.end());
      sig[p] = {color[p], static_cast<int>(below.size())};
      sig[p].insert(sig[p].end(), below.begin(), below.end());
      sig[p].push_back(-1);
      sig[p].insert(sig[p].end(), above.begin(), above.end());
    }
    std::vector<int> next = rank_signatures(sig);
    if (class_count(next) == class_count(color)) return next;
    color = std::move(next);
  }
}

}  // namespace

CanonicalForm canonical_form(const Poset& P) {
  const int n = P.size();
  if (n > kMaxCanonical)
    throw CapacityError("canonical forms are only computed for posets of at most " + std::to_string(kMaxCanonical) +
                        " points");
  CanonicalForm best;
  if (n == 0) return best;

  const std::vector<int> color = refined_colors(P);
  // Position i must hold a point whose colour is slot_color[i].
  std::vector<int> slot_color = color;
  std::sort(slot_color.begin(), slot_color.end());

  std::vector<int> order(n, -1);
  Mask used = 0;
  bool found = false;
  // Ties between equally coloured points are broken by trying every
  // assignment and keeping the smallest code.
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == n) {
      Mask code = 0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j && P.leq(order[i], order[j])) code |= bit(i * n + j);
      if (!found || code < best.code) {
        best.code = code;
        best.order = order;
        found = true;
      }
      return;
    }
    for (int p = 0; p < n; ++p) {
      if (has(used, p) || color[p] != slot_color[pos]) continue;
      order[pos] = p;
      used |= bit(p);
      self(self, pos + 1);
      used &= ~bit(p);
    }
  };
  rec(rec, 0);
  return best;
}

Poset canonical_poset(const Poset& P) {
  CanonicalForm form = canonical_form(P);
  return P.relabeled(form.order);
}

bool isomorphic(const Poset& P, const Poset& Q) {
  if (P.size() != Q.size()) return false;
  return canonical_form(P).code == canonical_form(Q).code;
}

std::vector<Poset> enumerate_posets(int n, const Limits& limits) {
  if (n < 0) throw IndexError("negative poset size");
  if (n > limits.max_enumerated_poset || n > kMaxCanonical)
    throw CapacityError("enumeratePosets: n = " + std::to_string(n) + " exceeds the configured maximum " +
                        std::to_string(std::min(limits.max_enumerated_poset, kMaxCanonical)));
  std::vector<Poset> level{Poset()};
  // Every poset on k points arises from one on k-1 points by adding a
  // maximal point above some downset.
  for (int k = 1; k <= n; ++k) {
    std::map<Mask, Poset> classes;
    for (const Poset& Q : level) {
      for (Mask below : downsets_by_search(Q, limits.max_search_family)) {
        std::vector<Mask> up(k);
        for (int p = 0; p < k - 1; ++p) up[p] = Q.up(p) | (has(below, p) ? bit(k - 1) : 0);
        up[k - 1] = bit(k - 1);
        Poset P = Poset::from_up_masks(std::move(up));
        CanonicalForm form = canonical_form(P);
        if (!classes.contains(form.code)) classes.emplace(form.code, P.relabeled(form.order));
      }
    }
    level.clear();
    for (auto& [code, P] : classes) level.push_back(std::move(P));
  }
  return level;
}

}  // namespace pw
