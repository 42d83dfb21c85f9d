#pragma once

// Brute-force reference implementations used only by the tests. They work
// on plain relation matrices and subset lists and share no code with the
// library beyond the Poset/FinDLat accessors used to read inputs.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "pw/dlat.hpp"

namespace oracle {

using Rel = std::vector<std::vector<bool>>;

inline Rel relation(const pw::Poset& P) {
  Rel r(P.size(), std::vector<bool>(P.size()));
  for (int i = 0; i < P.size(); ++i)
    for (int j = 0; j < P.size(); ++j) r[i][j] = P.leq(i, j);
  return r;
}

inline bool is_partial_order(const Rel& r) {
  const int n = static_cast<int>(r.size());
  for (int i = 0; i < n; ++i) {
    if (!r[i][i]) return false;
    for (int j = 0; j < n; ++j) {
      if (i != j && r[i][j] && r[j][i]) return false;
      for (int k = 0; k < n; ++k)
        if (r[i][j] && r[j][k] && !r[i][k]) return false;
    }
  }
  return true;
}

// All partial orders on n labelled points, by testing every relation.
inline std::vector<Rel> labelled_orders(int n) {
  std::vector<std::pair<int, int>> offdiag;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) offdiag.emplace_back(i, j);
  std::vector<Rel> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << offdiag.size()); ++bits) {
    Rel r(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) r[i][i] = true;
    for (std::size_t k = 0; k < offdiag.size(); ++k)
      if (bits >> k & 1) r[offdiag[k].first][offdiag[k].second] = true;
    if (is_partial_order(r)) out.push_back(std::move(r));
  }
  return out;
}

// Smallest relation code over all n! relabellings.
inline std::vector<bool> permutation_canon(const Rel& r) {
  const int n = static_cast<int>(r.size());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<bool> best;
  do {
    std::vector<bool> code;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) code.push_back(r[perm[i]][perm[j]]);
    if (best.empty() || code < best) best = code;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline bool brute_isomorphic(const Rel& a, const Rel& b) {
  return a.size() == b.size() && permutation_canon(a) == permutation_canon(b);
}

inline int unlabelled_count(int n) {
  std::set<std::vector<bool>> classes;
  for (const Rel& r : labelled_orders(n)) classes.insert(permutation_canon(r));
  return static_cast<int>(classes.size());
}

// Upsets of a relation, by testing every subset.
inline std::vector<std::uint64_t> upsets(const Rel& r) {
  const int n = static_cast<int>(r.size());
  std::vector<std::uint64_t> out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j)
        if ((s >> i & 1) && r[i][j] && !(s >> j & 1)) ok = false;
    if (ok) out.push_back(s);
  }
  return out;
}

// Number of monotone maps, by testing every function.
inline long long monotone_count(const Rel& p, const Rel& q) {
  const int n = static_cast<int>(p.size()), m = static_cast<int>(q.size());
  if (n == 0) return 1;
  if (m == 0) return 0;
  std::vector<int> f(n, 0);
  long long count = 0;
  for (;;) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j)
        if (p[i][j] && !q[f[i]][f[j]]) ok = false;
    count += ok;
    int k = 0;
    while (k < n && ++f[k] == m) f[k++] = 0;
    if (k == n) break;
  }
  return count;
}

// Least upper bound of a set of lattice elements, read off the order only.
inline int sup(const pw::FinDLat& L, std::uint64_t s) {
  for (int c = 0; c < L.size(); ++c) {
    bool upper = true;
    for (int a = 0; a < L.size(); ++a)
      if ((s >> a & 1) && !L.leq(a, c)) upper = false;
    if (!upper) continue;
    bool least = true;
    for (int d = 0; d < L.size(); ++d) {
      bool upper_d = true;
      for (int a = 0; a < L.size(); ++a)
        if ((s >> a & 1) && !L.leq(a, d)) upper_d = false;
      if (upper_d && !L.leq(c, d)) least = false;
    }
    if (least) return c;
  }
  return -1;
}

inline int inf(const pw::FinDLat& L, std::uint64_t s) {
  for (int c = 0; c < L.size(); ++c) {
    bool lower = true;
    for (int a = 0; a < L.size(); ++a)
      if ((s >> a & 1) && !L.leq(c, a)) lower = false;
    if (!lower) continue;
    bool greatest = true;
    for (int d = 0; d < L.size(); ++d) {
      bool lower_d = true;
      for (int a = 0; a < L.size(); ++a)
        if ((s >> a & 1) && !L.leq(d, a)) lower_d = false;
      if (lower_d && !L.leq(d, c)) greatest = false;
    }
    if (greatest) return c;
  }
  return -1;
}

inline bool directed(const pw::FinDLat& L, std::uint64_t d) {
  if (d == 0) return false;
  for (int a = 0; a < L.size(); ++a)
    for (int b = 0; b < L.size(); ++b) {
      if (!(d >> a & 1) || !(d >> b & 1)) continue;
      bool bound = false;
      for (int c = 0; c < L.size(); ++c)
        if ((d >> c & 1) && L.leq(a, c) && L.leq(b, c)) bound = true;
      if (!bound) return false;
    }
  return true;
}

// a ≪ b via directed sets: every directed D with b ≤ ⋁D has some d ≥ a.
inline bool way_below_directed(const pw::FinDLat& L, int a, int b) {
  for (std::uint64_t d = 1; d < (std::uint64_t{1} << L.size()); ++d) {
    if (!directed(L, d) || !L.leq(b, sup(L, d))) continue;
    bool reached = false;
    for (int x = 0; x < L.size(); ++x)
      if ((d >> x & 1) && L.leq(a, x)) reached = true;
    if (!reached) return false;
  }
  return true;
}

// Prime filters by testing every subset against the definition.
inline std::vector<std::uint64_t> prime_filters(const pw::FinDLat& L) {
  std::vector<std::uint64_t> out;
  const int n = L.size();
  for (std::uint64_t f = 0; f < (std::uint64_t{1} << n); ++f) {
    auto in = [&](int a) { return (f >> a & 1) != 0; };
    bool ok = f != 0 && !in(inf(L, (std::uint64_t{1} << n) - 1));
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b) {
        if (in(a) && L.leq(a, b) && !in(b)) ok = false;
        if (in(a) && in(b) && !in(inf(L, (std::uint64_t{1} << a) | (std::uint64_t{1} << b)))) ok = false;
        if (in(sup(L, (std::uint64_t{1} << a) | (std::uint64_t{1} << b))) && !in(a) && !in(b)) ok = false;
      }
    if (ok) out.push_back(f);
  }
  return out;
}

// Every map L → M preserving binary joins and meets and both bounds.
inline std::vector<std::vector<int>> bounded_homs(const pw::FinDLat& L, const pw::FinDLat& M) {
  std::vector<std::vector<int>> out;
  const int n = L.size(), m = M.size();
  std::vector<int> f(n, 0);
  const std::uint64_t all_l = (std::uint64_t{1} << n) - 1, all_m = (std::uint64_t{1} << m) - 1;
  for (;;) {
    bool ok = f[sup(L, 0)] == sup(M, 0) && f[sup(L, all_l)] == sup(M, all_m);
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b) {
        const std::uint64_t ab = (std::uint64_t{1} << a) | (std::uint64_t{1} << b);
        const std::uint64_t fab = (std::uint64_t{1} << f[a]) | (std::uint64_t{1} << f[b]);
        if (f[sup(L, ab)] != sup(M, fab) || f[inf(L, ab)] != inf(M, fab)) ok = false;
      }
    if (ok) out.push_back(f);
    int k = 0;
    while (k < n && ++f[k] == m) f[k++] = 0;
    if (k == n) break;
  }
  return out;
}

}  // namespace oracle
