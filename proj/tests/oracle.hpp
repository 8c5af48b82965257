// Reference implementations kept deliberately naive: plain std::set, no
// bitsets, no antichain pruning, no orbit compression. Tests compare the
// engine and the helpers in nvec against these.
#ifndef ZGEN_TESTS_ORACLE_HPP_
#define ZGEN_TESTS_ORACLE_HPP_

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "zgen/nvec.hpp"

namespace oracle {

using Vec = std::vector<unsigned long long>;

inline Vec to_vec(const zgen::NatVec& v) { return Vec(v.begin(), v.end()); }
inline zgen::NatVec to_nat(const Vec& v) { return zgen::NatVec(std::vector<zgen::Entry>(v.begin(), v.end())); }

// Zero is reached by the per-index recursion: pools start at {1_i}; every
// sum of one member per pool that is strictly below h is added to pool i
// with coordinate i cleared.
inline bool generating(const Vec& h) {
  const std::size_t n = h.size();
  if (std::any_of(h.begin(), h.end(), [](auto x) { return x == 0; })) return false;
  std::vector<std::set<Vec>> pools(n);
  for (std::size_t i = 0; i < n; ++i) {
    Vec u(n, 0);
    u[i] = 1;
    pools[i].insert(u);
  }
  for (;;) {
    std::set<Vec> partial = {Vec(n, 0)};
    for (std::size_t j = 0; j < n; ++j) {
      std::set<Vec> next;
      for (const auto& s : partial) {
        for (const auto& x : pools[j]) {
          Vec t(n);
          bool below = true;
          for (std::size_t c = 0; c < n && below; ++c) {
            t[c] = s[c] + x[c];
            below = t[c] < h[c];
          }
          if (below) next.insert(t);
        }
      }
      partial = std::move(next);
    }
    bool grew = false;
    for (const auto& s : partial) {
      for (std::size_t i = 0; i < n; ++i) {
        Vec y = s;
        y[i] = 0;
        if (std::all_of(y.begin(), y.end(), [](auto v) { return v == 0; })) return true;
        grew = pools[i].insert(y).second || grew;
      }
    }
    if (!grew) return false;
  }
}

inline std::vector<Vec> all_permutations(Vec v) {
  std::vector<Vec> out;
  std::vector<std::size_t> p(v.size());
  std::iota(p.begin(), p.end(), 0);
  do {
    Vec w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = v[p[i]];
    out.push_back(w);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline bool leq(const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

inline std::set<Vec> minimal(const std::set<Vec>& s) {
  std::set<Vec> out;
  for (const auto& a : s) {
    bool min = true;
    for (const auto& b : s) {
      if (b != a && leq(b, a)) min = false;
    }
    if (min) out.insert(a);
  }
  return out;
}

inline zgen::NatVec random_vec(std::mt19937_64& rng, std::size_t n, zgen::Entry lo, zgen::Entry hi) {
  std::uniform_int_distribution<zgen::Entry> d(lo, hi);
  zgen::NatVec v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = d(rng);
  return v;
}

}  // namespace oracle

#endif  // ZGEN_TESTS_ORACLE_HPP_
