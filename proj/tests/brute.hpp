// Slow reference implementations. Nothing here shares code with the
// library beyond the Hypergraph container.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "hyperpack/hypergraph.hpp"

namespace brute {

using hyperpack::Hypergraph;
using hyperpack::Vertex;
using Set = std::vector<Vertex>;

inline bool subset_of(const Set& a, const Set& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline std::uint64_t degree(const Hypergraph& h, const Set& s) {
  std::uint64_t d = 0;
  for (const auto& e : h.edges()) d += subset_of(s, e);
  return d;
}

inline void subsets(const Set& items, std::size_t r, const std::function<void(const Set&)>& fn) {
  Set cur;
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (cur.size() == r) {
      fn(cur);
      return;
    }
    if (items.size() - i < r - cur.size()) return;
    cur.push_back(items[i]);
    go(i + 1);
    cur.pop_back();
    go(i + 1);
  };
  go(0);
}

inline Set range(std::size_t n) {
  Set s(n);
  std::iota(s.begin(), s.end(), Vertex{0});
  return s;
}

inline std::uint64_t min_degree(const Hypergraph& h, unsigned l) {
  std::uint64_t best = UINT64_MAX;
  subsets(range(h.order()), l, [&](const Set& s) { best = std::min(best, degree(h, s)); });
  return best;
}

inline bool has_edge(const Hypergraph& h, Set e) {
  std::sort(e.begin(), e.end());
  return std::find(h.edges().begin(), h.edges().end(), e) != h.edges().end();
}

// every bijection of F's vertices onto s
inline bool spans(const Hypergraph& h, const Set& s, const Hypergraph& f) {
  if (s.size() != f.order()) return false;
  Set perm = s;
  std::sort(perm.begin(), perm.end());
  do {
    bool ok = true;
    for (const auto& fe : f.edges()) {
      Set e;
      for (auto v : fe) e.push_back(perm[v]);
      if (!has_edge(h, e)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline std::vector<Set> copies(const Hypergraph& h, const Hypergraph& f) {
  std::vector<Set> out;
  subsets(range(h.order()), f.order(), [&](const Set& s) {
    if (spans(h, s, f)) out.push_back(s);
  });
  return out;
}

// exact cover over a list of candidate blocks, restricted to `within`
inline bool covers(const std::vector<Set>& blocks, const Set& within) {
  if (within.empty()) return true;
  Vertex first = within.front();
  for (const auto& b : blocks) {
    if (!std::binary_search(b.begin(), b.end(), first)) continue;
    if (!subset_of(b, within)) continue;
    Set rest;
    std::set_difference(within.begin(), within.end(), b.begin(), b.end(), std::back_inserter(rest));
    if (covers(blocks, rest)) return true;
  }
  return false;
}

inline bool has_packing(const Hypergraph& h, const Hypergraph& f) {
  if (h.order() % f.order() != 0) return false;
  return covers(copies(h, f), range(h.order()));
}

inline bool has_perfect_matching(const Hypergraph& h) {
  if (h.order() % h.uniformity() != 0) return false;
  return covers(h.edges(), range(h.order()));
}

// (i*m-1)-sets S avoiding u, v with both S+u and S+v perfectly packable
inline std::uint64_t reach_count(const Hypergraph& h, const Hypergraph& f, Vertex u, Vertex v, unsigned i) {
  auto all = copies(h, f);
  Set rest;
  for (Vertex w = 0; w < h.order(); ++w)
    if (w != u && w != v) rest.push_back(w);
  std::uint64_t count = 0;
  const std::size_t r = i * f.order() - 1;
  if (r > rest.size()) return 0;
  subsets(rest, r, [&](const Set& s) {
    Set su = s, sv = s;
    su.push_back(u);
    sv.push_back(v);
    std::sort(su.begin(), su.end());
    std::sort(sv.begin(), sv.end());
    if (covers(all, su) && covers(all, sv)) ++count;
  });
  return count;
}

}  // namespace brute
