#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "hyperpack/combinatorics.hpp"
#include "hyperpack/pattern.hpp"

namespace hyperpack {

Mask to_mask(const VertexSet& s);
VertexSet from_mask(Mask m);

// Exact perfect F-packing search over vertex subsets of one host (n <= 64).
// Branches on the lowest uncovered vertex. Results are memoised per subset;
// subsets that differ by swapping twin vertices share one memo entry.
class PackingSolver {
 public:
  PackingSolver(const Hypergraph& h, const Pattern& p, std::size_t cap = kDefaultOracleCap);

  std::size_t order() const noexcept { return n_; }
  std::size_t pattern_order() const noexcept { return m_; }
  // all copies of F in the host, as masks, sorted ascending
  const std::vector<Mask>& copies() const noexcept { return copies_; }

  // Does h[w] have a perfect F-packing?
  bool packable(Mask w);
  // One perfect packing of h[w] (lexicographically first by the search order).
  std::optional<std::vector<Mask>> find_packing(Mask w);

  std::size_t memo_size() const noexcept { return memo_.size(); }

 private:
  Mask canonical(Mask w) const;
  bool search(Mask w);

  std::size_t n_;
  std::size_t m_;
  std::vector<Mask> copies_;
  std::vector<std::vector<Mask>> by_lowest_;  // copies grouped by lowest vertex
  std::vector<Mask> twin_classes_;            // classes of size >= 2
  std::unordered_map<Mask, bool> memo_;
};

}  // namespace hyperpack
