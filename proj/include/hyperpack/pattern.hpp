#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "hyperpack/hypergraph.hpp"
#include "hyperpack/rational.hpp"

namespace hyperpack {

inline constexpr std::size_t kDefaultOracleCap = 24;

// The packing pattern F: a k-graph on m vertices with at least one edge.
class Pattern {
 public:
  explicit Pattern(Hypergraph f, std::string name = {});

  const Hypergraph& graph() const noexcept { return f_; }
  unsigned uniformity() const noexcept { return f_.uniformity(); }
  std::size_t order() const noexcept { return f_.order(); }
  const std::string& name() const noexcept { return name_; }

 private:
  Hypergraph f_;
  std::string name_;
};

// Complete k-partite k-graph with the given class sizes (k = sizes.size()).
Pattern complete_partite(const std::vector<std::size_t>& sizes);
// Complete multipartite graph (k = 2) with the given part sizes.
Pattern complete_multipartite_graph(const std::vector<std::size_t>& sizes);

// Registry names: edge:k, K3, P3, Kkpartite:a1,...,ak, Kmulti:a1,...,ar.
// Anything else is treated as a path to a .khg file.
Pattern pattern_from_spec(std::string_view spec);

// Does some bijection V(F) -> s map every edge of F onto an edge of h?
bool spans_copy(const Hypergraph& h, const VertexSet& s, const Pattern& p);

// Every m-subset of V(h) spanning a copy of F, once each, sorted.
std::vector<VertexSet> enumerate_copies(const Hypergraph& h, const Pattern& p);

// Exact perfect-packing test by backtracking. Throws CapExceeded when the
// host has more than cap vertices.
bool has_perfect_packing_small(const Hypergraph& h, const Pattern& p,
                               std::size_t cap = kDefaultOracleCap);

struct GraphChromaticStats {
  unsigned chi = 0;
  unsigned sigma = 0;
  Rational chi_cr;
  std::set<unsigned> dset;
  std::optional<unsigned> hcf_chi;  // nullopt when D(F) = {0} (infinite)
  unsigned hcf_c = 0;
  bool hcf_is_one = false;
  Rational chi_star;

  bool balanced() const { return chi_cr == Rational(chi); }
};

GraphChromaticStats graph_stats(const Pattern& p);

struct PartiteStats {
  std::set<unsigned> sset;
  std::set<unsigned> dset;
  std::optional<unsigned> gcd_f;  // nullopt when D(F) = {0}
  Rational sigma;
  // class sizes of one realisation whose smallest class is minimal, ascending
  std::vector<std::size_t> min_realisation;
};

PartiteStats partite_stats(const Pattern& p);

// K(F): the complete k-partite k-graph over a realisation of F whose smallest
// class is as small as possible. F is a subgraph of it.
Pattern completed_partite(const Pattern& p);

}  // namespace hyperpack
