#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace hyperpack {

using Vertex = std::uint32_t;

// Strictly increasing sequence of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> members);
  // Sorts; throws InvalidArgument on repeated ids.
  explicit VertexSet(std::vector<Vertex> members);

  static VertexSet range(std::size_t n);

  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  Vertex operator[](std::size_t i) const { return members_[i]; }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }
  const std::vector<Vertex>& members() const noexcept { return members_; }

  bool contains(Vertex v) const;
  bool includes(std::span<const Vertex> sorted_other) const;

  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

// k-uniform hypergraph on vertices 0..n-1. Immutable after construction.
class Hypergraph {
 public:
  using Edge = std::vector<Vertex>;

  Hypergraph() = default;
  // Canonicalises every edge; rejects wrong sizes, repeated or out-of-range
  // vertices and duplicate edges.
  Hypergraph(unsigned k, std::size_t n, std::vector<Edge> edges);

  static Hypergraph complete(unsigned k, std::size_t n);
  static Hypergraph empty(unsigned k, std::size_t n);

  unsigned uniformity() const noexcept { return k_; }
  std::size_t order() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  // Sorted lexicographically; each edge sorted ascending.
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::span<const std::uint32_t> incident(Vertex v) const { return incidence_[v]; }

  bool has_edge(std::span<const Vertex> sorted_vertices) const;

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.k_ == b.k_ && a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  unsigned k_ = 2;
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::uint32_t>> incidence_;
};

// Number of edges containing s. |s| = k yields edge membership (0 or 1).
std::uint64_t degree(const Hypergraph& h, const VertexSet& s);

// Minimum of degree over all l-subsets; l = 0 gives the edge count.
std::uint64_t min_degree(const Hypergraph& h, unsigned l);

// The (k-|s|)-sets T disjoint from s with T ∪ s an edge, sorted.
std::vector<VertexSet> link(const Hypergraph& h, const VertexSet& s);

// Subhypergraph on s, relabelled 0..|s|-1 in increasing order.
Hypergraph induced(const Hypergraph& h, const VertexSet& s);

// Any two edges share at most one vertex.
bool is_linear(const Hypergraph& h);

}  // namespace hyperpack
