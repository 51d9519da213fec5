#include "hyperpack/hypergraph.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "hyperpack/combinatorics.hpp"
#include "hyperpack/error.hpp"

namespace hyperpack {

VertexSet::VertexSet(std::initializer_list<Vertex> members)
    : VertexSet(std::vector<Vertex>(members)) {}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw InvalidArgument("vertex set contains a repeated vertex");
  }
}

VertexSet VertexSet::range(std::size_t n) {
  std::vector<Vertex> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<Vertex>(i);
  return VertexSet(std::move(all));
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

bool VertexSet::includes(std::span<const Vertex> sorted_other) const {
  return std::includes(members_.begin(), members_.end(), sorted_other.begin(),
                       sorted_other.end());
}

Hypergraph::Hypergraph(unsigned k, std::size_t n, std::vector<Edge> edges)
    : k_(k), n_(n), edges_(std::move(edges)) {
  if (k < 1) throw InvalidArgument("uniformity must be positive");
  if (n > std::numeric_limits<Vertex>::max()) throw InvalidArgument("too many vertices");
  for (auto& e : edges_) {
    if (e.size() != k) {
      throw InvalidArgument("edge has " + std::to_string(e.size()) + " vertices, expected " +
                            std::to_string(k));
    }
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
      throw InvalidArgument("edge repeats a vertex");
    }
    if (e.back() >= n) {
      throw InvalidArgument("vertex " + std::to_string(e.back()) + " out of range");
    }
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw InvalidArgument("duplicate edge");
  }
  incidence_.assign(n_, {});
  for (std::uint32_t i = 0; i < edges_.size(); ++i) {
    for (Vertex v : edges_[i]) incidence_[v].push_back(i);
  }
}

Hypergraph Hypergraph::complete(unsigned k, std::size_t n) {
  std::vector<Edge> edges;
  for_each_subset(VertexSet::range(n).members(), k, [&](const std::vector<Vertex>& e) {
    edges.push_back(e);
    return true;
  });
  return Hypergraph(k, n, std::move(edges));
}

Hypergraph Hypergraph::empty(unsigned k, std::size_t n) { return Hypergraph(k, n, {}); }

bool Hypergraph::has_edge(std::span<const Vertex> sorted_vertices) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), sorted_vertices,
                             [](const Edge& e, std::span<const Vertex> key) {
                               return std::lexicographical_compare(e.begin(), e.end(),
                                                                   key.begin(), key.end());
                             });
  return it != edges_.end() && std::equal(it->begin(), it->end(), sorted_vertices.begin(),
                                          sorted_vertices.end());
}

namespace {

void check_in_range(const Hypergraph& h, const VertexSet& s) {
  if (!s.empty() && s.members().back() >= h.order()) {
    throw InvalidArgument("vertex " + std::to_string(s.members().back()) + " out of range");
  }
}

// Rank of a sorted subset in the colexicographic order of l-subsets.
std::uint64_t colex_rank(std::span<const Vertex> subset) {
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < subset.size(); ++i) rank += binomial(subset[i], i + 1);
  return rank;
}

}  // namespace

std::uint64_t degree(const Hypergraph& h, const VertexSet& s) {
  if (s.size() > h.uniformity()) {
    throw InvalidArgument("degree query on a set larger than the uniformity");
  }
  check_in_range(h, s);
  if (s.empty()) return h.edge_count();
  Vertex pivot = s[0];
  for (Vertex v : s) {
    if (h.incident(v).size() < h.incident(pivot).size()) pivot = v;
  }
  std::uint64_t count = 0;
  for (auto idx : h.incident(pivot)) {
    const auto& e = h.edges()[idx];
    if (std::includes(e.begin(), e.end(), s.begin(), s.end())) ++count;
  }
  return count;
}

std::uint64_t min_degree(const Hypergraph& h, unsigned l) {
  if (l >= h.uniformity()) throw InvalidArgument("l must lie in [0, k-1]");
  if (l == 0) return h.edge_count();
  if (h.order() < l) return 0;
  std::vector<std::uint64_t> counts(binomial(h.order(), l), 0);
  for (const auto& e : h.edges()) {
    for_each_subset(e, l, [&](const std::vector<Vertex>& part) {
      ++counts[colex_rank(part)];
      return true;
    });
  }
  return *std::min_element(counts.begin(), counts.end());
}

std::vector<VertexSet> link(const Hypergraph& h, const VertexSet& s) {
  if (s.size() >= h.uniformity()) throw InvalidArgument("link needs |s| < k");
  check_in_range(h, s);
  std::vector<VertexSet> out;
  auto collect = [&](const Hypergraph::Edge& e) {
    if (!std::includes(e.begin(), e.end(), s.begin(), s.end())) return;
    std::vector<Vertex> rest;
    std::set_difference(e.begin(), e.end(), s.begin(), s.end(), std::back_inserter(rest));
    out.emplace_back(std::move(rest));
  };
  if (s.empty()) {
    for (const auto& e : h.edges()) collect(e);
  } else {
    for (auto idx : h.incident(s[0])) collect(h.edges()[idx]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Hypergraph induced(const Hypergraph& h, const VertexSet& s) {
  check_in_range(h, s);
  std::vector<std::int64_t> relabel(h.order(), -1);
  for (std::size_t i = 0; i < s.size(); ++i) relabel[s[i]] = static_cast<std::int64_t>(i);
  std::vector<Hypergraph::Edge> edges;
  for (const auto& e : h.edges()) {
    Hypergraph::Edge mapped;
    mapped.reserve(e.size());
    for (Vertex v : e) {
      if (relabel[v] < 0) break;
      mapped.push_back(static_cast<Vertex>(relabel[v]));
    }
    if (mapped.size() == e.size()) edges.push_back(std::move(mapped));
  }
  return Hypergraph(h.uniformity(), s.size(), std::move(edges));
}

bool is_linear(const Hypergraph& h) {
  for (Vertex v = 0; v < h.order(); ++v) {
    auto inc = h.incident(v);
    for (std::size_t i = 0; i < inc.size(); ++i) {
      for (std::size_t j = i + 1; j < inc.size(); ++j) {
        const auto& a = h.edges()[inc[i]];
        const auto& b = h.edges()[inc[j]];
        std::size_t shared = 0;
        for (std::size_t x = 0, y = 0; x < a.size() && y < b.size();) {
          if (a[x] == b[y]) {
            ++shared, ++x, ++y;
          } else if (a[x] < b[y]) {
            ++x;
          } else {
            ++y;
          }
        }
        if (shared > 1) return false;
      }
    }
  }
  return true;
}

}  // namespace hyperpack
