#pragma once

#include <cstdint>
#include <optional>

#include "hyperpack/hypergraph.hpp"
#include "hyperpack/pattern.hpp"
#include "hyperpack/rational.hpp"

namespace hyperpack {

// Edges: k-sets meeting A = {0..a-1} in an even number of vertices.
Hypergraph gen_divisibility_barrier(std::size_t n, unsigned k, std::size_t a);

// Edges: k-sets meeting the core {0..core_size-1}.
Hypergraph gen_space_barrier(std::size_t n, unsigned k, std::size_t core_size);

// Linear k-graph h -> linear (k+1)-graph on (k+1)(n+s) vertices with (k+2)s
// edges that has a perfect matching iff h does. Copy i of h occupies
// i*(n+s) .. i*(n+s)+n-1; the added vertex of edge j in copy i is
// i*(n+s)+n+j.
Hypergraph reduce_lin_uplift(const Hypergraph& h);

// Linear m-graph h -> k-graph replacing every edge with a copy of the
// complete k-partite pattern K (|V(K)| = m), placed on the edge's vertices in
// increasing order.
Hypergraph reduce_edge_blowup(const Hypergraph& h, const Pattern& k_pattern);

struct PaddedInstance {
  Hypergraph graph;
  std::size_t a_size = 0;  // |A| = a1 * ceil(n / gamma)
  std::size_t b_size = 0;
  std::uint64_t codegree = 0;  // delta_{k-1}, computed
};

// h (order divisible by m) joined with a padding block: A of size
// a1*N and B of size (m-a1)*N, N = ceil(n/gamma), a1 the smallest class of
// K. Edges: those of h plus every k-set meeting A. Needs 0 < gamma < sigma(K).
PaddedInstance reduce_degree_padding(const Hypergraph& h, const Pattern& k_pattern, const Rational& gamma);

struct RandomSpec {
  std::size_t n = 0;
  unsigned k = 3;
  double edge_prob = 0.5;
  std::uint64_t seed = 1;
  std::uint64_t min_degree_floor = 0;
  unsigned l = 0;  // degree index for the floor; 0 means k-1
  unsigned attempts = 1000;
};

// Seeded random k-graph, resampled until delta_l >= floor. Throws Error when
// the attempt budget runs out.
Hypergraph gen_random_dense(const RandomSpec& spec);

}  // namespace hyperpack
