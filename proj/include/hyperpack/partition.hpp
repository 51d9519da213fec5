#pragma once

#include <optional>
#include <vector>

#include "hyperpack/reach.hpp"

namespace hyperpack {

// Ordered classes V_1..V_d; the order fixes index-vector coordinates.
struct Partition {
  std::vector<VertexSet> classes;

  std::size_t size() const noexcept { return classes.size(); }
  VertexSet universe() const;
  // class index per vertex of 0..n-1, -1 where uncovered; throws on overlap
  std::vector<int> class_of(std::size_t n) const;
};

struct ClosedPartition {
  Partition partition;
  // v_1..v_r; empty when the whole set was already closed
  std::vector<Vertex> witnesses;
  std::size_t reassigned = 0;
  // vertices of U_0 with fewer than the required reachable neighbours in
  // every U_i, placed by the largest count instead
  std::size_t fallback_reassigned = 0;
};

// Builds a partition of s into at most c_cap classes, each closed under
// reachability at depth 2^(c_cap-1). Reachability at level j means
// reachable at some depth 2^i with i <= j.
//
// Checked first: every v in s has at least delta_prime*n depth-1 reachable
// neighbours in s, and s has no c_cap+1 pairwise non-reachable vertices.
// Violations throw PreconditionViolation. alpha sets the reassignment
// bound max(1, ceil(alpha/c_cap * n)).
ClosedPartition find_closed_partition(ReachabilityOracle& oracle, const VertexSet& s,
                                      unsigned c_cap, const Rational& delta_prime,
                                      const Rational& alpha = Rational(1, 100));

struct GoodnessCertificate {
  unsigned t = 1;
  Rational c;
  std::vector<std::size_t> sizes;
  std::vector<bool> closed;
  std::vector<bool> large;
  // first intra-class pair that failed, per class
  std::vector<std::optional<std::pair<Vertex, Vertex>>> failures;

  bool valid() const;
};

// Every intra-class pair reachable at some power-of-two depth <= t, and
// every class of size >= c*n.
GoodnessCertificate certify_goodness(ReachabilityOracle& oracle, const Partition& part, unsigned t,
                                     const Rational& c);

}  // namespace hyperpack
