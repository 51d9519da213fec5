#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "hyperpack/packing.hpp"
#include "hyperpack/pattern.hpp"
#include "hyperpack/rational.hpp"

namespace hyperpack {

enum class ThresholdMode { ExactRobust, Density };

std::string to_string(ThresholdMode mode);
ThresholdMode parse_threshold_mode(std::string_view text);

struct ReachParams {
  unsigned depth = 1;
  ThresholdMode mode = ThresholdMode::ExactRobust;
  Rational beta{1, 100};
  std::uint64_t explicit_count = 1;
  // Density mode: the threshold at depth 2^j is beta * cascade^j.
  Rational cascade{1};
  // Try the common-link test before counting (single-edge patterns, depth 1,
  // exact mode with count 1). gamma is the test's density parameter.
  bool fastpath = false;
  Rational fastpath_gamma{1, 10};

  void validate() const;
};

// Number of (i*m - 1)-sets S avoiding u and v such that both h[S + u] and
// h[S + v] have perfect F-packings. Throws CapExceeded if i*m - 1 > cap.
std::uint64_t count_reachable_sets(const Hypergraph& h, const Pattern& p, Vertex u, Vertex v,
                                   unsigned i, std::size_t cap = kDefaultOracleCap);

// Memoised reachability queries on one host. Counts are keyed by unordered
// pair and depth.
class ReachabilityOracle {
 public:
  ReachabilityOracle(const Hypergraph& h, const Pattern& p, ReachParams params,
                     std::size_t cap = kDefaultOracleCap);

  const Hypergraph& host() const noexcept { return h_; }
  const Pattern& pattern() const noexcept { return p_; }
  const ReachParams& params() const noexcept { return params_; }

  std::uint64_t count(Vertex u, Vertex v, unsigned depth);
  // count >= threshold(depth) for the configured mode
  bool reachable_at(Vertex u, Vertex v, unsigned depth);
  bool is_reachable(Vertex u, Vertex v) { return reachable_at(u, v, params_.depth); }
  VertexSet reachable_neighborhood(Vertex v) { return neighborhood_at(v, params_.depth); }
  VertexSet neighborhood_at(Vertex v, unsigned depth);

  // Reachable at some depth 2^j with j <= level. Depths whose sets would not
  // fit beside u and v contribute nothing.
  bool reachable_within(Vertex u, Vertex v, unsigned level);
  VertexSet neighborhood_within(Vertex v, unsigned level);

  // Threshold a count must meet at the given depth.
  std::string threshold_description(unsigned depth) const;
  std::size_t fastpath_hits() const noexcept { return fastpath_hits_; }

 private:
  bool meets_threshold(std::uint64_t count, unsigned depth) const;
  std::uint64_t count_limited(Vertex u, Vertex v, unsigned depth, std::uint64_t limit);
  std::optional<std::uint64_t> needed(unsigned depth) const;

  const Hypergraph& h_;
  const Pattern& p_;
  ReachParams params_;
  std::size_t cap_;
  std::unique_ptr<PackingSolver> solver_;
  // (depth, u<v) -> (count, complete?)
  std::map<std::tuple<unsigned, Vertex, Vertex>, std::pair<std::uint64_t, bool>> memo_;
  std::size_t fastpath_hits_ = 0;
};

// Sufficient test for depth-1 reachability in k-graphs (k >= 3): at least
// gamma^2 * C(n, k-1) of the (k-1)-sets S in N(u) and N(v) have |N(S)| >= gamma*n.
bool codegree_fastpath_hyper(const Hypergraph& h, Vertex u, Vertex v, const Rational& gamma);

// Graph version: (chi-1)-cliques S inside N(u) and N(v) with |N(S)| >= gamma*n,
// at least gamma^2 * C(n, chi-1) of them. chi comes from the pattern's stats.
bool codegree_fastpath_graph(const Hypergraph& g, const GraphChromaticStats& stats, Vertex u,
                             Vertex v, const Rational& gamma);

}  // namespace hyperpack
