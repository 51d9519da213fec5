#include "hyperpack/reach.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <limits>

#include "hyperpack/combinatorics.hpp"
#include "hyperpack/error.hpp"

namespace hyperpack {

using boost::multiprecision::cpp_int;

std::string to_string(ThresholdMode mode) {
  return mode == ThresholdMode::ExactRobust ? "exact" : "density";
}

ThresholdMode parse_threshold_mode(std::string_view text) {
  if (text == "exact") return ThresholdMode::ExactRobust;
  if (text == "density") return ThresholdMode::Density;
  throw InvalidArgument("mode must be 'exact' or 'density', got '" + std::string(text) + "'");
}

void ReachParams::validate() const {
  if (depth < 1) throw InvalidArgument("reachability depth must be at least 1");
  if (beta <= 0 || beta >= 1) throw InvalidArgument("beta must lie in (0,1)");
  if (explicit_count < 1) throw InvalidArgument("reach count must be at least 1");
  if (cascade <= 0 || cascade > 1) throw InvalidArgument("cascade factor must lie in (0,1]");
}

namespace {

std::uint64_t count_with(PackingSolver& solver, std::size_t n, std::size_t m, Vertex u, Vertex v,
                         unsigned i, std::uint64_t limit) {
  const std::size_t r = static_cast<std::size_t>(i) * m - 1;
  if (n < 2 || r > n - 2) return 0;
  std::vector<Vertex> rest;
  for (Vertex w = 0; w < n; ++w)
    if (w != u && w != v) rest.push_back(w);
  const Mask bu = Mask{1} << u;
  const Mask bv = Mask{1} << v;
  std::uint64_t count = 0;
  for_each_subset(rest, r, [&](const std::vector<Vertex>& s) {
    Mask sm = 0;
    for (auto w : s) sm |= Mask{1} << w;
    if (solver.packable(sm | bu) && solver.packable(sm | bv)) ++count;
    return count < limit;
  });
  return count;
}

void check_pair(const Hypergraph& h, Vertex u, Vertex v) {
  if (u == v) throw InvalidArgument("reachability needs two distinct vertices");
  if (u >= h.order() || v >= h.order()) throw InvalidArgument("vertex outside host");
}

void check_depth_cap(std::size_t m, unsigned i, std::size_t cap) {
  if (static_cast<std::size_t>(i) * m - 1 > cap) {
    throw CapExceeded("reachability at depth " + std::to_string(i) + " needs sets of size " +
                      std::to_string(i * m - 1) + ", cap is " + std::to_string(cap));
  }
}

}  // namespace

std::uint64_t count_reachable_sets(const Hypergraph& h, const Pattern& p, Vertex u, Vertex v,
                                   unsigned i, std::size_t cap) {
  check_pair(h, u, v);
  if (i < 1) throw InvalidArgument("reachability depth must be at least 1");
  const std::size_t r = static_cast<std::size_t>(i) * p.order() - 1;
  if (h.order() < 2 || r > h.order() - 2) return 0;
  check_depth_cap(p.order(), i, cap);
  PackingSolver solver(h, p, kMaskVertices);
  return count_with(solver, h.order(), p.order(), u, v, i,
                    std::numeric_limits<std::uint64_t>::max());
}

ReachabilityOracle::ReachabilityOracle(const Hypergraph& h, const Pattern& p, ReachParams params,
                                       std::size_t cap)
    : h_(h), p_(p), params_(params), cap_(cap) {
  params_.validate();
  if (h.uniformity() != p.uniformity()) throw InvalidArgument("host and pattern uniformity differ");
  solver_ = std::make_unique<PackingSolver>(h, p, kMaskVertices);
}

std::optional<std::uint64_t> ReachabilityOracle::needed(unsigned depth) const {
  if (params_.mode == ThresholdMode::ExactRobust) return params_.explicit_count;
  unsigned level = 0;
  while ((2u << level) <= depth) ++level;
  cpp_int num = params_.beta.numerator();
  cpp_int den = params_.beta.denominator();
  for (unsigned j = 0; j < level; ++j) {
    num *= params_.cascade.numerator();
    den *= params_.cascade.denominator();
  }
  const std::size_t e = static_cast<std::size_t>(depth) * p_.order() - 1;
  for (std::size_t j = 0; j < e; ++j) num *= h_.order();
  cpp_int ceil = (num + den - 1) / den;
  if (ceil > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  return std::max<std::uint64_t>(1, ceil.convert_to<std::uint64_t>());
}

bool ReachabilityOracle::meets_threshold(std::uint64_t count, unsigned depth) const {
  auto need = needed(depth);
  return need && count >= *need;
}

std::string ReachabilityOracle::threshold_description(unsigned depth) const {
  auto need = needed(depth);
  return need ? std::to_string(*need) : std::string("unreachable");
}

std::uint64_t ReachabilityOracle::count_limited(Vertex u, Vertex v, unsigned depth,
                                                std::uint64_t limit) {
  check_pair(h_, u, v);
  if (depth < 1) throw InvalidArgument("reachability depth must be at least 1");
  if (u > v) std::swap(u, v);
  auto key = std::make_tuple(depth, u, v);
  if (auto it = memo_.find(key); it != memo_.end()) {
    if (it->second.second || it->second.first >= limit) return it->second.first;
  }
  const std::size_t r = static_cast<std::size_t>(depth) * p_.order() - 1;
  if (h_.order() >= 2 && r <= h_.order() - 2) check_depth_cap(p_.order(), depth, cap_);
  auto c = count_with(*solver_, h_.order(), p_.order(), u, v, depth, limit);
  memo_[key] = {c, c < limit};
  return c;
}

std::uint64_t ReachabilityOracle::count(Vertex u, Vertex v, unsigned depth) {
  return count_limited(u, v, depth, std::numeric_limits<std::uint64_t>::max());
}

bool ReachabilityOracle::reachable_at(Vertex u, Vertex v, unsigned depth) {
  check_pair(h_, u, v);
  auto need = needed(depth);
  if (!need) return false;
  if (params_.fastpath && depth == 1 && params_.mode == ThresholdMode::ExactRobust &&
      *need == 1 && p_.graph().edge_count() == 1 && p_.order() == p_.uniformity() &&
      h_.uniformity() >= 3 && codegree_fastpath_hyper(h_, u, v, params_.fastpath_gamma)) {
    // confirm one witness directly: S + u and S + v are both edges
    for (const auto& s : link(h_, VertexSet{u})) {
      if (s.contains(v)) continue;
      std::vector<Vertex> e = s.members();
      e.push_back(v);
      std::sort(e.begin(), e.end());
      if (h_.has_edge(e)) {
        ++fastpath_hits_;
        return true;
      }
    }
  }
  return count_limited(u, v, depth, *need) >= *need;
}

VertexSet ReachabilityOracle::neighborhood_at(Vertex v, unsigned depth) {
  std::vector<Vertex> out;
  for (Vertex w = 0; w < h_.order(); ++w)
    if (w != v && reachable_at(v, w, depth)) out.push_back(w);
  return VertexSet(std::move(out));
}

bool ReachabilityOracle::reachable_within(Vertex u, Vertex v, unsigned level) {
  for (unsigned j = 0; j <= level; ++j) {
    const unsigned depth = 1u << j;
    const std::size_t r = static_cast<std::size_t>(depth) * p_.order() - 1;
    if (h_.order() < 2 || r > h_.order() - 2) break;
    if (reachable_at(u, v, depth)) return true;
  }
  return false;
}

VertexSet ReachabilityOracle::neighborhood_within(Vertex v, unsigned level) {
  std::vector<Vertex> out;
  for (Vertex w = 0; w < h_.order(); ++w)
    if (w != v && reachable_within(v, w, level)) out.push_back(w);
  return VertexSet(std::move(out));
}

namespace {

// count >= gamma^2 * total, exactly
bool dense_enough(std::uint64_t count, const Rational& gamma, std::uint64_t total) {
  cpp_int lhs = cpp_int(count) * gamma.denominator() * gamma.denominator();
  cpp_int rhs = cpp_int(total) * gamma.numerator() * gamma.numerator();
  return lhs >= rhs;
}

bool at_least_fraction(std::uint64_t value, const Rational& gamma, std::size_t n) {
  return cpp_int(value) * gamma.denominator() >= cpp_int(n) * gamma.numerator();
}

}  // namespace

bool codegree_fastpath_hyper(const Hypergraph& h, Vertex u, Vertex v, const Rational& gamma) {
  check_pair(h, u, v);
  if (h.uniformity() < 3) throw InvalidArgument("hypergraph fast path needs k >= 3");
  std::uint64_t count = 0;
  for (const auto& s : link(h, VertexSet{u})) {
    if (s.contains(v)) continue;
    std::vector<Vertex> e = s.members();
    e.push_back(v);
    std::sort(e.begin(), e.end());
    if (!h.has_edge(e)) continue;
    if (at_least_fraction(degree(h, s), gamma, h.order())) ++count;
  }
  return dense_enough(count, gamma, binomial(h.order(), h.uniformity() - 1));
}

bool codegree_fastpath_graph(const Hypergraph& g, const GraphChromaticStats& stats, Vertex u,
                             Vertex v, const Rational& gamma) {
  check_pair(g, u, v);
  if (g.uniformity() != 2) throw InvalidArgument("graph fast path needs a graph host");
  const std::size_t n = g.order();
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (const auto& e : g.edges()) adj[e[0]][e[1]] = adj[e[1]][e[0]] = 1;
  std::vector<Vertex> common;
  for (Vertex w = 0; w < n; ++w)
    if (w != u && w != v && adj[u][w] && adj[v][w]) common.push_back(w);
  const std::size_t c = stats.chi - 1;
  std::uint64_t count = 0;
  for_each_subset(common, c, [&](const std::vector<Vertex>& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j)
        if (!adj[s[i]][s[j]]) return true;
    std::uint64_t nb = 0;
    for (Vertex w = 0; w < n; ++w) {
      bool all = true;
      for (auto x : s) all = all && adj[x][w];
      if (all) ++nb;
    }
    if (at_least_fraction(nb, gamma, n)) ++count;
    return true;
  });
  return dense_enough(count, gamma, binomial(n, c));
}

}  // namespace hyperpack
