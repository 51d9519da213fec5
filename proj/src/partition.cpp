#include "hyperpack/partition.hpp"

#include <algorithm>
#include <functional>

#include "hyperpack/combinatorics.hpp"
#include "hyperpack/error.hpp"

namespace hyperpack {

VertexSet Partition::universe() const {
  std::vector<Vertex> all;
  for (const auto& c : classes) all.insert(all.end(), c.begin(), c.end());
  return VertexSet(std::move(all));
}

std::vector<int> Partition::class_of(std::size_t n) const {
  std::vector<int> out(n, -1);
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (auto v : classes[i]) {
      if (v >= n) throw InvalidArgument("partition vertex outside host");
      if (out[v] >= 0) throw InvalidArgument("partition classes overlap at vertex " + std::to_string(v));
      out[v] = static_cast<int>(i);
    }
  return out;
}

namespace {

std::int64_t ceil_times(const Rational& x, std::size_t n) {
  auto num = x.numerator() * static_cast<std::int64_t>(n);
  auto den = x.denominator();
  return num >= 0 ? (num + den - 1) / den : -((-num) / den);
}

// Largest pairwise non-adjacent subset of s, stopping once `enough` members
// are found. adj is indexed by position in s.
std::vector<std::size_t> independent_set(const std::vector<std::vector<char>>& adj, std::size_t enough) {
  const std::size_t n = adj.size();
  std::vector<std::size_t> best, cur;
  std::function<void(std::size_t)> go = [&](std::size_t from) {
    if (cur.size() > best.size()) best = cur;
    if (best.size() >= enough) return;
    for (std::size_t i = from; i < n; ++i) {
      if (cur.size() + (n - i) <= best.size()) return;
      bool ok = true;
      for (auto j : cur)
        if (adj[i][j]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      cur.push_back(i);
      go(i + 1);
      cur.pop_back();
      if (best.size() >= enough) return;
    }
  };
  go(0);
  return best;
}

}  // namespace

ClosedPartition find_closed_partition(ReachabilityOracle& oracle, const VertexSet& s,
                                      unsigned c_cap, const Rational& delta_prime,
                                      const Rational& alpha) {
  if (c_cap < 1) throw InvalidArgument("c_cap must be at least 1");
  if (delta_prime <= 0) throw InvalidArgument("delta' must be positive");
  const std::size_t n = oracle.host().order();
  for (auto v : s)
    if (v >= n) throw InvalidArgument("vertex outside host");
  const std::vector<Vertex>& members = s.members();
  const std::size_t size = members.size();

  // depth-1 reachability inside s
  std::vector<std::vector<char>> adj0(size, std::vector<char>(size, 0));
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = i + 1; j < size; ++j)
      adj0[i][j] = adj0[j][i] = oracle.reachable_at(members[i], members[j], 1) ? 1 : 0;

  const auto need = ceil_times(delta_prime, n);
  for (std::size_t i = 0; i < size; ++i) {
    std::int64_t deg = std::count(adj0[i].begin(), adj0[i].end(), 1);
    if (deg < need) {
      throw PreconditionViolation(
          "reach-degree", "vertex " + std::to_string(members[i]) + " has " + std::to_string(deg) +
                              " reachable neighbours in the set, needs " + std::to_string(need));
    }
  }
  auto indep = independent_set(adj0, c_cap + 1);
  if (indep.size() > c_cap) {
    std::string list;
    for (auto i : indep) list += (list.empty() ? "" : ",") + std::to_string(members[i]);
    throw PreconditionViolation("independence", "vertices " + list + " are pairwise not reachable");
  }

  ClosedPartition out;
  auto reach = [&](Vertex a, Vertex b, unsigned level) { return oracle.reachable_within(a, b, level); };

  bool closed = true;
  for (std::size_t i = 0; i < size && closed; ++i)
    for (std::size_t j = i + 1; j < size && closed; ++j)
      if (!reach(members[i], members[j], c_cap - 1)) closed = false;
  if (closed) {
    out.partition.classes.push_back(s);
    return out;
  }

  std::vector<Vertex> witnesses;
  unsigned r = 0;
  for (unsigned cand = c_cap; cand >= 2 && witnesses.empty(); --cand) {
    if (cand > size) continue;
    const unsigned level = c_cap + 1 - cand;
    for_each_subset(members, cand, [&](const std::vector<Vertex>& vs) {
      for (std::size_t a = 0; a < vs.size(); ++a)
        for (std::size_t b = a + 1; b < vs.size(); ++b)
          if (reach(vs[a], vs[b], level)) return true;
      witnesses = vs;
      return false;
    });
    if (!witnesses.empty()) r = cand;
  }
  if (witnesses.empty()) {
    out.partition.classes.push_back(s);
    return out;
  }
  out.witnesses = witnesses;

  const unsigned level = c_cap - r;
  std::vector<VertexSet> nbhd;
  for (auto w : witnesses) nbhd.push_back(oracle.neighborhood_within(w, level));
  std::vector<std::vector<Vertex>> u(r);
  std::vector<Vertex> u0;
  for (auto v : members) {
    int home = -1;
    for (unsigned i = 0; i < r; ++i) {
      if (v != witnesses[i] && !nbhd[i].contains(v)) continue;
      bool elsewhere = false;
      for (unsigned j = 0; j < r; ++j)
        if (j != i && nbhd[j].contains(v)) elsewhere = true;
      if (!elsewhere) home = static_cast<int>(i);
    }
    if (home >= 0) {
      u[home].push_back(v);
    } else {
      u0.push_back(v);
    }
  }

  const std::int64_t eps_n = std::max<std::int64_t>(1, ceil_times(alpha / Rational(c_cap), n));
  std::vector<std::vector<Vertex>> grown = u;
  for (auto v : u0) {
    std::vector<std::int64_t> hits(r, 0);
    for (unsigned i = 0; i < r; ++i)
      for (auto w : u[i])
        if (oracle.reachable_at(v, w, 1)) ++hits[i];
    int pick = -1;
    for (unsigned i = 0; i < r && pick < 0; ++i)
      if (hits[i] >= eps_n) pick = static_cast<int>(i);
    if (pick < 0) {
      pick = static_cast<int>(std::max_element(hits.begin(), hits.end()) - hits.begin());
      ++out.fallback_reassigned;
    }
    grown[pick].push_back(v);
    ++out.reassigned;
  }
  for (auto& g : grown) {
    if (!g.empty()) out.partition.classes.emplace_back(std::move(g));
  }
  return out;
}

bool GoodnessCertificate::valid() const {
  for (std::size_t i = 0; i < sizes.size(); ++i)
    if (!closed[i] || !large[i]) return false;
  return true;
}

GoodnessCertificate certify_goodness(ReachabilityOracle& oracle, const Partition& part, unsigned t,
                                     const Rational& c) {
  if (t < 1) throw InvalidArgument("closure depth must be at least 1");
  const std::size_t n = oracle.host().order();
  part.class_of(n);
  unsigned level = 0;
  while ((2u << level) <= t) ++level;
  GoodnessCertificate cert;
  cert.t = t;
  cert.c = c;
  const auto min_size = ceil_times(c, n);
  for (const auto& cls : part.classes) {
    cert.sizes.push_back(cls.size());
    cert.large.push_back(static_cast<std::int64_t>(cls.size()) >= min_size);
    std::optional<std::pair<Vertex, Vertex>> fail;
    for (std::size_t i = 0; i < cls.size() && !fail; ++i)
      for (std::size_t j = i + 1; j < cls.size() && !fail; ++j)
        if (!oracle.reachable_within(cls[i], cls[j], level)) fail = std::make_pair(cls[i], cls[j]);
    cert.closed.push_back(!fail);
    cert.failures.push_back(fail);
  }
  return cert;
}

}  // namespace hyperpack
