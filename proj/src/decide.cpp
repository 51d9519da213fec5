#include "hyperpack/decide.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

#include "hyperpack/combinatorics.hpp"
#include "hyperpack/error.hpp"
#include "hyperpack/packing.hpp"
#include "hyperpack/thresholds.hpp"

namespace hyperpack {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes:
      return "YES";
    case Verdict::No:
      return "NO";
    case Verdict::PreconditionUnmet:
      return "PRECONDITION_UNMET";
  }
  return "?";
}

namespace {

using boost::multiprecision::cpp_int;

constexpr std::uint64_t kSolubilityNodeBudget = 50'000'000;

class Stopwatch {
 public:
  explicit Stopwatch(Decision& d) : d_(d), last_(std::chrono::steady_clock::now()) {}
  void lap(const std::string& stage) {
    auto now = std::chrono::steady_clock::now();
    d_.timings.emplace_back(stage, std::chrono::duration<double>(now - last_).count());
    last_ = now;
  }

 private:
  Decision& d_;
  std::chrono::steady_clock::time_point last_;
};

IndexVector subtract(IndexVector a, const IndexVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

Mask all_vertices(std::size_t n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

// Copies grouped by what the arithmetic filter can tell apart: their coset
// when Q is finite, otherwise their index vector.
struct CopyClass {
  IndexVector vec;
  std::vector<Mask> copies;
};

class SolubilitySearch {
 public:
  SolubilitySearch(const std::vector<VertexSet>& copies, std::size_t n, const Partition& part,
                   const IndexLattice& lat)
      : n_(n), part_(part), lat_(lat) {
    if (n > kMaskVertices) throw CapExceeded("solubility search supports at most 64 vertices");
    target_ = index_vector(part, VertexSet::range(n));
    std::size_t m = copies.empty() ? 0 : copies.front().size();
    std::optional<CosetGroup> q;
    if (m > 0 && lat.rank() == lat.d && lmax_member(m, target_)) {
      try {
        q = coset_group(lat, m);
      } catch (const LatticeError&) {
        q.reset();
      }
    }
    if (q && q->finite && q->order <= 1'000'000) order_ = q->order.convert_to<std::uint64_t>();
    std::map<IndexVector, std::size_t> type_index;
    std::map<std::uint64_t, std::size_t> residue_index;
    for (const auto& c : copies) {
      auto v = index_vector(part, c);
      std::size_t slot;
      if (order_) {
        auto r = residue(*q, v);
        if (r == 0) continue;  // never needed in a shortest solution
        auto [it, fresh] = residue_index.emplace(r, classes_.size());
        if (fresh) classes_.push_back({v, {}});
        slot = it->second;
      } else {
        auto [it, fresh] = type_index.emplace(v, classes_.size());
        if (fresh) classes_.push_back({v, {}});
        slot = it->second;
      }
      classes_[slot].copies.push_back(to_mask(c));
    }
  }

  std::optional<QSolution> run(std::uint64_t q) {
    if (member(lat_, target_)) return QSolution{{}, target_};
    // any sequence of |Q| cosets has a zero-sum subsequence, so a shortest
    // solution uses at most |Q| - 1 copies
    std::uint64_t smax = order_ ? std::min<std::uint64_t>(q, *order_ - 1) : q;
    for (std::uint64_t s = 1; s <= smax; ++s) {
      chosen_.clear();
      sum_.assign(target_.size(), 0);
      if (pick(s, 0)) {
        QSolution sol;
        Mask used = 0;
        for (auto c : packing_) {
          sol.packing.push_back(from_mask(c));
          used |= c;
        }
        sol.leftover = index_vector(part_, from_mask(all_vertices(n_) & ~used));
        return sol;
      }
    }
    return std::nullopt;
  }

 private:
  bool pick(std::uint64_t remaining, std::size_t from) {
    if (++nodes_ > kSolubilityNodeBudget) throw CapExceeded("solubility search budget exhausted");
    if (remaining == 0) {
      if (!member(lat_, subtract(target_, sum_))) return false;
      packing_.clear();
      return realise(0, 0, 0);
    }
    for (std::size_t c = from; c < classes_.size(); ++c) {
      chosen_.push_back(c);
      for (std::size_t i = 0; i < sum_.size(); ++i) sum_[i] += classes_[c].vec[i];
      if (pick(remaining - 1, c)) return true;
      for (std::size_t i = 0; i < sum_.size(); ++i) sum_[i] -= classes_[c].vec[i];
      chosen_.pop_back();
    }
    return false;
  }

  bool realise(std::size_t pos, Mask used, std::size_t start) {
    if (pos == chosen_.size()) return true;
    if (++nodes_ > kSolubilityNodeBudget) throw CapExceeded("solubility search budget exhausted");
    const auto& list = classes_[chosen_[pos]].copies;
    for (std::size_t i = start; i < list.size(); ++i) {
      if (list[i] & used) continue;
      packing_.push_back(list[i]);
      bool same_next = pos + 1 < chosen_.size() && chosen_[pos + 1] == chosen_[pos];
      if (realise(pos + 1, used | list[i], same_next ? i + 1 : 0)) return true;
      packing_.pop_back();
    }
    return false;
  }

  std::size_t n_;
  const Partition& part_;
  const IndexLattice& lat_;
  IndexVector target_;
  std::optional<std::uint64_t> order_;
  std::vector<CopyClass> classes_;
  std::vector<std::size_t> chosen_;
  IndexVector sum_;
  std::vector<Mask> packing_;
  std::uint64_t nodes_ = 0;
};

std::optional<CoordinateObstruction> find_obstruction(const std::vector<VertexSet>& copies,
                                                      const Partition& part, const IndexVector& target) {
  std::vector<std::int64_t> g(target.size(), 0);
  for (const auto& c : copies) {
    auto v = index_vector(part, c);
    for (std::size_t i = 0; i < v.size(); ++i) g[i] = std::gcd(g[i], v[i]);
  }
  for (std::size_t i = 0; i < target.size(); ++i) {
    if (g[i] >= 2 && target[i] % g[i] != 0) return CoordinateObstruction{i, g[i], target[i]};
  }
  return std::nullopt;
}

Decision unmet(Decision d, std::string which, std::string detail) {
  d.verdict = Verdict::PreconditionUnmet;
  d.precondition = std::move(which);
  d.detail = std::move(detail);
  return d;
}

// count >= frac * total
bool at_least(std::uint64_t count, const Rational& frac, std::uint64_t total) {
  return cpp_int(count) * frac.denominator() >= cpp_int(total) * frac.numerator();
}

std::uint64_t power(std::uint64_t base, std::uint64_t exp) {
  cpp_int r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) r *= base;
  if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  return r.convert_to<std::uint64_t>();
}

// Partition -> lattice -> coset group -> solubility. q_of maps r to the
// solubility budget, bound_of maps r to the allowed |Q|.
template <typename BoundFn, typename QFn>
Decision lattice_stage(Decision d, const Hypergraph& h, const Pattern& p, const PipelineConfig& cfg,
                       BoundFn bound_of, QFn q_of, Stopwatch& clock) {
  const std::size_t n = h.order();
  const Partition& part = d.partition->partition;
  auto copies = enumerate_copies(h, p);
  d.index_set = robust_index_set(copies, part, n, p.order(), cfg.mu);
  d.lattice = lattice_from(*d.index_set);
  d.full_vector = index_vector(part, VertexSet::range(n));
  try {
    d.coset = coset_group(*d.lattice, p.order());
  } catch (const LatticeError& e) {
    return unmet(std::move(d), "lattice-in-lmax", e.what());
  }
  clock.lap("lattice");
  const std::uint64_t r = part.size();
  const std::uint64_t bound = bound_of(r);
  if (!d.coset->finite) return unmet(std::move(d), "coset-bound", "coset group is infinite");
  if (d.coset->order > bound) {
    return unmet(std::move(d), "coset-bound",
                 "|Q| = " + d.coset->order.str() + " exceeds " + std::to_string(bound));
  }
  d.full_residue = residue(*d.coset, d.full_vector);
  std::set<std::uint64_t> res;
  for (const auto& v : d.index_set->counts) res.insert(residue(*d.coset, v.first));
  d.copy_residues.assign(res.begin(), res.end());
  d.q = cfg.q ? *cfg.q : q_of(r);
  d.solution = SolubilitySearch(copies, n, part, *d.lattice).run(d.q);
  clock.lap("solubility");
  if (d.solution) {
    d.verdict = Verdict::Yes;
    d.route = d.solution->packing.empty() ? "lattice-empty-solution" : "lattice-solution";
  } else {
    d.verdict = Verdict::No;
    d.route = "residue";
    d.obstruction = find_obstruction(copies, part, d.full_vector);
  }
  return d;
}

}  // namespace

std::optional<QSolution> q_soluble(const std::vector<VertexSet>& copies, std::size_t n,
                                   const Partition& part, const IndexLattice& lat, std::uint64_t q) {
  if (part.size() != lat.d) throw InvalidArgument("lattice dimension differs from partition size");
  return SolubilitySearch(copies, n, part, lat).run(q);
}

std::optional<QSolution> q_soluble(const Hypergraph& h, const Pattern& p, const Partition& part,
                                   const IndexLattice& lat, std::uint64_t q) {
  return q_soluble(enumerate_copies(h, p), h.order(), part, lat, q);
}

Decision decide_pm(const Hypergraph& h, const PipelineConfig& cfg) {
  const unsigned k = h.uniformity();
  if (k < 3) throw InvalidArgument("decide-pm needs k >= 3");
  const unsigned l = cfg.l == 0 ? k - 1 : cfg.l;
  if (l < 1 || l >= k) throw InvalidArgument("need 1 <= l <= k-1");
  Decision d;
  Stopwatch clock(d);
  const std::size_t n = h.order();
  if (n % k != 0) {
    d.verdict = Verdict::No;
    d.route = "divisibility";
    d.detail = std::to_string(k) + " does not divide " + std::to_string(n);
    return d;
  }
  auto threshold = matching_degree_threshold(k, l);
  if (!threshold) {
    return unmet(std::move(d), "threshold-known",
                 "c*_{" + std::to_string(k) + "," + std::to_string(l) + "} is not known");
  }
  if (cfg.delta <= *threshold || cfg.delta > 1) {
    return unmet(std::move(d), "delta-range",
                 "delta " + to_string(cfg.delta) + " not in (" + to_string(*threshold) + ", 1]");
  }
  auto dl = min_degree(h, l);
  auto total = binomial(n - l, k - l);
  if (!at_least(dl, cfg.delta, total)) {
    return unmet(std::move(d), "min-degree",
                 "delta_" + std::to_string(l) + " = " + std::to_string(dl) + " < " + to_string(cfg.delta) +
                     " * " + std::to_string(total));
  }
  clock.lap("degree");
  Pattern edge(Hypergraph(k, k, {[&] {
                                   Hypergraph::Edge e;
                                   for (unsigned i = 0; i < k; ++i) e.push_back(i);
                                   return e;
                                 }()}),
               "edge:" + std::to_string(k));
  ReachParams rp = cfg.reach;
  rp.depth = 1;
  ReachabilityOracle oracle(h, edge, rp, cfg.oracle_cap);
  for (Vertex v = 0; v < n; ++v) {
    auto nb = oracle.neighborhood_at(v, 1);
    if (!at_least(nb.size(), cfg.eta, n)) {
      clock.lap("reach");
      d.verdict = Verdict::Yes;
      d.route = "small-reach-neighbourhood";
      d.detail = "vertex " + std::to_string(v) + " has " + std::to_string(nb.size()) + " reachable vertices";
      return d;
    }
  }
  clock.lap("reach");
  try {
    d.partition = find_closed_partition(oracle, VertexSet::range(n), 2, cfg.eta, cfg.alpha);
  } catch (const PreconditionViolation& e) {
    return unmet(std::move(d), "partition-" + e.which(), e.what());
  }
  clock.lap("partition");
  return lattice_stage(
      std::move(d), h, edge, cfg, [&](std::uint64_t) { return std::uint64_t{k}; },
      [&](std::uint64_t) { return std::uint64_t{k}; }, clock);
}

Decision decide_pack_graph(const Hypergraph& g, const Pattern& p, const PipelineConfig& cfg) {
  if (g.uniformity() != 2 || p.uniformity() != 2) throw InvalidArgument("decide-pack for graphs needs k = 2");
  Decision d;
  Stopwatch clock(d);
  const std::size_t n = g.order();
  const std::size_t m = p.order();
  auto stats = graph_stats(p);
  if (n % m != 0) {
    d.verdict = Verdict::No;
    d.route = "divisibility";
    d.detail = std::to_string(m) + " does not divide " + std::to_string(n);
    return d;
  }
  const Rational floor = Rational(1) - Rational(1) / stats.chi_cr;
  if (cfg.delta <= floor || cfg.delta > 1) {
    return unmet(std::move(d), "delta-range",
                 "delta " + to_string(cfg.delta) + " not in (" + to_string(floor) + ", 1]");
  }
  auto mindeg = min_degree(g, 1);
  if (!at_least(mindeg, cfg.delta, n)) {
    return unmet(std::move(d), "min-degree",
                 "delta(G) = " + std::to_string(mindeg) + " < " + to_string(cfg.delta) + " * " +
                     std::to_string(n));
  }
  clock.lap("degree");
  if (stats.balanced()) {
    d.oracle_substituted = true;
    d.route = "balanced-oracle";
    if (n > cfg.oracle_cap) {
      return unmet(std::move(d), "oracle-cap",
                   "balanced pattern needs the exact search, host exceeds cap " + std::to_string(cfg.oracle_cap));
    }
    d.oracle_packing = oracle_packing(g, p, cfg.oracle_cap);
    d.verdict = d.oracle_packing ? Verdict::Yes : Verdict::No;
    clock.lap("oracle");
    return d;
  }
  ReachParams rp = cfg.reach;
  rp.depth = 1;
  ReachabilityOracle oracle(g, p, rp, cfg.oracle_cap);
  const auto c_cap = static_cast<unsigned>(std::min<std::uint64_t>(power(m, stats.chi - 1), 1u << 20));
  const Rational delta_prime = Rational(1, static_cast<std::int64_t>(m)) + cfg.gamma / Rational(2);
  try {
    d.partition = find_closed_partition(oracle, VertexSet::range(n), c_cap, delta_prime, cfg.alpha);
  } catch (const PreconditionViolation& e) {
    return unmet(std::move(d), "partition-" + e.which(), e.what());
  }
  clock.lap("partition");
  auto bound = [&](std::uint64_t r) { return power(2 * m - 1, r); };
  return lattice_stage(std::move(d), g, p, cfg, bound, bound, clock);
}

Decision decide_pack_partite(const Hypergraph& h, const Pattern& p, const PipelineConfig& cfg) {
  const unsigned k = h.uniformity();
  if (k < 3 || p.uniformity() != k) throw InvalidArgument("decide-pack for hypergraphs needs k >= 3 on both sides");
  Decision d;
  Stopwatch clock(d);
  const std::size_t n = h.order();
  const std::size_t m = p.order();
  PartiteStats stats;
  try {
    stats = partite_stats(p);
  } catch (const InvalidArgument& e) {
    return unmet(std::move(d), "pattern-partite", e.what());
  }
  if (n % m != 0) {
    d.verdict = Verdict::No;
    d.route = "divisibility";
    d.detail = std::to_string(m) + " does not divide " + std::to_string(n);
    return d;
  }
  if (cfg.delta <= stats.sigma || cfg.delta > 1) {
    return unmet(std::move(d), "delta-range",
                 "delta " + to_string(cfg.delta) + " not in (" + to_string(stats.sigma) + ", 1]");
  }
  auto codeg = min_degree(h, k - 1);
  if (!at_least(codeg, cfg.delta, n)) {
    return unmet(std::move(d), "min-degree",
                 "delta_" + std::to_string(k - 1) + " = " + std::to_string(codeg) + " < " +
                     to_string(cfg.delta) + " * " + std::to_string(n));
  }
  clock.lap("degree");
  ReachParams rp = cfg.reach;
  rp.depth = 1;
  ReachabilityOracle oracle(h, p, rp, cfg.oracle_cap);
  const Rational delta_prime = Rational(1, static_cast<std::int64_t>(m)) + cfg.gamma / Rational(2);
  try {
    d.partition = find_closed_partition(oracle, VertexSet::range(n), static_cast<unsigned>(m), delta_prime,
                                        cfg.alpha);
  } catch (const PreconditionViolation& e) {
    return unmet(std::move(d), "partition-" + e.which(), e.what());
  }
  clock.lap("partition");
  auto bound = [&](std::uint64_t r) { return power(2 * m - 1, r); };
  return lattice_stage(std::move(d), h, p, cfg, bound, bound, clock);
}

bool oracle_decide(const Hypergraph& h, const Pattern& p, std::size_t cap) {
  return has_perfect_packing_small(h, p, cap);
}

std::optional<std::vector<VertexSet>> oracle_packing(const Hypergraph& h, const Pattern& p,
                                                     std::size_t cap) {
  if (h.order() > cap) {
    throw CapExceeded("host has " + std::to_string(h.order()) + " vertices, exact search cap is " +
                      std::to_string(cap));
  }
  if (h.order() % p.order() != 0) return std::nullopt;
  PackingSolver solver(h, p, cap);
  auto found = solver.find_packing(all_vertices(h.order()));
  if (!found) return std::nullopt;
  std::vector<VertexSet> out;
  for (auto c : *found) out.push_back(from_mask(c));
  return out;
}

std::string verify_certificate(const Hypergraph& h, const Pattern& p, const Decision& d) {
  const std::size_t n = h.order();
  auto check_packing = [&](const std::vector<VertexSet>& packing) -> std::string {
    std::vector<char> seen(n, 0);
    for (const auto& c : packing) {
      if (c.size() != p.order()) return "copy of wrong size";
      for (auto v : c) {
        if (v >= n) return "copy vertex outside host";
        if (seen[v]) return "copies overlap at vertex " + std::to_string(v);
        seen[v] = 1;
      }
      if (!spans_copy(h, c, p)) return "set does not span a copy of the pattern";
    }
    return "";
  };
  if (d.verdict == Verdict::PreconditionUnmet) return d.precondition.empty() ? "no precondition named" : "";
  if (d.route == "divisibility") return n % p.order() != 0 ? "" : "pattern order divides n";
  if (d.oracle_substituted) {
    if (d.verdict == Verdict::Yes) {
      if (!d.oracle_packing) return "missing packing";
      if (auto e = check_packing(*d.oracle_packing); !e.empty()) return e;
      return d.oracle_packing->size() * p.order() == n ? "" : "packing is not perfect";
    }
    return oracle_decide(h, p, std::max(n, kDefaultOracleCap)) ? "exact search finds a packing" : "";
  }
  if (d.route == "small-reach-neighbourhood") return d.verdict == Verdict::Yes ? "" : "route gives YES only";
  if (!d.partition || !d.lattice) return "missing partition or lattice";
  const Partition& part = d.partition->partition;
  part.class_of(n);
  if (part.universe() != VertexSet::range(n)) return "partition does not cover the host";
  auto lat = lattice_from(d.lattice->generators, d.lattice->d);
  auto target = index_vector(part, VertexSet::range(n));
  if (d.verdict == Verdict::Yes) {
    if (!d.solution) return "YES without a solution";
    if (d.solution->packing.size() > d.q) return "solution exceeds q";
    if (auto e = check_packing(d.solution->packing); !e.empty()) return e;
    std::vector<char> covered(n, 0);
    for (const auto& c : d.solution->packing)
      for (auto v : c) covered[v] = 1;
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < n; ++v)
      if (!covered[v]) rest.push_back(v);
    auto leftover = index_vector(part, VertexSet(rest));
    if (leftover != d.solution->leftover) return "leftover vector mismatch";
    return member(lat, leftover) ? "" : "leftover vector is not in the lattice";
  }
  if (member(lat, target)) return "whole vector lies in the lattice, empty packing solves";
  if (d.obstruction) {
    const auto& o = *d.obstruction;
    if (target[o.coordinate] % o.modulus == 0) return "obstruction does not separate the whole vector";
    for (const auto& c : enumerate_copies(h, p))
      if (index_vector(part, c)[o.coordinate] % o.modulus != 0) return "a copy breaks the obstruction";
  }
  return "";
}

}  // namespace hyperpack
