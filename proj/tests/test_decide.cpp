#include <doctest.h>

#include "brute.hpp"
#include "hyperpack/decide.hpp"
#include "hyperpack/error.hpp"
#include "hyperpack/gen.hpp"

using namespace hyperpack;

namespace {

Hypergraph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Hypergraph::Edge> edges;
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = static_cast<Vertex>(a); v < a + b; ++v) edges.push_back({u, v});
  return Hypergraph(2, a + b, edges);
}

IndexVector minus(IndexVector a, const IndexVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

// a solution of at most q copies exists, by trying every small family
bool brute_q_soluble(const std::vector<VertexSet>& copies, const Partition& part,
                     const IndexLattice& lat, const IndexVector& full, std::size_t q) {
  std::vector<std::size_t> chosen;
  std::function<bool(std::size_t, IndexVector, std::vector<bool>&)> go =
      [&](std::size_t from, IndexVector left, std::vector<bool>& used) {
        if (member(lat, left)) return true;
        if (chosen.size() == q) return false;
        for (std::size_t i = from; i < copies.size(); ++i) {
          bool clash = false;
          for (auto v : copies[i]) clash = clash || used[v];
          if (clash) continue;
          for (auto v : copies[i]) used[v] = true;
          chosen.push_back(i);
          bool ok = go(i + 1, minus(left, index_vector(part, copies[i])), used);
          chosen.pop_back();
          for (auto v : copies[i]) used[v] = false;
          if (ok) return true;
        }
        return false;
      };
  std::vector<bool> used(part.universe().size(), false);
  return go(0, full, used);
}

void check_solution(const Hypergraph& h, const Pattern& p, const Partition& part,
                    const IndexLattice& lat, const QSolution& sol, std::uint64_t q) {
  CHECK(sol.packing.size() <= q);
  std::vector<bool> used(h.order(), false);
  IndexVector left = index_vector(part, VertexSet::range(h.order()));
  for (const auto& c : sol.packing) {
    CHECK(spans_copy(h, c, p));
    for (auto v : c) {
      CHECK_FALSE(used[v]);
      used[v] = true;
    }
    left = minus(left, index_vector(part, c));
  }
  CHECK(left == sol.leftover);
  CHECK(member(lat, left));
}

}  // namespace

TEST_CASE("verdict names") {
  CHECK(to_string(Verdict::Yes) == "YES");
  CHECK(to_string(Verdict::No) == "NO");
  CHECK(to_string(Verdict::PreconditionUnmet) == "PRECONDITION_UNMET");
}

TEST_CASE("q-solubility") {
  auto edge = pattern_from_spec("edge:3");
  auto h = gen_divisibility_barrier(12, 3, 5);
  Partition part{{VertexSet{0, 1, 2, 3, 4}, VertexSet{5, 6, 7, 8, 9, 10, 11}}};
  auto copies = enumerate_copies(h, edge);
  const IndexVector full{5, 7};

  // every copy lies in L and the whole set does not
  auto lat = lattice_from({{0, 3}, {2, 1}}, 2);
  CHECK_FALSE(q_soluble(h, edge, part, lat, 3).has_value());
  CHECK_FALSE(brute_q_soluble(copies, part, lat, full, 2));

  // removing one (2,1) copy leaves (3,6)
  auto coarse = lattice_from({{3, 0}, {0, 3}}, 2);
  auto sol = q_soluble(h, edge, part, coarse, 1);
  REQUIRE(sol.has_value());
  CHECK(sol->packing.size() == 1);
  CHECK(index_vector(part, sol->packing[0]) == IndexVector{2, 1});
  check_solution(h, edge, part, coarse, *sol, 1);
  CHECK_FALSE(q_soluble(h, edge, part, coarse, 0).has_value());

  // the full vector already in L needs no copies
  auto whole = lattice_from({{5, 7}}, 2);
  auto none = q_soluble(h, edge, part, whole, 2);
  REQUIRE(none.has_value());
  CHECK(none->packing.empty());

  // agreement with exhaustive search over small families
  std::vector<std::vector<IndexVector>> lattices{
      {{3, 0}, {0, 3}}, {{6, 0}, {0, 3}}, {{2, 1}, {6, 0}}, {{0, 3}, {4, 2}}, {{1, 2}, {0, 6}}};
  for (const auto& gens : lattices) {
    auto l = lattice_from(gens, 2);
    for (std::uint64_t q = 0; q <= 2; ++q) {
      auto got = q_soluble(copies, 12, part, l, q);
      CHECK(got.has_value() == brute_q_soluble(copies, part, l, full, q));
      if (got) check_solution(h, edge, part, l, *got, q);
    }
  }
}

TEST_CASE("perfect matching pipeline") {
  PipelineConfig cfg;
  cfg.delta = Rational(2, 5);

  auto barrier = gen_divisibility_barrier(12, 3, 5);
  auto no = decide_pm(barrier, cfg);
  CHECK(no.verdict == Verdict::No);
  CHECK(no.route == "residue");
  REQUIRE(no.obstruction.has_value());
  CHECK(no.obstruction->coordinate == 0);
  CHECK(no.obstruction->modulus == 2);
  CHECK(no.obstruction->value == 5);
  CHECK(no.full_residue == 1u);
  CHECK(no.copy_residues == std::vector<std::uint64_t>{0});
  CHECK(verify_certificate(barrier, pattern_from_spec("edge:3"), no).empty());
  CHECK_FALSE(brute::has_perfect_matching(barrier));

  auto even = gen_divisibility_barrier(12, 3, 6);
  auto yes = decide_pm(even, cfg);
  CHECK(yes.verdict == Verdict::Yes);
  CHECK(verify_certificate(even, pattern_from_spec("edge:3"), yes).empty());

  // a forged certificate is caught
  auto forged = no;
  forged.verdict = Verdict::Yes;
  CHECK_FALSE(verify_certificate(barrier, pattern_from_spec("edge:3"), forged).empty());
  auto wrong_part = no;
  wrong_part.partition->partition.classes = {VertexSet{0, 1, 2, 3, 4, 5},
                                             VertexSet{6, 7, 8, 9, 10, 11}};
  CHECK_FALSE(verify_certificate(barrier, pattern_from_spec("edge:3"), wrong_part).empty());

  auto indivisible = decide_pm(Hypergraph::complete(3, 10), cfg);
  CHECK(indivisible.verdict == Verdict::No);
  CHECK(indivisible.route == "divisibility");

  auto sparse = decide_pm(gen_space_barrier(12, 3, 3), cfg);
  CHECK(sparse.verdict == Verdict::PreconditionUnmet);
  CHECK(sparse.precondition == "min-degree");

  PipelineConfig low = cfg;
  low.delta = Rational(1, 4);
  auto out_of_range = decide_pm(Hypergraph::complete(3, 12), low);
  CHECK(out_of_range.verdict == Verdict::PreconditionUnmet);
  CHECK(out_of_range.precondition == "delta-range");

  PipelineConfig vertex_degree = cfg;
  vertex_degree.l = 1;
  auto unknown = decide_pm(Hypergraph::complete(4, 12), vertex_degree);
  CHECK(unknown.verdict == Verdict::PreconditionUnmet);
  CHECK(unknown.precondition == "threshold-known");
}

TEST_CASE("pipeline verdicts are sound on random 3-graphs") {
  PipelineConfig cfg;
  cfg.delta = Rational(2, 5);
  auto edge = pattern_from_spec("edge:3");
  int decided = 0;
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    auto h = gen_random_dense({9, 3, 0.75, seed, 0, 0, 1});
    auto d = decide_pm(h, cfg);
    if (d.verdict == Verdict::PreconditionUnmet) continue;
    ++decided;
    CHECK((d.verdict == Verdict::Yes) == brute::has_perfect_matching(h));
    CHECK(verify_certificate(h, edge, d).empty());
  }
  CHECK(decided > 0);
}

TEST_CASE("graph packing pipeline") {
  auto p3 = pattern_from_spec("P3");
  PipelineConfig cfg;
  auto yes = decide_pack_graph(Hypergraph::complete(2, 12), p3, cfg);
  CHECK(yes.verdict == Verdict::Yes);
  CHECK(verify_certificate(Hypergraph::complete(2, 12), p3, yes).empty());

  auto bip = complete_bipartite(4, 8);
  auto pu = decide_pack_graph(bip, p3, cfg);
  CHECK(pu.verdict == Verdict::PreconditionUnmet);
  CHECK(pu.precondition == "min-degree");

  CHECK(decide_pack_graph(Hypergraph::complete(2, 10), p3, cfg).route == "divisibility");

  // triangles are balanced: the exact search stands in
  auto k3 = pattern_from_spec("K3");
  PipelineConfig high = cfg;
  high.delta = Rational(7, 10);
  auto sub = decide_pack_graph(Hypergraph::complete(2, 12), k3, high);
  CHECK(sub.verdict == Verdict::Yes);
  CHECK(sub.oracle_substituted);
  REQUIRE(sub.oracle_packing.has_value());
  CHECK(sub.oracle_packing->size() == 4);
  CHECK(verify_certificate(Hypergraph::complete(2, 12), k3, sub).empty());

  CHECK(decide_pack_graph(Hypergraph::complete(2, 12), k3, cfg).precondition == "delta-range");
  CHECK_THROWS_AS(decide_pack_graph(Hypergraph::complete(3, 6), p3, cfg), InvalidArgument);
}

TEST_CASE("graph packing verdicts are sound on random graphs") {
  auto p3 = pattern_from_spec("P3");
  PipelineConfig cfg;
  int decided = 0;
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    auto g = gen_random_dense({12, 2, 0.8, seed, 0, 0, 1});
    auto d = decide_pack_graph(g, p3, cfg);
    if (d.verdict == Verdict::PreconditionUnmet) continue;
    ++decided;
    CHECK((d.verdict == Verdict::Yes) == brute::has_packing(g, p3.graph()));
    CHECK(verify_certificate(g, p3, d).empty());
  }
  CHECK(decided > 0);
}

TEST_CASE("partite packing pipeline") {
  auto k112 = pattern_from_spec("Kkpartite:1,1,2");
  PipelineConfig cfg;
  auto h = Hypergraph::complete(3, 8);
  auto yes = decide_pack_partite(h, k112, cfg);
  CHECK(yes.verdict == Verdict::Yes);
  CHECK(verify_certificate(h, k112, yes).empty());
  CHECK(brute::has_packing(h, k112.graph()));

  PipelineConfig low = cfg;
  low.delta = Rational(1, 5);
  CHECK(decide_pack_partite(h, k112, low).precondition == "delta-range");
  CHECK(decide_pack_partite(Hypergraph::complete(3, 9), k112, cfg).route == "divisibility");

  auto sparse = decide_pack_partite(gen_space_barrier(8, 3, 2), k112, cfg);
  CHECK(sparse.verdict == Verdict::PreconditionUnmet);
  CHECK(sparse.precondition == "min-degree");
}

TEST_CASE("exact oracle") {
  auto edge = pattern_from_spec("edge:3");
  CHECK(oracle_decide(Hypergraph::complete(3, 9), edge));
  CHECK_FALSE(oracle_decide(gen_divisibility_barrier(12, 3, 5), edge));
  CHECK(oracle_decide(gen_divisibility_barrier(12, 3, 6), edge));
  CHECK_FALSE(oracle_decide(gen_space_barrier(12, 3, 3), edge));
  CHECK(oracle_decide(gen_space_barrier(12, 3, 4), edge));
  auto packing = oracle_packing(gen_space_barrier(12, 3, 4), edge);
  REQUIRE(packing.has_value());
  CHECK(packing->size() == 4);
  CHECK_THROWS_AS(oracle_decide(Hypergraph::complete(3, 30), edge), CapExceeded);
  CHECK(oracle_decide(Hypergraph::complete(3, 30), edge, 30));
}
