#include <doctest.h>

#include <random>

#include "brute.hpp"
#include "hyperpack/decide.hpp"
#include "hyperpack/error.hpp"
#include "hyperpack/gen.hpp"
#include "hyperpack/khg_io.hpp"

using namespace hyperpack;

namespace {

// greedy random linear k-graph
Hypergraph random_linear(std::size_t n, unsigned k, std::size_t tries, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Hypergraph::Edge> edges;
  for (std::size_t t = 0; t < tries; ++t) {
    std::vector<Vertex> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<Vertex>(i);
    std::shuffle(all.begin(), all.end(), rng);
    Hypergraph::Edge e(all.begin(), all.begin() + k);
    std::sort(e.begin(), e.end());
    bool ok = true;
    for (const auto& f : edges) {
      std::size_t shared = 0;
      for (auto v : e) shared += std::binary_search(f.begin(), f.end(), v);
      ok = ok && shared <= 1;
    }
    if (ok) edges.push_back(e);
  }
  return Hypergraph(k, n, edges);
}

}  // namespace

TEST_CASE("divisibility barrier") {
  auto h = gen_divisibility_barrier(8, 3, 3);
  brute::subsets(brute::range(8), 3, [&](const brute::Set& e) {
    std::size_t in_a = 0;
    for (auto v : e) in_a += v < 3;
    CHECK(brute::has_edge(h, e) == (in_a % 2 == 0));
  });
  CHECK_THROWS_AS(gen_divisibility_barrier(4, 3, 5), InvalidArgument);
}

TEST_CASE("space barrier") {
  auto h = gen_space_barrier(9, 3, 2);
  CHECK(h.edge_count() == 84 - 35);
  CHECK_FALSE(brute::has_perfect_matching(h));
  CHECK(brute::has_perfect_matching(gen_space_barrier(9, 3, 3)));
}

TEST_CASE("uplift preserves perfect matchings") {
  int yes = 0;
  int no = 0;
  std::vector<Hypergraph> hosts{Hypergraph(3, 6, {{0, 1, 2}, {3, 4, 5}})};
  for (std::uint64_t seed = 1; seed <= 12; ++seed) hosts.push_back(random_linear(6, 3, 4 + seed % 3, seed));
  for (const auto& h : hosts) {
    auto up = reduce_lin_uplift(h);
    const std::size_t s = h.edge_count();
    CHECK(up.uniformity() == 4);
    CHECK(up.order() == 4 * (6 + s));
    CHECK(up.edge_count() == 5 * s);
    CHECK(is_linear(up));
    bool want = brute::has_perfect_matching(h);
    CHECK(brute::has_perfect_matching(up) == want);
    (want ? yes : no)++;
  }
  CHECK(yes > 0);
  CHECK(no > 0);
  CHECK_THROWS_AS(reduce_lin_uplift(Hypergraph::complete(3, 5)), InvalidArgument);
}

TEST_CASE("uplift layout") {
  Hypergraph h(3, 3, {{0, 1, 2}});
  auto up = reduce_lin_uplift(h);
  // copies at offsets 0, 4, 8, 12; edge 0's new vertex is offset + 3
  CHECK(up.order() == 16);
  CHECK(up.has_edge(std::vector<Vertex>{0, 1, 2, 3}));
  CHECK(up.has_edge(std::vector<Vertex>{12, 13, 14, 15}));
}

TEST_CASE("edge blow-up preserves packability") {
  auto k112 = pattern_from_spec("Kkpartite:1,1,2");
  int yes = 0;
  int no = 0;
  std::vector<Hypergraph> hosts{Hypergraph(4, 8, {{0, 1, 2, 3}, {4, 5, 6, 7}})};
  for (std::uint64_t seed = 1; seed <= 10; ++seed) hosts.push_back(random_linear(8, 4, 3 + seed % 3, seed * 7));
  for (const auto& h : hosts) {
    auto blown = reduce_edge_blowup(h, k112);
    CHECK(blown.uniformity() == 3);
    CHECK(blown.order() == 8);
    CHECK(blown.edge_count() == 2 * h.edge_count());
    bool want = brute::has_perfect_matching(h);
    CHECK(brute::has_packing(blown, k112.graph()) == want);
    (want ? yes : no)++;
  }
  CHECK(no > 0);
  // a perfect matching instance
  Hypergraph two(4, 8, {{0, 1, 2, 3}, {4, 5, 6, 7}});
  CHECK(brute::has_packing(reduce_edge_blowup(two, k112), k112.graph()));
  ++yes;
  CHECK(yes > 0);
  CHECK_THROWS_AS(reduce_edge_blowup(Hypergraph::complete(4, 5), k112), InvalidArgument);
}

TEST_CASE("blow-up of an uplift") {
  auto k112 = pattern_from_spec("Kkpartite:1,1,2");
  std::vector<Hypergraph> hosts{Hypergraph(3, 6, {{0, 1, 2}, {3, 4, 5}})};
  for (std::uint64_t seed = 1; seed <= 4; ++seed) hosts.push_back(random_linear(6, 3, 4, seed + 40));
  for (const auto& h : hosts) {
    auto chain = reduce_edge_blowup(reduce_lin_uplift(h), k112);
    REQUIRE(chain.order() <= 63);
    CHECK(oracle_decide(chain, k112, 63) == brute::has_perfect_matching(h));
  }
}

TEST_CASE("degree padding") {
  auto edge = pattern_from_spec("edge:3");
  Hypergraph with(3, 3, {{0, 1, 2}});
  auto padded = reduce_degree_padding(with, edge, Rational(3, 10));
  CHECK(padded.a_size == 10);
  CHECK(padded.b_size == 20);
  CHECK(padded.graph.order() == 33);
  CHECK(padded.codegree == 10);
  CHECK(padded.codegree == brute::min_degree(padded.graph, 2));
  CHECK(oracle_decide(padded.graph, edge, 40));

  // 23 vertices outside A, each edge through A covers at most 2 of them
  auto without = reduce_degree_padding(Hypergraph::empty(3, 3), edge, Rational(3, 10));
  CHECK_FALSE(oracle_decide(without.graph, edge, 40));

  CHECK_THROWS_AS(reduce_degree_padding(with, edge, Rational(1, 3)), InvalidArgument);
  CHECK_THROWS_AS(reduce_degree_padding(Hypergraph::complete(3, 4), edge, Rational(1, 4)),
                  InvalidArgument);
}

TEST_CASE("random generator") {
  RandomSpec spec{10, 3, 0.5, 42, 0, 0, 1};
  auto a = gen_random_dense(spec);
  auto b = gen_random_dense(spec);
  CHECK(to_khg_string(a) == to_khg_string(b));
  spec.seed = 43;
  CHECK(to_khg_string(gen_random_dense(spec)) != to_khg_string(a));

  CHECK(gen_random_dense({7, 3, 1.0, 1, 0, 0, 1}).edge_count() == 35);
  CHECK(gen_random_dense({7, 3, 0.0, 1, 0, 0, 1}).edge_count() == 0);

  RandomSpec floor{10, 3, 0.7, 5, 4, 0, 1000};
  auto h = gen_random_dense(floor);
  CHECK(brute::min_degree(h, 2) >= 4);
  CHECK_THROWS_AS(gen_random_dense({10, 3, 0.1, 5, 8, 0, 3}), Error);
  CHECK_THROWS_AS(gen_random_dense({10, 3, 1.5, 5, 0, 0, 1}), InvalidArgument);

  // edge frequency is near p
  std::size_t total = 0;
  for (std::uint64_t s = 1; s <= 20; ++s) total += gen_random_dense({12, 3, 0.3, s, 0, 0, 1}).edge_count();
  double freq = static_cast<double>(total) / (20.0 * 220.0);
  CHECK(freq > 0.27);
  CHECK(freq < 0.33);
}
