#include <doctest.h>

#include <optional>

#include "brute.hpp"
#include "hyperpack/error.hpp"
#include "hyperpack/gen.hpp"
#include "hyperpack/packing.hpp"
#include "hyperpack/pattern.hpp"

using namespace hyperpack;

TEST_CASE("registry") {
  CHECK(pattern_from_spec("edge:3").graph() == Hypergraph(3, 3, {{0, 1, 2}}));
  CHECK(pattern_from_spec("K3").graph().edge_count() == 3);
  CHECK(pattern_from_spec("P3").graph().edge_count() == 2);
  auto k112 = pattern_from_spec("Kkpartite:1,1,2");
  CHECK(k112.order() == 4);
  CHECK(k112.graph().edge_count() == 2);
  auto k122 = pattern_from_spec("Kmulti:1,2,2");
  CHECK(k122.order() == 5);
  CHECK(k122.graph().edge_count() == 8);
  CHECK_THROWS_AS(pattern_from_spec("edge:x"), InvalidArgument);
  CHECK_THROWS_AS(Pattern(Hypergraph::empty(3, 3)), InvalidArgument);
}

TEST_CASE("spans_copy") {
  auto edge = pattern_from_spec("edge:3");
  auto k6 = Hypergraph::complete(3, 6);
  CHECK(spans_copy(k6, {0, 3, 5}, edge));
  CHECK_FALSE(spans_copy(Hypergraph::empty(3, 6), {0, 3, 5}, edge));
  CHECK_THROWS_AS(spans_copy(k6, {0, 3}, edge), InvalidArgument);

  // blow-up of a single edge is K itself
  auto k112 = pattern_from_spec("Kkpartite:1,1,2");
  Hypergraph one(4, 4, {{0, 1, 2, 3}});
  auto blown = reduce_edge_blowup(one, k112);
  CHECK(spans_copy(blown, {0, 1, 2, 3}, k112));
}

TEST_CASE("enumerate_copies") {
  auto edge = pattern_from_spec("edge:3");
  CHECK(enumerate_copies(Hypergraph::complete(3, 5), edge).size() == 10);
  auto k112 = pattern_from_spec("Kkpartite:1,1,2");
  CHECK(enumerate_copies(k112.graph(), k112).size() == 1);
  auto h1 = gen_divisibility_barrier(8, 3, 3);
  CHECK(enumerate_copies(h1, edge).size() == brute::copies(h1, edge.graph()).size());
}

TEST_CASE("enumerate_copies agrees with spans_copy on small hosts") {
  const std::vector<std::string> specs{"Kkpartite:1,1,2", "edge:3"};
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    auto h = gen_random_dense({8, 3, 0.5, seed, 0, 0, 1});
    for (const auto& spec : specs) {
      auto p = pattern_from_spec(spec);
      auto got = enumerate_copies(h, p);
      std::vector<VertexSet> want;
      brute::subsets(brute::range(8), p.order(), [&](const brute::Set& s) {
        if (spans_copy(h, VertexSet(s), p)) want.emplace_back(s);
      });
      CHECK(got == want);
      CHECK(got.size() == brute::copies(h, p.graph()).size());
    }
  }
  auto p3 = pattern_from_spec("P3");
  auto k122 = pattern_from_spec("Kmulti:1,2,2");
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    auto g = gen_random_dense({9, 2, 0.6, seed, 0, 0, 1});
    CHECK(enumerate_copies(g, p3).size() == brute::copies(g, p3.graph()).size());
    CHECK(enumerate_copies(g, k122).size() == brute::copies(g, k122.graph()).size());
  }
}

TEST_CASE("perfect packing on small hosts") {
  auto edge = pattern_from_spec("edge:3");
  CHECK(has_perfect_packing_small(Hypergraph::complete(3, 6), edge));
  CHECK_FALSE(has_perfect_packing_small(Hypergraph(3, 6, {{0, 1, 2}}), edge));
  CHECK_FALSE(has_perfect_packing_small(gen_divisibility_barrier(6, 3, 3), edge));
  CHECK_THROWS_AS(has_perfect_packing_small(Hypergraph::complete(3, 27), edge), CapExceeded);
  CHECK(has_perfect_packing_small(Hypergraph::complete(3, 27), edge, 30));
}

TEST_CASE("packing search matches an independent matching search") {
  auto edge = pattern_from_spec("edge:3");
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    double p = 0.15 + 0.02 * static_cast<double>(seed % 10);
    auto h = gen_random_dense({9, 3, p, seed, 0, 0, 1});
    CHECK(has_perfect_packing_small(h, edge) == brute::has_perfect_matching(h));
  }
  auto k112 = pattern_from_spec("Kkpartite:1,1,2");
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    auto h = gen_random_dense({8, 3, 0.45, seed, 0, 0, 1});
    CHECK(has_perfect_packing_small(h, k112) == brute::has_packing(h, k112.graph()));
  }
}

TEST_CASE("packings found are genuine") {
  auto edge = pattern_from_spec("edge:3");
  auto h = gen_divisibility_barrier(12, 3, 6);
  PackingSolver solver(h, edge);
  auto found = solver.find_packing((Mask{1} << 12) - 1);
  REQUIRE(found);
  Mask all = 0;
  for (auto c : *found) {
    CHECK((all & c) == 0);
    all |= c;
    CHECK(spans_copy(h, from_mask(c), edge));
  }
  CHECK(all == (Mask{1} << 12) - 1);
}

TEST_CASE("graph statistics") {
  auto k3 = graph_stats(pattern_from_spec("K3"));
  CHECK(k3.chi == 3);
  CHECK(k3.sigma == 1);
  CHECK(k3.chi_cr == Rational(3));
  CHECK(k3.balanced());

  // P3 colourings: only {middle}, {ends}; sizes 1,2
  auto p3 = graph_stats(pattern_from_spec("P3"));
  CHECK(p3.chi == 2);
  CHECK(p3.sigma == 1);
  CHECK(p3.chi_cr == Rational(3, 2));
  CHECK(p3.dset == std::set<unsigned>{1});
  CHECK(p3.hcf_chi == 1u);
  CHECK(p3.hcf_c == 3);
  CHECK_FALSE(p3.hcf_is_one);
  CHECK(p3.chi_star == Rational(2));
  CHECK_FALSE(p3.balanced());

  auto k122 = graph_stats(pattern_from_spec("Kmulti:1,2,2"));
  CHECK(k122.chi == 3);
  CHECK(k122.sigma == 1);
  CHECK(k122.chi_cr == Rational(5, 2));

  // C4: 2-colourings are 2+2 only, D = {0}
  auto c4 = graph_stats(Pattern(Hypergraph(2, 4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}})));
  CHECK(c4.chi == 2);
  CHECK_FALSE(c4.hcf_chi.has_value());
  CHECK(c4.balanced());

  CHECK_THROWS_AS(graph_stats(pattern_from_spec("edge:3")), InvalidArgument);
}

TEST_CASE("graph statistics invariants") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto g = gen_random_dense({6, 2, 0.5, seed, 0, 0, 1});
    if (g.edge_count() == 0) continue;
    auto st = graph_stats(Pattern(g));
    CHECK(st.chi_cr > Rational(st.chi - 1));
    CHECK(st.chi_cr <= Rational(st.chi));
    CHECK(st.chi_star >= st.chi_cr);
    CHECK(st.chi_star <= Rational(st.chi));
  }
}

TEST_CASE("partite statistics") {
  auto e = partite_stats(pattern_from_spec("edge:3"));
  CHECK(e.sset == std::set<unsigned>{1});
  CHECK(e.sigma == Rational(1, 3));

  auto k112 = partite_stats(pattern_from_spec("Kkpartite:1,1,2"));
  CHECK(k112.sset == std::set<unsigned>{1, 2});
  CHECK(k112.sigma == Rational(1, 4));
  CHECK(k112.gcd_f == 1u);

  auto k222 = partite_stats(pattern_from_spec("Kkpartite:2,2,2"));
  CHECK(k222.sset == std::set<unsigned>{2});
  CHECK(k222.sigma == Rational(1, 3));
  CHECK(k222.dset == std::set<unsigned>{0});
  CHECK_FALSE(k222.gcd_f.has_value());

  // a tight path on 4 vertices has realisations 1,1,2 only up to symmetry
  auto path = partite_stats(Pattern(Hypergraph(3, 4, {{0, 1, 2}, {1, 2, 3}})));
  CHECK(path.sigma == Rational(1, 4));
  CHECK(completed_partite(Pattern(Hypergraph(3, 4, {{0, 1, 2}, {1, 2, 3}}))).graph().edge_count() == 2);

  CHECK_THROWS_AS(partite_stats(Pattern(Hypergraph::complete(3, 4))), InvalidArgument);
}

TEST_CASE("sigma never exceeds 1/k") {
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    auto f = gen_random_dense({6, 3, 0.15, seed, 0, 0, 1});
    if (f.edge_count() == 0) continue;
    Pattern p(f);
    std::optional<PartiteStats> st;
    try {
      st = partite_stats(p);
    } catch (const InvalidArgument&) {
      continue;
    }
    ++checked;
    CHECK(st->sigma <= Rational(1, 3));
  }
  CHECK(checked > 0);
}
