#include "hyperpack/gen.hpp"

#include <cmath>
#include <random>

#include "hyperpack/combinatorics.hpp"
#include "hyperpack/error.hpp"

namespace hyperpack {

namespace {

template <typename Keep>
Hypergraph all_k_sets(std::size_t n, unsigned k, Keep keep) {
  std::vector<Vertex> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<Vertex>(i);
  std::vector<Hypergraph::Edge> edges;
  for_each_subset(all, k, [&](const std::vector<Vertex>& e) {
    if (keep(e)) edges.push_back(e);
    return true;
  });
  return Hypergraph(k, n, std::move(edges));
}

}  // namespace

Hypergraph gen_divisibility_barrier(std::size_t n, unsigned k, std::size_t a) {
  if (k < 2) throw InvalidArgument("k must be at least 2");
  if (a > n) throw InvalidArgument("|A| exceeds n");
  return all_k_sets(n, k, [&](const std::vector<Vertex>& e) {
    std::size_t in_a = 0;
    for (auto v : e) in_a += v < a;
    return in_a % 2 == 0;
  });
}

Hypergraph gen_space_barrier(std::size_t n, unsigned k, std::size_t core_size) {
  if (k < 2) throw InvalidArgument("k must be at least 2");
  if (core_size > n) throw InvalidArgument("core exceeds n");
  return all_k_sets(n, k, [&](const std::vector<Vertex>& e) { return e.front() < core_size; });
}

Hypergraph reduce_lin_uplift(const Hypergraph& h) {
  if (!is_linear(h)) throw InvalidArgument("uplift needs a linear hypergraph");
  const unsigned k = h.uniformity();
  const std::size_t n = h.order();
  const std::size_t s = h.edge_count();
  const std::size_t block = n + s;
  std::vector<Hypergraph::Edge> edges;
  for (std::size_t j = 0; j < s; ++j) {
    Hypergraph::Edge across;
    for (std::size_t i = 0; i <= k; ++i) {
      const auto extra = static_cast<Vertex>(i * block + n + j);
      across.push_back(extra);
      Hypergraph::Edge e;
      for (auto v : h.edges()[j]) e.push_back(static_cast<Vertex>(i * block + v));
      e.push_back(extra);
      edges.push_back(std::move(e));
    }
    edges.push_back(std::move(across));
  }
  return Hypergraph(k + 1, (k + 1) * block, std::move(edges));
}

Hypergraph reduce_edge_blowup(const Hypergraph& h, const Pattern& k_pattern) {
  if (!is_linear(h)) throw InvalidArgument("edge blow-up needs a linear hypergraph");
  if (k_pattern.order() != h.uniformity()) {
    throw InvalidArgument("pattern order must equal the host's uniformity");
  }
  std::vector<Hypergraph::Edge> edges;
  for (const auto& e : h.edges()) {
    for (const auto& f : k_pattern.graph().edges()) {
      Hypergraph::Edge mapped;
      for (auto v : f) mapped.push_back(e[v]);
      edges.push_back(std::move(mapped));
    }
  }
  // linearity keeps copies on different edges from sharing a k-set
  return Hypergraph(k_pattern.uniformity(), h.order(), std::move(edges));
}

PaddedInstance reduce_degree_padding(const Hypergraph& h, const Pattern& k_pattern, const Rational& gamma) {
  const unsigned k = k_pattern.uniformity();
  if (h.uniformity() != k) throw InvalidArgument("host and pattern uniformity differ");
  const std::size_t m = k_pattern.order();
  const std::size_t n = h.order();
  if (n % m != 0) throw InvalidArgument("pattern order must divide n");
  auto stats = partite_stats(k_pattern);
  if (gamma <= 0 || gamma >= stats.sigma) {
    throw InvalidArgument("gamma must lie in (0, " + to_string(stats.sigma) + ")");
  }
  const std::size_t a1 = stats.min_realisation.front();
  const Rational ratio = Rational(static_cast<std::int64_t>(n)) / gamma;
  const auto big_n = static_cast<std::size_t>((ratio.numerator() + ratio.denominator() - 1) / ratio.denominator());
  PaddedInstance out;
  out.a_size = a1 * big_n;
  out.b_size = (m - a1) * big_n;
  const std::size_t total = n + out.a_size + out.b_size;
  const auto a_begin = static_cast<Vertex>(n);
  const auto a_end = static_cast<Vertex>(n + out.a_size);
  std::vector<Hypergraph::Edge> edges(h.edges().begin(), h.edges().end());
  std::vector<Vertex> all(total);
  for (std::size_t i = 0; i < total; ++i) all[i] = static_cast<Vertex>(i);
  for_each_subset(all, k, [&](const std::vector<Vertex>& e) {
    for (auto v : e)
      if (v >= a_begin && v < a_end) {
        edges.push_back(e);
        break;
      }
    return true;
  });
  out.graph = Hypergraph(k, total, std::move(edges));
  out.codegree = min_degree(out.graph, k - 1);
  return out;
}

Hypergraph gen_random_dense(const RandomSpec& spec) {
  if (spec.k < 2) throw InvalidArgument("k must be at least 2");
  if (spec.edge_prob < 0 || spec.edge_prob > 1) throw InvalidArgument("edge probability must lie in [0,1]");
  const unsigned l = spec.l == 0 ? spec.k - 1 : spec.l;
  if (l >= spec.k) throw InvalidArgument("degree index must be below k");
  // compare raw 64-bit draws against a fixed cut so output does not depend
  // on the standard library's distribution code
  const long double scaled = std::ldexp(static_cast<long double>(spec.edge_prob), 64);
  const bool always = spec.edge_prob >= 1;
  const auto cut = always ? ~std::uint64_t{0} : static_cast<std::uint64_t>(scaled);
  std::mt19937_64 rng(spec.seed);
  std::vector<Vertex> all(spec.n);
  for (std::size_t i = 0; i < spec.n; ++i) all[i] = static_cast<Vertex>(i);
  for (unsigned attempt = 0; attempt < std::max(1u, spec.attempts); ++attempt) {
    std::vector<Hypergraph::Edge> edges;
    for_each_subset(all, spec.k, [&](const std::vector<Vertex>& e) {
      if (always || rng() < cut) edges.push_back(e);
      return true;
    });
    Hypergraph h(spec.k, spec.n, std::move(edges));
    if (spec.n < l || min_degree(h, l) >= spec.min_degree_floor) return h;
  }
  throw Error("no sample reached the degree floor within " + std::to_string(spec.attempts) + " attempts");
}

}  // namespace hyperpack
