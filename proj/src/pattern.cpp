#include "hyperpack/pattern.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

#include "hyperpack/combinatorics.hpp"
#include "hyperpack/error.hpp"
#include "hyperpack/khg_io.hpp"

namespace hyperpack {

Pattern::Pattern(Hypergraph f, std::string name) : f_(std::move(f)), name_(std::move(name)) {
  if (f_.edge_count() == 0) throw InvalidArgument("pattern must have at least one edge");
  if (f_.order() < f_.uniformity()) throw InvalidArgument("pattern has fewer vertices than k");
}

Pattern complete_partite(const std::vector<std::size_t>& sizes) {
  if (sizes.size() < 2) throw InvalidArgument("complete partite pattern needs at least 2 classes");
  std::vector<std::vector<Vertex>> classes;
  Vertex next = 0;
  for (auto s : sizes) {
    if (s == 0) throw InvalidArgument("class sizes must be positive");
    std::vector<Vertex> c;
    for (std::size_t i = 0; i < s; ++i) c.push_back(next++);
    classes.push_back(std::move(c));
  }
  std::vector<Hypergraph::Edge> edges;
  Hypergraph::Edge cur;
  std::function<void(std::size_t)> pick = [&](std::size_t i) {
    if (i == classes.size()) {
      edges.push_back(cur);
      return;
    }
    for (auto v : classes[i]) {
      cur.push_back(v);
      pick(i + 1);
      cur.pop_back();
    }
  };
  pick(0);
  std::string name = "Kkpartite:";
  for (std::size_t i = 0; i < sizes.size(); ++i) name += (i ? "," : "") + std::to_string(sizes[i]);
  return Pattern(Hypergraph(static_cast<unsigned>(sizes.size()), next, std::move(edges)), name);
}

Pattern complete_multipartite_graph(const std::vector<std::size_t>& sizes) {
  if (sizes.size() < 2) throw InvalidArgument("multipartite graph needs at least 2 parts");
  std::vector<std::size_t> part;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] == 0) throw InvalidArgument("part sizes must be positive");
    part.insert(part.end(), sizes[i], i);
  }
  std::vector<Hypergraph::Edge> edges;
  for (std::size_t u = 0; u < part.size(); ++u)
    for (std::size_t v = u + 1; v < part.size(); ++v)
      if (part[u] != part[v]) edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  std::string name = "Kmulti:";
  for (std::size_t i = 0; i < sizes.size(); ++i) name += (i ? "," : "") + std::to_string(sizes[i]);
  return Pattern(Hypergraph(2, part.size(), std::move(edges)), name);
}

namespace {

std::vector<std::size_t> parse_sizes(std::string_view list, std::string_view spec) {
  std::vector<std::size_t> out;
  while (!list.empty()) {
    auto comma = list.find(',');
    auto tok = list.substr(0, comma);
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw InvalidArgument("bad pattern spec '" + std::string(spec) + "'");
    }
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

Pattern pattern_from_spec(std::string_view spec) {
  if (spec.starts_with("edge:")) {
    auto k = parse_sizes(spec.substr(5), spec);
    if (k.size() != 1 || k[0] < 2) throw InvalidArgument("edge:k needs k >= 2");
    Hypergraph::Edge e;
    for (std::size_t i = 0; i < k[0]; ++i) e.push_back(static_cast<Vertex>(i));
    return Pattern(Hypergraph(static_cast<unsigned>(k[0]), k[0], {e}), std::string(spec));
  }
  if (spec == "K3") return Pattern(Hypergraph(2, 3, {{0, 1}, {0, 2}, {1, 2}}), "K3");
  if (spec == "P3") return Pattern(Hypergraph(2, 3, {{0, 1}, {1, 2}}), "P3");
  if (spec.starts_with("Kkpartite:")) return complete_partite(parse_sizes(spec.substr(10), spec));
  if (spec.starts_with("Kmulti:")) return complete_multipartite_graph(parse_sizes(spec.substr(7), spec));
  return Pattern(read_khg_file(std::filesystem::path(std::string(spec))), std::string(spec));
}

namespace {

// Backtracking embedding of F into a host. Vertices of F are placed in an
// order where each new vertex shares an edge with an earlier one when
// possible; an F-edge is checked as soon as its last vertex is placed.
class Embedder {
 public:
  Embedder(const Hypergraph& h, const Pattern& p) : h_(h), f_(p.graph()) {
    const std::size_t m = f_.order();
    std::vector<char> placed(m, 0);
    while (order_.size() < m) {
      // seed a new component from the lowest unplaced vertex of max degree
      Vertex seed = 0;
      std::size_t best = 0;
      bool found = false;
      for (Vertex v = 0; v < m; ++v) {
        if (placed[v]) continue;
        if (!found || f_.incident(v).size() > best) {
          seed = v;
          best = f_.incident(v).size();
          found = true;
        }
      }
      std::vector<Vertex> queue{seed};
      placed[seed] = 1;
      for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        order_.push_back(queue[qi]);
        for (auto ei : f_.incident(queue[qi]))
          for (auto w : f_.edges()[ei])
            if (!placed[w]) {
              placed[w] = 1;
              queue.push_back(w);
            }
      }
    }
    std::vector<std::size_t> pos(m);
    for (std::size_t i = 0; i < m; ++i) pos[order_[i]] = i;
    closing_.assign(m, {});
    anchors_.assign(m, {});
    for (std::size_t ei = 0; ei < f_.edge_count(); ++ei) {
      std::size_t last = 0;
      for (auto w : f_.edges()[ei]) last = std::max(last, pos[w]);
      closing_[last].push_back(ei);
    }
    for (std::size_t i = 0; i < m; ++i) {
      for (auto ei : f_.incident(order_[i]))
        for (auto w : f_.edges()[ei])
          if (pos[w] < i) anchors_[i].push_back(pos[w]);
      std::sort(anchors_[i].begin(), anchors_[i].end());
      anchors_[i].erase(std::unique(anchors_[i].begin(), anchors_[i].end()), anchors_[i].end());
    }
    const std::size_t n = h_.order();
    shadow_.assign(n * n, 0);
    neighbours_.assign(n, {});
    for (const auto& e : h_.edges())
      for (auto a : e)
        for (auto b : e)
          if (a != b && !shadow_[a * n + b]) {
            shadow_[a * n + b] = 1;
            neighbours_[a].push_back(b);
          }
    for (auto& nb : neighbours_) std::sort(nb.begin(), nb.end());
  }

  // Calls fn(image) for each embedding whose image lies in allowed (empty
  // allowed = everything). Stops when fn returns false.
  template <typename Fn>
  void run(const std::vector<char>& allowed, Fn&& fn) {
    image_.assign(f_.order(), 0);
    used_.assign(h_.order(), 0);
    allowed_ = &allowed;
    stop_ = false;
    step(0, fn);
  }

 private:
  template <typename Fn>
  void step(std::size_t i, Fn& fn) {
    if (i == order_.size()) {
      if (!fn(image_)) stop_ = true;
      return;
    }
    auto try_vertex = [&](Vertex x) {
      if (used_[x] || (!allowed_->empty() && !(*allowed_)[x])) return;
      const std::size_t n = h_.order();
      for (auto a : anchors_[i])
        if (!shadow_[image_[order_[a]] * n + x]) return;
      image_[order_[i]] = x;
      for (auto ei : closing_[i]) {
        Hypergraph::Edge mapped;
        for (auto w : f_.edges()[ei]) mapped.push_back(image_[w]);
        std::sort(mapped.begin(), mapped.end());
        if (!h_.has_edge(mapped)) return;
      }
      used_[x] = 1;
      step(i + 1, fn);
      used_[x] = 0;
    };
    if (anchors_[i].empty()) {
      for (Vertex x = 0; x < h_.order() && !stop_; ++x) try_vertex(x);
    } else {
      for (auto x : neighbours_[image_[order_[anchors_[i].front()]]]) {
        if (stop_) break;
        try_vertex(x);
      }
    }
  }

  const Hypergraph& h_;
  const Hypergraph& f_;
  std::vector<Vertex> order_;
  std::vector<std::vector<std::size_t>> closing_;
  std::vector<std::vector<std::size_t>> anchors_;
  std::vector<char> shadow_;
  std::vector<std::vector<Vertex>> neighbours_;
  std::vector<Vertex> image_;
  std::vector<char> used_;
  const std::vector<char>* allowed_ = nullptr;
  bool stop_ = false;
};

void check_same_uniformity(const Hypergraph& h, const Pattern& p) {
  if (h.uniformity() != p.uniformity()) {
    throw InvalidArgument("host is " + std::to_string(h.uniformity()) + "-uniform but pattern is " +
                          std::to_string(p.uniformity()) + "-uniform");
  }
}

}  // namespace

bool spans_copy(const Hypergraph& h, const VertexSet& s, const Pattern& p) {
  check_same_uniformity(h, p);
  if (s.size() != p.order()) throw InvalidArgument("vertex set size differs from pattern order");
  std::vector<char> allowed(h.order(), 0);
  for (auto v : s) {
    if (v >= h.order()) throw InvalidArgument("vertex outside host");
    allowed[v] = 1;
  }
  bool found = false;
  Embedder(h, p).run(allowed, [&](const std::vector<Vertex>&) {
    found = true;
    return false;
  });
  return found;
}

std::vector<VertexSet> enumerate_copies(const Hypergraph& h, const Pattern& p) {
  check_same_uniformity(h, p);
  if (p.graph().edge_count() == 1 && p.order() == p.uniformity()) {
    std::vector<VertexSet> out;
    for (const auto& e : h.edges()) out.emplace_back(e);
    return out;
  }
  std::set<std::vector<Vertex>> seen;
  const std::vector<char> everything;
  Embedder(h, p).run(everything, [&](const std::vector<Vertex>& image) {
    auto s = image;
    std::sort(s.begin(), s.end());
    seen.insert(std::move(s));
    return true;
  });
  std::vector<VertexSet> out;
  out.reserve(seen.size());
  for (const auto& s : seen) out.emplace_back(s);
  return out;
}

namespace {

// Restricted-growth colourings: each unordered partition into at most
// `colours` independent classes is visited once.
template <typename Fn>
void for_each_colouring(const Hypergraph& f, unsigned colours, Fn&& fn) {
  const std::size_t m = f.order();
  std::vector<unsigned> colour(m, 0);
  std::function<bool(std::size_t, unsigned)> go = [&](std::size_t v, unsigned used) -> bool {
    if (v == m) return fn(colour, used);
    unsigned limit = std::min(used + 1, colours);
    for (unsigned c = 0; c < limit; ++c) {
      bool ok = true;
      for (auto ei : f.incident(static_cast<Vertex>(v))) {
        for (auto w : f.edges()[ei])
          if (w < v && colour[w] == c) {
            ok = false;
            break;
          }
        if (!ok) break;
      }
      if (!ok) continue;
      colour[v] = c;
      if (!go(v + 1, std::max(used, c + 1))) return false;
    }
    return true;
  };
  go(0, 0);
}

}  // namespace

GraphChromaticStats graph_stats(const Pattern& p) {
  const Hypergraph& f = p.graph();
  if (f.uniformity() != 2) throw InvalidArgument("graph_stats needs a 2-uniform pattern");
  const std::size_t m = f.order();
  GraphChromaticStats st;
  for (unsigned c = 1; c <= m; ++c) {
    bool any = false;
    for_each_colouring(f, c, [&](const std::vector<unsigned>&, unsigned) {
      any = true;
      return false;
    });
    if (any) {
      st.chi = c;
      break;
    }
  }
  st.sigma = static_cast<unsigned>(m);
  for_each_colouring(f, st.chi, [&](const std::vector<unsigned>& colour, unsigned used) {
    if (used != st.chi) return true;
    std::vector<unsigned> sizes(st.chi, 0);
    for (auto c : colour) ++sizes[c];
    std::sort(sizes.begin(), sizes.end());
    st.sigma = std::min(st.sigma, sizes.front());
    for (std::size_t i = 0; i + 1 < sizes.size(); ++i) st.dset.insert(sizes[i + 1] - sizes[i]);
    return true;
  });
  unsigned g = 0;
  for (auto d : st.dset) g = std::gcd(g, d);
  if (g != 0) st.hcf_chi = g;

  // component orders
  std::vector<int> comp(m, -1);
  unsigned hc = 0;
  for (Vertex s = 0; s < m; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<Vertex> stack{s};
    comp[s] = static_cast<int>(s);
    unsigned size = 0;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      ++size;
      for (auto ei : f.incident(v))
        for (auto w : f.edges()[ei])
          if (comp[w] < 0) {
            comp[w] = static_cast<int>(s);
            stack.push_back(w);
          }
    }
    hc = std::gcd(hc, size);
  }
  st.hcf_c = hc;

  if (st.chi != 2) {
    st.hcf_is_one = st.hcf_chi && *st.hcf_chi == 1;
  } else {
    st.hcf_is_one = st.hcf_c == 1 && st.hcf_chi && *st.hcf_chi <= 2;
  }
  auto mm = static_cast<std::int64_t>(m);
  st.chi_cr = Rational((st.chi - 1) * mm, mm - st.sigma);
  st.chi_star = st.hcf_is_one ? st.chi_cr : Rational(st.chi);
  return st;
}

PartiteStats partite_stats(const Pattern& p) {
  const Hypergraph& f = p.graph();
  const unsigned k = f.uniformity();
  const std::size_t m = f.order();
  PartiteStats st;
  bool any = false;
  unsigned best_min = static_cast<unsigned>(m) + 1;
  std::vector<std::size_t> best_sizes;
  // a proper k-colouring of the edges' vertices with all classes distinct
  // inside each edge is exactly a realisation
  for_each_colouring(f, k, [&](const std::vector<unsigned>& colour, unsigned used) {
    if (used != k) return true;
    any = true;
    std::vector<std::size_t> sizes(k, 0);
    for (auto c : colour) ++sizes[c];
    for (auto a : sizes) {
      st.sset.insert(static_cast<unsigned>(a));
      for (auto b : sizes) st.dset.insert(static_cast<unsigned>(a > b ? a - b : b - a));
    }
    std::sort(sizes.begin(), sizes.end());
    auto smallest = static_cast<unsigned>(sizes.front());
    if (smallest < best_min || (smallest == best_min && sizes < best_sizes)) {
      best_min = smallest;
      best_sizes = sizes;
    }
    return true;
  });
  if (!any) throw InvalidArgument("pattern has no " + std::to_string(k) + "-partite realisation");
  unsigned g = 0;
  for (auto d : st.dset) g = std::gcd(g, d);
  if (g != 0) st.gcd_f = g;
  st.sigma = Rational(best_min, static_cast<std::int64_t>(m));
  st.min_realisation = best_sizes;
  return st;
}

Pattern completed_partite(const Pattern& p) {
  return complete_partite(partite_stats(p).min_realisation);
}

}  // namespace hyperpack
