#include "hyperpack/packing.hpp"

#include <algorithm>
#include <unordered_set>

#include "hyperpack/error.hpp"

namespace hyperpack {

Mask to_mask(const VertexSet& s) {
  Mask m = 0;
  for (auto v : s) {
    if (v >= kMaskVertices) throw InvalidArgument("vertex id too large for a 64-bit mask");
    m |= Mask{1} << v;
  }
  return m;
}

VertexSet from_mask(Mask m) {
  std::vector<Vertex> out;
  while (m) {
    out.push_back(static_cast<Vertex>(lowest_bit(m)));
    m &= m - 1;
  }
  return VertexSet(std::move(out));
}

namespace {

// Twin classes: u ~ v when swapping u and v maps E(h) onto itself.
std::vector<Mask> twin_classes(const Hypergraph& h) {
  const std::size_t n = h.order();
  std::unordered_set<Mask> edge_masks;
  for (const auto& e : h.edges()) {
    Mask m = 0;
    for (auto v : e) m |= Mask{1} << v;
    edge_masks.insert(m);
  }
  auto are_twins = [&](Vertex u, Vertex v) {
    if (h.incident(u).size() != h.incident(v).size()) return false;
    const Mask bu = Mask{1} << u;
    const Mask bv = Mask{1} << v;
    for (auto ei : h.incident(u)) {
      Mask e = 0;
      for (auto w : h.edges()[ei]) e |= Mask{1} << w;
      if (e & bv) continue;
      if (!edge_masks.count((e & ~bu) | bv)) return false;
    }
    return true;
  };
  std::vector<int> rep(n, -1);
  std::vector<Mask> classes;
  for (Vertex u = 0; u < n; ++u) {
    if (rep[u] >= 0) continue;
    Mask cls = Mask{1} << u;
    for (Vertex v = u + 1; v < n; ++v)
      if (rep[v] < 0 && are_twins(u, v)) {
        rep[v] = static_cast<int>(u);
        cls |= Mask{1} << v;
      }
    if (popcount(cls) >= 2) classes.push_back(cls);
  }
  return classes;
}

}  // namespace

PackingSolver::PackingSolver(const Hypergraph& h, const Pattern& p, std::size_t cap)
    : n_(h.order()), m_(p.order()) {
  if (n_ > cap) {
    throw CapExceeded("host has " + std::to_string(n_) + " vertices, exact search cap is " +
                      std::to_string(cap));
  }
  if (n_ > kMaskVertices) throw CapExceeded("exact search supports at most 64 vertices");
  for (const auto& c : enumerate_copies(h, p)) copies_.push_back(to_mask(c));
  std::sort(copies_.begin(), copies_.end());
  by_lowest_.assign(n_, {});
  for (auto c : copies_) by_lowest_[lowest_bit(c)].push_back(c);
  twin_classes_ = twin_classes(h);
}

Mask PackingSolver::canonical(Mask w) const {
  for (auto cls : twin_classes_) {
    const int cnt = popcount(w & cls);
    w &= ~cls;
    Mask rest = cls;
    for (int i = 0; i < cnt; ++i) {
      w |= rest & (~rest + 1);
      rest &= rest - 1;
    }
  }
  return w;
}

bool PackingSolver::search(Mask w) {
  if (w == 0) return true;
  const Mask key = canonical(w);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  bool ok = false;
  // a copy covering the lowest vertex of w that lies inside w must contain
  // only vertices >= that vertex, so it is filed under it
  for (auto c : by_lowest_[lowest_bit(w)]) {
    if ((c & ~w) == 0 && search(w & ~c)) {
      ok = true;
      break;
    }
  }
  memo_.emplace(key, ok);
  return ok;
}

bool PackingSolver::packable(Mask w) {
  if (n_ < kMaskVertices && (w >> n_) != 0) throw InvalidArgument("mask outside host");
  if (popcount(w) % m_ != 0) return false;
  return search(w);
}

std::optional<std::vector<Mask>> PackingSolver::find_packing(Mask w) {
  if (!packable(w)) return std::nullopt;
  std::vector<Mask> out;
  while (w) {
    bool advanced = false;
    for (auto c : by_lowest_[lowest_bit(w)]) {
      if ((c & ~w) == 0 && search(w & ~c)) {
        out.push_back(c);
        w &= ~c;
        advanced = true;
        break;
      }
    }
    if (!advanced) throw Error("packing reconstruction failed");
  }
  return out;
}

bool has_perfect_packing_small(const Hypergraph& h, const Pattern& p, std::size_t cap) {
  if (h.order() > cap) {
    throw CapExceeded("host has " + std::to_string(h.order()) + " vertices, exact search cap is " +
                      std::to_string(cap));
  }
  if (h.order() % p.order() != 0) return false;
  PackingSolver solver(h, p, cap);
  return solver.packable(h.order() == 64 ? ~Mask{0} : (Mask{1} << h.order()) - 1);
}

}  // namespace hyperpack
