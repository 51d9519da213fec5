#include "hyperpack/lattice.hpp"

#include <algorithm>
#include <limits>

#include "hyperpack/error.hpp"

namespace hyperpack {

IndexVector index_vector(const Partition& part, const VertexSet& s) {
  IndexVector out(part.size(), 0);
  for (auto v : s) {
    bool found = false;
    for (std::size_t i = 0; i < part.size() && !found; ++i)
      if (part.classes[i].contains(v)) {
        ++out[i];
        found = true;
      }
    if (!found) throw InvalidArgument("vertex " + std::to_string(v) + " is in no partition class");
  }
  return out;
}

RobustIndexSet robust_index_set(const std::vector<VertexSet>& copies, const Partition& part,
                                std::size_t n, std::size_t m, const MuParams& mu) {
  RobustIndexSet out;
  out.d = part.size();
  out.params = mu;
  if (mu.mode == ThresholdMode::ExactRobust) {
    if (mu.explicit_count < 1) throw InvalidArgument("mu count must be at least 1");
    out.threshold = mu.explicit_count;
  } else {
    if (mu.mu <= 0 || mu.mu >= 1) throw InvalidArgument("mu must lie in (0,1)");
    BigInt num = mu.mu.numerator();
    for (std::size_t i = 0; i < m; ++i) num *= n;
    BigInt den = mu.mu.denominator();
    BigInt t = (num + den - 1) / den;
    out.threshold = t > std::numeric_limits<std::uint64_t>::max()
                        ? std::numeric_limits<std::uint64_t>::max()
                        : std::max<std::uint64_t>(1, t.convert_to<std::uint64_t>());
  }
  auto owner = part.class_of(n);
  for (const auto& c : copies) {
    IndexVector v(out.d, 0);
    for (auto x : c) {
      if (owner[x] < 0) throw InvalidArgument("copy vertex " + std::to_string(x) + " is in no class");
      ++v[owner[x]];
    }
    ++out.counts[v];
  }
  for (const auto& [v, count] : out.counts)
    if (count >= out.threshold) out.vectors.insert(v);
  return out;
}

RobustIndexSet robust_index_set(const Hypergraph& h, const Pattern& p, const Partition& part,
                                const MuParams& mu) {
  return robust_index_set(enumerate_copies(h, p), part, h.order(), p.order(), mu);
}

IndexLattice lattice_from(const std::vector<IndexVector>& gens, std::size_t d) {
  IndexLattice lat;
  lat.d = d;
  lat.generators = gens;
  IntMatrix<BigInt> a(static_cast<Eigen::Index>(gens.size()), static_cast<Eigen::Index>(d));
  for (std::size_t r = 0; r < gens.size(); ++r) {
    if (gens[r].size() != d) throw InvalidArgument("generator dimension mismatch");
    for (std::size_t c = 0; c < d; ++c) a(r, c) = gens[r][c];
  }
  lat.hnf_basis = hermite_normal_form<BigInt>(a);
  return lat;
}

IndexLattice lattice_from(const RobustIndexSet& gens) {
  return lattice_from(std::vector<IndexVector>(gens.vectors.begin(), gens.vectors.end()), gens.d);
}

namespace {

IntRow<BigInt> to_row(const IndexVector& v) {
  IntRow<BigInt> row(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) row(i) = v[i];
  return row;
}

std::int64_t coordinate_sum(const IndexVector& v) {
  std::int64_t s = 0;
  for (auto x : v) s += x;
  return s;
}

// (|v|/m, v_2, ..., v_d): coordinates against the basis m*e_1, e_i - e_1
IntRow<BigInt> lmax_coordinates(std::size_t m, const IndexVector& v) {
  IntRow<BigInt> x = to_row(v);
  x(0) = BigInt(coordinate_sum(v) / static_cast<std::int64_t>(m));
  return x;
}

}  // namespace

bool member(const IndexLattice& lat, const IndexVector& v) {
  if (v.size() != lat.d) throw InvalidArgument("dimension mismatch in lattice membership");
  if (lat.rank() == 0) return std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; });
  return reduce_by_basis<BigInt>(lat.hnf_basis, to_row(v)).isZero();
}

bool lmax_member(std::size_t m, const IndexVector& v) {
  if (m == 0) throw InvalidArgument("m must be positive");
  return coordinate_sum(v) % static_cast<std::int64_t>(m) == 0;
}

CosetGroup coset_group(const IndexLattice& lat, std::size_t m) {
  CosetGroup q;
  q.d = lat.d;
  q.m = m;
  IntMatrix<BigInt> b(lat.hnf_basis.rows(), static_cast<Eigen::Index>(lat.d));
  for (Eigen::Index r = 0; r < lat.hnf_basis.rows(); ++r) {
    IndexVector v(lat.d);
    for (std::size_t c = 0; c < lat.d; ++c) v[c] = lat.hnf_basis(r, c).convert_to<std::int64_t>();
    if (!lmax_member(m, v)) {
      throw LatticeError("lattice basis vector " + to_string(v) + " has coordinate sum not divisible by " +
                         std::to_string(m));
    }
    b.row(r) = lmax_coordinates(m, v);
  }
  for (const auto& g : lat.generators)
    if (!lmax_member(m, g)) {
      throw LatticeError("generator " + to_string(g) + " has coordinate sum not divisible by " +
                         std::to_string(m));
    }
  q.lmax_hnf = hermite_normal_form<BigInt>(b);
  q.divisors = elementary_divisors<BigInt>(b);
  q.finite = q.divisors.size() == lat.d && lat.d > 0;
  if (lat.d == 0) q.finite = true;
  q.order = 1;
  if (q.finite) {
    for (const auto& dv : q.divisors) q.order *= dv;
  } else {
    q.order = 0;
  }
  return q;
}

std::uint64_t residue(const CosetGroup& q, const IndexVector& v) {
  if (!q.finite) throw LatticeError("coset group is infinite");
  if (v.size() != q.d) throw InvalidArgument("dimension mismatch in residue");
  if (!lmax_member(q.m, v)) throw LatticeError("vector " + to_string(v) + " is outside L_max");
  if (q.order > std::numeric_limits<std::int64_t>::max()) throw LatticeError("coset group too large");
  if (q.d == 0) return 0;
  auto x = reduce_by_basis<BigInt>(q.lmax_hnf, lmax_coordinates(q.m, v));
  BigInt id = 0;
  BigInt radix = 1;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    id += x(i) * radix;
    radix *= q.lmax_hnf(i, i);
  }
  return id.convert_to<std::uint64_t>();
}

IndexVector residue_representative(const CosetGroup& q, const IndexVector& v) {
  if (!q.finite) throw LatticeError("coset group is infinite");
  if (!lmax_member(q.m, v)) throw LatticeError("vector " + to_string(v) + " is outside L_max");
  if (q.d == 0) return {};
  auto x = reduce_by_basis<BigInt>(q.lmax_hnf, lmax_coordinates(q.m, v));
  IndexVector out(q.d, 0);
  std::int64_t first = x(0).convert_to<std::int64_t>() * static_cast<std::int64_t>(q.m);
  for (std::size_t i = 1; i < q.d; ++i) {
    out[i] = x(i).convert_to<std::int64_t>();
    first -= out[i];
  }
  out[0] = first;
  return out;
}

std::string to_string(const IndexVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

}  // namespace hyperpack
