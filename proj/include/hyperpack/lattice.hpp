#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "hyperpack/partition.hpp"
#include "hyperpack/pattern.hpp"
#include "hyperpack/reach.hpp"

namespace hyperpack {

using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;

}  // namespace hyperpack

namespace Eigen {
template <>
struct NumTraits<hyperpack::BigInt> : GenericNumTraits<hyperpack::BigInt> {
  using Real = hyperpack::BigInt;
  using NonInteger = hyperpack::BigInt;
  using Nested = hyperpack::BigInt;
  using Literal = hyperpack::BigInt;
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 3,
    MulCost = 3
  };
};
}  // namespace Eigen

namespace hyperpack {

template <typename Scalar>
using IntMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using IntRow = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;

template <typename Scalar>
Scalar floor_div(const Scalar& a, const Scalar& b) {
  Scalar q = a / b;
  if (q * b != a && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

template <typename Scalar>
Scalar abs_value(const Scalar& a) {
  return a < 0 ? Scalar(-a) : a;
}

// Row-style Hermite normal form of the row span of a: echelon rows, positive
// pivots, entries above each pivot reduced into [0, pivot). Zero rows dropped.
template <typename Scalar>
IntMatrix<Scalar> hermite_normal_form(IntMatrix<Scalar> a) {
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  Eigen::Index pr = 0;
  std::vector<Eigen::Index> pivot_cols;
  for (Eigen::Index c = 0; c < cols && pr < rows; ++c) {
    while (true) {
      Eigen::Index best = -1;
      for (Eigen::Index r = pr; r < rows; ++r)
        if (a(r, c) != 0 && (best < 0 || abs_value<Scalar>(a(r, c)) < abs_value<Scalar>(a(best, c)))) best = r;
      if (best < 0) break;
      a.row(pr).swap(a.row(best));
      bool done = true;
      for (Eigen::Index r = pr + 1; r < rows; ++r) {
        if (a(r, c) == 0) continue;
        Scalar q = floor_div<Scalar>(a(r, c), a(pr, c));
        a.row(r) -= q * a.row(pr);
        if (a(r, c) != 0) done = false;
      }
      if (done) break;
    }
    if (a(pr, c) == 0) continue;
    if (a(pr, c) < 0) a.row(pr) = -a.row(pr);
    for (Eigen::Index r = 0; r < pr; ++r) {
      Scalar q = floor_div<Scalar>(a(r, c), a(pr, c));
      if (q != 0) a.row(r) -= q * a.row(pr);
    }
    pivot_cols.push_back(c);
    ++pr;
  }
  return a.topRows(pr);
}

// Column of each row's leading entry in an echelon basis.
template <typename Scalar>
std::vector<Eigen::Index> pivot_columns(const IntMatrix<Scalar>& hnf) {
  std::vector<Eigen::Index> out;
  for (Eigen::Index r = 0; r < hnf.rows(); ++r) {
    Eigen::Index c = 0;
    while (c < hnf.cols() && hnf(r, c) == 0) ++c;
    out.push_back(c);
  }
  return out;
}

// Subtracts multiples of the echelon rows from v so every pivot coordinate
// lands in [0, pivot). v is in the row span iff the result is zero.
template <typename Scalar>
IntRow<Scalar> reduce_by_basis(const IntMatrix<Scalar>& hnf, IntRow<Scalar> v) {
  auto piv = pivot_columns(hnf);
  for (Eigen::Index r = 0; r < hnf.rows(); ++r) {
    Scalar q = floor_div<Scalar>(v(piv[r]), hnf(r, piv[r]));
    if (q != 0) v -= q * hnf.row(r);
  }
  return v;
}

// Nonzero elementary divisors d_1 | d_2 | ... of an integer matrix.
template <typename Scalar>
std::vector<Scalar> elementary_divisors(IntMatrix<Scalar> a) {
  std::vector<Scalar> out;
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  for (Eigen::Index t = 0; t < std::min(rows, cols); ++t) {
    // move the smallest nonzero entry of the trailing block to (t,t)
    while (true) {
      Eigen::Index br = -1;
      Eigen::Index bc = -1;
      for (Eigen::Index r = t; r < rows; ++r)
        for (Eigen::Index c = t; c < cols; ++c)
          if (a(r, c) != 0 && (br < 0 || abs_value<Scalar>(a(r, c)) < abs_value<Scalar>(a(br, bc)))) {
            br = r;
            bc = c;
          }
      if (br < 0) break;
      a.row(t).swap(a.row(br));
      a.col(t).swap(a.col(bc));
      bool clean = true;
      for (Eigen::Index r = t + 1; r < rows; ++r) {
        Scalar q = floor_div<Scalar>(a(r, t), a(t, t));
        if (q != 0) a.row(r) -= q * a.row(t);
        if (a(r, t) != 0) clean = false;
      }
      for (Eigen::Index c = t + 1; c < cols; ++c) {
        Scalar q = floor_div<Scalar>(a(t, c), a(t, t));
        if (q != 0) a.col(c) -= q * a.col(t);
        if (a(t, c) != 0) clean = false;
      }
      if (!clean) continue;
      // divisibility: pivot must divide the rest of the block
      Eigen::Index bad_r = -1;
      for (Eigen::Index r = t + 1; r < rows && bad_r < 0; ++r)
        for (Eigen::Index c = t + 1; c < cols; ++c)
          if (a(r, c) % a(t, t) != 0) {
            bad_r = r;
            break;
          }
      if (bad_r < 0) break;
      a.row(t) += a.row(bad_r);
    }
    if (a(t, t) == 0) break;
    out.push_back(abs_value<Scalar>(a(t, t)));
  }
  return out;
}

using IndexVector = std::vector<std::int64_t>;

// coordinate i = |s ∩ V_i|; throws if s leaves the partitioned universe
IndexVector index_vector(const Partition& part, const VertexSet& s);

struct MuParams {
  ThresholdMode mode = ThresholdMode::ExactRobust;
  std::uint64_t explicit_count = 1;
  Rational mu{1, 1000};
};

struct RobustIndexSet {
  std::size_t d = 0;
  std::set<IndexVector> vectors;
  std::map<IndexVector, std::uint64_t> counts;  // every realised vector
  MuParams params;
  std::uint64_t threshold = 1;
};

RobustIndexSet robust_index_set(const std::vector<VertexSet>& copies, const Partition& part,
                                std::size_t n, std::size_t m, const MuParams& mu);
RobustIndexSet robust_index_set(const Hypergraph& h, const Pattern& p, const Partition& part,
                                const MuParams& mu);

struct IndexLattice {
  std::size_t d = 0;
  std::vector<IndexVector> generators;
  IntMatrix<BigInt> hnf_basis;  // rank x d

  std::size_t rank() const { return static_cast<std::size_t>(hnf_basis.rows()); }
};

IndexLattice lattice_from(const std::vector<IndexVector>& gens, std::size_t d);
IndexLattice lattice_from(const RobustIndexSet& gens);

bool member(const IndexLattice& lat, const IndexVector& v);
bool lmax_member(std::size_t m, const IndexVector& v);

// Q = L_max / L.
struct CosetGroup {
  std::size_t d = 0;
  std::size_t m = 0;
  bool finite = false;
  BigInt order = 0;  // meaningful when finite
  std::vector<BigInt> divisors;
  // HNF of L in L_max coordinates (|v|/m, v_2, ..., v_d)
  IntMatrix<BigInt> lmax_hnf;
};

// Throws LatticeError if a generator of lat lies outside L_max.
CosetGroup coset_group(const IndexLattice& lat, std::size_t m);

// Coset id in [0, order). Throws LatticeError for v outside L_max or for an
// infinite group.
std::uint64_t residue(const CosetGroup& q, const IndexVector& v);
// Canonical representative of v's coset.
IndexVector residue_representative(const CosetGroup& q, const IndexVector& v);

std::string to_string(const IndexVector& v);

}  // namespace hyperpack
