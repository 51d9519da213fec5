#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperpack/lattice.hpp"
#include "hyperpack/partition.hpp"
#include "hyperpack/pattern.hpp"
#include "hyperpack/reach.hpp"

namespace hyperpack {

enum class Verdict { Yes, No, PreconditionUnmet };
std::string to_string(Verdict v);

struct PipelineConfig {
  unsigned l = 0;  // 0 means k-1
  Rational delta{3, 5};
  std::optional<std::uint64_t> q;  // overrides the pipeline's solubility budget
  ReachParams reach;
  MuParams mu;
  Rational alpha{1, 100};
  Rational eta{1, 20};
  Rational gamma{1, 20};
  std::size_t oracle_cap = kDefaultOracleCap;
};

// A packing of at most q copies whose leftover index vector lies in L.
struct QSolution {
  std::vector<VertexSet> packing;
  IndexVector leftover;
};

// Every coordinate-i entry of the lattice generators and of every copy is
// divisible by modulus, but the whole-vertex-set vector's is not.
struct CoordinateObstruction {
  std::size_t coordinate = 0;
  std::int64_t modulus = 0;
  std::int64_t value = 0;
};

struct Decision {
  Verdict verdict = Verdict::PreconditionUnmet;
  std::string route;        // which branch produced the verdict
  std::string precondition;  // failed hypothesis, when PRECONDITION_UNMET
  std::string detail;
  bool oracle_substituted = false;

  std::optional<ClosedPartition> partition;
  std::optional<RobustIndexSet> index_set;
  std::optional<IndexLattice> lattice;
  std::optional<CosetGroup> coset;
  std::uint64_t q = 0;
  IndexVector full_vector;
  std::optional<std::uint64_t> full_residue;
  std::vector<std::uint64_t> copy_residues;  // distinct, ascending
  std::optional<QSolution> solution;
  std::optional<CoordinateObstruction> obstruction;
  std::optional<std::vector<VertexSet>> oracle_packing;  // balanced route only

  std::vector<std::pair<std::string, double>> timings;  // seconds per stage
};

// Searches packings of at most q copies for one whose leftover lies in lat.
// Candidate type multisets are filtered arithmetically before looking for a
// disjoint realisation.
std::optional<QSolution> q_soluble(const Hypergraph& h, const Pattern& p, const Partition& part,
                                   const IndexLattice& lat, std::uint64_t q);
std::optional<QSolution> q_soluble(const std::vector<VertexSet>& copies, std::size_t n,
                                   const Partition& part, const IndexLattice& lat, std::uint64_t q);

Decision decide_pm(const Hypergraph& h, const PipelineConfig& config);
Decision decide_pack_graph(const Hypergraph& g, const Pattern& p, const PipelineConfig& config);
Decision decide_pack_partite(const Hypergraph& h, const Pattern& p, const PipelineConfig& config);

// Exact answer by backtracking. Throws CapExceeded above cap vertices.
bool oracle_decide(const Hypergraph& h, const Pattern& p, std::size_t cap = kDefaultOracleCap);
std::optional<std::vector<VertexSet>> oracle_packing(const Hypergraph& h, const Pattern& p,
                                                     std::size_t cap = kDefaultOracleCap);

// Re-checks a decision's certificate from scratch; returns an empty string
// when it holds, otherwise what failed.
std::string verify_certificate(const Hypergraph& h, const Pattern& p, const Decision& d);

}  // namespace hyperpack
