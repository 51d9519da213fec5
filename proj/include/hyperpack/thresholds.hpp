#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperpack/rational.hpp"

namespace hyperpack {

// Fractional perfect matching threshold c*_{k,l}: the smallest c such that
// delta_l(H) >= (c + o(1)) C(n-l, k-l) forces a perfect fractional matching.
struct ThresholdEntry {
  unsigned k = 0;
  unsigned l = 0;
  std::optional<Rational> value;  // nullopt: not known
  std::string source;
};

// Known values: c*_{k,l} = 1 - (1 - 1/k)^(k-l) when l >= k/2 and when
// l = (k-1)/2. Everything else is unknown and stays unknown here.
ThresholdEntry fractional_matching_threshold(unsigned k, unsigned l);

// max(1/3, c*_{k,l}), or nullopt when c*_{k,l} is unknown.
std::optional<Rational> matching_degree_threshold(unsigned k, unsigned l);

std::vector<ThresholdEntry> threshold_table(unsigned max_k);

}  // namespace hyperpack
