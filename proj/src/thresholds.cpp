#include "hyperpack/thresholds.hpp"

#include "hyperpack/error.hpp"

namespace hyperpack {

ThresholdEntry fractional_matching_threshold(unsigned k, unsigned l) {
  if (k < 2 || l < 1 || l >= k) throw InvalidArgument("need 1 <= l <= k-1");
  ThresholdEntry e{k, l, std::nullopt, "unknown"};
  const bool upper_half = 2 * l >= k;
  const bool middle = 2 * l + 1 == k;
  if (upper_half || middle) {
    Rational keep(1);
    for (unsigned i = 0; i < k - l; ++i) keep *= Rational(k - 1, k);
    e.value = Rational(1) - keep;
    e.source = upper_half ? "proved for l >= k/2" : "proved for l = (k-1)/2";
  }
  return e;
}

std::optional<Rational> matching_degree_threshold(unsigned k, unsigned l) {
  auto e = fractional_matching_threshold(k, l);
  if (!e.value) return std::nullopt;
  return std::max(Rational(1, 3), *e.value);
}

std::vector<ThresholdEntry> threshold_table(unsigned max_k) {
  std::vector<ThresholdEntry> out;
  for (unsigned k = 2; k <= max_k; ++k)
    for (unsigned l = 1; l < k; ++l) out.push_back(fractional_matching_threshold(k, l));
  return out;
}

}  // namespace hyperpack
