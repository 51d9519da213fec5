#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace hyperpack {

using Rational = boost::rational<std::int64_t>;

// Accepts "3", "-2/5", "0.375". Decimals are converted exactly.
Rational parse_fraction(std::string_view text);

std::string to_string(const Rational& r);

inline double to_double(const Rational& r) {
  return boost::rational_cast<double>(r);
}

}  // namespace hyperpack
