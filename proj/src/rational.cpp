#include "hyperpack/rational.hpp"

#include <charconv>

#include "hyperpack/error.hpp"

namespace hyperpack {

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw InvalidArgument("not a number: '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Rational parse_fraction(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto den = parse_int(text.substr(slash + 1), text);
    if (den == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
    return Rational(parse_int(text.substr(0, slash), text), den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    if (frac_part.size() > 15) throw InvalidArgument("too many decimals in '" + std::string(text) + "'");
    bool negative = !int_part.empty() && int_part.front() == '-';
    if (negative || (!int_part.empty() && int_part.front() == '+')) int_part.remove_prefix(1);
    std::int64_t whole = int_part.empty() ? 0 : parse_int(int_part, text);
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
    std::int64_t frac = frac_part.empty() ? 0 : parse_int(frac_part, text);
    if (frac < 0) throw InvalidArgument("not a number: '" + std::string(text) + "'");
    Rational r(whole * scale + frac, scale);
    return negative ? -r : r;
  }
  return Rational(parse_int(text, text));
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace hyperpack
