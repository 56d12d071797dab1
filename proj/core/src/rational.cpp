#include "nilsec/rational.hpp"

#include "nilsec/errors.hpp"

#include <charconv>

namespace nilsec {

std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

namespace {
std::int64_t parse_int(std::string_view s) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
    throw ParseError("not an integer: '" + std::string(s) + "'");
  return v;
}
}  // namespace

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text));
  std::int64_t den = parse_int(std::string_view(text).substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in '" + text + "'");
  return Rational(parse_int(std::string_view(text).substr(0, slash)), den);
}

}  // namespace nilsec
