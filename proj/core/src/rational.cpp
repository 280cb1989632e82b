#include "pejm/rational.hpp"

#include <charconv>
#include <limits>

#include "pejm/errors.hpp"

namespace pejm {
namespace {

constexpr std::int64_t kLiteralLimit = std::numeric_limits<std::int32_t>::max();

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc{} || ptr != last) {
    throw InputError("malformed rational literal '" + std::string(whole) + "'");
  }
  if (value > kLiteralLimit || value < -kLiteralLimit) {
    throw InputError("rational literal out of range '" + std::string(whole) + "'");
  }
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_int(s, text));
  }
  const std::int64_t num = parse_int(s.substr(0, slash), text);
  const std::string_view den_text = s.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
    throw InputError("denominator must be unsigned in '" + std::string(text) + "'");
  }
  const std::int64_t den = parse_int(den_text, text);
  if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::int64_t floor_to_int(const Rational& r) {
  const std::int64_t q = r.numerator() / r.denominator();
  const bool exact = q * r.denominator() == r.numerator();
  return (r.numerator() < 0 && !exact) ? q - 1 : q;
}

Rational floor_mod(const Rational& r, const Rational& m) {
  const Rational quotient = r / m;
  return r - Rational(floor_to_int(quotient)) * m;
}

}  // namespace pejm
