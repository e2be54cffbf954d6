#include "unimig/fraction.hpp"

#include <charconv>
#include <numeric>

namespace unimig {

Fraction::Fraction(std::int64_t numerator, std::int64_t denominator)
    : num(numerator), den(denominator) {
  if (den <= 0) throw ParseError("fraction denominator must be positive");
  if (num < 0) throw ParseError("negative fractions are not representable here");
  const std::int64_t g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

std::optional<std::int64_t> Fraction::times_integral(std::int64_t k) const {
  const std::int64_t p = num * k;
  if (p % den != 0) return std::nullopt;
  return p / den;
}

std::string Fraction::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw ParseError("malformed numeric literal '" + std::string(whole) + "'");
  return v;
}

}  // namespace

Fraction parse_fraction(std::string_view text) {
  if (text.empty()) throw ParseError("empty numeric literal");
  if (text.front() == '-') throw ParseError("negative literal '" + std::string(text) + "'");

  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const std::int64_t p = parse_int(text.substr(0, slash), text);
    const std::int64_t q = parse_int(text.substr(slash + 1), text);
    if (q == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Fraction(p, q);
  }

  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const std::string_view whole = text.substr(0, dot);
    const std::string_view frac = text.substr(dot + 1);
    if (frac.empty()) throw ParseError("malformed decimal '" + std::string(text) + "'");
    if (frac.size() > 15) throw ParseError("decimal too long '" + std::string(text) + "'");
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const std::int64_t w = whole.empty() ? 0 : parse_int(whole, text);
    const std::int64_t f = parse_int(frac, text);
    return Fraction(w * scale + f, scale);
  }

  return Fraction(parse_int(text, text), 1);
}

}  // namespace unimig
