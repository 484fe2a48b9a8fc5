#include "nilherm/rational.hpp"

#include <cctype>

#include "nilherm/error.hpp"

namespace nilherm {

std::string to_string(const Rational& x) {
  const Integer num = boost::multiprecision::numerator(x);
  const Integer den = boost::multiprecision::denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

Integer parse_integer(std::string_view s, std::string_view whole, bool allow_sign) {
  std::size_t pos = 0;
  if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) pos = 1;
  if (pos == s.size()) throw ParseError("malformed rational '" + std::string(whole) + "'");
  for (std::size_t k = pos; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) {
      throw ParseError("malformed rational '" + std::string(whole) + "'");
    }
  }
  std::string digits(s);
  if (digits[0] == '+') digits.erase(0, 1);
  return Integer(digits);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  const std::string_view s = text.substr(b, e - b);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(s, text, true));
  const Integer num = parse_integer(s.substr(0, slash), text, true);
  const Integer den = parse_integer(s.substr(slash + 1), text, false);
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(num) / Rational(den);
}

bool rational_sqrt(const Rational& x, Rational& root) {
  if (x.sign() < 0) return false;
  const Integer num = boost::multiprecision::numerator(x);
  const Integer den = boost::multiprecision::denominator(x);
  const Integer rn = boost::multiprecision::sqrt(num);
  const Integer rd = boost::multiprecision::sqrt(den);
  if (rn * rn != num || rd * rd != den) return false;
  root = Rational(rn) / Rational(rd);
  return true;
}

}  // namespace nilherm
