#include "nilherm/salamon.hpp"

#include <cctype>
#include <map>

namespace nilherm {

namespace {

std::string strip(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

// One signed term without its leading sign: "13", "213", "2*13", "1/2*13".
void parse_term(const std::string& term, const Rational& sign, Index dim, Index target,
                std::map<std::pair<Index, Index>, RVector>& acc, const std::string& whole) {
  auto fail = [&](const std::string& why) { throw ParseError("Salamon string '" + whole + "': " + why); };
  std::string coeff_text, pair;
  const auto star = term.find('*');
  if (star != std::string::npos) {
    coeff_text = term.substr(0, star);
    pair = term.substr(star + 1);
  } else {
    if (term.size() < 2) fail("term '" + term + "' needs two indices");
    coeff_text = term.substr(0, term.size() - 2);
    pair = term.substr(term.size() - 2);
  }
  if (pair.size() != 2 || !std::isdigit(static_cast<unsigned char>(pair[0])) ||
      !std::isdigit(static_cast<unsigned char>(pair[1])))
    fail("term '" + term + "' must end in two single-digit indices");
  Rational coeff(1);
  if (!coeff_text.empty()) {
    if (coeff_text.find_first_not_of("0123456789/") != std::string::npos) fail("bad coefficient '" + coeff_text + "'");
    coeff = parse_rational(coeff_text);
  }
  Index j = pair[0] - '0', k = pair[1] - '0';
  if (j < 1 || k < 1 || j > dim || k > dim) fail("index out of range in '" + term + "'");
  if (j == k) fail("repeated index in '" + term + "'");
  coeff *= sign;
  if (j > k) {
    std::swap(j, k);
    coeff = -coeff;
  }
  auto key = std::make_pair(j - 1, k - 1);
  auto it = acc.find(key);
  if (it == acc.end()) it = acc.emplace(key, RVector::Zero(dim)).first;
  it->second(target) += coeff;
}

void parse_entry(const std::string& entry, Index dim, Index target, std::map<std::pair<Index, Index>, RVector>& acc,
                 const std::string& whole) {
  if (entry.empty()) throw ParseError("Salamon string '" + whole + "': empty entry");
  if (entry == "0") return;
  std::size_t pos = 0;
  bool first = true;
  while (pos < entry.size()) {
    Rational sign(1);
    if (entry[pos] == '+' || entry[pos] == '-') {
      if (entry[pos] == '-') sign = -1;
      ++pos;
    } else if (!first) {
      throw ParseError("Salamon string '" + whole + "': expected sign");
    }
    std::size_t end = entry.find_first_of("+-", pos);
    if (end == std::string::npos) end = entry.size();
    parse_term(entry.substr(pos, end - pos), sign, dim, target, acc, whole);
    pos = end;
    first = false;
  }
}

}  // namespace

LieAlgebra parse_salamon(std::string_view text, Index expected_dim, std::string name) {
  const std::string s = strip(text);
  const std::string whole(text);
  if (s.size() < 2 || s.front() != '(' || s.back() != ')')
    throw ParseError("Salamon string '" + whole + "' must be parenthesized");
  std::vector<std::string> entries;
  std::string body = s.substr(1, s.size() - 2);
  std::size_t start = 0;
  while (true) {
    const auto comma = body.find(',', start);
    entries.push_back(body.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  const Index dim = static_cast<Index>(entries.size());
  if (dim > 9) throw ParseError("Salamon notation only supports dimension <= 9");
  if (expected_dim >= 0 && expected_dim != dim)
    throw ParseError("Salamon string '" + whole + "' has " + std::to_string(dim) + " entries, expected " +
                     std::to_string(expected_dim));
  std::map<std::pair<Index, Index>, RVector> acc;
  for (Index i = 0; i < dim; ++i) parse_entry(entries[static_cast<std::size_t>(i)], dim, i, acc, whole);
  std::vector<BracketEntry> brackets;
  for (auto& [key, c] : acc)
    if (!is_zero_matrix(c)) brackets.push_back({key.first, key.second, c});
  return LieAlgebra(dim, brackets, std::move(name));
}

std::string to_salamon(const LieAlgebra& l) {
  if (l.dim() > 9) throw SemanticError("salamon-dim", "Salamon notation only supports dimension <= 9");
  const auto brackets = l.brackets();
  std::string out = "(";
  for (Index i = 0; i < l.dim(); ++i) {
    if (i > 0) out += ",";
    std::string entry;
    for (const auto& b : brackets) {
      const Rational& c = b.coeffs(i);
      if (is_zero(c)) continue;
      const std::string pair = std::to_string(b.i + 1) + std::to_string(b.j + 1);
      const Rational mag = c.sign() < 0 ? Rational(-c) : c;
      if (c.sign() < 0) {
        entry += "-";
      } else if (!entry.empty()) {
        entry += "+";
      }
      if (mag != 1) entry += to_string(mag) + "*";
      entry += pair;
    }
    out += entry.empty() ? "0" : entry;
  }
  return out + ")";
}

}  // namespace nilherm
