#pragma once

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <string_view>

namespace nilherm {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

// "p/q" in lowest terms, or "p" when q == 1.
std::string to_string(const Rational& x);

// Accepts "p", "p/q", with optional sign; result is canonical. Throws ParseError.
Rational parse_rational(std::string_view text);

inline bool is_zero(const Rational& x) { return x.sign() == 0; }

// Exact square root when x is the square of a rational.
bool rational_sqrt(const Rational& x, Rational& root);

}  // namespace nilherm
