#pragma once

#include <string>
#include <string_view>

#include "nilherm/lie_algebra.hpp"

namespace nilherm {

// "(0,0,0,12,13,23)": entry i lists de^i as a sum of e^jk (single-digit,
// one-based indices), with [e_j, e_k] = sum_i c^i_jk e_i. Terms may carry a
// coefficient, "2*13", "-1/2*13" or the shorthand "213".
LieAlgebra parse_salamon(std::string_view text, Index expected_dim = -1, std::string name = {});

// Inverse of parse_salamon; requires dim <= 9.
std::string to_salamon(const LieAlgebra& l);

}  // namespace nilherm
