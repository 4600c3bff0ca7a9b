#pragma once

#include <array>
#include <string>
#include <string_view>

#include "sas/form.hpp"

namespace sas {

using VariableNames = std::array<std::string, 3>;

inline const VariableNames kXYZ{"x", "y", "z"};

// Grammar: sums and differences of products of factors; a factor is an
// integer or rational literal ("3", "3/11"), a variable, or a parenthesised
// expression, optionally raised to a nonnegative integer power with '^'.
// Whitespace is insignificant. Throws SyntaxError.
Polynomial parse_polynomial(std::string_view text, const VariableNames& names = kXYZ);

// Expanded homogeneous form; throws NotHomogeneous on mixed degrees.
Form parse_form(std::string_view text, const VariableNames& names = kXYZ);

// Parses a polynomial in the two affine variables and homogenizes it; the
// homogenizing variable occupies the third slot (z).
Form parse_affine_and_homogenize(std::string_view text, const std::array<std::string, 2>& affine = {"x", "y"});

}  // namespace sas
