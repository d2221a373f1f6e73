// Expression grammar for polynomials in x and z over F_p:
//   expr   := term (('+' | '-') term)*
//   term   := integer | [integer '*'] varpow ['*' varpow]
//   varpow := ('x' | 'z') ['^' integer]
// At most one x-power and one z-power per term; whitespace is ignored;
// coefficients reduce mod p.  Anything outside the grammar (parentheses,
// repeated variables, oversized exponents) is UnsupportedStructure; malformed
// text is SyntaxError carrying a byte offset.
#pragma once

#include <string>

#include "hyperjac/bivar_poly.hpp"

namespace hyperjac::ff {

struct ParsedPoly {
    BivarPoly poly;
    bool uses_z = false;  // true when the source text mentions z

    // Collapse to a univariate polynomial in x. pre: !uses_z.
    FpPoly univariate() const;
};

ParsedPoly parse_poly(const std::string& text, const PrimeField& F);

// Canonical form printed with x-degrees descending, z-degrees descending
// within each, coefficients in [0, p), '+'-joined.  parse(canonical_string(P))
// reproduces P exactly.
std::string canonical_string(const BivarPoly& F);

}  // namespace hyperjac::ff
