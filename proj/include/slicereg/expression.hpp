#pragma once

// Polynomials written as expressions such as "(q - i)*(q - j)" or "q² + qi".
//
// Grammar (whitespace ignored):
//   expr   := ['+'|'-'] term (('+' | '-') term)*
//   term   := factor (['*'] factor)*        juxtaposition multiplies
//   factor := atom ('^' integer | superscript digits)*
//   atom   := number | 'q' | 'i' | 'j' | 'k' | '(' expr ')' | '-' factor
//
// Every product is the star product, so q is central and "iq" equals "qi".
// The Unicode minus sign, '·' and '⋆' are accepted as '-' and '*'.

#include <string_view>

#include "slicereg/regular_series.hpp"

namespace slicereg {

/// Throws Error(InvalidArgument) with the offending position on bad input.
RegularSeries parse_polynomial(std::string_view text);

}  // namespace slicereg
