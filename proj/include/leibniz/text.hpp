#pragma once

#include <string_view>

#include "leibniz/derivation.hpp"
#include "leibniz/element.hpp"
#include "leibniz/endomorphism.hpp"
#include "leibniz/polynomial.hpp"

namespace leibniz {

// Parsers for the text forms printed by to_string(). All of them ignore
// whitespace and throw ParseError with the offending offset.

/// "-3", "2/5"; over GF(p) integers are reduced mod p.
Scalar parse_scalar(const Field& field, std::string_view text);

/// term (('+'|'-') term)*, term = [scalar '*'] 'a' index; "0" is the zero
/// element. Throws BadIndex for index 0.
Element parse_element(const Field& field, std::string_view text);

/// "endo [g1, g2, ..., gn]".
Endo parse_endo(const Field& field, std::string_view text);

/// "der [g1, ..., gn]".
Derivation parse_derivation(const Field& field, std::string_view text);

/// "1 + 2*X + X^2".
Polynomial parse_polynomial(const Field& field, std::string_view text);

}  // namespace leibniz
