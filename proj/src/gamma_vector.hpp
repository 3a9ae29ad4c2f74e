#pragma once

// Shared helpers for maps stored by their gamma vector (the coordinates of
// the image of a_1). Not part of the public interface.

#include <string>
#include <vector>

#include "leibniz/element.hpp"

namespace leibniz::detail {

std::vector<Scalar> normalize_gamma(const Field& field, std::vector<Scalar> gamma);
Scalar gamma_at(const Field& field, const std::vector<Scalar>& gamma, std::size_t k);
Element gamma_element(const Field& field, const std::vector<Scalar>& gamma);
/// Dense coordinates (c_1, ..., c_max) of an element.
std::vector<Scalar> coordinates(const Element& x);
/// "[1, 1/2]"; "[0]" when empty.
std::string gamma_text(const std::vector<Scalar>& gamma);

}  // namespace leibniz::detail
