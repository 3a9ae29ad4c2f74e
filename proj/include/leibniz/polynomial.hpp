#pragma once

#include <string>
#include <vector>

#include "leibniz/scalar.hpp"

namespace leibniz {

/// Dense univariate polynomial; coeffs()[k] is the coefficient of X^k.
class Polynomial {
 public:
  explicit Polynomial(const Field& field = Field::rationals()) : field_(field) {}

  static Polynomial from_coeffs(const Field& field, std::vector<Scalar> coeffs);
  static Polynomial one(const Field& field);

  const Field& field() const noexcept { return field_; }
  const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  Scalar coeff(std::size_t k) const;

  Polynomial operator*(const Polynomial& rhs) const;
  bool operator==(const Polynomial& rhs) const;

  /// "1 + 2*X + X^2".
  std::string to_string() const;

 private:
  void trim();

  Field field_;
  std::vector<Scalar> coeffs_;
};

Polynomial poly_mul(const Polynomial& p, const Polynomial& q);

/// True iff the constant coefficient is 1.
bool poly_unit_constant(const Polynomial& p);

}  // namespace leibniz
