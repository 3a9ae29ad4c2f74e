#include "leibniz/polynomial.hpp"

#include "leibniz/error.hpp"

namespace leibniz {

Polynomial Polynomial::from_coeffs(const Field& field, std::vector<Scalar> coeffs) {
  for (const auto& c : coeffs) {
    if (c.field() != field) throw Error(ErrorCode::MixedFields, "polynomial coefficient field");
  }
  Polynomial p(field);
  p.coeffs_ = std::move(coeffs);
  p.trim();
  return p;
}

Polynomial Polynomial::one(const Field& field) {
  return from_coeffs(field, {Scalar::one(field)});
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Scalar Polynomial::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Scalar::zero(field_);
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  if (field_ != rhs.field_) throw Error(ErrorCode::MixedFields, "product of polynomials");
  Polynomial out(field_);
  if (coeffs_.empty() || rhs.coeffs_.empty()) return out;
  out.coeffs_.assign(coeffs_.size() + rhs.coeffs_.size() - 1, Scalar::zero(field_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      out.coeffs_[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  out.trim();
  return out;
}

bool Polynomial::operator==(const Polynomial& rhs) const {
  return field_ == rhs.field_ && coeffs_ == rhs.coeffs_;
}

std::string Polynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Scalar& c = coeffs_[k];
    if (c.is_zero()) continue;
    if (first) {
      if (c.is_negative()) out += "-";
    } else {
      out += c.is_negative() ? " - " : " + ";
    }
    first = false;
    const Scalar magnitude = c.abs();
    if (k == 0) {
      out += magnitude.to_string();
      continue;
    }
    if (!magnitude.is_one()) out += magnitude.to_string() + "*";
    out += "X";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

Polynomial poly_mul(const Polynomial& p, const Polynomial& q) { return p * q; }

bool poly_unit_constant(const Polynomial& p) { return p.coeff(0).is_one(); }

}  // namespace leibniz
