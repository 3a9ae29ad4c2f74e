#include "leibniz/endomorphism.hpp"

#include "leibniz/error.hpp"
#include "gamma_vector.hpp"

namespace leibniz {

Endo Endo::from_gamma(const Field& field, std::vector<Scalar> gamma) {
  Endo f(field);
  f.gamma_ = detail::normalize_gamma(field, std::move(gamma));
  return f;
}

Endo Endo::identity(const Field& field) { return from_gamma(field, {Scalar::one(field)}); }

Endo Endo::diagonal(const Scalar& g) { return from_gamma(g.field(), {g}); }

Scalar Endo::gamma(std::size_t k) const {
  return detail::gamma_at(field_, gamma_, k);
}

Element Endo::image_of_generator() const { return detail::gamma_element(field_, gamma_); }

bool Endo::operator==(const Endo& rhs) const {
  return field_ == rhs.field_ && gamma_ == rhs.gamma_;
}

std::string Endo::to_string() const { return "endo " + detail::gamma_text(gamma_); }

std::string_view to_string(EndoClass c) noexcept {
  switch (c) {
    case EndoClass::ZeroSquareIdeal: return "ZeroSquareIdeal";
    case EndoClass::MonomorphismProper: return "MonomorphismProper";
    case EndoClass::Automorphism: return "Automorphism";
  }
  return "Unknown";
}

Endo endo_from_gamma(const Field& field, std::vector<Scalar> gamma) {
  return Endo::from_gamma(field, std::move(gamma));
}

Element apply(const Endo& f, const Element& x) {
  if (f.field() != x.field()) throw Error(ErrorCode::MixedFields, "endomorphism applied across fields");
  Element out(f.field());
  if (f.degree() == 0) return out;
  const Scalar g1 = f.gamma(1);
  // Powers g_1^(s-1) are produced incrementally along the ascending support.
  Scalar power = Scalar::one(f.field());
  Index power_index = 1;
  for (const auto& [s, lambda] : x.terms()) {
    power = power * g1.pow(s - power_index);
    power_index = s;
    const Scalar scale = lambda * power;
    if (scale.is_zero()) continue;
    for (std::size_t k = 1; k <= f.degree(); ++k) {
      out.add_term(k + s - 1, scale * f.gamma(k));
    }
  }
  return out;
}

Endo compose(const Endo& f, const Endo& g) {
  if (f.field() != g.field()) throw Error(ErrorCode::MixedFields, "composition across fields");
  const Element image = apply(f, g.image_of_generator());
  return Endo::from_gamma(f.field(), detail::coordinates(image));
}

EndoClass classify(const Endo& f) {
  if (f.gamma(1).is_zero()) return EndoClass::ZeroSquareIdeal;
  return f.degree() == 1 ? EndoClass::Automorphism : EndoClass::MonomorphismProper;
}

Endo inverse(const Endo& f) {
  if (classify(f) != EndoClass::Automorphism) {
    throw Error(ErrorCode::NotInvertible, f.to_string() + " is not an automorphism");
  }
  return Endo::diagonal(f.gamma(1).inv());
}

MonFactorization factorize(const Endo& f) {
  const Scalar g1 = f.gamma(1);
  if (g1.is_zero()) {
    throw Error(ErrorCode::NotMonomorphism, f.to_string() + " has gamma_1 = 0");
  }
  const Scalar g1_inv = g1.inv();
  std::vector<Scalar> unipotent;
  unipotent.reserve(f.degree());
  unipotent.push_back(Scalar::one(f.field()));
  for (std::size_t k = 2; k <= f.degree(); ++k) unipotent.push_back(g1_inv * f.gamma(k));
  return {Endo::from_gamma(f.field(), std::move(unipotent)), g1};
}

Endo recompose(const MonFactorization& m) {
  return compose(m.unipotent, Endo::diagonal(m.diagonal));
}

Polynomial phi(const Endo& u) {
  if (!u.gamma(1).is_one()) {
    throw Error(ErrorCode::NotUnipotent, u.to_string() + " is not in A (gamma_1 != 1)");
  }
  return Polynomial::from_coeffs(u.field(), u.gamma());
}

Endo phi_inverse(const Polynomial& p) {
  if (!poly_unit_constant(p)) {
    throw Error(ErrorCode::BadConstantTerm, p.to_string() + " does not have constant term 1");
  }
  return Endo::from_gamma(p.field(), p.coeffs());
}

Endo conjugate_by_diagonal(const Endo& u, const Scalar& mu) {
  if (u.field() != mu.field()) throw Error(ErrorCode::MixedFields, "conjugation across fields");
  if (mu.is_zero()) throw Error(ErrorCode::ZeroDiagonal, "conjugation by the zero diagonal");
  if (!u.gamma(1).is_one()) {
    throw Error(ErrorCode::NotUnipotent, u.to_string() + " is not in A (gamma_1 != 1)");
  }
  const Scalar mu_inv = mu.inv();
  std::vector<Scalar> gamma;
  gamma.reserve(u.degree());
  Scalar scale = Scalar::one(u.field());
  for (std::size_t k = 1; k <= u.degree(); ++k) {
    gamma.push_back(scale * u.gamma(k));
    scale *= mu_inv;
  }
  return Endo::from_gamma(u.field(), std::move(gamma));
}

}  // namespace leibniz
