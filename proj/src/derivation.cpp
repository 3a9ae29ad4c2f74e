#include "leibniz/derivation.hpp"

#include "gamma_vector.hpp"
#include "leibniz/error.hpp"

namespace leibniz {

Derivation Derivation::from_gamma(const Field& field, std::vector<Scalar> gamma) {
  Derivation f(field);
  f.gamma_ = detail::normalize_gamma(field, std::move(gamma));
  return f;
}

Derivation Derivation::diagonal(const Scalar& g) { return from_gamma(g.field(), {g}); }

Scalar Derivation::gamma(std::size_t k) const { return detail::gamma_at(field_, gamma_, k); }

Element Derivation::image_of_generator() const {
  return detail::gamma_element(field_, gamma_);
}

bool Derivation::operator==(const Derivation& rhs) const {
  return field_ == rhs.field_ && gamma_ == rhs.gamma_;
}

std::string Derivation::to_string() const { return "der " + detail::gamma_text(gamma_); }

Derivation der_from_gamma(const Field& field, std::vector<Scalar> gamma) {
  return Derivation::from_gamma(field, std::move(gamma));
}

Element apply(const Derivation& f, const Element& x) {
  if (f.field() != x.field()) throw Error(ErrorCode::MixedFields, "derivation applied across fields");
  const Field& field = f.field();
  Element out(field);
  const Scalar g1 = f.gamma(1);
  for (const auto& [s, lambda] : x.terms()) {
    out.add_term(s, lambda * Scalar(field, static_cast<long>(s)) * g1);
    for (std::size_t k = 2; k <= f.degree(); ++k) {
      out.add_term(k + s - 1, lambda * f.gamma(k));
    }
  }
  return out;
}

Derivation linear_combine(const Scalar& alpha, const Derivation& f, const Scalar& beta,
                          const Derivation& g) {
  if (f.field() != g.field()) throw Error(ErrorCode::MixedFields, "combination across fields");
  const auto n = std::max(f.degree(), g.degree());
  std::vector<Scalar> gamma;
  gamma.reserve(n);
  for (std::size_t k = 1; k <= n; ++k) gamma.push_back(alpha * f.gamma(k) + beta * g.gamma(k));
  return Derivation::from_gamma(f.field(), std::move(gamma));
}

Derivation lie_bracket(const Derivation& f, const Derivation& g) {
  if (f.field() != g.field()) throw Error(ErrorCode::MixedFields, "bracket across fields");
  const Element value = apply(f, g.image_of_generator()) - apply(g, f.image_of_generator());
  return Derivation::from_gamma(f.field(), detail::coordinates(value));
}

DerDecomposition decompose(const Derivation& f) {
  std::vector<Scalar> ideal = f.gamma();
  if (!ideal.empty()) ideal[0] = Scalar::zero(f.field());
  return {Derivation::from_gamma(f.field(), std::move(ideal)), f.gamma(1)};
}

Derivation recompose(const DerDecomposition& d) {
  const Field& field = d.diagonal_part.field();
  const Scalar one = Scalar::one(field);
  return linear_combine(one, d.ideal_part, one, Derivation::diagonal(d.diagonal_part));
}

Derivation solve_commutator(const Scalar& mu, const Derivation& target) {
  if (mu.field() != target.field()) throw Error(ErrorCode::MixedFields, "commutator across fields");
  if (mu.is_zero()) throw Error(ErrorCode::ZeroDiagonal, "[0, theta] = 0 cannot reach a target");
  if (!target.in_ideal()) {
    throw Error(ErrorCode::NotInIdeal, target.to_string() + " is not in the ideal A");
  }
  const Field& field = mu.field();
  std::vector<Scalar> theta(target.degree(), Scalar::zero(field));
  std::vector<std::size_t> obstructed;
  for (std::size_t k = 2; k <= target.degree(); ++k) {
    const Scalar t = target.gamma(k);
    if (t.is_zero()) continue;
    const Scalar weight = Scalar(field, static_cast<long>(k - 1)) * mu;
    if (weight.is_zero()) {
      obstructed.push_back(k);
      continue;
    }
    theta[k - 1] = t / weight;
  }
  if (!obstructed.empty()) throw CharPObstruction(std::move(obstructed));
  return Derivation::from_gamma(field, std::move(theta));
}

}  // namespace leibniz
