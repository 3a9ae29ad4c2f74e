#pragma once

#include <string>
#include <vector>

#include "leibniz/element.hpp"

namespace leibniz {

/// A derivation of the cyclic algebra, stored by the coordinates
/// (g_1, ..., g_n) of f(a_1):
///   f(a_s) = s g_1 a_s + sum_{k>=2} g_k a_(k+s-1).
class Derivation {
 public:
  explicit Derivation(const Field& field = Field::rationals()) : field_(field) {}

  static Derivation from_gamma(const Field& field, std::vector<Scalar> gamma);
  static Derivation zero(const Field& field) { return Derivation(field); }
  /// The diagonal derivation a_s -> s g a_s (an element of D).
  static Derivation diagonal(const Scalar& g);

  const Field& field() const noexcept { return field_; }
  const std::vector<Scalar>& gamma() const noexcept { return gamma_; }
  std::size_t degree() const noexcept { return gamma_.size(); }
  Scalar gamma(std::size_t k) const;

  Element image_of_generator() const;

  /// Member of the ideal A: every value lies in [L, L].
  bool in_ideal() const { return gamma(1).is_zero(); }

  bool operator==(const Derivation& rhs) const;

  /// "der [0, 1]"; the zero derivation prints as "der [0]".
  std::string to_string() const;

 private:
  Field field_;
  std::vector<Scalar> gamma_;
};

/// Unique split f = ideal_part + [diagonal_part].
struct DerDecomposition {
  Derivation ideal_part;
  Scalar diagonal_part;
};

Derivation der_from_gamma(const Field& field, std::vector<Scalar> gamma);

Element apply(const Derivation& f, const Element& x);

/// alpha f + beta g.
Derivation linear_combine(const Scalar& alpha, const Derivation& f, const Scalar& beta,
                          const Derivation& g);

/// [f, g] = f o g - g o f, computed from f(g(a_1)) - g(f(a_1)).
Derivation lie_bracket(const Derivation& f, const Derivation& g);

DerDecomposition decompose(const Derivation& f);
Derivation recompose(const DerDecomposition& d);

/// Solves [[mu], theta] = target for theta in A, coordinatewise
/// theta_k = target_k / ((k-1) mu).
/// Throws ZeroDiagonal for mu = 0, NotInIdeal when target has g_1 != 0, and
/// CharPObstruction listing every k with target_k != 0 and (k-1) = 0 in F.
Derivation solve_commutator(const Scalar& mu, const Derivation& target);

}  // namespace leibniz
