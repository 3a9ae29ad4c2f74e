#pragma once

#include <string>
#include <vector>

#include "leibniz/element.hpp"
#include "leibniz/polynomial.hpp"

namespace leibniz {

/// An endomorphism of the cyclic algebra, stored by the coordinates
/// (g_1, ..., g_n) of f(a_1). Every other value follows from
///   f(a_s) = sum_k g_1^(s-1) g_k a_(k+s-1),
/// so equality of maps is equality of gamma vectors.
class Endo {
 public:
  explicit Endo(const Field& field = Field::rationals()) : field_(field) {}

  static Endo from_gamma(const Field& field, std::vector<Scalar> gamma);
  static Endo identity(const Field& field);
  static Endo zero(const Field& field) { return Endo(field); }
  /// The diagonal map a_1 -> g a_1 (an element of D when g != 0).
  static Endo diagonal(const Scalar& g);

  const Field& field() const noexcept { return field_; }
  const std::vector<Scalar>& gamma() const noexcept { return gamma_; }
  /// Largest k with g_k != 0; 0 for the zero map.
  std::size_t degree() const noexcept { return gamma_.size(); }
  /// g_k, 1-based; zero past the degree.
  Scalar gamma(std::size_t k) const;

  /// f(a_1) as an element.
  Element image_of_generator() const;

  bool operator==(const Endo& rhs) const;

  /// "endo [1, 1/2]"; the zero map prints as "endo [0]".
  std::string to_string() const;

 private:
  Field field_;
  std::vector<Scalar> gamma_;
};

enum class EndoClass { ZeroSquareIdeal, MonomorphismProper, Automorphism };

std::string_view to_string(EndoClass c) noexcept;

/// Unique split f = unipotent o [diagonal] with unipotent in A (g_1 = 1).
struct MonFactorization {
  Endo unipotent;
  Scalar diagonal;
};

Endo endo_from_gamma(const Field& field, std::vector<Scalar> gamma);

/// Support of the result is bounded by max_support(x) + deg(f) - 1.
Element apply(const Endo& f, const Element& x);

/// f o g, computed from f(g(a_1)).
Endo compose(const Endo& f, const Endo& g);

EndoClass classify(const Endo& f);

/// Inverse of an automorphism [g]. Throws NotInvertible otherwise.
Endo inverse(const Endo& f);

/// Throws NotMonomorphism when g_1 = 0.
MonFactorization factorize(const Endo& f);
Endo recompose(const MonFactorization& m);

/// Phi(u) = 1 + g_2 X + ... + g_n X^(n-1). Throws NotUnipotent unless g_1 = 1.
Polynomial phi(const Endo& u);
/// Throws BadConstantTerm unless p(0) = 1.
Endo phi_inverse(const Polynomial& p);

/// d^-1 o u o d for d = [mu]; coordinate k scales by mu^(1-k).
/// Throws ZeroDiagonal for mu = 0 and NotUnipotent for u outside A.
Endo conjugate_by_diagonal(const Endo& u, const Scalar& mu);

}  // namespace leibniz
