#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "leibniz/scalar.hpp"

namespace leibniz {

using Index = std::size_t;

/// A finitely supported vector sum c_n a_n over the basis {a_n : n >= 1}.
/// Stored sparse; no stored coefficient is ever zero.
class Element {
 public:
  using Terms = std::map<Index, Scalar>;

  explicit Element(const Field& field = Field::rationals()) : field_(field) {}

  /// Sums duplicate indices and drops zero results. Throws BadIndex for an
  /// index < 1 and MixedFields if a scalar is over another field.
  static Element make(const Field& field,
                      const std::vector<std::pair<Index, Scalar>>& pairs);
  static Element basis(const Field& field, Index n, const Scalar& coeff);
  static Element basis(const Field& field, Index n);

  const Field& field() const noexcept { return field_; }
  const Terms& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  Scalar coeff(Index n) const;
  /// Largest index in the support; 0 for the zero element.
  Index max_support() const noexcept;
  /// Smallest index in the support; 0 for the zero element.
  Index min_support() const noexcept;

  /// Adds c * a_n in place.
  void add_term(Index n, const Scalar& c);

  /// a_n -> a_{n+by}.
  Element shifted(Index by = 1) const;
  Element scaled(const Scalar& c) const;

  Element operator-() const;
  Element operator+(const Element& rhs) const;
  Element operator-(const Element& rhs) const;
  Element& operator+=(const Element& rhs);

  bool operator==(const Element& rhs) const;

  /// "2*a1 - 1/2*a4"; the zero element prints as "0".
  std::string to_string() const;

 private:
  void require_field(const Field& other) const;

  Field field_;
  Terms terms_;
};

inline Element operator*(const Scalar& c, const Element& x) { return x.scaled(c); }

Element element_make(const Field& field,
                     const std::vector<std::pair<Index, Scalar>>& pairs);

}  // namespace leibniz
