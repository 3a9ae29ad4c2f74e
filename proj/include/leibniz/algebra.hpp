#pragma once

#include <optional>
#include <string>
#include <vector>

#include "leibniz/element.hpp"

namespace leibniz {

/// [x, y] in the cyclic algebra: [a_1, a_n] = a_{n+1}, every other basis
/// bracket is zero. Equals x_1 * shift(y).
Element bracket(const Element& x, const Element& y);

/// [a,[b,c]] - [[a,b],c] - [b,[a,c]]; zero for every input.
Element leibniz_defect(const Element& a, const Element& b, const Element& c);

/// A subspace of span{a_1, ..., a_N}, kept as a reduced row echelon basis so
/// that equality of subspaces is equality of bases.
class WindowSubspace {
 public:
  /// span{a_start, ..., a_N}; empty when start > N.
  static WindowSubspace span_from(const Field& field, Index start, Index window);
  /// Span of arbitrary elements. Throws BadIndex if one is supported past N.
  static WindowSubspace span_of(const Field& field, Index window,
                                const std::vector<Element>& generators);

  const Field& field() const noexcept { return field_; }
  Index window() const noexcept { return window_; }
  const std::vector<Element>& basis() const noexcept { return basis_; }
  std::size_t dimension() const noexcept { return basis_.size(); }
  bool is_zero() const noexcept { return basis_.empty(); }

  bool contains(const Element& x) const;
  bool contains(const WindowSubspace& other) const;

  /// j when this subspace is span{a_j, ..., a_N} (N+1 for the zero space).
  std::optional<Index> start_index() const;

  bool operator==(const WindowSubspace& rhs) const;

  /// "span{a2..a5}", "span{a3}", "0", or "span{a1 + a2, a3}".
  std::string to_string() const;

 private:
  WindowSubspace(const Field& field, Index window) : field_(field), window_(window) {}

  Field field_;
  Index window_;
  std::vector<Element> basis_;
};

WindowSubspace intersect(const WindowSubspace& u, const WindowSubspace& v);

/// gamma_k(L) restricted to the window: span{a_k, ..., a_N}.
WindowSubspace gamma_window(const Field& field, Index k, Index window);

struct Centers {
  WindowSubspace left;
  WindowSubspace right;
  WindowSubspace center;
};

/// Left, right and two-sided annihilators of span{a_1..a_N} inside it,
/// obtained by solving the bracket conditions as linear systems.
/// Throws WindowTooSmall for N < 2.
Centers centers_window(const Field& field, Index window);

}  // namespace leibniz
