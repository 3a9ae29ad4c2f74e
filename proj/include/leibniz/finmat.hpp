#pragma once

#include <string>
#include <vector>

#include "leibniz/derivation.hpp"
#include "leibniz/element.hpp"
#include "leibniz/endomorphism.hpp"

namespace leibniz {

/// The top-left N x N block of a column-finite infinite matrix. Column c holds
/// the coordinates of the image of a_c. Columns 1..valid_cols() are trusted:
/// their whole infinite tail is zero below row N. Later columns may have been
/// cut off and take part in no comparison.
class FinMatrixWindow {
 public:
  FinMatrixWindow(const Field& field, Index size, Index valid_cols);

  static FinMatrixWindow identity(const Field& field, Index size);

  const Field& field() const noexcept { return field_; }
  Index size() const noexcept { return size_; }
  Index valid_cols() const noexcept { return valid_cols_; }
  void set_valid_cols(Index valid);

  /// 1-based, like the basis indices.
  const Scalar& entry(Index row, Index col) const;
  void set_entry(Index row, Index col, const Scalar& value);

  Element column(Index col) const;

  /// M x for x supported on trusted columns. Throws WindowTooSmall otherwise.
  Element apply(const Element& x) const;

  bool is_lower_triangular() const;
  bool is_unit_lower_triangular() const;
  bool is_strictly_lower_triangular() const;

  /// Row-major grid of scalar literals, one row per line, right-aligned.
  std::string dump() const;

  bool operator==(const FinMatrixWindow& rhs) const;

 private:
  std::size_t offset(Index row, Index col) const;

  Field field_;
  Index size_;
  Index valid_cols_;
  std::vector<Scalar> entries_;
};

/// Column s is apply(f, a_s); trusted columns are the first N - deg(f) + 1.
/// Throws WindowTooSmall when N < deg(f).
FinMatrixWindow matrix_of(const Endo& f, Index size);
FinMatrixWindow matrix_of(const Derivation& f, Index size);

/// Exact product. A product column is trusted when the factor column of B is
/// trusted and only reaches trusted columns of A.
FinMatrixWindow matmul(const FinMatrixWindow& a, const FinMatrixWindow& b);
/// AB - BA, trusted where both products are.
FinMatrixWindow commutator(const FinMatrixWindow& a, const FinMatrixWindow& b);

/// Equality of the columns trusted in both windows.
bool agree_on_trusted(const FinMatrixWindow& a, const FinMatrixWindow& b);

/// Number of leading columns the bracket-law checks examine:
/// min(valid_cols, N + 1 - margin). Throws WindowTooSmall when margin < 1 or
/// fewer than two columns remain.
Index oracle_checked_columns(const FinMatrixWindow& m, Index margin);

/// M([a_i, a_j]) == [M a_i, M a_j] for all i, j within the checked columns.
bool oracle_check_endo(const FinMatrixWindow& m, Index margin);
/// M([a_i, a_j]) == [M a_i, a_j] + [a_i, M a_j] within the checked columns.
bool oracle_check_der(const FinMatrixWindow& m, Index margin);

/// Closed-form band matrices written straight from the gamma vector, with no
/// call into apply(): entry (c+t, c) = g_1^(c-1) g_(t+1) for endomorphisms and
/// c g_1 on the diagonal, g_(t+1) below it for derivations.
FinMatrixWindow endo_band_pattern(const Field& field, const std::vector<Scalar>& gamma,
                                  Index size);
FinMatrixWindow der_band_pattern(const Field& field, const std::vector<Scalar>& gamma,
                                 Index size);

/// True iff the trusted columns are linearly independent.
bool trusted_kernel_is_trivial(const FinMatrixWindow& m);
/// True iff x is a combination of the trusted columns.
bool trusted_span_contains(const FinMatrixWindow& m, const Element& x);

}  // namespace leibniz
