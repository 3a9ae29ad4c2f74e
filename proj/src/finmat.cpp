#include "leibniz/finmat.hpp"

#include <algorithm>

#include "leibniz/algebra.hpp"
#include "leibniz/error.hpp"
#include "leibniz/linalg.hpp"

namespace leibniz {

FinMatrixWindow::FinMatrixWindow(const Field& field, Index size, Index valid_cols)
    : field_(field),
      size_(size),
      valid_cols_(std::min(valid_cols, size)),
      entries_(size * size, Scalar::zero(field)) {}

FinMatrixWindow FinMatrixWindow::identity(const Field& field, Index size) {
  FinMatrixWindow m(field, size, size);
  for (Index i = 1; i <= size; ++i) m.set_entry(i, i, Scalar::one(field));
  return m;
}

void FinMatrixWindow::set_valid_cols(Index valid) { valid_cols_ = std::min(valid, size_); }

std::size_t FinMatrixWindow::offset(Index row, Index col) const {
  if (row < 1 || col < 1 || row > size_ || col > size_) {
    throw Error(ErrorCode::BadIndex, "matrix entry (" + std::to_string(row) + ", " +
                                         std::to_string(col) + ") outside window " +
                                         std::to_string(size_));
  }
  return (row - 1) * size_ + (col - 1);
}

const Scalar& FinMatrixWindow::entry(Index row, Index col) const {
  return entries_[offset(row, col)];
}

void FinMatrixWindow::set_entry(Index row, Index col, const Scalar& value) {
  if (value.field() != field_) throw Error(ErrorCode::MixedFields, "matrix entry field");
  entries_[offset(row, col)] = value;
}

Element FinMatrixWindow::column(Index col) const {
  Element x(field_);
  for (Index r = 1; r <= size_; ++r) x.add_term(r, entry(r, col));
  return x;
}

Element FinMatrixWindow::apply(const Element& x) const {
  if (x.field() != field_) throw Error(ErrorCode::MixedFields, "matrix applied across fields");
  if (x.max_support() > valid_cols_) {
    throw Error(ErrorCode::WindowTooSmall,
                "element reaches past the trusted columns of the window");
  }
  Element out(field_);
  for (const auto& [c, lambda] : x.terms()) out += column(c).scaled(lambda);
  return out;
}

bool FinMatrixWindow::is_lower_triangular() const {
  for (Index r = 1; r <= size_; ++r) {
    for (Index c = r + 1; c <= size_; ++c) {
      if (!entry(r, c).is_zero()) return false;
    }
  }
  return true;
}

bool FinMatrixWindow::is_unit_lower_triangular() const {
  if (!is_lower_triangular()) return false;
  for (Index i = 1; i <= size_; ++i) {
    if (!entry(i, i).is_one()) return false;
  }
  return true;
}

bool FinMatrixWindow::is_strictly_lower_triangular() const {
  if (!is_lower_triangular()) return false;
  for (Index i = 1; i <= size_; ++i) {
    if (!entry(i, i).is_zero()) return false;
  }
  return true;
}

std::string FinMatrixWindow::dump() const {
  std::size_t width = 1;
  for (const auto& e : entries_) width = std::max(width, e.to_string().size());
  std::string out;
  for (Index r = 1; r <= size_; ++r) {
    for (Index c = 1; c <= size_; ++c) {
      const std::string text = entry(r, c).to_string();
      if (c > 1) out += ' ';
      out.append(width - text.size(), ' ');
      out += text;
    }
    out += '\n';
  }
  return out;
}

bool FinMatrixWindow::operator==(const FinMatrixWindow& rhs) const {
  return field_ == rhs.field_ && size_ == rhs.size_ && valid_cols_ == rhs.valid_cols_ &&
         entries_ == rhs.entries_;
}

namespace {

template <typename Map>
FinMatrixWindow matrix_from_columns(const Map& f, Index size) {
  if (size < f.degree() || size == 0) {
    throw Error(ErrorCode::WindowTooSmall,
                "window " + std::to_string(size) + " is smaller than the degree of " +
                    f.to_string());
  }
  // A column s is supported up to s + deg - 1, so it fits while s <= N - deg + 1.
  const Index valid = f.degree() == 0 ? size : size - f.degree() + 1;
  FinMatrixWindow m(f.field(), size, valid);
  for (Index s = 1; s <= size; ++s) {
    const Element image = apply(f, Element::basis(f.field(), s));
    for (const auto& [r, c] : image.terms()) {
      if (r <= size) m.set_entry(r, s, c);
    }
  }
  return m;
}

void require_compatible(const FinMatrixWindow& a, const FinMatrixWindow& b) {
  if (a.field() != b.field()) throw Error(ErrorCode::MixedFields, "matrices over different fields");
  if (a.size() != b.size()) {
    throw Error(ErrorCode::DimensionMismatch, "windows of size " + std::to_string(a.size()) +
                                                  " and " + std::to_string(b.size()));
  }
}

Index trusted_product_columns(const FinMatrixWindow& a, const FinMatrixWindow& b) {
  Index valid = 0;
  while (valid < b.valid_cols() && b.column(valid + 1).max_support() <= a.valid_cols()) {
    ++valid;
  }
  return valid;
}

}  // namespace

FinMatrixWindow matrix_of(const Endo& f, Index size) { return matrix_from_columns(f, size); }

FinMatrixWindow matrix_of(const Derivation& f, Index size) {
  return matrix_from_columns(f, size);
}

FinMatrixWindow matmul(const FinMatrixWindow& a, const FinMatrixWindow& b) {
  require_compatible(a, b);
  const Index n = a.size();
  FinMatrixWindow out(a.field(), n, trusted_product_columns(a, b));
  for (Index r = 1; r <= n; ++r) {
    for (Index c = 1; c <= n; ++c) {
      Scalar sum = Scalar::zero(a.field());
      for (Index k = 1; k <= n; ++k) {
        const Scalar& left = a.entry(r, k);
        if (left.is_zero()) continue;
        const Scalar& right = b.entry(k, c);
        if (!right.is_zero()) sum += left * right;
      }
      out.set_entry(r, c, sum);
    }
  }
  return out;
}

FinMatrixWindow commutator(const FinMatrixWindow& a, const FinMatrixWindow& b) {
  const FinMatrixWindow ab = matmul(a, b);
  const FinMatrixWindow ba = matmul(b, a);
  FinMatrixWindow out(a.field(), a.size(), std::min(ab.valid_cols(), ba.valid_cols()));
  for (Index r = 1; r <= a.size(); ++r) {
    for (Index c = 1; c <= a.size(); ++c) out.set_entry(r, c, ab.entry(r, c) - ba.entry(r, c));
  }
  return out;
}

bool agree_on_trusted(const FinMatrixWindow& a, const FinMatrixWindow& b) {
  require_compatible(a, b);
  const Index cols = std::min(a.valid_cols(), b.valid_cols());
  for (Index c = 1; c <= cols; ++c) {
    for (Index r = 1; r <= a.size(); ++r) {
      if (!(a.entry(r, c) == b.entry(r, c))) return false;
    }
  }
  return true;
}

Index oracle_checked_columns(const FinMatrixWindow& m, Index margin) {
  if (margin < 1) throw Error(ErrorCode::WindowTooSmall, "oracle margin must be >= 1");
  const Index limit = margin > m.size() ? 0 : m.size() + 1 - margin;
  const Index checked = std::min(m.valid_cols(), limit);
  if (checked < 2) {
    throw Error(ErrorCode::WindowTooSmall,
                "fewer than two trusted columns left after a margin of " + std::to_string(margin));
  }
  return checked;
}

namespace {

// [a_i, a_j] is a_{j+1} for i = 1 and zero otherwise, so M([a_i, a_j]) is
// column j+1 or zero; j stops one short so that column is checked too.
template <typename Law>
bool check_bracket_law(const FinMatrixWindow& m, Index margin, Law law) {
  const Index checked = oracle_checked_columns(m, margin);
  std::vector<Element> columns;
  columns.reserve(checked);
  for (Index c = 1; c <= checked; ++c) columns.push_back(m.column(c));

  const Element zero(m.field());
  for (Index i = 1; i <= checked; ++i) {
    for (Index j = 1; j < checked; ++j) {
      const Element& lhs = i == 1 ? columns[j] : zero;
      if (!(lhs == law(columns, i, j))) return false;
    }
  }
  return true;
}

}  // namespace

bool oracle_check_endo(const FinMatrixWindow& m, Index margin) {
  return check_bracket_law(m, margin, [](const std::vector<Element>& col, Index i, Index j) {
    return bracket(col[i - 1], col[j - 1]);
  });
}

bool oracle_check_der(const FinMatrixWindow& m, Index margin) {
  const Field field = m.field();
  return check_bracket_law(m, margin, [&field](const std::vector<Element>& col, Index i, Index j) {
    return bracket(col[i - 1], Element::basis(field, j)) +
           bracket(Element::basis(field, i), col[j - 1]);
  });
}

namespace {

Index band_valid_cols(std::size_t degree, Index size) {
  if (size < degree || size == 0) {
    throw Error(ErrorCode::WindowTooSmall, "window smaller than the band width");
  }
  return degree == 0 ? size : size - degree + 1;
}

std::vector<Scalar> trimmed(std::vector<Scalar> gamma) {
  while (!gamma.empty() && gamma.back().is_zero()) gamma.pop_back();
  return gamma;
}

}  // namespace

FinMatrixWindow endo_band_pattern(const Field& field, const std::vector<Scalar>& gamma_in,
                                  Index size) {
  const auto gamma = trimmed(gamma_in);
  FinMatrixWindow m(field, size, band_valid_cols(gamma.size(), size));
  if (gamma.empty()) return m;
  Scalar column_scale = Scalar::one(field);  // g_1^(c-1)
  for (Index c = 1; c <= size; ++c) {
    for (Index t = 0; t < gamma.size() && c + t <= size; ++t) {
      m.set_entry(c + t, c, column_scale * gamma[t]);
    }
    column_scale *= gamma[0];
  }
  return m;
}

FinMatrixWindow der_band_pattern(const Field& field, const std::vector<Scalar>& gamma_in,
                                 Index size) {
  const auto gamma = trimmed(gamma_in);
  FinMatrixWindow m(field, size, band_valid_cols(gamma.size(), size));
  if (gamma.empty()) return m;
  for (Index c = 1; c <= size; ++c) {
    m.set_entry(c, c, Scalar(field, static_cast<long>(c)) * gamma[0]);
    for (Index t = 1; t < gamma.size() && c + t <= size; ++t) m.set_entry(c + t, c, gamma[t]);
  }
  return m;
}

namespace {

Matrix trusted_block(const FinMatrixWindow& m) {
  Matrix out(m.field(), m.size(), m.valid_cols());
  for (Index r = 1; r <= m.size(); ++r) {
    for (Index c = 1; c <= m.valid_cols(); ++c) out(r - 1, c - 1) = m.entry(r, c);
  }
  return out;
}

}  // namespace

bool trusted_kernel_is_trivial(const FinMatrixWindow& m) {
  return rank(trusted_block(m)) == m.valid_cols();
}

bool trusted_span_contains(const FinMatrixWindow& m, const Element& x) {
  if (x.field() != m.field()) throw Error(ErrorCode::MixedFields, "span test across fields");
  if (x.max_support() > m.size()) return false;
  std::vector<Scalar> rhs(m.size(), Scalar::zero(m.field()));
  for (const auto& [n, c] : x.terms()) rhs[n - 1] = c;
  return solve(trusted_block(m), rhs).has_value();
}

}  // namespace leibniz
