#include "leibniz/algebra.hpp"

#include "leibniz/error.hpp"
#include "leibniz/linalg.hpp"

namespace leibniz {

Element bracket(const Element& x, const Element& y) {
  if (x.field() != y.field()) {
    throw Error(ErrorCode::MixedFields,
                "bracket of elements over " + x.field().name() + " and " + y.field().name());
  }
  return y.shifted(1).scaled(x.coeff(1));
}

Element leibniz_defect(const Element& a, const Element& b, const Element& c) {
  return bracket(a, bracket(b, c)) - bracket(bracket(a, b), c) - bracket(b, bracket(a, c));
}

namespace {

Matrix rows_of(const Field& field, Index window, const std::vector<Element>& elements) {
  Matrix m(field, elements.size(), window);
  for (std::size_t r = 0; r < elements.size(); ++r) {
    if (elements[r].field() != field) {
      throw Error(ErrorCode::MixedFields, "subspace generator over another field");
    }
    if (elements[r].max_support() > window) {
      throw Error(ErrorCode::BadIndex, "generator " + elements[r].to_string() +
                                           " lies outside the window of size " +
                                           std::to_string(window));
    }
    for (const auto& [n, c] : elements[r].terms()) m(r, n - 1) = c;
  }
  return m;
}

Element row_element(const Field& field, const Matrix& m, std::size_t r) {
  Element x(field);
  for (std::size_t c = 0; c < m.cols(); ++c) x.add_term(c + 1, m(r, c));
  return x;
}

}  // namespace

WindowSubspace WindowSubspace::span_from(const Field& field, Index start, Index window) {
  WindowSubspace s(field, window);
  for (Index n = std::max<Index>(start, 1); n <= window; ++n) {
    s.basis_.push_back(Element::basis(field, n));
  }
  return s;
}

WindowSubspace WindowSubspace::span_of(const Field& field, Index window,
                                       const std::vector<Element>& generators) {
  WindowSubspace s(field, window);
  const auto echelon = row_reduce(rows_of(field, window, generators));
  for (std::size_t r = 0; r < echelon.pivot_cols.size(); ++r) {
    s.basis_.push_back(row_element(field, echelon.reduced, r));
  }
  return s;
}

bool WindowSubspace::contains(const Element& x) const {
  if (x.field() != field_) throw Error(ErrorCode::MixedFields, "membership test across fields");
  if (x.is_zero()) return true;
  if (x.max_support() > window_) return false;
  auto generators = basis_;
  generators.push_back(x);
  return rank(rows_of(field_, window_, generators)) == basis_.size();
}

bool WindowSubspace::contains(const WindowSubspace& other) const {
  for (const auto& v : other.basis_) {
    if (!contains(v)) return false;
  }
  return true;
}

std::optional<Index> WindowSubspace::start_index() const {
  const Index start = window_ + 1 - basis_.size();
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (!(basis_[i] == Element::basis(field_, start + i))) return std::nullopt;
  }
  return start;
}

bool WindowSubspace::operator==(const WindowSubspace& rhs) const {
  return field_ == rhs.field_ && window_ == rhs.window_ && basis_ == rhs.basis_;
}

std::string WindowSubspace::to_string() const {
  if (basis_.empty()) return "0";
  if (auto start = start_index()) {
    if (*start == window_) return "span{a" + std::to_string(window_) + "}";
    return "span{a" + std::to_string(*start) + "..a" + std::to_string(window_) + "}";
  }
  std::string out = "span{";
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (i > 0) out += ", ";
    out += basis_[i].to_string();
  }
  return out + "}";
}

WindowSubspace intersect(const WindowSubspace& u, const WindowSubspace& v) {
  if (u.window() != v.window() || u.field() != v.field()) {
    throw Error(ErrorCode::DimensionMismatch, "intersecting subspaces of different windows");
  }
  const Field& field = u.field();
  const auto du = u.dimension();
  const auto dv = v.dimension();
  // Columns are u_1..u_p, -v_1..-v_q; a kernel vector (alpha, beta) gives
  // sum alpha_i u_i = sum beta_j v_j in the intersection.
  Matrix m(field, u.window(), du + dv);
  for (std::size_t i = 0; i < du; ++i) {
    for (const auto& [n, c] : u.basis()[i].terms()) m(n - 1, i) = c;
  }
  for (std::size_t j = 0; j < dv; ++j) {
    for (const auto& [n, c] : v.basis()[j].terms()) m(n - 1, du + j) = -c;
  }
  std::vector<Element> generators;
  for (const auto& coeffs : kernel(m)) {
    Element x(field);
    for (std::size_t i = 0; i < du; ++i) x += u.basis()[i].scaled(coeffs[i]);
    generators.push_back(std::move(x));
  }
  return WindowSubspace::span_of(field, u.window(), generators);
}

WindowSubspace gamma_window(const Field& field, Index k, Index window) {
  if (k < 1) throw Error(ErrorCode::BadIndex, "lower central series index must be >= 1");
  return WindowSubspace::span_from(field, k, window);
}

namespace {

enum class Side { Left, Right };

// Appends the rows of the linear map x -> [x, a_j] (Left) or [a_j, x]
// (Right), j = 1..N, evaluated on the window basis. Brackets of window
// elements are supported in [1, N+1].
void append_conditions(const Field& field, Index window, Side side,
                       std::vector<std::vector<Scalar>>& rows) {
  for (Index j = 1; j <= window; ++j) {
    const Element aj = Element::basis(field, j);
    std::vector<std::vector<Scalar>> block(window + 1,
                                           std::vector<Scalar>(window, Scalar::zero(field)));
    for (Index i = 1; i <= window; ++i) {
      const Element ai = Element::basis(field, i);
      const Element value = side == Side::Left ? bracket(ai, aj) : bracket(aj, ai);
      for (const auto& [m, c] : value.terms()) block[m - 1][i - 1] = c;
    }
    for (auto& row : block) rows.push_back(std::move(row));
  }
}

WindowSubspace solve_annihilator(const Field& field, Index window,
                                 const std::vector<std::vector<Scalar>>& rows) {
  Matrix m(field, rows.size(), window);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < window; ++c) m(r, c) = rows[r][c];
  }
  std::vector<Element> generators;
  for (const auto& v : kernel(m)) {
    Element x(field);
    for (std::size_t i = 0; i < window; ++i) x.add_term(i + 1, v[i]);
    generators.push_back(std::move(x));
  }
  return WindowSubspace::span_of(field, window, generators);
}

}  // namespace

Centers centers_window(const Field& field, Index window) {
  if (window < 2) throw Error(ErrorCode::WindowTooSmall, "centers need a window of size >= 2");
  std::vector<std::vector<Scalar>> left_rows;
  std::vector<std::vector<Scalar>> right_rows;
  append_conditions(field, window, Side::Left, left_rows);
  append_conditions(field, window, Side::Right, right_rows);

  auto both = left_rows;
  both.insert(both.end(), right_rows.begin(), right_rows.end());

  return Centers{solve_annihilator(field, window, left_rows),
                 solve_annihilator(field, window, right_rows),
                 solve_annihilator(field, window, both)};
}

}  // namespace leibniz
