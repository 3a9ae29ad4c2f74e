#include "leibniz/element.hpp"

#include "leibniz/error.hpp"

namespace leibniz {

Element Element::make(const Field& field,
                      const std::vector<std::pair<Index, Scalar>>& pairs) {
  Element x(field);
  for (const auto& [n, c] : pairs) x.add_term(n, c);
  return x;
}

Element Element::basis(const Field& field, Index n, const Scalar& coeff) {
  Element x(field);
  x.add_term(n, coeff);
  return x;
}

Element Element::basis(const Field& field, Index n) {
  return basis(field, n, Scalar::one(field));
}

Scalar Element::coeff(Index n) const {
  auto it = terms_.find(n);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

Index Element::max_support() const noexcept {
  return terms_.empty() ? 0 : terms_.rbegin()->first;
}

Index Element::min_support() const noexcept {
  return terms_.empty() ? 0 : terms_.begin()->first;
}

void Element::require_field(const Field& other) const {
  if (other != field_) {
    throw Error(ErrorCode::MixedFields,
                "element over " + field_.name() + " combined with " + other.name());
  }
}

void Element::add_term(Index n, const Scalar& c) {
  if (n < 1) throw Error(ErrorCode::BadIndex, "basis index must be >= 1");
  require_field(c.field());
  if (c.is_zero()) return;
  auto it = terms_.find(n);
  if (it == terms_.end()) {
    terms_.emplace(n, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Element Element::shifted(Index by) const {
  Element out(field_);
  for (const auto& [n, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), n + by, c);
  return out;
}

Element Element::scaled(const Scalar& c) const {
  require_field(c.field());
  Element out(field_);
  if (c.is_zero()) return out;
  for (const auto& [n, v] : terms_) out.terms_.emplace_hint(out.terms_.end(), n, v * c);
  return out;
}

Element Element::operator-() const { return scaled(-Scalar::one(field_)); }

Element& Element::operator+=(const Element& rhs) {
  require_field(rhs.field_);
  for (const auto& [n, c] : rhs.terms_) add_term(n, c);
  return *this;
}

Element Element::operator+(const Element& rhs) const {
  Element out = *this;
  out += rhs;
  return out;
}

Element Element::operator-(const Element& rhs) const { return *this + (-rhs); }

bool Element::operator==(const Element& rhs) const {
  return field_ == rhs.field_ && terms_ == rhs.terms_;
}

std::string Element::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [n, c] : terms_) {
    const bool negative = c.is_negative();
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const Scalar magnitude = c.abs();
    if (!magnitude.is_one()) out += magnitude.to_string() + "*";
    out += "a" + std::to_string(n);
    first = false;
  }
  return out;
}

Element element_make(const Field& field,
                     const std::vector<std::pair<Index, Scalar>>& pairs) {
  return Element::make(field, pairs);
}

}  // namespace leibniz
