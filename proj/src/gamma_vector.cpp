#include "gamma_vector.hpp"

#include "leibniz/error.hpp"

namespace leibniz::detail {

std::vector<Scalar> normalize_gamma(const Field& field, std::vector<Scalar> gamma) {
  for (const auto& g : gamma) {
    if (g.field() != field) {
      throw Error(ErrorCode::MixedFields,
                  "gamma coordinate over " + g.field().name() + " in a map over " + field.name());
    }
  }
  while (!gamma.empty() && gamma.back().is_zero()) gamma.pop_back();
  return gamma;
}

Scalar gamma_at(const Field& field, const std::vector<Scalar>& gamma, std::size_t k) {
  if (k < 1) throw Error(ErrorCode::BadIndex, "gamma index must be >= 1");
  return k <= gamma.size() ? gamma[k - 1] : Scalar::zero(field);
}

Element gamma_element(const Field& field, const std::vector<Scalar>& gamma) {
  Element x(field);
  for (std::size_t k = 0; k < gamma.size(); ++k) x.add_term(k + 1, gamma[k]);
  return x;
}

std::vector<Scalar> coordinates(const Element& x) {
  std::vector<Scalar> out(x.max_support(), Scalar::zero(x.field()));
  for (const auto& [n, c] : x.terms()) out[n - 1] = c;
  return out;
}

std::string gamma_text(const std::vector<Scalar>& gamma) {
  if (gamma.empty()) return "[0]";
  std::string out = "[";
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    if (i > 0) out += ", ";
    out += gamma[i].to_string();
  }
  return out + "]";
}

}  // namespace leibniz::detail
