#include "leibniz/serialize.hpp"

#include "leibniz/error.hpp"
#include "leibniz/text.hpp"

namespace leibniz {

using nlohmann::json;

namespace {

json document(const Field& field, std::string_view kind) {
  return json{{"field", field.name()}, {"kind", kind}, {"terms", json::array()}};
}

json dense_terms(const std::vector<Scalar>& coeffs, std::size_t first_index) {
  json terms = json::array();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (!coeffs[i].is_zero()) terms.push_back(json::array({i + first_index, coeffs[i].to_string()}));
  }
  return terms;
}

[[noreturn]] void malformed(const std::string& what) {
  throw ParseError(0, "malformed JSON document: " + what);
}

// Returns the field and the (index, scalar) pairs of a document of `kind`.
std::pair<Field, std::vector<std::pair<std::size_t, Scalar>>> read_terms(const json& doc,
                                                                        std::string_view kind) {
  if (!doc.is_object()) malformed("expected an object");
  if (!doc.contains("kind") || doc["kind"] != kind) malformed("expected kind '" + std::string(kind) + "'");
  if (!doc.contains("field") || !doc["field"].is_string()) malformed("missing field");
  if (!doc.contains("terms") || !doc["terms"].is_array()) malformed("missing terms");
  const Field field = Field::parse(doc["field"].get<std::string>());
  std::vector<std::pair<std::size_t, Scalar>> pairs;
  for (const auto& term : doc["terms"]) {
    if (!term.is_array() || term.size() != 2 || !term[0].is_number_unsigned() ||
        !term[1].is_string()) {
      malformed("terms must be [index, \"scalar\"] pairs");
    }
    pairs.emplace_back(term[0].get<std::size_t>(),
                       parse_scalar(field, term[1].get<std::string>()));
  }
  return {field, std::move(pairs)};
}

std::vector<Scalar> dense_from(const Field& field,
                               const std::vector<std::pair<std::size_t, Scalar>>& pairs,
                               std::size_t first_index) {
  std::vector<Scalar> out;
  for (const auto& [n, c] : pairs) {
    if (n < first_index) throw Error(ErrorCode::BadIndex, "index below " + std::to_string(first_index));
    const auto slot = n - first_index;
    if (out.size() <= slot) out.resize(slot + 1, Scalar::zero(field));
    out[slot] += c;
  }
  return out;
}

}  // namespace

json to_json(const Scalar& s) { return json{{"field", s.field().name()}, {"value", s.to_string()}}; }

json to_json(const Element& x) {
  json doc = document(x.field(), "element");
  for (const auto& [n, c] : x.terms()) doc["terms"].push_back(json::array({n, c.to_string()}));
  return doc;
}

json to_json(const Endo& f) {
  json doc = document(f.field(), "endo");
  doc["terms"] = dense_terms(f.gamma(), 1);
  return doc;
}

json to_json(const Derivation& f) {
  json doc = document(f.field(), "der");
  doc["terms"] = dense_terms(f.gamma(), 1);
  return doc;
}

json to_json(const Polynomial& p) {
  json doc = document(p.field(), "poly");
  doc["terms"] = dense_terms(p.coeffs(), 0);
  return doc;
}

json to_json(const FinMatrixWindow& m) {
  json rows = json::array();
  for (Index r = 1; r <= m.size(); ++r) {
    json row = json::array();
    for (Index c = 1; c <= m.size(); ++c) row.push_back(m.entry(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return json{{"field", m.field().name()},
              {"kind", "matrix"},
              {"size", m.size()},
              {"valid_cols", m.valid_cols()},
              {"rows", std::move(rows)}};
}

Element element_from_json(const json& doc) {
  auto [field, pairs] = read_terms(doc, "element");
  return Element::make(field, pairs);
}

Endo endo_from_json(const json& doc) {
  auto [field, pairs] = read_terms(doc, "endo");
  return Endo::from_gamma(field, dense_from(field, pairs, 1));
}

Derivation derivation_from_json(const json& doc) {
  auto [field, pairs] = read_terms(doc, "der");
  return Derivation::from_gamma(field, dense_from(field, pairs, 1));
}

Polynomial polynomial_from_json(const json& doc) {
  auto [field, pairs] = read_terms(doc, "poly");
  return Polynomial::from_coeffs(field, dense_from(field, pairs, 0));
}

}  // namespace leibniz
