#pragma once

// JSON documents for algebra values. Every document carries the field and a
// "kind" tag; sparse values are lists of [index, "scalar"] pairs, e.g.
//   {"field": "Q", "kind": "element", "terms": [[1, "2"], [4, "-1/2"]]}
// Endo and der documents list the gamma coordinates the same way, and "poly"
// documents key terms by exponent.

#include <json.hpp>

#include "leibniz/derivation.hpp"
#include "leibniz/element.hpp"
#include "leibniz/endomorphism.hpp"
#include "leibniz/finmat.hpp"
#include "leibniz/polynomial.hpp"

namespace leibniz {

nlohmann::json to_json(const Scalar& s);
nlohmann::json to_json(const Element& x);
nlohmann::json to_json(const Endo& f);
nlohmann::json to_json(const Derivation& f);
nlohmann::json to_json(const Polynomial& p);
nlohmann::json to_json(const FinMatrixWindow& m);

// Throw ParseError on malformed documents.
Element element_from_json(const nlohmann::json& doc);
Endo endo_from_json(const nlohmann::json& doc);
Derivation derivation_from_json(const nlohmann::json& doc);
Polynomial polynomial_from_json(const nlohmann::json& doc);

}  // namespace leibniz
