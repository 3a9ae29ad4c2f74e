#include <doctest.h>

#include "leibniz/error.hpp"
#include "leibniz/finmat.hpp"
#include "leibniz/random.hpp"
#include "leibniz/serialize.hpp"
#include "oracles.hpp"

using namespace leibniz;
using nlohmann::json;
using oracle::q;

TEST_CASE("document shapes") {
  const Field Q = Field::rationals();
  const json doc = to_json(element_make(Q, {{1, q(2)}, {4, q(-1, 2)}}));
  CHECK(doc["field"] == "Q");
  CHECK(doc["kind"] == "element");
  CHECK(doc["terms"] == json::parse(R"([[1,"2"],[4,"-1/2"]])"));
  CHECK(to_json(endo_from_gamma(Q, {q(1), q(1)}))["kind"] == "endo");
  CHECK(to_json(Scalar(Field::prime(5), 3)) == json::parse(R"({"field":"GF5","value":"3"})"));
  const json m = to_json(matrix_of(endo_from_gamma(Q, {q(1), q(1)}), 3));
  CHECK(m["valid_cols"] == 2);
  CHECK(m["rows"][2] == json::parse(R"(["0","1","1"])"));
}

TEST_CASE("json round trips") {
  for (const Field f : {Field::rationals(), Field::prime(5)}) {
    CaseGenerator gen(f, 61);
    for (int i = 0; i < 200; ++i) {
      const Element x = gen.element();
      CHECK(element_from_json(json::parse(to_json(x).dump())) == x);
      const Endo e = gen.endo();
      CHECK(endo_from_json(to_json(e)) == e);
      const Derivation d = gen.derivation();
      CHECK(derivation_from_json(to_json(d)) == d);
      const Polynomial p = gen.unit_constant_poly(6);
      CHECK(polynomial_from_json(to_json(p)) == p);
    }
  }
}

TEST_CASE("malformed documents") {
  CHECK_THROWS_AS(element_from_json(json::parse(R"({"field":"Q","kind":"endo","terms":[]})")), ParseError);
  CHECK_THROWS_AS(element_from_json(json::parse(R"({"field":"Q","kind":"element"})")), ParseError);
  CHECK_THROWS_AS(element_from_json(json::parse(R"({"field":"Q","kind":"element","terms":[[1]]})")), ParseError);
  CHECK_THROWS_AS(endo_from_json(json::parse("[1, 2]")), ParseError);
}
