#include <doctest.h>

#include "leibniz/error.hpp"
#include "leibniz/random.hpp"
#include "leibniz/text.hpp"
#include "oracles.hpp"

using namespace leibniz;
using oracle::q;

namespace {
const Field Q = Field::rationals();
Element a(Index n) { return Element::basis(Q, n); }

std::size_t parse_error_position(auto&& fn) {
  try {
    fn();
  } catch (const ParseError& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    return e.position();
  }
  FAIL("expected a parse error");
  return 0;
}
}  // namespace

TEST_CASE("element grammar") {
  CHECK(parse_element(Q, "a1") == a(1));
  CHECK(parse_element(Q, "2*a1 - 1/2*a4") == q(2) * a(1) - q(1, 2) * a(4));
  CHECK(parse_element(Q, "a1 + a1") == q(2) * a(1));
  CHECK(parse_element(Q, "  -a3+ 4 * a2 ") == q(4) * a(2) - a(3));
  CHECK(parse_element(Q, "0").is_zero());
  CHECK(parse_element(Q, "a2 - a2").is_zero());
  CHECK(parse_element(Field::prime(5), "7*a1") == Element::basis(Field::prime(5), 1, Scalar(Field::prime(5), 2)));
}

TEST_CASE("element parse errors") {
  CHECK(parse_error_position([] { parse_element(Q, "a1 +"); }) == 4);
  CHECK(parse_error_position([] { parse_element(Q, "b1"); }) == 0);
  CHECK(parse_error_position([] { parse_element(Q, "a1 a2"); }) == 3);
  CHECK_THROWS_AS(parse_element(Q, "1/0*a1"), Error);
  try {
    parse_element(Q, "a0");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BadIndex);
  }
}

TEST_CASE("maps and polynomials") {
  CHECK(parse_endo(Q, "endo [1, 1/2]").to_string() == "endo [1, 1/2]");
  CHECK(parse_endo(Q, "endo[0]") == Endo::zero(Q));
  CHECK(parse_derivation(Q, "der [0,0,0,1]").degree() == 4);
  CHECK_THROWS_AS(parse_derivation(Q, "endo [1]"), ParseError);
  CHECK_THROWS_AS(parse_endo(Q, "endo [1, 2"), ParseError);
  CHECK(parse_polynomial(Q, "1 + 2*X + X^2").to_string() == "1 + 2*X + X^2");
  CHECK(parse_polynomial(Q, "1 - X^2").coeff(2) == q(-1));
  CHECK(parse_polynomial(Q, "3*X^2 + 1").coeff(0).is_one());
  CHECK(parse_scalar(Q, "-3/6") == q(-1, 2));
}

TEST_CASE("print then parse is the identity") {
  for (const Field f : {Q, Field::prime(5)}) {
    CaseGenerator gen(f, 51);
    for (int i = 0; i < 200; ++i) {
      const Element x = gen.element();
      CHECK(parse_element(f, x.to_string()) == x);
      const Endo e = gen.endo();
      CHECK(parse_endo(f, e.to_string()) == e);
      const Derivation d = gen.derivation();
      CHECK(parse_derivation(f, d.to_string()) == d);
      const Polynomial p = gen.unit_constant_poly(8);
      CHECK(parse_polynomial(f, p.to_string()) == p);
      const Scalar s = gen.scalar();
      CHECK(parse_scalar(f, s.to_string()) == s);
    }
  }
}
