#include <doctest.h>

#include "leibniz/element.hpp"
#include "leibniz/error.hpp"
#include "oracles.hpp"

using namespace leibniz;
using oracle::q;

namespace {
const Field Q = Field::rationals();
}

TEST_CASE("element construction normalizes") {
  const Element a1 = element_make(Q, {{1, q(1)}});
  CHECK(a1 == Element::basis(Q, 1));
  CHECK(a1.to_string() == "a1");

  const Element cancelled = element_make(Q, {{1, q(1)}, {1, q(-1)}});
  CHECK(cancelled.is_zero());
  CHECK(cancelled.terms().empty());
  CHECK(cancelled.to_string() == "0");

  const Element ordered = element_make(Q, {{3, q(2)}, {1, q(1, 2)}});
  CHECK(ordered.to_string() == "1/2*a1 + 2*a3");
  CHECK(ordered.min_support() == 1);
  CHECK(ordered.max_support() == 3);
  CHECK(ordered.coeff(2).is_zero());
}

TEST_CASE("element index and field errors") {
  try {
    element_make(Q, {{0, q(1)}});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BadIndex);
  }
  CHECK_THROWS_AS(element_make(Q, {{1, Scalar(Field::prime(5), 1)}}), Error);
  CHECK_THROWS_AS(Element::basis(Q, 1) + Element::basis(Field::prime(3), 1), Error);
}

TEST_CASE("element arithmetic") {
  const Element x = element_make(Q, {{1, q(2)}, {4, q(-1, 2)}});
  CHECK(x.to_string() == "2*a1 - 1/2*a4");
  CHECK((x - x).is_zero());
  CHECK((-x).to_string() == "-2*a1 + 1/2*a4");
  CHECK(x.shifted(2) == element_make(Q, {{3, q(2)}, {6, q(-1, 2)}}));
  CHECK(x.scaled(q(0)).is_zero());
  CHECK(q(2) * x == x + x);
  CHECK((-Element::basis(Q, 1)).to_string() == "-a1");
}
