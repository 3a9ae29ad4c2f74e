#include <doctest.h>

#include "leibniz/polynomial.hpp"
#include "leibniz/random.hpp"
#include "oracles.hpp"

using namespace leibniz;
using oracle::q;

namespace {
const Field Q = Field::rationals();
Polynomial poly(std::vector<long> c, const Field& f = Q) {
  std::vector<Scalar> coeffs;
  for (long v : c) coeffs.emplace_back(f, v);
  return Polynomial::from_coeffs(f, coeffs);
}

// Schoolbook product written without the library's multiplication.
Polynomial convolve(const Polynomial& p, const Polynomial& r) {
  if (p.degree() < 0 || r.degree() < 0) return Polynomial(p.field());
  std::vector<Scalar> out(p.coeffs().size() + r.coeffs().size() - 1, Scalar::zero(p.field()));
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    for (std::size_t j = 0; j < r.coeffs().size(); ++j) out[i + j] += p.coeffs()[i] * r.coeffs()[j];
  }
  return Polynomial::from_coeffs(p.field(), out);
}
}  // namespace

TEST_CASE("polynomial products") {
  CHECK(poly_mul(poly({1, 1}), poly({1, 1})) == poly({1, 2, 1}));
  CHECK(poly_mul(poly({3, 0, 5}), Polynomial::one(Q)) == poly({3, 0, 5}));
  CHECK(poly_mul(poly({1, 1}), poly({1, -1})) == poly({1, 0, -1}));
  CHECK(poly({1, 2, 1}).to_string() == "1 + 2*X + X^2");
  CHECK(poly({1, 0, -1}).to_string() == "1 - X^2");
  CHECK(Polynomial(Q).to_string() == "0");
  CHECK(Polynomial(Q).degree() == -1);
  CHECK(poly({1, 2, 0, 0}).degree() == 1);
}

TEST_CASE("unit constant term") {
  CHECK(poly_unit_constant(poly({1, 3})));
  CHECK_FALSE(poly_unit_constant(poly({2, 1})));
  CHECK(poly_unit_constant(Polynomial::one(Q)));
  CHECK_FALSE(poly_unit_constant(Polynomial(Q)));
}

TEST_CASE("ring laws on random polynomials") {
  for (const Field f : {Q, Field::prime(5)}) {
    CaseGenerator gen(f, 9);
    for (int i = 0; i < 200; ++i) {
      const Polynomial a = gen.unit_constant_poly(6), b = gen.unit_constant_poly(6), c = gen.unit_constant_poly(6);
      CHECK(a * b == convolve(a, b));
      CHECK(a * b == b * a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(poly_unit_constant(a * b));
    }
  }
}
