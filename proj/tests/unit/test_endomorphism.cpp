#include <doctest.h>

#include "leibniz/algebra.hpp"
#include "leibniz/endomorphism.hpp"
#include "leibniz/error.hpp"
#include "leibniz/finmat.hpp"
#include "leibniz/random.hpp"
#include "oracles.hpp"

using namespace leibniz;
using oracle::q;

namespace {
const Field Q = Field::rationals();
Element a(Index n, const Field& f = Q) { return Element::basis(f, n); }
Endo endo(std::vector<Scalar> g, const Field& f = Q) { return endo_from_gamma(f, std::move(g)); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::ParseError;
}
}  // namespace

TEST_CASE("construction from gamma") {
  CHECK(endo({q(1)}) == Endo::identity(Q));
  CHECK(endo({q(0)}) == Endo::zero(Q));
  CHECK(endo({q(0)}).degree() == 0);
  CHECK(endo({q(1), q(1)}).image_of_generator() == a(1) + a(2));
  CHECK(endo({q(1), q(2), q(0)}).degree() == 2);
  CHECK(endo({q(1), q(1, 2)}).to_string() == "endo [1, 1/2]");
  CHECK(Endo::zero(Q).to_string() == "endo [0]");
}

TEST_CASE("apply") {
  CHECK(apply(endo({q(2)}), a(3)) == q(8) * a(3));
  CHECK(apply(endo({q(1), q(1)}), a(2)) == a(2) + a(3));
  CHECK(apply(endo({q(0), q(1)}), a(2)).is_zero());
  CHECK(apply(endo({q(1), q(1)}), a(2)) == oracle::endo_apply(endo({q(1), q(1)}), a(2)));
  const FinMatrixWindow m = matrix_of(endo({q(1), q(1)}), 6);
  CHECK(m.apply(a(2)) == a(2) + a(3));
}

TEST_CASE("apply agrees with the homomorphism recursion") {
  for (const Field f : {Q, Field::prime(5)}) {
    CaseGenerator gen(f, 21);
    for (int i = 0; i < 200; ++i) {
      const Endo g = gen.endo();
      const Element x = gen.element();
      CHECK(apply(g, x) == oracle::endo_apply(g, x));
      const Element y = gen.element();
      CHECK(apply(g, bracket(x, y)) == bracket(apply(g, x), apply(g, y)));
    }
  }
}

TEST_CASE("composition") {
  CHECK(compose(endo({q(0), q(1)}), endo({q(0), q(1)})) == Endo::zero(Q));
  const Endo g = endo({q(3), q(-1), q(2, 7)});
  CHECK(compose(Endo::identity(Q), g) == g);
  CHECK(compose(g, Endo::identity(Q)) == g);
  CHECK(compose(endo({q(1), q(1)}), endo({q(1), q(1)})) == endo({q(1), q(2), q(1)}));
  for (const Field f : {Q, Field::prime(5)}) {
    CaseGenerator gen(f, 22);
    for (int i = 0; i < 200; ++i) {
      const Endo u = gen.endo(), v = gen.endo(), w = gen.endo();
      const Element x = gen.element();
      CHECK(apply(compose(u, v), x) == oracle::endo_apply(u, oracle::endo_apply(v, x)));
      CHECK(compose(compose(u, v), w) == compose(u, compose(v, w)));
    }
  }
}

TEST_CASE("classification") {
  CHECK(classify(endo({q(0), q(1)})) == EndoClass::ZeroSquareIdeal);
  CHECK(classify(endo({q(2)})) == EndoClass::Automorphism);
  CHECK(classify(endo({q(1), q(1)})) == EndoClass::MonomorphismProper);
  CHECK(classify(Endo::zero(Q)) == EndoClass::ZeroSquareIdeal);
  CHECK(to_string(EndoClass::MonomorphismProper) == "MonomorphismProper");
  // a1 is not in the image of [1,1] on any window.
  CHECK_FALSE(trusted_span_contains(matrix_of(endo({q(1), q(1)}), 12), a(1)));
  CHECK(trusted_span_contains(matrix_of(endo({q(2)}), 12), a(1)));
}

TEST_CASE("inverse") {
  CHECK(inverse(endo({q(2)})) == endo({q(1, 2)}));
  CHECK(inverse(Endo::identity(Q)) == Endo::identity(Q));
  CHECK(code_of([] { inverse(endo({q(1), q(1)})); }) == ErrorCode::NotInvertible);
  CHECK(code_of([] { inverse(Endo::zero(Q)); }) == ErrorCode::NotInvertible);
  const Field gf5 = Field::prime(5);
  CHECK(inverse(Endo::diagonal(Scalar(gf5, 2))) == Endo::diagonal(Scalar(gf5, 3)));
}

TEST_CASE("factorization") {
  const MonFactorization m = factorize(endo({q(2), q(4)}));
  CHECK(m.unipotent == endo({q(1), q(2)}));
  CHECK(m.diagonal == q(2));
  CHECK(recompose(m) == endo({q(2), q(4)}));
  CHECK(apply(Endo::diagonal(q(2)), a(1)) == q(2) * a(1));
  CHECK(apply(m.unipotent, q(2) * a(1)) == q(2) * a(1) + q(4) * a(2));

  const MonFactorization id = factorize(endo({q(1), q(1)}));
  CHECK(id.unipotent == endo({q(1), q(1)}));
  CHECK(id.diagonal.is_one());
  CHECK(code_of([] { factorize(endo({q(0), q(1)})); }) == ErrorCode::NotMonomorphism);
}

TEST_CASE("factorization recomposes on random monomorphisms") {
  for (const Field f : {Q, Field::prime(5)}) {
    CaseGenerator gen(f, 23);
    for (int i = 0; i < 200; ++i) {
      const Endo g = gen.monomorphism();
      const MonFactorization m = factorize(g);
      CHECK(m.unipotent.gamma(1).is_one());
      CHECK(recompose(m) == g);
      CHECK(compose(m.unipotent, Endo::diagonal(m.diagonal)) == g);
    }
  }
}

TEST_CASE("phi") {
  CHECK(phi(Endo::identity(Q)).to_string() == "1");
  CHECK(phi(endo({q(1), q(1)})).to_string() == "1 + X");
  CHECK(phi(endo({q(1), q(2), q(1)})).to_string() == "1 + 2*X + X^2");
  CHECK(phi(endo({q(1), q(2), q(1)})) == poly_mul(phi(endo({q(1), q(1)})), phi(endo({q(1), q(1)}))));
  CHECK(code_of([] { phi(endo({q(2), q(1)})); }) == ErrorCode::NotUnipotent);

  CHECK(phi_inverse(Polynomial::one(Q)) == Endo::identity(Q));
  CHECK(phi_inverse(Polynomial::from_coeffs(Q, {q(1), q(0), q(3)})) == endo({q(1), q(0), q(3)}));
  const Polynomial one_plus_x = phi(endo({q(1), q(1)}));
  CHECK(compose(endo({q(1), q(1)}), endo({q(1), q(1)})) == phi_inverse(poly_mul(one_plus_x, one_plus_x)));
  CHECK(code_of([] { phi_inverse(Polynomial::from_coeffs(Q, {q(2), q(1)})); }) == ErrorCode::BadConstantTerm);
}

TEST_CASE("phi is a multiplicative bijection") {
  for (const Field f : {Q, Field::prime(5)}) {
    CaseGenerator gen(f, 24);
    for (int i = 0; i < 200; ++i) {
      const Endo u = gen.unipotent(), v = gen.unipotent();
      CHECK(phi(compose(u, v)) == poly_mul(phi(u), phi(v)));
      CHECK(compose(u, v) == compose(v, u));
      CHECK(phi_inverse(phi(u)) == u);
      const Polynomial p = gen.unit_constant_poly(12);
      CHECK(phi(phi_inverse(p)) == p);
    }
  }
}

TEST_CASE("conjugation by diagonal automorphisms") {
  CHECK(conjugate_by_diagonal(endo({q(1), q(1)}), q(2)) == endo({q(1), q(1, 2)}));
  CHECK(conjugate_by_diagonal(Endo::identity(Q), q(5)) == Endo::identity(Q));
  CHECK(conjugate_by_diagonal(endo({q(1), q(0), q(3)}), q(-1)) == endo({q(1), q(0), q(3)}));
  CHECK(code_of([] { conjugate_by_diagonal(endo({q(1), q(1)}), q(0)); }) == ErrorCode::ZeroDiagonal);
  CHECK(code_of([] { conjugate_by_diagonal(endo({q(2), q(1)}), q(3)); }) == ErrorCode::NotUnipotent);
  for (const Field f : {Q, Field::prime(5)}) {
    CaseGenerator gen(f, 25);
    for (int i = 0; i < 200; ++i) {
      const Endo u = gen.unipotent();
      const Scalar mu = gen.nonzero_scalar();
      const Endo d = Endo::diagonal(mu);
      CHECK(conjugate_by_diagonal(u, mu) == compose(inverse(d), compose(u, d)));
    }
  }
}

TEST_CASE("errors") {
  CHECK(code_of([] { endo({q(1)}).gamma(0); }) == ErrorCode::BadIndex);
  CHECK(code_of([] { endo_from_gamma(Q, {Scalar(Field::prime(5), 1)}); }) == ErrorCode::MixedFields);
  CHECK(code_of([] { apply(endo({q(1)}), a(1, Field::prime(5))); }) == ErrorCode::MixedFields);
}
