#include <doctest.h>

#include "leibniz/error.hpp"
#include "leibniz/finmat.hpp"
#include "leibniz/random.hpp"
#include "oracles.hpp"

using namespace leibniz;
using oracle::q;

namespace {
const Field Q = Field::rationals();
Endo endo(std::vector<Scalar> g) { return endo_from_gamma(Q, std::move(g)); }
Derivation der(std::vector<Scalar> g) { return der_from_gamma(Q, std::move(g)); }

FinMatrixWindow diag(std::vector<long> d) {
  FinMatrixWindow m(Q, d.size(), d.size());
  for (Index i = 1; i <= d.size(); ++i) m.set_entry(i, i, q(d[i - 1]));
  return m;
}

// Columns built from the homomorphism / Leibniz-rule recursions.
FinMatrixWindow recursion_matrix(const std::vector<Element>& images, Index n) {
  FinMatrixWindow m(images.front().field(), n, n);
  for (Index c = 1; c <= n; ++c) {
    for (const auto& [r, v] : images[c - 1].terms()) {
      if (r <= n) m.set_entry(r, c, v);
    }
  }
  return m;
}

bool agree_on_columns(const FinMatrixWindow& a, const FinMatrixWindow& b, Index cols) {
  for (Index c = 1; c <= cols; ++c) {
    for (Index r = 1; r <= a.size(); ++r) {
      if (!(a.entry(r, c) == b.entry(r, c))) return false;
    }
  }
  return true;
}
}  // namespace

TEST_CASE("endomorphism matrices") {
  CHECK(matrix_of(endo({q(2)}), 3) == diag({2, 4, 8}));
  CHECK(matrix_of(Endo::identity(Q), 7) == FinMatrixWindow::identity(Q, 7));
  const FinMatrixWindow m = matrix_of(endo({q(1), q(1)}), 3);
  CHECK(m.dump() == "1 0 0\n1 1 0\n0 1 1\n");
  CHECK(m.valid_cols() == 2);
  CHECK(m.is_unit_lower_triangular());
  CHECK(matrix_of(Endo::zero(Q), 3).valid_cols() == 3);
  CHECK_THROWS_AS(matrix_of(endo({q(1), q(1), q(1), q(1)}), 3), Error);
}

TEST_CASE("derivation matrices") {
  CHECK(matrix_of(der({q(1)}), 3) == diag({1, 2, 3}));
  const FinMatrixWindow shift = matrix_of(der({q(0), q(1)}), 3);
  CHECK(shift.dump() == "0 0 0\n1 0 0\n0 1 0\n");
  CHECK(shift.is_strictly_lower_triangular());
  CHECK(matrix_of(Derivation::zero(Q), 3) == FinMatrixWindow(Q, 3, 3));
}

TEST_CASE("matrices agree with recursions and closed-form bands") {
  for (const Field f : {Q, Field::prime(5)}) {
    CaseGenerator gen(f, 41);
    for (int i = 0; i < 200; ++i) {
      const Endo e = gen.endo();
      const FinMatrixWindow me = matrix_of(e, 12);
      CHECK(agree_on_columns(me, recursion_matrix(oracle::endo_images(e.image_of_generator(), 12), 12), 12));
      CHECK(me == endo_band_pattern(f, e.gamma(), 12));
      const Derivation d = gen.derivation();
      const FinMatrixWindow md = matrix_of(d, 12);
      CHECK(agree_on_columns(md, recursion_matrix(oracle::der_images(d.image_of_generator(), 12), 12), 12));
      CHECK(md == der_band_pattern(f, d.gamma(), 12));
    }
  }
}

TEST_CASE("products and commutators on trusted columns") {
  for (const Field f : {Q, Field::prime(5)}) {
    CaseGenerator gen(f, 42);
    for (int i = 0; i < 200; ++i) {
      const Endo u = gen.endo(), v = gen.endo();
      const FinMatrixWindow prod = matmul(matrix_of(u, 24), matrix_of(v, 24));
      CHECK(prod.valid_cols() >= 2);
      CHECK(agree_on_trusted(prod, matrix_of(compose(u, v), 24)));
      const Derivation s = gen.derivation(), t = gen.derivation();
      const FinMatrixWindow comm = commutator(matrix_of(s, 24), matrix_of(t, 24));
      CHECK(agree_on_trusted(comm, matrix_of(lie_bracket(s, t), 24)));
    }
  }
  CHECK_THROWS_AS(matmul(FinMatrixWindow(Q, 3, 3), FinMatrixWindow(Q, 4, 4)), Error);
}

TEST_CASE("endomorphism oracle") {
  CHECK(oracle_check_endo(matrix_of(endo({q(1), q(1)}), 8), 1));
  CHECK(oracle_check_endo(FinMatrixWindow(Q, 6, 6), 1));
  FinMatrixWindow mutant = matrix_of(endo({q(1), q(1)}), 8);
  mutant.set_entry(4, 3, q(5));
  CHECK_FALSE(oracle_check_endo(mutant, 1));
  CHECK_FALSE(oracle_check_endo(matrix_of(der({q(1)}), 6), 1));
}

TEST_CASE("derivation oracle") {
  CHECK(oracle_check_der(matrix_of(der({q(1)}), 6), 1));
  CHECK_FALSE(oracle_check_der(matrix_of(endo({q(1), q(1)}), 6), 1));
  CHECK(oracle_check_der(FinMatrixWindow(Q, 6, 6), 1));
  FinMatrixWindow mutant = matrix_of(der({q(2), q(1)}), 8);
  mutant.set_entry(2, 2, q(1));
  CHECK_FALSE(oracle_check_der(mutant, 1));
}

TEST_CASE("every single-entry mutant in the checked region fails") {
  const FinMatrixWindow e = matrix_of(endo({q(2), q(-1), q(3)}), 7);
  const FinMatrixWindow d = matrix_of(der({q(2), q(-1), q(3)}), 7);
  const Index ce = oracle_checked_columns(e, 1);
  const Index cd = oracle_checked_columns(d, 1);
  for (Index c = 2; c <= ce; ++c) {
    for (Index r = c; r <= 7; ++r) {
      FinMatrixWindow m = e;
      m.set_entry(r, c, m.entry(r, c) + q(1));
      CHECK_FALSE(oracle_check_endo(m, 1));
    }
  }
  for (Index c = 2; c <= cd; ++c) {
    for (Index r = c; r <= 7; ++r) {
      FinMatrixWindow m = d;
      m.set_entry(r, c, m.entry(r, c) + q(1));
      CHECK_FALSE(oracle_check_der(m, 1));
    }
  }
}

TEST_CASE("oracle margins") {
  const FinMatrixWindow m = matrix_of(Endo::identity(Q), 6);
  CHECK(oracle_checked_columns(m, 1) == 6);
  CHECK(oracle_checked_columns(m, 3) == 4);
  CHECK_THROWS_AS(oracle_checked_columns(m, 0), Error);
  CHECK_THROWS_AS(oracle_checked_columns(m, 6), Error);
  CHECK_THROWS_AS(oracle_check_endo(FinMatrixWindow(Q, 1, 1), 1), Error);
}

TEST_CASE("window kernel and span witnesses") {
  CHECK(trusted_kernel_is_trivial(matrix_of(endo({q(3), q(1)}), 10)));
  CHECK_FALSE(trusted_kernel_is_trivial(matrix_of(endo({q(0), q(1)}), 10)));
  CHECK_FALSE(trusted_span_contains(matrix_of(endo({q(1), q(1)}), 10), Element::basis(Q, 1)));
  CHECK(trusted_span_contains(matrix_of(endo({q(1), q(1)}), 10), Element::basis(Q, 1) + Element::basis(Q, 2)));
}

TEST_CASE("apply past the trusted columns") {
  const FinMatrixWindow m = matrix_of(endo({q(1), q(1)}), 4);
  CHECK(m.apply(Element::basis(Q, 3)) == Element::basis(Q, 3) + Element::basis(Q, 4));
  CHECK_THROWS_AS(m.apply(Element::basis(Q, 4)), Error);
}
