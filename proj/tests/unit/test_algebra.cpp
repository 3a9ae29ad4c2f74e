#include <doctest.h>

#include <random>

#include "leibniz/algebra.hpp"
#include "leibniz/error.hpp"
#include "leibniz/random.hpp"
#include "oracles.hpp"

using namespace leibniz;
using oracle::q;

namespace {
const Field Q = Field::rationals();
Element a(Index n) { return Element::basis(Q, n); }
}

TEST_CASE("bracket on the multiplication table") {
  CHECK(bracket(a(1), a(1)) == a(2));
  CHECK(bracket(a(2), a(5)).is_zero());
  for (Index i = 1; i <= 6; ++i) {
    for (Index j = 1; j <= 6; ++j) {
      CHECK(bracket(a(i), a(j)) == (i == 1 ? a(j + 1) : Element(Q)));
    }
  }
}

TEST_CASE("bracket is bilinear, checked against the dense table") {
  const Element x = q(2) * a(1) + a(3);
  const Element y = a(1) + a(2);
  CHECK(bracket(x, y) == q(2) * a(2) + q(2) * a(3));
  CHECK(bracket(x, y) == oracle::table_bracket(x, y));
  for (const Field f : {Q, Field::prime(5)}) {
    CaseGenerator gen(f, 11);
    for (int i = 0; i < 200; ++i) {
      const Element u = gen.element(), v = gen.element();
      CHECK(bracket(u, v) == oracle::table_bracket(u, v));
    }
  }
}

TEST_CASE("leibniz defect vanishes") {
  CHECK(leibniz_defect(a(1), a(1), a(1)).is_zero());
  CHECK(leibniz_defect(a(1) + a(2), a(1), a(3)).is_zero());
  CHECK(leibniz_defect(a(2), a(3), a(4)).is_zero());
  for (const Field f : {Q, Field::prime(5)}) {
    CaseGenerator gen(f, 3);
    for (int i = 0; i < 200; ++i) {
      const Element x = gen.element(), y = gen.element(), z = gen.element();
      const Element lhs = oracle::table_bracket(x, oracle::table_bracket(y, z));
      const Element rhs = oracle::table_bracket(oracle::table_bracket(x, y), z) +
                          oracle::table_bracket(y, oracle::table_bracket(x, z));
      CHECK(lhs == rhs);
      CHECK(leibniz_defect(x, y, z).is_zero());
    }
  }
}

TEST_CASE("the algebra is not a Lie algebra") {
  CHECK_FALSE(bracket(a(1), a(1)).is_zero());
  CHECK_FALSE(bracket(a(1), a(2)) == -bracket(a(2), a(1)));
}

TEST_CASE("gamma window") {
  CHECK(gamma_window(Q, 1, 5) == WindowSubspace::span_from(Q, 1, 5));
  CHECK(gamma_window(Q, 1, 5).dimension() == 5);
  CHECK(gamma_window(Q, 2, 5).to_string() == "span{a2..a5}");
  CHECK(gamma_window(Q, 7, 5).is_zero());
  CHECK(gamma_window(Q, 5, 5).to_string() == "span{a5}");
  CHECK_THROWS_AS(gamma_window(Q, 0, 5), Error);
}

TEST_CASE("gamma window is the span of iterated brackets") {
  // gamma_{k+1} = [L, gamma_k] computed on basis vectors only.
  const Index n = 7;
  std::vector<Element> generators;
  for (Index i = 1; i <= n; ++i) generators.push_back(a(i));
  for (Index k = 1; k <= n + 1; ++k) {
    CHECK(gamma_window(Q, k, n) == WindowSubspace::span_of(Q, n, generators));
    std::vector<Element> next;
    for (const auto& g : generators) {
      for (Index i = 1; i <= n; ++i) {
        const Element b = oracle::table_bracket(a(i), g);
        if (!b.is_zero() && b.max_support() <= n) next.push_back(b);
      }
    }
    generators = next;
  }
}

TEST_CASE("window subspaces") {
  const auto s = WindowSubspace::span_of(Q, 5, {a(2) + a(3), a(3)});
  CHECK(s.dimension() == 2);
  CHECK(s.contains(a(2)));
  CHECK_FALSE(s.contains(a(1)));
  CHECK(s.to_string() == "span{a2, a3}");
  CHECK(WindowSubspace::span_from(Q, 2, 5).contains(s));
  CHECK(intersect(s, WindowSubspace::span_from(Q, 3, 5)) == WindowSubspace::span_of(Q, 5, {a(3)}));
  CHECK(intersect(WindowSubspace::span_of(Q, 5, {a(1) + a(2)}), WindowSubspace::span_of(Q, 5, {a(1) - a(2)}))
            .is_zero());
  CHECK_THROWS_AS(WindowSubspace::span_of(Q, 3, {a(4)}), Error);
}

TEST_CASE("centers of a small window") {
  const Centers c = centers_window(Q, 4);
  CHECK(c.left == WindowSubspace::span_of(Q, 4, {a(2), a(3), a(4)}));
  CHECK(c.right.is_zero());
  CHECK(c.center.is_zero());
  CHECK_THROWS_AS(centers_window(Q, 1), Error);
}

TEST_CASE("centers against direct bracket tests") {
  for (const Field f : {Q, Field::prime(5), Field::prime(2)}) {
    for (Index n = 3; n <= 10; ++n) {
      const Centers c = centers_window(f, n);
      CHECK(c.left == WindowSubspace::span_from(f, 2, n));
      CHECK(c.right.is_zero());
      CHECK(c.center.is_zero());
      for (Index i = 1; i <= n; ++i) {
        const Element x = Element::basis(f, i);
        bool left_annihilates = true;
        for (Index j = 1; j < n; ++j) {
          left_annihilates = left_annihilates && oracle::table_bracket(x, Element::basis(f, j)).is_zero();
        }
        CHECK(c.left.contains(x) == left_annihilates);
      }
    }
  }
}
