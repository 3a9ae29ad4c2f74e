#include "leibniz/verify.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "leibniz/algebra.hpp"
#include "leibniz/derivation.hpp"
#include "leibniz/endomorphism.hpp"
#include "leibniz/error.hpp"
#include "leibniz/finmat.hpp"
#include "leibniz/random.hpp"

namespace leibniz {

namespace {

// Records the first failed check of a case.
class Case {
 public:
  void require(bool condition, std::string_view what) {
    if (!condition && ok_) {
      ok_ = false;
      reason_ = std::string(what);
    }
  }
  void fail(std::string_view what) { require(false, what); }

  void set_context(std::string context) { context_ = std::move(context); }

  bool ok() const noexcept { return ok_; }
  std::string describe() const { return context_.empty() ? reason_ : reason_ + " [" + context_ + "]"; }

 private:
  bool ok_ = true;
  std::string reason_;
  std::string context_;
};

constexpr std::size_t kKeptFailures = 3;

using CaseBody = std::function<void(CaseGenerator&, Case&, std::size_t)>;

SuiteResult run_cases(int criterion, std::string name, const VerifyOptions& options,
                      std::uint64_t stream, std::size_t count, const CaseBody& body) {
  SuiteResult result;
  result.criterion = criterion;
  result.name = std::move(name);
  CaseGenerator gen(options.field, options.seed ^ (0x9E3779B97F4A7C15ULL * (stream + 1)));
  for (std::size_t i = 0; i < count; ++i) {
    Case c;
    try {
      body(gen, c, i);
    } catch (const std::exception& e) {
      c.fail(std::string("unexpected error: ") + e.what());
    }
    ++result.cases;
    if (c.ok()) {
      ++result.passed;
    } else if (result.failures.size() < kKeptFailures) {
      result.failures.push_back("case " + std::to_string(i) + ": " + c.describe());
    }
  }
  return result;
}

Scalar index_scalar(const Field& field, std::size_t k) {
  return Scalar(field, static_cast<long>(k));
}

template <typename Fn>
bool throws_code(ErrorCode code, Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Left Leibniz identity and the bracket laws it rests on.

SuiteResult leibniz_identity(const VerifyOptions& o, std::uint64_t stream) {
  return run_cases(1, "leibniz-identity", o, stream, o.cases, [](CaseGenerator& gen, Case& c, std::size_t) {
    const Element a = gen.element();
    const Element b = gen.element();
    const Element x = gen.element();
    c.set_context("a=" + a.to_string() + " b=" + b.to_string() + " c=" + x.to_string());
    c.require(leibniz_defect(a, b, x).is_zero(), "leibniz defect is nonzero");

    const Scalar alpha = gen.scalar();
    c.require(bracket(a.scaled(alpha) + b, x) == bracket(a, x).scaled(alpha) + bracket(b, x),
              "bracket not linear in the left slot");
    c.require(bracket(x, a.scaled(alpha) + b) == bracket(x, a).scaled(alpha) + bracket(x, b),
              "bracket not linear in the right slot");
    const Element ab = bracket(a, b);
    c.require(ab.is_zero() || (ab.min_support() >= 2 && ab.min_support() >= b.min_support() + 1 &&
                               ab.max_support() == b.max_support() + 1),
              "bracket support is not shift(support(y))");
  });
}

// ---------------------------------------------------------------------------
// Gamma-vector maps pass the bracket-law oracle, passing
// window matrices follow the band pattern, and single-entry mutants fail.

constexpr Index kCandidateWindow = 5;

enum class MapKind { Endo, Der };

FinMatrixWindow band_pattern(MapKind kind, const Field& field, const std::vector<Scalar>& gamma,
                             Index size) {
  return kind == MapKind::Endo ? endo_band_pattern(field, gamma, size)
                               : der_band_pattern(field, gamma, size);
}

bool oracle_check(MapKind kind, const FinMatrixWindow& m, Index margin) {
  return kind == MapKind::Endo ? oracle_check_endo(m, margin) : oracle_check_der(m, margin);
}

// A random lower-triangular candidate: either noise, or the band pattern of a
// short gamma vector, possibly with one entry perturbed.
FinMatrixWindow random_candidate(MapKind kind, CaseGenerator& gen, bool& exact_pattern) {
  const Field& field = gen.field();
  exact_pattern = false;
  if (gen.coin()) {
    FinMatrixWindow m(field, kCandidateWindow, static_cast<Index>(gen.between(2, kCandidateWindow)));
    for (Index c = 1; c <= kCandidateWindow; ++c) {
      for (Index r = c; r <= kCandidateWindow; ++r) {
        if (gen.below(3) == 0) m.set_entry(r, c, gen.below(2) ? Scalar::one(field) : gen.scalar());
      }
    }
    return m;
  }
  auto gamma = gen.gamma(0, 3);
  FinMatrixWindow m = band_pattern(kind, field, gamma, kCandidateWindow);
  exact_pattern = true;
  if (gen.coin()) {
    const Index c = static_cast<Index>(gen.between(1, kCandidateWindow));
    const Index r = static_cast<Index>(gen.between(static_cast<long>(c), kCandidateWindow));
    m.set_entry(r, c, m.entry(r, c) + gen.nonzero_scalar());
    exact_pattern = false;
  }
  return m;
}

template <typename Map>
void check_map_against_oracle(MapKind kind, const Map& f, Index window, CaseGenerator& gen, Case& c) {
  const FinMatrixWindow m = matrix_of(f, window);
  c.require(oracle_check(kind, m, 1), "matrix of a gamma-vector map fails the bracket-law oracle");
  c.require(m == band_pattern(kind, f.field(), f.gamma(), window),
            "matrix differs from the closed-form band pattern");
  c.require(m.is_lower_triangular(), "matrix is not lower triangular");

  const Element x = gen.element();
  const Element y = gen.element();
  if (kind == MapKind::Endo) {
    c.require(apply(f, bracket(x, y)) == bracket(apply(f, x), apply(f, y)),
              "homomorphism law fails on random elements");
  } else {
    c.require(apply(f, bracket(x, y)) == bracket(apply(f, x), y) + bracket(x, apply(f, y)),
              "derivation law fails on random elements");
  }
}

SuiteResult formula_equivalence(MapKind kind, const VerifyOptions& o, std::uint64_t stream) {
  const int criterion = kind == MapKind::Endo ? 2 : 6;
  const std::string name = kind == MapKind::Endo ? "endo-formula-equivalence" : "der-formula-equivalence";
  return run_cases(criterion, name, o, stream, o.cases, [kind, &o](CaseGenerator& gen, Case& c, std::size_t) {
    const Field& field = gen.field();
    const Index window = o.window;

    // Every gamma vector gives a map that passes the oracle.
    std::vector<Scalar> gamma = gen.gamma(0, CaseGenerator::kMaxDegree);
    if (kind == MapKind::Endo) {
      const Endo f = Endo::from_gamma(field, gamma);
      c.set_context(f.to_string());
      check_map_against_oracle(kind, f, window, gen, c);
    } else {
      const Derivation f = Derivation::from_gamma(field, gamma);
      c.set_context(f.to_string());
      check_map_against_oracle(kind, f, window, gen, c);
    }

    // A window matrix that passes is the band pattern of its first column.
    bool exact = false;
    const FinMatrixWindow candidate = random_candidate(kind, gen, exact);
    const bool passes = oracle_check(kind, candidate, 1);
    if (exact) c.require(passes, "exact band pattern rejected by the oracle");
    if (passes) {
      const Index checked = oracle_checked_columns(candidate, 1);
      std::vector<Scalar> first_column;
      for (Index r = 1; r <= candidate.size(); ++r) first_column.push_back(candidate.entry(r, 1));
      while (!first_column.empty() && first_column.back().is_zero()) first_column.pop_back();
      const FinMatrixWindow expected = band_pattern(kind, field, first_column, candidate.size());
      for (Index col = 1; col <= checked; ++col) {
        for (Index r = 1; r <= candidate.size(); ++r) {
          c.require(candidate.entry(r, col) == expected.entry(r, col),
                    "oracle accepted a matrix off the band pattern");
        }
      }
    }

    // Single-entry mutants of a valid matrix are rejected.
    FinMatrixWindow mutant = band_pattern(kind, field, gamma, window);
    const Index checked = oracle_checked_columns(mutant, 1);
    const Index col = static_cast<Index>(gen.between(2, static_cast<long>(checked)));
    const Index row = static_cast<Index>(gen.between(static_cast<long>(col), static_cast<long>(window)));
    mutant.set_entry(row, col, mutant.entry(row, col) + gen.nonzero_scalar());
    c.require(!oracle_check(kind, mutant, 1), "single-entry mutant accepted by the oracle");
  });
}

// ---------------------------------------------------------------------------
// The zero-square ideal S and the monomorphism split.

SuiteResult zero_square_ideal(const VerifyOptions& o, std::uint64_t stream) {
  return run_cases(3, "zero-square-ideal", o, stream, o.cases, [&o](CaseGenerator& gen, Case& c, std::size_t) {
    const Endo f = gen.ideal_endo();
    const Endo g = gen.ideal_endo();
    const Endo h = gen.endo();
    c.set_context("f=" + f.to_string() + " g=" + g.to_string() + " h=" + h.to_string());
    c.require(classify(f) == EndoClass::ZeroSquareIdeal, "gamma_1 = 0 not classified into S");
    c.require(compose(f, f).degree() == 0, "f o f != 0 for f in S");
    c.require(compose(f, g).degree() == 0, "f o g != 0 for f, g in S");
    c.require(compose(h, f).gamma(1).is_zero(), "h o f left S");
    c.require(compose(f, h).gamma(1).is_zero(), "f o h left S");
    const Element x = gen.element();
    c.require(apply(f, x).coeff(1).is_zero(), "image of f in S leaves [L, L]");
    c.require(apply(f, gen.element_between(2, CaseGenerator::kMaxIndex)).is_zero(),
              "f in S does not kill [L, L]");

    const Endo m = gen.monomorphism();
    c.require(classify(m) != EndoClass::ZeroSquareIdeal, "gamma_1 != 0 classified into S");
    c.require(trusted_kernel_is_trivial(matrix_of(m, o.window)),
              "window matrix of a monomorphism has a kernel");
  });
}

// ---------------------------------------------------------------------------
// Mon(L) = A D, A abelian, D ~ F^x, d^-1 A d = A, Phi.

constexpr std::size_t kPhiDegree = 12;

SuiteResult monomorphism_structure(const VerifyOptions& o, std::uint64_t stream) {
  return run_cases(4, "monomorphism-structure", o, stream, o.cases, [&o](CaseGenerator& gen, Case& c, std::size_t) {
    const Field& field = gen.field();
    const Endo id = Endo::identity(field);

    const Endo f = gen.monomorphism();
    c.set_context("f=" + f.to_string());
    const MonFactorization fac = factorize(f);
    c.require(fac.unipotent.gamma(1).is_one(), "unipotent part has gamma_1 != 1");
    c.require(fac.diagonal == f.gamma(1), "diagonal part differs from gamma_1");
    c.require(recompose(fac) == f, "unipotent o diagonal does not recompose f");

    // Uniqueness: factoring a product u' o [d'] returns exactly (u', d').
    const Endo u2 = gen.unipotent();
    const Scalar d2 = gen.nonzero_scalar();
    const MonFactorization back = factorize(compose(u2, Endo::diagonal(d2)));
    c.require(back.unipotent == u2 && back.diagonal == d2, "factorization is not unique");
    // A meets D only in the identity.
    c.require(factorize(Endo::diagonal(d2)).unipotent == id, "diagonal map has a unipotent part");
    c.require(factorize(u2).diagonal.is_one(), "unipotent map has a diagonal part");

    const Endo u = gen.unipotent();
    const Endo v = gen.unipotent();
    c.require(compose(u, v) == compose(v, u), "A is not commutative");
    c.require(compose(u, v).gamma(1).is_one(), "A is not closed");

    const Scalar gamma = gen.nonzero_scalar();
    const Scalar delta = gen.nonzero_scalar();
    c.require(compose(Endo::diagonal(gamma), Endo::diagonal(delta)) == Endo::diagonal(gamma * delta),
              "[g] o [d] != [g d]");
    c.require(compose(inverse(Endo::diagonal(gamma)), Endo::diagonal(gamma)) == id &&
                  compose(Endo::diagonal(gamma), inverse(Endo::diagonal(gamma))) == id,
              "diagonal inverse fails");

    const Endo g = gen.monomorphism();
    const Endo fg = compose(f, g);
    c.require(classify(fg) != EndoClass::ZeroSquareIdeal, "Mon(L) not closed");
    c.require(fg.gamma(1) == f.gamma(1) * g.gamma(1), "gamma_1 not multiplicative");

    // Conjugation: closed form, composition route and matrix route agree.
    const Scalar mu = gen.nonzero_scalar();
    const Endo d = Endo::diagonal(mu);
    const Endo conj = conjugate_by_diagonal(u, mu);
    c.require(conj.gamma(1).is_one(), "conjugate left A");
    const Scalar mu_inv = mu.inv();
    for (std::size_t k = 1; k <= u.degree(); ++k) {
      c.require(conj.gamma(k) == mu_inv.pow(k - 1) * u.gamma(k), "mu^(1-k) coordinate law fails");
    }
    c.require(conj == compose(inverse(d), compose(u, d)), "closed form differs from d^-1 o u o d");
    const FinMatrixWindow oracle =
        matmul(matrix_of(inverse(d), o.window), matmul(matrix_of(u, o.window), matrix_of(d, o.window)));
    c.require(agree_on_trusted(matrix_of(conj, o.window), oracle),
              "conjugate differs from the matrix product D^-1 U D");
    c.require(conjugate_by_diagonal(compose(u, v), mu) ==
                  compose(conjugate_by_diagonal(u, mu), conjugate_by_diagonal(v, mu)),
              "conjugation is not multiplicative on A");

    // Phi: homomorphism and bijection onto unit-constant polynomials.
    c.require(phi(compose(u, v)) == phi(u) * phi(v), "Phi(u o v) != Phi(u) Phi(v)");
    const Endo big = gen.unipotent(kPhiDegree + 1);
    c.require(phi_inverse(phi(big)) == big, "Phi^-1 o Phi != id");
    const Polynomial p = gen.unit_constant_poly(kPhiDegree);
    const Polynomial q = gen.unit_constant_poly(kPhiDegree);
    c.require(phi(phi_inverse(p)) == p, "Phi o Phi^-1 != id");
    c.require(poly_unit_constant(p * q), "unit-constant polynomials not closed");
    c.require(phi_inverse(p * q) == compose(phi_inverse(p), phi_inverse(q)),
              "Phi^-1 is not multiplicative");
  });
}

// ---------------------------------------------------------------------------
// Aut(L) ~ F^x, and proper monomorphisms miss a_1.

constexpr std::size_t kWitnessCases = 20;

SuiteResult automorphism_group(const VerifyOptions& o, std::uint64_t stream) {
  return run_cases(5, "automorphism-group", o, stream, o.cases, [](CaseGenerator& gen, Case& c, std::size_t i) {
    const Field& field = gen.field();
    // Every fourth case is forced to a diagonal map so that automorphisms
    // show up often enough.
    const Endo f = i % 4 == 0 ? Endo::diagonal(gen.scalar()) : gen.endo();
    c.set_context("f=" + f.to_string());
    const bool expected = !f.gamma(1).is_zero() && f.degree() == 1;
    c.require((classify(f) == EndoClass::Automorphism) == expected,
              "Automorphism class differs from the [g], g != 0 criterion");
    if (expected) {
      const Endo inv = inverse(f);
      c.require(inv == Endo::diagonal(f.gamma(1).inv()), "inverse([g]) != [g^-1]");
      c.require(compose(inv, f) == Endo::identity(field) && compose(f, inv) == Endo::identity(field),
                "inverse does not compose to the identity");
    } else {
      c.require(throws_code(ErrorCode::NotInvertible, [&] { (void)inverse(f); }),
                "non-automorphism was inverted");
    }
  });
}

SuiteResult non_surjectivity(const VerifyOptions& o, std::uint64_t stream) {
  return run_cases(5, "proper-monomorphism-witness", o, stream, kWitnessCases,
                   [&o](CaseGenerator& gen, Case& c, std::size_t) {
                     const Endo f = gen.proper_monomorphism();
                     c.set_context("f=" + f.to_string());
                     c.require(classify(f) == EndoClass::MonomorphismProper, "misclassified");
                     const FinMatrixWindow m = matrix_of(f, o.window);
                     c.require(!trusted_span_contains(m, Element::basis(gen.field(), 1)),
                               "a_1 found in the window image of a proper monomorphism");
                   });
}

// ---------------------------------------------------------------------------
// Der(L) = A + D, A abelian ideal, [d, A] = A in char 0.

SuiteResult derivation_algebra(const VerifyOptions& o, std::uint64_t stream) {
  return run_cases(7, "derivation-algebra", o, stream, o.cases, [](CaseGenerator& gen, Case& c, std::size_t) {
    const Field& field = gen.field();
    const Scalar one = Scalar::one(field);
    const Derivation theta = gen.ideal_derivation();
    const Derivation eta = gen.ideal_derivation();
    const Derivation f = gen.derivation();
    const Derivation g = gen.derivation();
    const Derivation h = gen.derivation();
    c.set_context("f=" + f.to_string() + " theta=" + theta.to_string());

    c.require(lie_bracket(theta, eta).degree() == 0, "A is not abelian");
    c.require(lie_bracket(f, theta).in_ideal() && lie_bracket(theta, f).in_ideal(), "A is not an ideal");
    c.require(lie_bracket(f, g).in_ideal(), "[Der, Der] leaves A");

    // Lie axioms on gamma vectors.
    c.require(lie_bracket(f, f).degree() == 0, "[f, f] != 0");
    c.require(lie_bracket(f, g) == linear_combine(-one, lie_bracket(g, f), one, Derivation::zero(field)),
              "bracket is not antisymmetric");
    c.require(lie_bracket(lie_bracket(f, g), h) ==
                  linear_combine(one, lie_bracket(f, lie_bracket(g, h)), -one, lie_bracket(g, lie_bracket(f, h))),
              "Jacobi identity fails");
    const Scalar alpha = gen.scalar();
    const Scalar beta = gen.scalar();
    c.require(lie_bracket(linear_combine(alpha, f, beta, g), h) ==
                  linear_combine(alpha, lie_bracket(f, h), beta, lie_bracket(g, h)),
              "bracket is not linear");

    // D is abelian and linear in gamma.
    const Scalar gamma = gen.scalar();
    const Scalar delta = gen.scalar();
    c.require(lie_bracket(Derivation::diagonal(gamma), Derivation::diagonal(delta)).degree() == 0,
              "D is not abelian");
    c.require(linear_combine(alpha, Derivation::diagonal(gamma), beta, Derivation::diagonal(delta)) ==
                  Derivation::diagonal(alpha * gamma + beta * delta),
              "gamma -> [gamma] is not linear");

    // Decomposition.
    const DerDecomposition split = decompose(f);
    c.require(split.ideal_part.in_ideal() && split.diagonal_part == f.gamma(1), "bad split");
    c.require(recompose(split) == f, "split does not recompose");
    const DerDecomposition again = decompose(linear_combine(one, theta, one, Derivation::diagonal(gamma)));
    c.require(again.ideal_part == theta && again.diagonal_part == gamma, "split is not unique");

    // Diagonal action: [[mu], theta]_k = (k-1) mu theta_k.
    const Scalar mu = gen.nonzero_scalar();
    const Derivation acted = lie_bracket(Derivation::diagonal(mu), theta);
    for (std::size_t k = 1; k <= std::max(theta.degree(), acted.degree()); ++k) {
      c.require(acted.gamma(k) == index_scalar(field, k - 1) * mu * theta.gamma(k),
                "diagonal action is not (k-1) mu on coordinate k");
    }

    // Solving [[mu], X] = target.
    const Derivation target = gen.ideal_derivation();
    std::vector<std::size_t> obstructed;
    for (std::size_t k = 2; k <= target.degree(); ++k) {
      if (!target.gamma(k).is_zero() && index_scalar(field, k - 1).is_zero()) obstructed.push_back(k);
    }
    if (field.is_rationals()) {
      c.require(obstructed.empty(), "char 0 reported an obstruction");
    }
    try {
      const Derivation solved = solve_commutator(mu, target);
      c.require(obstructed.empty(), "solved a target with an obstructed coordinate");
      c.require(solved.in_ideal(), "solution is not in A");
      c.require(lie_bracket(Derivation::diagonal(mu), solved) == target, "[d, solution] != target");
    } catch (const CharPObstruction& e) {
      c.require(!obstructed.empty(), "solvable target reported as obstructed");
      c.require(e.indices() == obstructed, "obstruction reports the wrong indices");
    }
    if (!obstructed.empty()) {
      // Clearing the obstructed coordinates makes the target solvable.
      std::vector<Scalar> cleared = target.gamma();
      for (auto k : obstructed) cleared[k - 1] = Scalar::zero(field);
      const Derivation reachable = Derivation::from_gamma(field, cleared);
      c.require(lie_bracket(Derivation::diagonal(mu), solve_commutator(mu, reachable)) == reachable,
                "target supported away from obstructions not solved");
    }
  });
}

// ---------------------------------------------------------------------------
// Structured products agree with matrix products.

SuiteResult cross_oracle(const VerifyOptions& o, std::uint64_t stream) {
  return run_cases(8, "cross-oracle", o, stream, o.cases, [&o](CaseGenerator& gen, Case& c, std::size_t) {
    const Index window = o.window;
    const Endo f = gen.endo();
    const Endo g = gen.endo();
    c.set_context("f=" + f.to_string() + " g=" + g.to_string());
    const FinMatrixWindow product = matmul(matrix_of(f, window), matrix_of(g, window));
    const FinMatrixWindow composed = matrix_of(compose(f, g), window);
    c.require(product.valid_cols() >= 1, "no trusted columns in the product");
    c.require(agree_on_trusted(composed, product), "matrix of f o g != M(f) M(g)");
    c.require(oracle_check_endo(composed, 1), "f o g fails the endomorphism oracle");

    const Derivation d = gen.derivation();
    const Derivation e = gen.derivation();
    const FinMatrixWindow comm = commutator(matrix_of(d, window), matrix_of(e, window));
    const FinMatrixWindow bracketed = matrix_of(lie_bracket(d, e), window);
    c.require(comm.valid_cols() >= 1, "no trusted columns in the commutator");
    c.require(agree_on_trusted(bracketed, comm), "matrix of [d, e] != [M(d), M(e)]");
    c.require(oracle_check_der(bracketed, 1), "[d, e] fails the derivation oracle");

    // Shapes: A-members are unit / strictly lower triangular.
    c.require(matrix_of(gen.unipotent(), window).is_unit_lower_triangular(),
              "unipotent matrix is not unit lower triangular");
    c.require(matrix_of(gen.ideal_derivation(), window).is_strictly_lower_triangular(),
              "ideal derivation matrix is not strictly lower triangular");
    c.require(composed.is_lower_triangular() && bracketed.is_lower_triangular(),
              "matrix is not lower triangular");
  });
}

// ---------------------------------------------------------------------------
// Invariance of the lower central series and the centers.

constexpr Index kInvarianceWindow = 10;

SuiteResult invariance(const VerifyOptions& o, std::uint64_t stream) {
  std::map<Index, Centers> cache;
  auto centers_of = [&cache, &o](Index n) -> const Centers& {
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, centers_window(o.field, n)).first;
    return it->second;
  };
  return run_cases(9, "invariance", o, stream, o.cases, [&centers_of](CaseGenerator& gen, Case& c, std::size_t i) {
    const Field& field = gen.field();
    const Index window = kInvarianceWindow;
    const Index k = static_cast<Index>(gen.between(1, window));
    const Element v = gen.element_between(k, window);
    const Endo f = gen.endo();
    const Derivation d = gen.derivation();
    c.set_context("k=" + std::to_string(k) + " f=" + f.to_string() + " d=" + d.to_string());

    const Element fv = apply(f, v);
    const Element dv = apply(d, v);
    c.require(fv.is_zero() || fv.min_support() >= k, "endomorphism image leaves gamma_k");
    c.require(dv.is_zero() || dv.min_support() >= k, "derivation image leaves gamma_k");

    // The series itself: gamma_{k+1} <= gamma_k and [L, gamma_k] <= gamma_{k+1}.
    const WindowSubspace gk = gamma_window(field, k, window);
    c.require(gk.contains(gamma_window(field, k + 1, window)), "gamma chain is not descending");
    c.require(gamma_window(field, k + 1, window + 1).contains(bracket(gen.element(window), v)),
              "[L, gamma_k] not inside gamma_(k+1)");

    // Diagonal automorphisms fix gamma_k and the centers setwise.
    const Endo aut = Endo::diagonal(gen.nonzero_scalar());
    auto image_of = [&](const WindowSubspace& s) {
      std::vector<Element> images;
      for (const auto& b : s.basis()) images.push_back(apply(aut, b));
      return WindowSubspace::span_of(field, window, images);
    };
    const Centers& centers = centers_of(window);
    c.require(image_of(gk) == gk, "automorphism does not fix gamma_k");
    c.require(image_of(centers.left) == centers.left, "automorphism does not fix the left center");
    c.require(image_of(centers.right) == centers.right, "automorphism does not fix the right center");
    c.require(image_of(centers.center) == centers.center, "automorphism does not fix the center");

    // Derivations map the left center into itself (checked in a window wide
    // enough to hold the image).
    const Element z = gen.element_between(2, window);
    const Index wide = window + std::max<std::size_t>(d.degree(), 1);
    c.require(centers_of(wide).left.contains(apply(d, z)),
              "derivation moves a left-center element out of the left center");

    // Window centers and the vanishing intersection of the series.
    const Index n = 3 + i % 8;
    const Centers& small = centers_of(n);
    c.require(small.left == WindowSubspace::span_from(field, 2, n), "left center != span{a2..aN}");
    c.require(small.right.is_zero() && small.center.is_zero(), "right center or center nonzero");
    WindowSubspace meet = gamma_window(field, 1, n);
    for (Index j = 2; j <= n + 1; ++j) meet = intersect(meet, gamma_window(field, j, n));
    c.require(meet.is_zero(), "intersection of the window series is nonzero");
  });
}

struct SuiteEntry {
  std::string name;
  std::function<SuiteResult(const VerifyOptions&, std::uint64_t)> run;
};

const std::vector<SuiteEntry>& registry() {
  static const std::vector<SuiteEntry> entries = {
      {"leibniz-identity", leibniz_identity},
      {"endo-formula-equivalence",
       [](const VerifyOptions& o, std::uint64_t s) { return formula_equivalence(MapKind::Endo, o, s); }},
      {"zero-square-ideal", zero_square_ideal},
      {"monomorphism-structure", monomorphism_structure},
      {"automorphism-group", automorphism_group},
      {"proper-monomorphism-witness", non_surjectivity},
      {"der-formula-equivalence",
       [](const VerifyOptions& o, std::uint64_t s) { return formula_equivalence(MapKind::Der, o, s); }},
      {"derivation-algebra", derivation_algebra},
      {"cross-oracle", cross_oracle},
      {"invariance", invariance},
  };
  return entries;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& e : registry()) out.push_back(e.name);
    return out;
  }();
  return names;
}

SuiteResult run_suite(std::string_view name, const VerifyOptions& options) {
  const auto& entries = registry();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].name == name) return entries[i].run(options, i);
  }
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

std::vector<SuiteResult> run_verification(const VerifyOptions& options) {
  std::vector<SuiteResult> results;
  for (const auto& name : suite_names()) results.push_back(run_suite(name, options));
  return results;
}

std::string format_report(const VerifyOptions& options, const std::vector<SuiteResult>& results) {
  std::string out = "verify field=" + options.field.name() + " seed=" + std::to_string(options.seed) +
                    " cases=" + std::to_string(options.cases) +
                    " window=" + std::to_string(options.window) + "\n";
  char line[128];
  std::snprintf(line, sizeof line, "%-4s %-30s %7s %7s  %s\n", "crit", "suite", "cases", "passed", "status");
  out += line;
  std::size_t ok = 0;
  for (const auto& r : results) {
    std::snprintf(line, sizeof line, "%-4d %-30s %7zu %7zu  %s\n", r.criterion, r.name.c_str(), r.cases,
                  r.passed, r.ok() ? "PASS" : "FAIL");
    out += line;
    if (r.ok()) ++ok;
    for (const auto& f : r.failures) out += "       " + f + "\n";
  }
  out += "overall: " + std::string(ok == results.size() ? "PASS" : "FAIL") + " (" + std::to_string(ok) +
         "/" + std::to_string(results.size()) + " suites)\n";
  return out;
}

}  // namespace leibniz
