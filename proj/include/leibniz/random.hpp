#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "leibniz/derivation.hpp"
#include "leibniz/element.hpp"
#include "leibniz/endomorphism.hpp"
#include "leibniz/polynomial.hpp"

namespace leibniz {

/// Reproducible random values for property checks. Draws are derived from
/// raw mt19937_64 output only, so a seed gives the same stream on every
/// platform. Default bounds: basis indices <= 8, map degrees <= 6,
/// numerators and denominators at most 9 in absolute value.
class CaseGenerator {
 public:
  static constexpr Index kMaxIndex = 8;
  static constexpr std::size_t kMaxDegree = 6;
  static constexpr long kMaxMagnitude = 9;

  CaseGenerator(const Field& field, std::uint64_t seed) : field_(field), engine_(seed) {}

  const Field& field() const noexcept { return field_; }

  /// Uniform in [0, n).
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [lo, hi].
  long between(long lo, long hi);
  bool coin() { return below(2) == 1; }

  Scalar scalar();
  Scalar nonzero_scalar();

  /// Random element supported in [1, max_index], possibly zero.
  Element element(Index max_index = kMaxIndex);
  /// Random element supported in [lo, hi].
  Element element_between(Index lo, Index hi);

  /// Gamma vector of degree in [min_degree, max_degree] (nonzero top entry).
  std::vector<Scalar> gamma(std::size_t min_degree, std::size_t max_degree);

  Endo endo(std::size_t max_degree = kMaxDegree);
  /// gamma_1 = 0.
  Endo ideal_endo(std::size_t max_degree = kMaxDegree);
  /// gamma_1 != 0.
  Endo monomorphism(std::size_t max_degree = kMaxDegree);
  /// gamma_1 != 0 and degree >= 2.
  Endo proper_monomorphism(std::size_t max_degree = kMaxDegree);
  /// gamma_1 = 1.
  Endo unipotent(std::size_t max_degree = kMaxDegree);

  Derivation derivation(std::size_t max_degree = kMaxDegree);
  /// gamma_1 = 0.
  Derivation ideal_derivation(std::size_t max_degree = kMaxDegree);

  /// Constant term 1, degree <= max_degree.
  Polynomial unit_constant_poly(std::size_t max_degree);

 private:
  Field field_;
  std::mt19937_64 engine_;
};

}  // namespace leibniz
