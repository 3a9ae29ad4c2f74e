#include "leibniz/random.hpp"

#include <limits>

namespace leibniz {

std::uint64_t CaseGenerator::below(std::uint64_t n) {
  if (n <= 1) return 0;
  // Rejection sampling keeps the draw unbiased.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % n;
}

long CaseGenerator::between(long lo, long hi) {
  return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

Scalar CaseGenerator::scalar() {
  if (field_.is_rationals()) {
    const long num = between(-kMaxMagnitude, kMaxMagnitude);
    // Mostly integers so that the integer code paths stay exercised.
    const long den = coin() ? 1 : between(1, kMaxMagnitude);
    return Scalar::fraction(field_, num, den);
  }
  return Scalar(field_, static_cast<long>(below(field_.characteristic())));
}

Scalar CaseGenerator::nonzero_scalar() {
  Scalar s = scalar();
  while (s.is_zero()) s = scalar();
  return s;
}

Element CaseGenerator::element(Index max_index) { return element_between(1, max_index); }

Element CaseGenerator::element_between(Index lo, Index hi) {
  Element x(field_);
  if (hi < lo) return x;
  const auto terms = below(hi - lo + 2);
  for (std::uint64_t i = 0; i < terms; ++i) {
    x.add_term(static_cast<Index>(between(static_cast<long>(lo), static_cast<long>(hi))),
               nonzero_scalar());
  }
  return x;
}

std::vector<Scalar> CaseGenerator::gamma(std::size_t min_degree, std::size_t max_degree) {
  const auto degree = static_cast<std::size_t>(
      between(static_cast<long>(min_degree), static_cast<long>(max_degree)));
  std::vector<Scalar> g;
  for (std::size_t k = 1; k <= degree; ++k) {
    g.push_back(k == degree ? nonzero_scalar() : (below(4) == 0 ? Scalar::zero(field_) : scalar()));
  }
  return g;
}

Endo CaseGenerator::endo(std::size_t max_degree) {
  return Endo::from_gamma(field_, gamma(0, max_degree));
}

Endo CaseGenerator::ideal_endo(std::size_t max_degree) {
  auto g = gamma(0, max_degree);
  if (!g.empty()) g[0] = Scalar::zero(field_);
  return Endo::from_gamma(field_, std::move(g));
}

Endo CaseGenerator::monomorphism(std::size_t max_degree) {
  auto g = gamma(1, max_degree);
  g[0] = nonzero_scalar();
  return Endo::from_gamma(field_, std::move(g));
}

Endo CaseGenerator::proper_monomorphism(std::size_t max_degree) {
  auto g = gamma(2, std::max<std::size_t>(2, max_degree));
  g[0] = nonzero_scalar();
  return Endo::from_gamma(field_, std::move(g));
}

Endo CaseGenerator::unipotent(std::size_t max_degree) {
  auto g = gamma(1, max_degree);
  g[0] = Scalar::one(field_);
  return Endo::from_gamma(field_, std::move(g));
}

Derivation CaseGenerator::derivation(std::size_t max_degree) {
  return Derivation::from_gamma(field_, gamma(0, max_degree));
}

Derivation CaseGenerator::ideal_derivation(std::size_t max_degree) {
  auto g = gamma(0, max_degree);
  if (!g.empty()) g[0] = Scalar::zero(field_);
  return Derivation::from_gamma(field_, std::move(g));
}

Polynomial CaseGenerator::unit_constant_poly(std::size_t max_degree) {
  auto c = gamma(1, max_degree + 1);
  c[0] = Scalar::one(field_);
  return Polynomial::from_coeffs(field_, std::move(c));
}

}  // namespace leibniz
