#include "leibniz/scalar.hpp"

#include <charconv>

#include "leibniz/error.hpp"

namespace leibniz {

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t reduce(const mpz_class& value, std::uint64_t p) {
  mpz_class r = value % mpz_class(static_cast<unsigned long>(p));
  if (r < 0) r += static_cast<unsigned long>(p);
  return r.get_ui();
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p > kMaxPrime || !is_prime(p)) {
    throw Error(ErrorCode::BadField,
                "GF(" + std::to_string(p) + ") requires a prime below 2^31");
  }
  return Field(Kind::PrimeField, p);
}

Field Field::parse(std::string_view text) {
  if (text == "Q") return rationals();
  if (text.size() > 2 && text.substr(0, 2) == "GF") {
    std::uint64_t p = 0;
    auto digits = text.substr(2);
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc() && end == digits.data() + digits.size()) return prime(p);
  }
  throw Error(ErrorCode::BadField,
              "unknown field '" + std::string(text) + "' (expected Q or GF<p>)");
}

std::string Field::name() const {
  return is_rationals() ? std::string("Q") : "GF" + std::to_string(p_);
}

std::uint64_t field_char(const Field& field) noexcept {
  return field.characteristic();
}

Scalar::Scalar(const Field& field, long value) : Scalar(field, mpz_class(value)) {}

Scalar::Scalar(const Field& field, const mpz_class& value) : field_(field) {
  if (field.is_rationals()) {
    value_ = mpq_class(value);
  } else {
    value_ = reduce(value, field.characteristic());
  }
}

Scalar::Scalar(RationalTag, const Field& field, mpq_class q) : field_(field), value_(std::move(q)) {
  std::get<mpq_class>(value_).canonicalize();
}

Scalar::Scalar(ResidueTag, const Field& field, std::uint64_t residue)
    : field_(field), value_(residue % field.characteristic()) {}

Scalar Scalar::fraction(const Field& field, const mpz_class& num,
                        const mpz_class& den) {
  if (field.is_rationals()) {
    if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
    return Scalar(RationalTag{}, field, mpq_class(num, den));
  }
  return Scalar(field, num) / Scalar(field, den);
}

bool Scalar::is_zero() const noexcept {
  if (auto* q = std::get_if<mpq_class>(&value_)) return sgn(*q) == 0;
  return std::get<std::uint64_t>(value_) == 0;
}

bool Scalar::is_one() const noexcept {
  if (auto* q = std::get_if<mpq_class>(&value_)) return *q == 1;
  return std::get<std::uint64_t>(value_) == 1;
}

bool Scalar::is_negative() const noexcept {
  if (auto* q = std::get_if<mpq_class>(&value_)) return sgn(*q) < 0;
  return false;
}

mpz_class Scalar::numerator() const {
  if (auto* q = std::get_if<mpq_class>(&value_)) return q->get_num();
  return mpz_class(static_cast<unsigned long>(std::get<std::uint64_t>(value_)));
}

mpz_class Scalar::denominator() const {
  if (auto* q = std::get_if<mpq_class>(&value_)) return q->get_den();
  return mpz_class(1);
}

void Scalar::require_same_field(const Scalar& rhs) const {
  if (field_ != rhs.field_) {
    throw Error(ErrorCode::MixedFields,
                "scalars over " + field_.name() + " and " + rhs.field_.name());
  }
}

Scalar Scalar::operator-() const {
  if (auto* q = std::get_if<mpq_class>(&value_)) return Scalar(RationalTag{}, field_, mpq_class(-*q));
  const auto p = field_.characteristic();
  return Scalar(ResidueTag{}, field_, (p - std::get<std::uint64_t>(value_)) % p);
}

Scalar Scalar::operator+(const Scalar& rhs) const {
  require_same_field(rhs);
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    return Scalar(RationalTag{}, field_, mpq_class(*q + std::get<mpq_class>(rhs.value_)));
  }
  return Scalar(ResidueTag{}, field_, std::get<std::uint64_t>(value_) + std::get<std::uint64_t>(rhs.value_));
}

Scalar Scalar::operator-(const Scalar& rhs) const { return *this + (-rhs); }

Scalar Scalar::operator*(const Scalar& rhs) const {
  require_same_field(rhs);
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    return Scalar(RationalTag{}, field_, mpq_class(*q * std::get<mpq_class>(rhs.value_)));
  }
  return Scalar(ResidueTag{}, field_, std::get<std::uint64_t>(value_) * std::get<std::uint64_t>(rhs.value_));
}

Scalar Scalar::operator/(const Scalar& rhs) const {
  require_same_field(rhs);
  return *this * rhs.inv();
}

Scalar Scalar::inv() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (auto* q = std::get_if<mpq_class>(&value_)) return Scalar(RationalTag{}, field_, mpq_class(1 / *q));
  // Fermat: x^(p-2) = x^-1 for x != 0.
  const auto p = field_.characteristic();
  return Scalar(ResidueTag{}, field_, pow_mod(std::get<std::uint64_t>(value_), p - 2, p));
}

Scalar Scalar::pow(std::uint64_t exponent) const {
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    mpq_class r;
    mpz_pow_ui(r.get_num_mpz_t(), q->get_num_mpz_t(), exponent);
    mpz_pow_ui(r.get_den_mpz_t(), q->get_den_mpz_t(), exponent);
    return Scalar(RationalTag{}, field_, std::move(r));
  }
  return Scalar(ResidueTag{}, field_, pow_mod(std::get<std::uint64_t>(value_), exponent,
                                field_.characteristic()));
}

Scalar Scalar::abs() const { return is_negative() ? -*this : *this; }

bool Scalar::operator==(const Scalar& rhs) const {
  return field_ == rhs.field_ && value_ == rhs.value_;
}

std::string Scalar::to_string() const {
  if (auto* q = std::get_if<mpq_class>(&value_)) return q->get_str();
  return std::to_string(std::get<std::uint64_t>(value_));
}

Scalar scalar_inv(const Scalar& x) { return x.inv(); }

}  // namespace leibniz
