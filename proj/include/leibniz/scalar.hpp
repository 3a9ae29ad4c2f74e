#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace leibniz {

/// The ground field: the rationals or a word-sized prime field GF(p).
class Field {
 public:
  enum class Kind { Rationals, PrimeField };

  /// Primes are limited to p < 2^31 so residue products fit in 64 bits.
  static constexpr std::uint64_t kMaxPrime = (std::uint64_t{1} << 31) - 1;

  Field() = default;

  static Field rationals() { return Field{}; }
  /// Throws Error(BadField) unless p is prime and below 2^31.
  static Field prime(std::uint64_t p);
  /// Accepts "Q" or "GF<p>" (e.g. "GF5").
  static Field parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  bool is_rationals() const noexcept { return kind_ == Kind::Rationals; }
  /// 0 for Q, p for GF(p).
  std::uint64_t characteristic() const noexcept { return p_; }

  std::string name() const;

  bool operator==(const Field&) const = default;

 private:
  Field(Kind kind, std::uint64_t p) : kind_(kind), p_(p) {}

  Kind kind_ = Kind::Rationals;
  std::uint64_t p_ = 0;
};

std::uint64_t field_char(const Field& field) noexcept;

/// An exact field element in canonical form: a reduced fraction over Q or a
/// residue in [0, p) over GF(p). Equality is representational.
class Scalar {
 public:
  /// Zero of the rationals.
  Scalar() : Scalar(Field::rationals(), 0) {}
  Scalar(const Field& field, long value);
  Scalar(const Field& field, const mpz_class& value);

  /// num/den reduced into the field. Throws DivisionByZero when den is zero
  /// in the field.
  static Scalar fraction(const Field& field, const mpz_class& num,
                         const mpz_class& den);
  static Scalar zero(const Field& field) { return Scalar(field, 0); }
  static Scalar one(const Field& field) { return Scalar(field, 1); }

  const Field& field() const noexcept { return field_; }

  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  /// Only rationals can be negative; residues never are.
  bool is_negative() const noexcept;

  /// Numerator and denominator of the canonical representative (the residue
  /// over 1 for GF(p)).
  mpz_class numerator() const;
  mpz_class denominator() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& rhs) const;
  Scalar operator-(const Scalar& rhs) const;
  Scalar operator*(const Scalar& rhs) const;
  Scalar operator/(const Scalar& rhs) const;
  Scalar& operator+=(const Scalar& rhs) { return *this = *this + rhs; }
  Scalar& operator-=(const Scalar& rhs) { return *this = *this - rhs; }
  Scalar& operator*=(const Scalar& rhs) { return *this = *this * rhs; }

  Scalar inv() const;
  Scalar pow(std::uint64_t exponent) const;
  Scalar abs() const;

  bool operator==(const Scalar& rhs) const;

  /// "-3", "2/5", or a residue "4".
  std::string to_string() const;

 private:
  struct RationalTag {};
  struct ResidueTag {};
  Scalar(RationalTag, const Field& field, mpq_class q);
  Scalar(ResidueTag, const Field& field, std::uint64_t residue);

  void require_same_field(const Scalar& rhs) const;

  Field field_;
  std::variant<mpq_class, std::uint64_t> value_;
};

Scalar scalar_inv(const Scalar& x);

}  // namespace leibniz
