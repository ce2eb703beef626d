#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace nilrep {

/// Raised when scalars or matrices from different fields are combined.
class FieldMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The ground field: the rationals or a prime field F_p.
class Field {
 public:
  enum class Kind { Rationals, PrimeField };

  Field() = default;
  static Field rationals() { return Field(); }
  /// Throws std::invalid_argument unless p is prime.
  static Field prime(std::uint32_t p);
  /// Accepts "Q", "QQ", "GF(p)", "F_p" and "Fp".
  static Field parse(std::string_view text);

  Kind kind() const { return characteristic_ == 0 ? Kind::Rationals : Kind::PrimeField; }
  bool is_rational() const { return characteristic_ == 0; }
  std::uint32_t characteristic() const { return characteristic_; }
  std::string to_string() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint32_t p) : characteristic_(p) {}
  std::uint32_t characteristic_ = 0;
};

/// An exact field element.
///
/// Rationals are kept in lowest terms with a positive denominator. Elements
/// of F_p are kept as canonical residues in [0, p). A scalar built from a
/// plain integer or fraction without a field is field-neutral: combining it
/// with an element of a definite field converts it into that field, so
/// literals such as Scalar(1) can be used with any field. Combining two
/// definite scalars of different fields throws FieldMismatch.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(int value) : value_(value) {}   // NOLINT(google-explicit-constructor)
  Scalar(long num, long den);
  Scalar(const Field& field, long value);
  Scalar(const Field& field, const mpq_class& value);

  /// Parses "p/q" or an integer; the result lives in `field`.
  static Scalar parse(const Field& field, std::string_view text);

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_neutral() const { return char_ == kNeutral; }
  /// Characteristic of the field this scalar lives in; 0 for rationals and
  /// for field-neutral constants.
  std::uint32_t characteristic() const { return char_ == kNeutral ? 0 : char_; }
  const mpq_class& value() const { return value_; }
  Scalar in(const Field& field) const { return Scalar(field, value_); }

  Scalar inverse() const;
  Scalar operator-() const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
  friend bool operator==(const Scalar& lhs, const Scalar& rhs);
  friend bool operator!=(const Scalar& lhs, const Scalar& rhs) { return !(lhs == rhs); }

  /// "p/q" or an integer, no whitespace.
  std::string to_string() const;

 private:
  static constexpr std::uint32_t kNeutral = 0xffffffffu;

  // Brings two scalars into a common field; throws FieldMismatch on conflict.
  void unify(Scalar& other);
  void unify_with(const Scalar& other);
  void reduce();

  mpq_class value_{0};
  std::uint32_t char_ = kNeutral;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace nilrep
