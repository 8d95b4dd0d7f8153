#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace gradrep {

/// The base field: the rationals or a prime field F_p.
struct Field {
  enum class Kind { Rational, Prime };

  Kind kind = Kind::Rational;
  std::uint32_t modulus = 0;

  static Field rationals() { return {}; }
  /// Throws InputError unless p is prime.
  static Field prime(std::uint64_t p);
  /// "Q" or "Fp:<p>".
  static Field parse(std::string_view text);

  bool is_rational() const noexcept { return kind == Kind::Rational; }
  /// 0 for the rationals.
  std::uint32_t characteristic() const noexcept { return is_rational() ? 0 : modulus; }
  std::string to_string() const;

  bool operator==(const Field&) const = default;
};

/// An element of a Field. Rationals are kept in lowest terms with a positive
/// denominator (mpq canonical form); residues live in [0, p).
class Scalar {
 public:
  Scalar() = default;  // rational zero

  static Scalar zero(Field f) { return Scalar(f); }
  static Scalar one(Field f) { return from_int(f, 1); }
  static Scalar from_int(Field f, long value);
  static Scalar from_rational(Field f, const mpq_class& q);
  /// Accepts "n", "n/d" (ASCII or U+2212 minus). Over F_p the fraction is
  /// reduced modulo p.
  static Scalar parse(Field f, std::string_view text);

  Field field() const noexcept { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Valid only over the rationals.
  const mpq_class& rational() const { return q_; }
  /// Valid only over F_p.
  std::uint32_t residue() const noexcept { return r_; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  /// Throws InputError on division by zero.
  Scalar& operator/=(const Scalar& o);
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  bool operator==(const Scalar& o) const;

  /// "7", "-3/2" over Q; decimal residue over F_p.
  std::string to_string() const;

 private:
  explicit Scalar(Field f) : field_(f) {}
  void check_same_field(const Scalar& o) const;

  Field field_{};
  mpq_class q_{};
  std::uint32_t r_ = 0;
};

namespace detail {
std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p);
}

}  // namespace gradrep
