#ifndef MFCAT_SCALAR_HPP
#define MFCAT_SCALAR_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace mfcat {

// The ground field: Q, or Z/p for a prime p.
class FieldSpec {
 public:
  FieldSpec() = default;

  static FieldSpec rational() { return FieldSpec(); }
  // Throws PreconditionError unless p is a prime below 2^31.
  static FieldSpec prime(std::uint64_t p);
  // "rational" | "prime:<p>"
  static FieldSpec parse(std::string_view text);

  bool is_rational() const noexcept { return modulus_ == 0; }
  std::uint32_t modulus() const noexcept { return modulus_; }
  // 0 for Q.
  std::uint32_t characteristic() const noexcept { return modulus_; }
  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  explicit FieldSpec(std::uint32_t p) : modulus_(p) {}
  std::uint32_t modulus_ = 0;
};

// An exact element of a FieldSpec. Rational values live in an mpq_class;
// prime-field values in a reduced residue. Arithmetic between different
// fields throws ContextMismatch.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value, FieldSpec field = {});
  Scalar(const mpq_class& value, FieldSpec field = {});

  static Scalar zero(FieldSpec field) { return Scalar(0L, field); }
  static Scalar one(FieldSpec field) { return Scalar(1L, field); }
  // Accepts "3", "-1/2"; in prime mode fractions are reduced mod p.
  static Scalar parse(std::string_view text, FieldSpec field);

  FieldSpec field() const noexcept { return field_; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  // Rational value; in prime mode the canonical residue in [0, p).
  mpq_class to_rational() const;
  std::uint64_t residue() const noexcept { return residue_; }
  std::string to_string() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  // Throws PreconditionError on division by zero.
  Scalar& operator/=(const Scalar& other);
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  void check_field(const Scalar& other) const;

  FieldSpec field_;
  mpq_class value_;
  std::uint64_t residue_ = 0;
};

bool is_prime(std::uint64_t p) noexcept;

}  // namespace mfcat

#endif  // MFCAT_SCALAR_HPP
