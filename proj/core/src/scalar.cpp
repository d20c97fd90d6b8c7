#include "mfcat/scalar.hpp"

#include <charconv>
#include <string>

#include "mfcat/errors.hpp"

namespace mfcat {

namespace {

std::uint64_t reduce(const mpz_class& z, std::uint32_t p) {
  mpz_class r = z % p;
  if (r < 0) r += p;
  return r.get_ui();
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = result * base % p;
    base = base * base % p;
    exp >>= 1U;
  }
  return result;
}

}  // namespace

bool is_prime(std::uint64_t p) noexcept {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (1ULL << 31) || !is_prime(p)) {
    throw PreconditionError("field modulus " + std::to_string(p) +
                            " is not a prime below 2^31");
  }
  return FieldSpec(static_cast<std::uint32_t>(p));
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "rational" || text == "Q") return rational();
  constexpr std::string_view prefix = "prime:";
  if (text.substr(0, prefix.size()) == prefix) {
    auto digits = text.substr(prefix.size());
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) {
      throw ParseError("bad field modulus '" + std::string(digits) + "'");
    }
    return prime(p);
  }
  throw ParseError("unknown field '" + std::string(text) + "'");
}

std::string FieldSpec::to_string() const {
  return is_rational() ? "rational" : "prime:" + std::to_string(modulus_);
}

Scalar::Scalar(long value, FieldSpec field) : field_(field) {
  if (field_.is_rational()) {
    value_ = value;
  } else {
    residue_ = reduce(mpz_class(value), field_.modulus());
  }
}

Scalar::Scalar(const mpq_class& value, FieldSpec field) : field_(field) {
  if (field_.is_rational()) {
    value_ = value;
    value_.canonicalize();
    return;
  }
  const std::uint32_t p = field_.modulus();
  std::uint64_t den = reduce(value.get_den(), p);
  if (den == 0) throw PreconditionError("denominator vanishes modulo " + std::to_string(p));
  residue_ = reduce(value.get_num(), p) * pow_mod(den, p - 2, p) % p;
}

Scalar Scalar::parse(std::string_view text, FieldSpec field) {
  std::string s(text);
  // strip surrounding whitespace and a leading '+'
  auto first = s.find_first_not_of(" \t");
  auto last = s.find_last_not_of(" \t");
  if (first == std::string::npos) throw ParseError("empty coefficient");
  s = s.substr(first, last - first + 1);
  if (!s.empty() && s[0] == '+') s.erase(0, 1);
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0) throw ParseError("bad coefficient '" + std::string(text) + "'");
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return Scalar(q, field);
}

bool Scalar::is_zero() const noexcept {
  return field_.is_rational() ? sgn(value_) == 0 : residue_ == 0;
}

bool Scalar::is_one() const noexcept {
  return field_.is_rational() ? value_ == 1 : residue_ == 1;
}

mpq_class Scalar::to_rational() const {
  if (field_.is_rational()) return value_;
  return mpq_class(static_cast<unsigned long>(residue_));
}

std::string Scalar::to_string() const {
  if (field_.is_rational()) return value_.get_str();
  return std::to_string(residue_);
}

void Scalar::check_field(const Scalar& other) const {
  if (!(field_ == other.field_)) {
    throw ContextMismatch("scalar arithmetic across fields " + field_.to_string() +
                          " and " + other.field_.to_string());
  }
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (field_.is_rational()) {
    r.value_ = -value_;
  } else if (residue_ != 0) {
    r.residue_ = field_.modulus() - residue_;
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  check_field(other);
  if (field_.is_rational()) {
    value_ += other.value_;
  } else {
    residue_ = (residue_ + other.residue_) % field_.modulus();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  check_field(other);
  if (field_.is_rational()) {
    value_ -= other.value_;
  } else {
    residue_ = (residue_ + field_.modulus() - other.residue_) % field_.modulus();
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  check_field(other);
  if (field_.is_rational()) {
    value_ *= other.value_;
  } else {
    residue_ = residue_ * other.residue_ % field_.modulus();
  }
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw PreconditionError("division by zero");
  Scalar r = *this;
  if (field_.is_rational()) {
    r.value_ = 1 / value_;
  } else {
    r.residue_ = pow_mod(residue_, field_.modulus() - 2, field_.modulus());
  }
  return r;
}

Scalar& Scalar::operator/=(const Scalar& other) {
  check_field(other);
  return *this *= other.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!(a.field_ == b.field_)) return false;
  return a.field_.is_rational() ? a.value_ == b.value_ : a.residue_ == b.residue_;
}

}  // namespace mfcat
