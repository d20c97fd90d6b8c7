#ifndef MFCAT_RING_HPP
#define MFCAT_RING_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mfcat/scalar.hpp"

namespace mfcat {

inline constexpr std::size_t kMaxVars = 16;
inline constexpr unsigned kMaxExponent = 255;

// Exponent vector of a monomial x_1^{e_1} ... x_n^{e_n}. Entries past the
// ring's variable count are always zero.
class Exponent {
 public:
  Exponent() = default;
  static Exponent unit(std::size_t var);

  unsigned operator[](std::size_t i) const noexcept { return e_[i]; }
  void set(std::size_t i, unsigned value);
  unsigned degree() const noexcept { return degree_; }
  bool divisible_by(std::size_t var) const noexcept { return e_[var] > 0; }

  // Throws PreconditionError when an exponent would exceed kMaxExponent.
  friend Exponent operator+(const Exponent& a, const Exponent& b);
  friend bool operator==(const Exponent&, const Exponent&) = default;

  const std::array<std::uint8_t, kMaxVars>& raw() const noexcept { return e_; }

 private:
  std::array<std::uint8_t, kMaxVars> e_{};
  std::uint16_t degree_ = 0;
};

struct ExponentHash {
  std::size_t operator()(const Exponent& e) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto b : e.raw()) h = (h ^ b) * 1099511628211ULL;
    return h;
  }
};

// Graded lexicographic order: lower total degree first; within a degree the
// larger power of x_1 comes first (1, x, y, x^2, xy, y^2, ...).
struct GradedLexLess {
  bool operator()(const Exponent& a, const Exponent& b) const noexcept {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.raw() > b.raw();
  }
};

// The ring k[x_1..x_n] or its quotient by all monomials of total degree
// above `truncation` (a model of k[[x_1..x_n]] up to that order).
class RingCtx {
 public:
  static constexpr unsigned kNoTruncation = std::numeric_limits<unsigned>::max();

  RingCtx();  // k[x] over Q, no truncation
  RingCtx(std::vector<std::string> names, FieldSpec field = {},
          unsigned truncation = kNoTruncation);
  // Names x, y, z for n <= 3 and x1..xn otherwise.
  static RingCtx standard(std::size_t n, FieldSpec field = {},
                          unsigned truncation = kNoTruncation);

  std::size_t n_vars() const noexcept { return impl_->names.size(); }
  const FieldSpec& field() const noexcept { return impl_->field; }
  unsigned truncation() const noexcept { return impl_->truncation; }
  bool truncated() const noexcept { return impl_->truncation != kNoTruncation; }
  const std::vector<std::string>& names() const noexcept { return impl_->names; }
  const std::string& name(std::size_t i) const { return impl_->names.at(i); }
  std::optional<std::size_t> index_of(const std::string& name) const;

  RingCtx with_truncation(unsigned truncation) const;
  // Variables of `a` followed by those of `b`; clashing names on the right
  // are primed. Fields must agree; the smaller truncation wins.
  static RingCtx concat(const RingCtx& a, const RingCtx& b);
  // R (x) R: variables x_1..x_n followed by primed copies.
  RingCtx doubled() const;

  // "x,y;rational;trunc=32" (the trunc part may be omitted).
  static RingCtx parse(const std::string& spec);
  std::string to_string() const;

  friend bool operator==(const RingCtx& a, const RingCtx& b);

 private:
  struct Impl {
    std::vector<std::string> names;
    FieldSpec field;
    unsigned truncation;
  };
  std::shared_ptr<const Impl> impl_;
};

// An element of a RingCtx: finitely many terms, no zero coefficients and no
// term above the truncation degree. Terms iterate in graded-lex order.
class Series {
 public:
  using TermMap = std::map<Exponent, Scalar, GradedLexLess>;

  Series() = default;
  explicit Series(RingCtx ctx) : ctx_(std::move(ctx)) {}

  static Series constant(const RingCtx& ctx, const Scalar& c);
  static Series constant(const RingCtx& ctx, long c);
  static Series variable(const RingCtx& ctx, std::size_t i);
  static Series monomial(const RingCtx& ctx, const Exponent& e, const Scalar& c);

  const RingCtx& ctx() const noexcept { return ctx_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  Scalar coefficient(const Exponent& e) const;
  // Largest total degree present (0 for the zero series).
  unsigned degree() const noexcept;
  // Smallest total degree present; nullopt for zero.
  std::optional<unsigned> order() const noexcept;
  bool is_constant() const noexcept { return terms_.empty() || degree() == 0; }
  // True iff the constant term vanishes, i.e. the element lies in m.
  bool in_maximal_ideal() const;

  // Adds c*x^e, dropping it when it lies above the truncation.
  void add_term(const Exponent& e, const Scalar& c);

  Series& operator+=(const Series& other);
  Series& operator-=(const Series& other);
  Series& operator*=(const Series& other);
  Series operator-() const;
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(const Series& a, const Series& b);
  friend Series operator*(const Scalar& c, const Series& a);
  friend bool operator==(const Series& a, const Series& b);

  Series pow(unsigned k) const;
  // Drops every term of total degree above `n`.
  Series truncated_at(unsigned n) const;
  // The same element viewed in `ctx` (same variables and field, other
  // truncation).
  Series recast(const RingCtx& ctx) const;

  std::string to_string() const;

 private:
  void check_ctx(const Series& other) const;

  RingCtx ctx_;
  TermMap terms_;
};

Series scalar_mul(const Scalar& c, const Series& a);

// Formal derivative d/dx_i (0-based index).
Series partial_derivative(const Series& a, std::size_t i);

// a = x_i * quotient + remainder, remainder free of x_i.
struct SplitResult {
  Series quotient;
  Series remainder;
};
SplitResult split_by_variable(const Series& a, std::size_t i);

// Sets the listed variables to zero.
Series set_variables_to_zero(const Series& a, const std::vector<std::size_t>& vars);

// Reinterprets `a` in `target`, sending variable i of a's ring to variable
// var_map[i] of `target`.
Series embed(const Series& a, const RingCtx& target, const std::vector<std::size_t>& var_map);
// Shorthand: variable i goes to i + offset.
Series embed_shifted(const Series& a, const RingCtx& target, std::size_t offset);

// Constant term.
Scalar residue_map(const Series& a);

// The divided difference (w(y_1..y_{i-1}, x_i..x_n) - w(y_1..y_i, x_{i+1}..x_n)) / (x_i - y_i)
// in the doubled ring `w.ctx().doubled()`; sum_i (x_i - y_i) * q_i = w(x) - w(y).
Series difference_quotient(const Series& w, std::size_t i);

// All exponents of total degree <= max_degree in graded-lex order.
std::vector<Exponent> monomial_basis(const RingCtx& ctx, unsigned max_degree);
std::size_t monomial_count(std::size_t n_vars, unsigned max_degree);

// Order in which variables are peeled off when writing w = sum x_i w_i.
enum class PeelOrder {
  kIndexOrder,    // x_1 first; w_i is free of x_1..x_{i-1}
  kReverseOrder,  // x_n first; w_i is free of x_{i+1}..x_n
};

// Returns w_1..w_n with w = sum x_i w_i produced by successive
// split_by_variable. The constant term of `a` (if any) is returned as
// `remainder`.
struct PeelResult {
  std::vector<Series> parts;
  Series remainder;
};
PeelResult peel_variables(const Series& a, PeelOrder order);

// Parses "x^2*y - 3/2*y^3 + (x+y)^2" over the variables of ctx.
Series parse_series(const std::string& text, const RingCtx& ctx);

}  // namespace mfcat

#endif  // MFCAT_RING_HPP
