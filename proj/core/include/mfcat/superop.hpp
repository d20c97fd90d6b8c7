#ifndef MFCAT_SUPEROP_HPP
#define MFCAT_SUPEROP_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>

#include "mfcat/ring.hpp"

namespace mfcat {

// x^alpha theta_S d_T with theta's left of the odd derivations d_i = d/d theta_i,
// each product taken in ascending index order.
struct SuperMonomial {
  Exponent alpha;
  std::uint32_t theta = 0;
  std::uint32_t dtheta = 0;

  unsigned parity() const noexcept;
  friend bool operator==(const SuperMonomial&, const SuperMonomial&) = default;
};

struct SuperMonomialLess {
  bool operator()(const SuperMonomial& a, const SuperMonomial& b) const noexcept {
    if (!(a.alpha == b.alpha)) return GradedLexLess{}(a.alpha, b.alpha);
    return std::tie(a.theta, a.dtheta) < std::tie(b.theta, b.dtheta);
  }
};

// Element of R<theta_1..theta_n, d_1..d_n> with d_i theta_j + theta_j d_i = delta_ij,
// stored in normal form. Terms iterate by ascending x-degree.
class SuperOp {
 public:
  using TermMap = std::map<SuperMonomial, Scalar, SuperMonomialLess>;

  SuperOp() = default;
  explicit SuperOp(RingCtx ctx);

  static SuperOp from_series(const Series& s);
  static SuperOp theta(const RingCtx& ctx, std::size_t i);
  static SuperOp dtheta(const RingCtx& ctx, std::size_t i);
  static SuperOp monomial(const RingCtx& ctx, const SuperMonomial& m, const Scalar& c);

  const RingCtx& ctx() const noexcept { return ctx_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  Scalar coefficient(const SuperMonomial& m) const;
  // nullopt for zero; throws PreconditionError for inhomogeneous elements.
  std::optional<unsigned> parity() const;
  // Largest x-degree present.
  unsigned x_degree() const noexcept;

  void add_term(const SuperMonomial& m, const Scalar& c);

  SuperOp& operator+=(const SuperOp& o);
  SuperOp& operator-=(const SuperOp& o);
  SuperOp operator-() const;
  friend SuperOp operator+(SuperOp a, const SuperOp& b) { return a += b; }
  friend SuperOp operator-(SuperOp a, const SuperOp& b) { return a -= b; }
  friend SuperOp operator*(const SuperOp& a, const SuperOp& b);
  friend SuperOp operator*(const Scalar& c, const SuperOp& a);
  friend bool operator==(const SuperOp& a, const SuperOp& b);

  std::string to_string() const;

 private:
  void check_ctx(const SuperOp& o) const;

  RingCtx ctx_;
  TermMap terms_;
};

// a * b dropping every term of x-degree above max_x_degree.
SuperOp multiply(const SuperOp& a, const SuperOp& b,
                 unsigned max_x_degree = RingCtx::kNoTruncation);

// [a, b] = ab - (-1)^{|a||b|} ba for homogeneous a, b.
SuperOp graded_commutator(const SuperOp& a, const SuperOp& b);

}  // namespace mfcat

#endif  // MFCAT_SUPEROP_HPP
