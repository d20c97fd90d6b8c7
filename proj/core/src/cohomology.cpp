#include "mfcat/cohomology.hpp"

#include <algorithm>
#include <cstdlib>
#include <unordered_map>

#include "mfcat/errors.hpp"

namespace mfcat {

Z2Complex::Z2Complex(RMatrix d0, RMatrix d1, std::optional<Series> curvature)
    : d0_(std::move(d0)), d1_(std::move(d1)), curvature_(std::move(curvature)) {
  if (!(d0_.ctx() == d1_.ctx())) throw ContextMismatch("complex differentials over different rings");
  if (d0_.rows() != d1_.cols() || d0_.cols() != d1_.rows()) {
    throw PreconditionError("complex differentials have incompatible shapes");
  }
  if (curvature_ && !(curvature_->ctx() == d0_.ctx())) {
    throw ContextMismatch("curvature from another ring");
  }
}

bool Z2Complex::verify() const {
  const RingCtx& r = ctx();
  Series c = curvature_ ? *curvature_ : Series(r);
  return d1_ * d0_ == RMatrix::scalar(c, even_rank()) && d0_ * d1_ == RMatrix::scalar(c, odd_rank());
}

std::string Dims::to_string() const {
  return "(" + std::to_string(even) + ", " + std::to_string(odd) + ")";
}

Dims cohomology_mod_k(const Z2Complex& c) {
  KMatrix k0 = c.d0().reduce_mod_m();
  KMatrix k1 = c.d1().reduce_mod_m();
  if (!(k1 * k0).is_zero() || !(k0 * k1).is_zero()) {
    throw VerificationError("reduction modulo m is not a complex");
  }
  const std::size_t r0 = k0.rank();
  const std::size_t r1 = k1.rank();
  return {c.even_rank() - r0 - r1, c.odd_rank() - r1 - r0};
}

unsigned default_n_max() {
  if (const char* env = std::getenv("MFCAT_NMAX")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= kMaxExponent) return static_cast<unsigned>(v);
  }
  return 64;
}

namespace {

// Monomials of degree <= top in graded-lex order with a reverse lookup.
class MonomialTable {
 public:
  MonomialTable(const RingCtx& ctx, unsigned top) : basis_(monomial_basis(ctx, top)) {
    index_.reserve(basis_.size());
    for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
  }
  const std::vector<Exponent>& basis() const { return basis_; }
  std::size_t index(const Exponent& e) const { return index_.at(e); }

 private:
  std::vector<Exponent> basis_;
  std::unordered_map<Exponent, std::size_t, ExponentHash> index_;
};

// Image of the generator x^alpha e_b under d, as a vector of
// (R/m^{level+1})^{rows}; coordinate index = monomial * rows + row.
SparseVector column_image(const RMatrix& d, std::size_t b, const Exponent& alpha, unsigned level,
                          const MonomialTable& table) {
  SparseVector v;
  for (std::size_t r = 0; r < d.rows(); ++r) {
    for (const auto& [beta, coeff] : d(r, b).terms()) {
      if (alpha.degree() + beta.degree() > level) break;
      v.emplace_back(table.index(alpha + beta) * d.rows() + r, coeff);
    }
  }
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

struct LevelRanks {
  std::size_t high_rank = 0;  // rank on generators of degree in (low, level]
  std::size_t full_rank = 0;
};

LevelRanks ranks_at(const RMatrix& d, unsigned low, unsigned level, const MonomialTable& table,
                    const FieldSpec& field) {
  const std::size_t n_vars = d.ctx().n_vars();
  const std::size_t n_low = monomial_count(n_vars, low);
  const std::size_t n_level = monomial_count(n_vars, level);
  const auto& basis = table.basis();
  RowEchelon e(field);
  LevelRanks out;
  for (std::size_t m = n_low; m < n_level; ++m) {
    for (std::size_t b = 0; b < d.cols(); ++b) e.insert(column_image(d, b, basis[m], level, table));
  }
  out.high_rank = e.rank();
  for (std::size_t m = 0; m < n_low; ++m) {
    for (std::size_t b = 0; b < d.cols(); ++b) e.insert(column_image(d, b, basis[m], level, table));
  }
  out.full_rank = e.rank();
  return out;
}

// dim of (cycles of d_i mod m^{N+1}) / (boundaries mod m^{N+1}), where cycles
// are computed modulo m^{M+1} and projected down.
std::size_t level_dim(const Z2Complex& c, int parity, unsigned n, unsigned m,
                      const MonomialTable& table) {
  const RMatrix& d_out = c.d(parity);
  const RMatrix& d_in = c.d(parity + 1);
  const FieldSpec& field = c.ctx().field();
  const std::size_t n_vars = c.ctx().n_vars();
  const std::size_t rank_i = c.rank(parity);
  LevelRanks out = ranks_at(d_out, n, m, table, field);
  const std::size_t cols_m = rank_i * monomial_count(n_vars, m);
  const std::size_t cols_high = rank_i * (monomial_count(n_vars, m) - monomial_count(n_vars, n));
  const std::size_t cycles = (cols_m - out.full_rank) - (cols_high - out.high_rank);
  LevelRanks in = ranks_at(d_in, n, n, table, field);
  return cycles - in.full_rank;
}

}  // namespace

OverRReport cohomology_over_R_report(const Z2Complex& c, StabilizationOptions opts) {
  const unsigned n_max = opts.n_max ? opts.n_max : default_n_max();
  const unsigned entry_degree = std::max({c.d0().max_degree(), c.d1().max_degree(), 1U});
  const unsigned slack = opts.slack ? opts.slack : 2 * entry_degree;
  if (n_max < 2) throw StabilizationError("stabilization cap below 2");
  unsigned n = std::min(2 * entry_degree, n_max - 1);
  auto dims_at = [&](unsigned level) {
    const unsigned top = level + slack;
    if (top > kMaxExponent) throw StabilizationError("truncation degree exceeds 255");
    MonomialTable table(c.ctx(), top);
    return Dims{level_dim(c, 0, level, top, table), level_dim(c, 1, level, top, table)};
  };
  for (;;) {
    Dims a = dims_at(n);
    Dims b = dims_at(n + 1);
    if (a == b) return {a, n};
    if (n + 1 >= n_max) break;
    n = std::min(2 * n, n_max - 1);
  }
  throw StabilizationError("cohomology did not stabilize by truncation degree " +
                           std::to_string(n_max) +
                           " (singularity not isolated, or the cap is too low)");
}

Dims cohomology_over_R(const Z2Complex& c, StabilizationOptions opts) {
  return cohomology_over_R_report(c, opts).dims;
}

Z2Complex cone(const Z2Complex& c, const Z2Complex& d, const RMatrix& g0, const RMatrix& g1) {
  if (g0.rows() != d.even_rank() || g0.cols() != c.even_rank() || g1.rows() != d.odd_rank() ||
      g1.cols() != c.odd_rank()) {
    throw PreconditionError("cone: chain map has the wrong shape");
  }
  if (!(g1 * c.d0() == d.d0() * g0) || !(g0 * c.d1() == d.d1() * g1)) {
    throw PreconditionError("cone: map does not commute with the differentials");
  }
  const RingCtx& r = c.ctx();
  // cone^0 = C^1 + D^0 -> cone^1 = C^0 + D^1
  RMatrix e0 = RMatrix::block(-c.d1(), RMatrix(r, c.even_rank(), d.even_rank()), g1, d.d0());
  // cone^1 = C^0 + D^1 -> cone^0 = C^1 + D^0
  RMatrix e1 = RMatrix::block(-c.d0(), RMatrix(r, c.odd_rank(), d.odd_rank()), g0, d.d1());
  std::optional<Series> curv = c.curvature();
  return Z2Complex(std::move(e0), std::move(e1), std::move(curv));
}

}  // namespace mfcat
