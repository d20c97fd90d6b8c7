#include "mfcat/mf.hpp"

#include "mfcat/errors.hpp"

namespace mfcat {

MatrixFactorization::MatrixFactorization(Series potential, RMatrix phi, RMatrix psi)
    : potential_(std::move(potential)), phi_(std::move(phi)), psi_(std::move(psi)) {
  if (!(phi_.ctx() == potential_.ctx()) || !(psi_.ctx() == potential_.ctx())) {
    throw ContextMismatch("factorization matrices and potential live in different rings");
  }
  if (phi_.rows() != phi_.cols() || psi_.rows() != psi_.cols() || phi_.rows() != psi_.rows()) {
    throw PreconditionError("phi and psi must be square of the same size");
  }
  const RingCtx& r = potential_.ctx();
  if (r.truncated() && r.truncation() < 2 * potential_.degree()) {
    throw PreconditionError("truncation " + std::to_string(r.truncation()) +
                            " is below twice the degree of the potential");
  }
}

MatrixFactorization MatrixFactorization::trivial(const Series& potential) {
  return MatrixFactorization(potential, RMatrix::identity(potential.ctx(), 1),
                             RMatrix::scalar(potential, 1));
}

MatrixFactorization MatrixFactorization::zero(const Series& potential) {
  return MatrixFactorization(potential, RMatrix(potential.ctx(), 0, 0), RMatrix(potential.ctx(), 0, 0));
}

bool MatrixFactorization::verify() const {
  RMatrix w = RMatrix::scalar(potential_, rank());
  return phi_ * psi_ == w && psi_ * phi_ == w;
}

Z2Complex MatrixFactorization::as_complex() const { return Z2Complex(psi_, phi_, potential_); }

bool verify_mf(const MatrixFactorization& x) { return x.verify(); }

MFMorphism::MFMorphism(MatrixFactorization source, MatrixFactorization target, RMatrix f0,
                       RMatrix f1, int parity)
    : source_(std::move(source)),
      target_(std::move(target)),
      f0_(std::move(f0)),
      f1_(std::move(f1)),
      parity_(parity % 2 ? 1 : 0) {
  if (!(source_.potential() == target_.potential())) {
    throw PreconditionError("morphism between factorizations of different potentials");
  }
  const std::size_t rx = source_.rank(), ry = target_.rank();
  if (f0_.rows() != ry || f0_.cols() != rx || f1_.rows() != ry || f1_.cols() != rx) {
    throw PreconditionError("morphism blocks have the wrong shape");
  }
  if (!(f0_.ctx() == source_.ctx()) || !(f1_.ctx() == source_.ctx())) {
    throw ContextMismatch("morphism blocks from another ring");
  }
}

MFMorphism MFMorphism::identity(const MatrixFactorization& x) {
  RMatrix id = RMatrix::identity(x.ctx(), x.rank());
  return MFMorphism(x, x, id, id, 0);
}

MFMorphism MFMorphism::zero(const MatrixFactorization& x, const MatrixFactorization& y) {
  RMatrix z(x.ctx(), y.rank(), x.rank());
  return MFMorphism(x, y, z, z, 0);
}

MFMorphism MFMorphism::multiplication(const MatrixFactorization& x, const Series& s) {
  RMatrix m = RMatrix::scalar(s, x.rank());
  return MFMorphism(x, x, m, m, 0);
}

bool MFMorphism::is_closed() const {
  const RMatrix& phx = source_.phi();
  const RMatrix& psx = source_.psi();
  const RMatrix& phy = target_.phi();
  const RMatrix& psy = target_.psi();
  if (parity_ == 0) {
    return phy * f1_ == f0_ * phx && psy * f0_ == f1_ * psx;
  }
  RMatrix zero(source_.ctx(), target_.rank(), source_.rank());
  return phy * f0_ + f1_ * psx == zero && psy * f1_ + f0_ * phx == zero;
}

MatrixFactorization shift(const MatrixFactorization& x) {
  return MatrixFactorization(x.potential(), -x.psi(), -x.phi());
}

MatrixFactorization shift(const MatrixFactorization& x, unsigned parity) {
  return parity % 2 ? shift(x) : x;
}

MatrixFactorization dual(const MatrixFactorization& x) {
  return MatrixFactorization(-x.potential(), x.phi().transpose(), -x.psi().transpose());
}

MatrixFactorization direct_sum(const MatrixFactorization& a, const MatrixFactorization& b) {
  if (!(a.potential() == b.potential())) throw PreconditionError("direct sum: potentials differ");
  return MatrixFactorization(a.potential(), RMatrix::block_diagonal(a.phi(), b.phi()),
                             RMatrix::block_diagonal(a.psi(), b.psi()));
}

MatrixFactorization cone(const MFMorphism& f) {
  if (f.parity() != 0) throw PreconditionError("cone: morphism must be even");
  if (!f.is_closed()) throw PreconditionError("cone: morphism is not closed");
  const MatrixFactorization& x = f.source();
  const MatrixFactorization& y = f.target();
  const RingCtx& r = x.ctx();
  // cone^0 = X^1 + Y^0, cone^1 = X^0 + Y^1
  RMatrix phi = RMatrix::block(-x.psi(), RMatrix(r, x.rank(), y.rank()), f.f0(), y.phi());
  RMatrix psi = RMatrix::block(-x.phi(), RMatrix(r, x.rank(), y.rank()), f.f1(), y.psi());
  return MatrixFactorization(x.potential(), std::move(phi), std::move(psi));
}

namespace {

// Graded tensor of two factorizations over one ring.
MatrixFactorization internal_tensor(const MatrixFactorization& x, const MatrixFactorization& y) {
  const RingCtx& r = x.ctx();
  RMatrix ix = RMatrix::identity(r, x.rank());
  RMatrix iy = RMatrix::identity(r, y.rank());
  // even = X0Y0 + X1Y1, odd = X0Y1 + X1Y0
  RMatrix phi = RMatrix::block(kron(ix, y.phi()), kron(x.phi(), iy), kron(x.psi(), iy), -kron(ix, y.psi()));
  RMatrix psi = RMatrix::block(kron(ix, y.psi()), kron(x.phi(), iy), kron(x.psi(), iy), -kron(ix, y.phi()));
  return MatrixFactorization(x.potential() + y.potential(), std::move(phi), std::move(psi));
}

std::vector<std::size_t> iota_map(std::size_t n, std::size_t offset) {
  std::vector<std::size_t> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = i + offset;
  return m;
}

MatrixFactorization embed_mf(const MatrixFactorization& x, const RingCtx& target,
                             const std::vector<std::size_t>& var_map) {
  return MatrixFactorization(embed(x.potential(), target, var_map), x.phi().embedded(target, var_map),
                             x.psi().embedded(target, var_map));
}

}  // namespace

MatrixFactorization external_tensor(const MatrixFactorization& x, const MatrixFactorization& y) {
  RingCtx r = RingCtx::concat(x.ctx(), y.ctx());
  const std::size_t n = x.ctx().n_vars();
  return internal_tensor(embed_mf(x, r, iota_map(n, 0)),
                         embed_mf(y, r, iota_map(y.ctx().n_vars(), n)));
}

TransformResult integral_transform(const MatrixFactorization& x, const MatrixFactorization& kernel) {
  const std::size_t n = x.ctx().n_vars();
  const RingCtx& big = kernel.ctx();
  if (big.n_vars() <= n) throw PreconditionError("transform: kernel ring must have more variables than the source");
  if (!(big.field() == x.ctx().field())) throw ContextMismatch("transform: fields differ");
  MatrixFactorization xe = embed_mf(x, big, iota_map(n, 0));
  Series rest = xe.potential() + kernel.potential();
  for (const auto& [e, c] : rest.terms()) {
    for (std::size_t i = 0; i < n; ++i) {
      if (e[i] != 0) {
        throw PreconditionError("transform: kernel potential is not -w (x) 1 + 1 (x) w'");
      }
    }
  }
  return {internal_tensor(xe, kernel), n, true};
}

Dims transform_cohomology(const TransformResult& t, StabilizationOptions opts) {
  const RingCtx& big = t.mf.ctx();
  const std::size_t n = t.source_vars;
  std::vector<std::string> names(big.names().begin(), big.names().begin() + static_cast<long>(n));
  RingCtx small(names, big.field());
  std::vector<std::size_t> outer;
  for (std::size_t i = n; i < big.n_vars(); ++i) outer.push_back(i);
  auto restrict = [&](const RMatrix& m) {
    RMatrix z = m.set_variables_to_zero(outer);
    RMatrix out(small, m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        for (const auto& [e, c] : z(i, j).terms()) out(i, j).add_term(e, c);
      }
    }
    return out;
  };
  Z2Complex c(restrict(t.mf.psi()), restrict(t.mf.phi()));
  if (!c.verify()) throw VerificationError("transform: restriction is not a complex");
  return cohomology_over_R(c, opts);
}

namespace {

// out(i, j) += sign * sum_k m(i, k) a(k, j) for a block a of shape rows x cols.
void add_left(RMatrix& d, std::size_t out_off, std::size_t in_off, const RMatrix& m,
              std::size_t cols, int sign) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t k = 0; k < m.cols(); ++k) {
      if (m(i, k).is_zero()) continue;
      Series v = sign > 0 ? m(i, k) : -m(i, k);
      for (std::size_t j = 0; j < cols; ++j) d(out_off + i * cols + j, in_off + k * cols + j) += v;
    }
  }
}

// out(i, j) += sign * sum_l a(i, l) m(l, j) for a block a with `rows` rows.
void add_right(RMatrix& d, std::size_t out_off, std::size_t in_off, const RMatrix& m,
               std::size_t rows, int sign) {
  const std::size_t in_cols = m.rows(), out_cols = m.cols();
  for (std::size_t l = 0; l < m.rows(); ++l) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(l, j).is_zero()) continue;
      Series v = sign > 0 ? m(l, j) : -m(l, j);
      for (std::size_t i = 0; i < rows; ++i) d(out_off + i * out_cols + j, in_off + i * in_cols + l) += v;
    }
  }
}

}  // namespace

Z2Complex hom_complex(const MatrixFactorization& x, const MatrixFactorization& y) {
  if (!(x.potential() == y.potential())) throw PreconditionError("hom complex: potentials differ");
  const RingCtx& r = x.ctx();
  const std::size_t rx = x.rank(), ry = y.rank(), s = rx * ry;
  RMatrix d0(r, 2 * s, 2 * s), d1(r, 2 * s, 2 * s);
  // Hom^0 = (A: X0->Y0, B: X1->Y1) -> Hom^1 = (C: X0->Y1, D: X1->Y0)
  add_left(d0, 0, 0, y.psi(), rx, +1);   // C += psi_Y A
  add_right(d0, 0, s, x.psi(), ry, -1);  // C -= B psi_X
  add_left(d0, s, s, y.phi(), rx, +1);   // D += phi_Y B
  add_right(d0, s, 0, x.phi(), ry, -1);  // D -= A phi_X
  // Hom^1 -> Hom^0
  add_left(d1, 0, 0, y.phi(), rx, +1);   // A += phi_Y C
  add_right(d1, 0, s, x.psi(), ry, +1);  // A += D psi_X
  add_left(d1, s, s, y.psi(), rx, +1);   // B += psi_Y D
  add_right(d1, s, 0, x.phi(), ry, +1);  // B += C phi_X
  return Z2Complex(std::move(d0), std::move(d1));
}

ChainMap multiplication_map(const Z2Complex& c, const Series& s) {
  return {RMatrix::scalar(s, c.even_rank()), RMatrix::scalar(s, c.odd_rank())};
}

Dims cohomology_mod_k(const MatrixFactorization& x) { return cohomology_mod_k(x.as_complex()); }

bool is_quasi_iso(const MFMorphism& f) { return cohomology_mod_k(cone(f)) == Dims{0, 0}; }

}  // namespace mfcat
