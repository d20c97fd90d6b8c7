#ifndef MFCAT_MF_HPP
#define MFCAT_MF_HPP

#include <cstddef>
#include <string>

#include "mfcat/cohomology.hpp"
#include "mfcat/matrix.hpp"

namespace mfcat {

// X = X^0 + X^1 free of equal rank with d = [[0, phi], [psi, 0]],
// phi: X^1 -> X^0, psi: X^0 -> X^1 and d^2 = w * id.
class MatrixFactorization {
 public:
  MatrixFactorization() = default;
  // Checks shapes and contexts only; call verify() for the defining relation.
  MatrixFactorization(Series potential, RMatrix phi, RMatrix psi);

  // (1, w): contractible.
  static MatrixFactorization trivial(const Series& potential);
  static MatrixFactorization zero(const Series& potential);

  const RingCtx& ctx() const noexcept { return potential_.ctx(); }
  const Series& potential() const noexcept { return potential_; }
  std::size_t rank() const noexcept { return phi_.rows(); }
  const RMatrix& phi() const noexcept { return phi_; }
  const RMatrix& psi() const noexcept { return psi_; }

  // phi*psi == psi*phi == w * id, exactly.
  bool verify() const;
  // As a curved 2-periodic sequence X^0 --psi--> X^1 --phi--> X^0.
  Z2Complex as_complex() const;

  friend bool operator==(const MatrixFactorization&, const MatrixFactorization&) = default;

 private:
  Series potential_;
  RMatrix phi_;
  RMatrix psi_;
};

// A morphism X -> Y. Even: f0: X^0 -> Y^0, f1: X^1 -> Y^1. Odd: f0: X^0 -> Y^1,
// f1: X^1 -> Y^0.
class MFMorphism {
 public:
  MFMorphism(MatrixFactorization source, MatrixFactorization target, RMatrix f0, RMatrix f1,
             int parity = 0);

  static MFMorphism identity(const MatrixFactorization& x);
  static MFMorphism zero(const MatrixFactorization& x, const MatrixFactorization& y);
  // Multiplication by a ring element on X.
  static MFMorphism multiplication(const MatrixFactorization& x, const Series& s);

  const MatrixFactorization& source() const noexcept { return source_; }
  const MatrixFactorization& target() const noexcept { return target_; }
  const RMatrix& f0() const noexcept { return f0_; }
  const RMatrix& f1() const noexcept { return f1_; }
  int parity() const noexcept { return parity_; }

  // d_Y f - (-1)^{|f|} f d_X == 0.
  bool is_closed() const;

 private:
  MatrixFactorization source_;
  MatrixFactorization target_;
  RMatrix f0_;
  RMatrix f1_;
  int parity_;
};

bool verify_mf(const MatrixFactorization& x);

// (phi, psi) -> (-psi, -phi).
MatrixFactorization shift(const MatrixFactorization& x);
// Applies shift when `parity` is odd.
MatrixFactorization shift(const MatrixFactorization& x, unsigned parity);
// (phi, psi) over w -> (phi^T, -psi^T) over -w, so coker of the new phi is
// Hom(coker phi, S). An involution.
MatrixFactorization dual(const MatrixFactorization& x);
MatrixFactorization direct_sum(const MatrixFactorization& a, const MatrixFactorization& b);
// Requires f closed and even.
MatrixFactorization cone(const MFMorphism& f);

// Z/2-graded tensor product over k of X over (R, w) and Y over (R', w'):
// a factorization of w (x) 1 + 1 (x) w' over R (x) R' (variables of R first),
// with even part X^0Y^0 + X^1Y^1 and odd part X^0Y^1 + X^1Y^0, so each
// parity has rank 2 * rank(X) * rank(Y).
MatrixFactorization external_tensor(const MatrixFactorization& x, const MatrixFactorization& y);

// X (x)_R T for a kernel T over R (x) R' whose first n variables are those of
// R. The result is a finite-rank factorization over the kernel's ring whose
// potential only involves the R' variables; as an R'-module it represents
// the transform up to quasi-isomorphism.
struct TransformResult {
  MatrixFactorization mf;
  std::size_t source_vars = 0;  // leading variables that belong to R
  bool up_to_quasi_iso = true;
};
TransformResult integral_transform(const MatrixFactorization& x, const MatrixFactorization& kernel);
// Cohomology of k (x)_{R'} of a transform result: the R' variables are set
// to zero and the remaining complex over R is handed to cohomology_over_R.
Dims transform_cohomology(const TransformResult& t, StabilizationOptions opts = {});

// Morphism complex Hom(X, Y) with d(f) = d_Y f - (-1)^{|f|} f d_X.
// Hom^0 = Hom(X^0, Y^0) + Hom(X^1, Y^1), Hom^1 = Hom(X^0, Y^1) + Hom(X^1, Y^0);
// a block Hom(X^a, Y^b) is vectorized row-major as rank(Y) x rank(X).
Z2Complex hom_complex(const MatrixFactorization& x, const MatrixFactorization& y);

// The even chain map of hom_complex(x, y) given by multiplication by s.
struct ChainMap {
  RMatrix g0;
  RMatrix g1;
};
ChainMap multiplication_map(const Z2Complex& c, const Series& s);

// Dimensions of the cohomology of k (x) X.
Dims cohomology_mod_k(const MatrixFactorization& x);

// f closed and even; true iff k (x) f is a quasi-isomorphism.
bool is_quasi_iso(const MFMorphism& f);

}  // namespace mfcat

#endif  // MFCAT_MF_HPP
