#ifndef MFCAT_COHOMOLOGY_HPP
#define MFCAT_COHOMOLOGY_HPP

#include <cstddef>
#include <optional>
#include <string>

#include "mfcat/matrix.hpp"

namespace mfcat {

// A 2-periodic sequence of finite free R-modules
//   C^0 --d0--> C^1 --d1--> C^0
// with d1*d0 and d0*d1 either zero (a complex) or multiplication by a
// curvature element (the underlying module of a matrix factorization).
class Z2Complex {
 public:
  Z2Complex() = default;
  // d0 is rank1 x rank0, d1 is rank0 x rank1. With a curvature the
  // composites are expected to equal curvature * id.
  Z2Complex(RMatrix d0, RMatrix d1, std::optional<Series> curvature = std::nullopt);

  const RingCtx& ctx() const noexcept { return d0_.ctx(); }
  std::size_t even_rank() const noexcept { return d0_.cols(); }
  std::size_t odd_rank() const noexcept { return d0_.rows(); }
  std::size_t rank(int parity) const noexcept { return parity % 2 ? odd_rank() : even_rank(); }
  const RMatrix& d0() const noexcept { return d0_; }
  const RMatrix& d1() const noexcept { return d1_; }
  // The differential leaving C^parity.
  const RMatrix& d(int parity) const noexcept { return parity % 2 ? d1_ : d0_; }
  const std::optional<Series>& curvature() const noexcept { return curvature_; }

  // d*d == 0, or d*d == curvature * id.
  bool verify() const;

 private:
  RMatrix d0_;
  RMatrix d1_;
  std::optional<Series> curvature_;
};

struct Dims {
  std::size_t even = 0;
  std::size_t odd = 0;

  std::size_t total() const noexcept { return even + odd; }
  Dims swapped() const noexcept { return {odd, even}; }
  // Swaps the parities when `parity` is odd.
  Dims shifted(unsigned parity) const noexcept { return parity % 2 ? swapped() : *this; }
  std::string to_string() const;
  friend bool operator==(const Dims&, const Dims&) = default;
};

// Cohomology of the reduction of C modulo the maximal ideal. Throws
// VerificationError if the reduction is not a complex.
Dims cohomology_mod_k(const Z2Complex& c);

struct StabilizationOptions {
  // Largest truncation degree tried; defaults to $MFCAT_NMAX or 64.
  unsigned n_max = 0;
  // Extra degrees kept above the reporting level when computing cycles;
  // 0 means twice the largest entry degree.
  unsigned slack = 0;
};

// $MFCAT_NMAX if set to a positive integer, otherwise 64.
unsigned default_n_max();

struct OverRReport {
  Dims dims;
  unsigned stabilized_at = 0;
};

// k-dimensions of the cohomology of a complex of free R-modules whose
// cohomology has finite length. The cohomology is read off modulo m^{N+1}
// for growing N until two consecutive levels agree; throws
// StabilizationError when that does not happen by n_max.
OverRReport cohomology_over_R_report(const Z2Complex& c, StabilizationOptions opts = {});
Dims cohomology_over_R(const Z2Complex& c, StabilizationOptions opts = {});

// Mapping cone of an even chain map g = (g0: C^0 -> D^0, g1: C^1 -> D^1):
//   cone^0 = C^1 + D^0,  cone^1 = C^0 + D^1,
//   d = [[-d_C, 0], [g, d_D]].
// Throws PreconditionError if g does not commute with the differentials.
Z2Complex cone(const Z2Complex& c, const Z2Complex& d, const RMatrix& g0, const RMatrix& g1);

}  // namespace mfcat

#endif  // MFCAT_COHOMOLOGY_HPP
