#ifndef MFCAT_STABILIZE_HPP
#define MFCAT_STABILIZE_HPP

#include <cstdint>
#include <vector>

#include "mfcat/mf.hpp"

namespace mfcat {

// A sequence f_1..f_m with witnesses w_1..w_m, sum f_i w_i = w.
struct KoszulData {
  Series potential;
  std::vector<Series> generators;
  std::vector<Series> witnesses;

  // Throws PreconditionError when the witness identity fails.
  void check() const;
};

// Subsets of {0..m-1} as bit masks ordered by (cardinality, lex); the
// exterior basis used for every Koszul construction.
std::vector<std::uint32_t> exterior_basis(std::size_t m);
// Sign of e_a ^ e_b for disjoint a, b: (-1)^{#(i in a, j in b, i > j)}.
int exterior_sign(std::uint32_t a, std::uint32_t b);

// (Lambda V, s0 + s1) with s0 contraction by f and s1 exterior
// multiplication by the witnesses; even part = even exterior degree.
MatrixFactorization make_koszul_mf(const KoszulData& kd);

// Generators x_1..x_n, witnesses from peel_variables(w, order).
KoszulData decompose_potential(const Series& w, PeelOrder order = PeelOrder::kIndexOrder);

// Throws PreconditionError unless w is a nonzero element of m^2.
void require_in_m2(const Series& w);

MatrixFactorization stabilize_residue_field(const Series& w, PeelOrder order = PeelOrder::kIndexOrder);

// Koszul factorization over R (x) R on x_i - x_i' with witnesses
// -difference_quotient(w, i); its potential is -w(x) + w(x').
MatrixFactorization stabilized_diagonal(const Series& w);

struct EndomorphismData {
  MatrixFactorization generator;
  Z2Complex hom;
};
EndomorphismData endomorphism_data(const Series& w);

// The Z/2-folded Koszul complex of f_1..f_m (contraction only), d^2 = 0.
Z2Complex koszul_complex(const std::vector<Series>& f);

}  // namespace mfcat

#endif  // MFCAT_STABILIZE_HPP
