#ifndef MFCAT_AINFINITY_HPP
#define MFCAT_AINFINITY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mfcat/superop.hpp"

namespace mfcat {

// The endomorphism dg algebra of k^stab: operators on R<theta> with
// differential [delta, -], delta = sum_i x_i d_i + w_i theta_i.
class DgAlgebra {
 public:
  // Requires w in m^2. The peel order fixes w = sum x_i w_i; the transfer
  // engine uses kReverseOrder (x_n first).
  explicit DgAlgebra(const Series& w, PeelOrder order = PeelOrder::kReverseOrder);

  const RingCtx& ctx() const noexcept { return w_.ctx(); }
  const Series& potential() const noexcept { return w_; }
  const std::vector<Series>& witnesses() const noexcept { return witnesses_; }
  PeelOrder order() const noexcept { return order_; }
  std::size_t n_vars() const noexcept { return ctx().n_vars(); }

  SuperOp delta() const;
  // [delta, a] computed by normal-ordered products.
  SuperOp commutator_differential(const SuperOp& a) const;
  // The same map applied term by term as a derivation: theta_i -> x_i,
  // d_i -> w_i.
  SuperOp d(const SuperOp& a) const;

 private:
  Series w_;
  PeelOrder order_;
  std::vector<Series> witnesses_;
};

DgAlgebra build_dg_algebra(const Series& w, PeelOrder order = PeelOrder::kReverseOrder);

// Strong deformation retract of A onto its cohomology H, which has basis
// dbar_T (T a subset of the variables) with
//   dbar_i = d_i - sum_j c_ij theta_j,   w_i = sum_j x_j c_ij.
// In the generators theta_i, dbar_i the complex is the Koszul complex of
// x_1..x_n tensored with an exterior algebra on the dbar_i; h is the
// iterated one-variable homotopy a -> (a / x_j) theta_j.
class Contraction {
 public:
  explicit Contraction(const DgAlgebra& a);

  const DgAlgebra& algebra() const noexcept { return a_; }
  // H basis: subsets ordered by (cardinality, lex).
  const std::vector<std::uint32_t>& basis() const noexcept { return basis_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  std::string label(std::size_t i) const;
  unsigned parity(std::size_t i) const;

  SuperOp iota(std::size_t i) const;
  // Coordinates of the constant theta-free part.
  std::vector<Scalar> pi(const SuperOp& a) const;
  SuperOp iota_pi(const SuperOp& a) const;
  SuperOp h(const SuperOp& a) const;
  // w_i = sum_j x_j c_ij
  const Series& c(std::size_t i, std::size_t j) const { return c_[i][j]; }

 private:
  // Rewrites symbols in the (theta, d) basis into the (theta, dbar) basis
  // (sign = +1) or back (sign = -1).
  SuperOp change_basis(const SuperOp& a, int sign) const;
  SuperOp h_bar(const SuperOp& a) const;

  DgAlgebra a_;
  std::vector<std::vector<Series>> c_;
  std::vector<std::size_t> homotopy_order_;
  std::vector<std::uint32_t> basis_;
  std::map<std::uint32_t, std::size_t> index_of_;
  std::vector<SuperOp> iota_;
};

Contraction build_contraction(const Series& w);

// Number of spanning elements x^alpha theta_S d_T with |alpha| <= max_degree
// on which dh + hd = id - iota pi fails (0 when the identity holds).
std::size_t homotopy_identity_failures(const Contraction& c, unsigned max_degree);

// Minimal A-infinity structure on H. Products are stored sparsely: only
// nonzero values of m_k on basis tuples.
struct AInfStructure {
  FieldSpec field;
  std::vector<std::string> basis;
  std::vector<unsigned> parity;
  unsigned max_arity = 2;
  // products[args] = value of m_{args.size()} as coordinates on the basis.
  std::map<std::vector<std::size_t>, std::vector<Scalar>> products;

  std::vector<Scalar> value(const std::vector<std::size_t>& args) const;
  Scalar coefficient(const std::vector<std::size_t>& args, std::size_t out) const;
  std::size_t index_of(const std::string& label) const;
};

// Tree-sum transfer m_2..m_K along the contraction. Sign convention: the
// recursion runs on q_k = s^{-1} m_k with q_2(a, b) = (-1)^{|a|} ab,
//   lambda_k = sum_{i+j=k} q_2(H lambda_i, H lambda_j),  H lambda_1 = iota,
//   H lambda_k = h lambda_k,  q_k = pi lambda_k,
// and m_k(a_1..a_k) = (-1)^{sum_i (k-i)|a_i|} q_k(a_1..a_k).
AInfStructure transfer_minimal_model(const Series& w, unsigned max_arity);

struct StasheffReport {
  bool m1_vanishes = true;
  std::size_t failures = 0;  // basis tuples on which an identity fails
  unsigned checked_up_to = 0;
  bool ok() const noexcept { return m1_vanishes && failures == 0; }
};
// Checks the identities of total arity 3..up_to (needs up_to - 1 <= max_arity)
// and m_1 = 0 on the contraction.
StasheffReport check_stasheff(const AInfStructure& m, unsigned up_to);
bool m1_vanishes(const Contraction& c);

// For w = sum a_i x_i^2: m_2 must equal the Clifford product with
// dbar_i^2 = -a_i and anticommuting generators, and m_k = 0 for
// 3 <= k <= max_arity. Throws PreconditionError for other inputs or in
// characteristic 2.
bool clifford_check(const Series& w, unsigned max_arity = 6);
// The Clifford product dbar_J dbar_K for diagonal coefficients a.
std::vector<Scalar> clifford_product(const std::vector<Scalar>& a, std::uint32_t j, std::uint32_t k,
                                     const std::vector<std::uint32_t>& basis);

}  // namespace mfcat

#endif  // MFCAT_AINFINITY_HPP
