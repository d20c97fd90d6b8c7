#ifndef MFCAT_HOCHSCHILD_HPP
#define MFCAT_HOCHSCHILD_HPP

#include <cstddef>
#include <vector>

#include "mfcat/cohomology.hpp"
#include "mfcat/ring.hpp"

namespace mfcat {

struct JacobianReport {
  std::size_t milnor_number = 0;
  std::size_t tyurina_number = 0;
  // Monomials not among the leading terms of the Jacobian ideal, graded-lex.
  std::vector<Exponent> monomial_basis;
  unsigned stabilized_at = 0;
};

// k-dimension of R / (I + m^{N+1}) for the ideal generated by `gens`,
// together with the monomials outside the leading-term span.
struct QuotientLevel {
  std::size_t dim = 0;
  std::vector<Exponent> basis;
};
QuotientLevel local_quotient(const std::vector<Series>& gens, unsigned n);

// Dimensions of R/(dw) and R/(w, dw) in the local ring at the origin. Throws
// StabilizationError if they do not settle by n_max (default as for
// cohomology_over_R).
JacobianReport jacobian_report(const Series& w, unsigned n_max = 0);

// Cohomology of the Z/2-folded Koszul complex of the partials; checked
// against (milnor, 0).
Dims hochschild_cohomology(const Series& w);
// The Milnor number placed in parity n mod 2.
Dims hochschild_homology(const Series& w);

// Hochschild cohomology recomputed from the endomorphisms of the stabilized
// diagonal; true iff it agrees with hochschild_cohomology.
bool diagonal_hh_crosscheck(const Series& w);
// k (x) dual(diagonal) against k (x) shift^{n mod 2}(diagonal).
bool calabi_yau_parity_check(const Series& w);
// The same comparison through Hom over R (x) R: the Hom-dual of the
// diagonal, with the two copies of R exchanged, against shift^{n mod 2} of
// the diagonal, tested by H(Hom(diagonal, -)). Needs an isolated singularity.
bool calabi_yau_hom_check(const Series& w);

struct HHReport {
  Dims cohomology;
  Dims homology;
  std::size_t milnor = 0;
  std::size_t tyurina = 0;
  unsigned homology_parity = 0;
  // Periodic cyclic homology, set equal to HH_* (the spectral sequence
  // degenerates because HH_* sits in one parity).
  Dims periodic;
};
HHReport hh_report(const Series& w);

}  // namespace mfcat

#endif  // MFCAT_HOCHSCHILD_HPP
