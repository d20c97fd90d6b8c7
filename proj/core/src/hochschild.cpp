#include "mfcat/hochschild.hpp"

#include <algorithm>
#include <unordered_map>

#include "mfcat/errors.hpp"
#include "mfcat/linalg.hpp"
#include "mfcat/mf.hpp"
#include "mfcat/stabilize.hpp"

namespace mfcat {

QuotientLevel local_quotient(const std::vector<Series>& gens, unsigned n) {
  if (gens.empty()) throw PreconditionError("quotient by an empty generating set");
  const RingCtx& ctx = gens[0].ctx();
  std::vector<Exponent> basis = monomial_basis(ctx, n);
  std::unordered_map<Exponent, std::size_t, ExponentHash> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
  RowEchelon e(ctx.field());
  for (const Series& g : gens) {
    if (g.is_zero()) continue;
    const unsigned low = *g.order();
    for (const Exponent& alpha : basis) {
      if (alpha.degree() + low > n) break;
      SparseVector v;
      for (const auto& [beta, c] : g.terms()) {
        if (alpha.degree() + beta.degree() > n) break;
        v.emplace_back(index.at(alpha + beta), c);
      }
      std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      e.insert(v);
    }
  }
  QuotientLevel out;
  std::vector<std::size_t> piv = e.pivots();
  std::size_t p = 0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (p < piv.size() && piv[p] == i) {
      ++p;
      continue;
    }
    out.basis.push_back(basis[i]);
  }
  out.dim = out.basis.size();
  return out;
}

namespace {

// Smallest N >= 1 with dim(N) == dim(N + 1); by Nakayama m^{N+1} then lies in
// the ideal, so dim(N) is the length of the local quotient.
std::pair<QuotientLevel, unsigned> stable_quotient(const std::vector<Series>& gens, unsigned n_max,
                                                   const char* what) {
  QuotientLevel prev = local_quotient(gens, 1);
  for (unsigned n = 1; n < n_max; ++n) {
    QuotientLevel next = local_quotient(gens, n + 1);
    if (next.dim == prev.dim) return {std::move(prev), n};
    prev = std::move(next);
  }
  throw StabilizationError(std::string(what) + " did not stabilize by degree " + std::to_string(n_max) +
                           " (singularity likely not isolated, or the cap is too low)");
}

std::vector<Series> partials(const Series& w) {
  std::vector<Series> out;
  for (std::size_t i = 0; i < w.ctx().n_vars(); ++i) out.push_back(partial_derivative(w, i));
  return out;
}

}  // namespace

JacobianReport jacobian_report(const Series& w, unsigned n_max) {
  require_in_m2(w);
  if (n_max == 0) n_max = default_n_max();
  std::vector<Series> jac = partials(w);
  auto [milnor, at] = stable_quotient(jac, n_max, "Milnor algebra");
  std::vector<Series> tjur = jac;
  tjur.push_back(w);
  auto [tyurina, at2] = stable_quotient(tjur, n_max, "Tyurina algebra");
  JacobianReport r;
  r.milnor_number = milnor.dim;
  r.tyurina_number = tyurina.dim;
  r.monomial_basis = std::move(milnor.basis);
  r.stabilized_at = std::max(at, at2);
  return r;
}

Dims hochschild_cohomology(const Series& w) {
  JacobianReport j = jacobian_report(w);
  Dims d = cohomology_over_R(koszul_complex(partials(w)));
  if (d.odd != 0 || d.even != j.milnor_number) {
    throw VerificationError("Koszul complex of the partials has cohomology " + d.to_string() +
                            ", expected (" + std::to_string(j.milnor_number) + ", 0)");
  }
  return d;
}

Dims hochschild_homology(const Series& w) {
  JacobianReport j = jacobian_report(w);
  return Dims{j.milnor_number, 0}.shifted(static_cast<unsigned>(w.ctx().n_vars() % 2));
}

bool diagonal_hh_crosscheck(const Series& w) {
  MatrixFactorization diag = stabilized_diagonal(w);
  return cohomology_over_R(hom_complex(diag, diag)) == hochschild_cohomology(w);
}

bool calabi_yau_parity_check(const Series& w) {
  MatrixFactorization diag = stabilized_diagonal(w);
  const unsigned eps = static_cast<unsigned>(w.ctx().n_vars() % 2);
  return cohomology_mod_k(dual(diag)) == cohomology_mod_k(shift(diag, eps));
}

bool calabi_yau_hom_check(const Series& w) {
  MatrixFactorization diag = stabilized_diagonal(w);
  const RingCtx& ctx = diag.ctx();
  const std::size_t n = w.ctx().n_vars();
  std::vector<std::size_t> swap(2 * n);
  for (std::size_t i = 0; i < 2 * n; ++i) swap[i] = (i + n) % (2 * n);
  // Hom_R(-, R) keeping parities is the shift of dual()
  MatrixFactorization d = shift(dual(diag));
  MatrixFactorization swapped(embed(d.potential(), ctx, swap), d.phi().embedded(ctx, swap),
                              d.psi().embedded(ctx, swap));
  const unsigned eps = static_cast<unsigned>(n % 2);
  return cohomology_over_R(hom_complex(diag, swapped)) ==
         cohomology_over_R(hom_complex(diag, shift(diag, eps)));
}

HHReport hh_report(const Series& w) {
  JacobianReport j = jacobian_report(w);
  HHReport r;
  r.cohomology = hochschild_cohomology(w);
  r.milnor = j.milnor_number;
  r.tyurina = j.tyurina_number;
  r.homology_parity = static_cast<unsigned>(w.ctx().n_vars() % 2);
  r.homology = Dims{j.milnor_number, 0}.shifted(r.homology_parity);
  r.periodic = r.homology;
  return r;
}

}  // namespace mfcat
