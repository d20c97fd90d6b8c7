#include "mfcat/stabilize.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "mfcat/errors.hpp"

namespace mfcat {

void KoszulData::check() const {
  if (generators.empty()) throw PreconditionError("Koszul data needs at least one generator");
  if (generators.size() != witnesses.size()) {
    throw PreconditionError("generator and witness counts differ");
  }
  Series sum(potential.ctx());
  for (std::size_t i = 0; i < generators.size(); ++i) sum += generators[i] * witnesses[i];
  if (!(sum == potential)) throw PreconditionError("witness identity sum f_i w_i = w fails");
}

std::vector<std::uint32_t> exterior_basis(std::size_t m) {
  if (m > 20) throw PreconditionError("exterior algebra too large");
  std::vector<std::uint32_t> out;
  out.reserve(std::size_t{1} << m);
  for (std::uint32_t s = 0; s < (1U << m); ++s) out.push_back(s);
  std::stable_sort(out.begin(), out.end(), [](std::uint32_t a, std::uint32_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    // lex on the sorted index lists: compare lowest differing element
    std::uint32_t diff = a ^ b;
    std::uint32_t low = diff & (~diff + 1);
    return (a & low) != 0;
  });
  return out;
}

int exterior_sign(std::uint32_t a, std::uint32_t b) {
  int count = 0;
  for (std::uint32_t rest = a; rest; rest &= rest - 1) {
    int i = std::countr_zero(rest);
    count += std::popcount(b & ((1U << i) - 1));
  }
  return count % 2 ? -1 : 1;
}

namespace {

// Matrix of (s0 + s1) or s0 alone between the parity blocks of Lambda V.
// Returns the block from parity `from` to parity 1 - from.
RMatrix koszul_block(const RingCtx& ctx, const std::vector<Series>& f, const std::vector<Series>* wit,
                     int from) {
  const std::size_t m = f.size();
  std::vector<std::uint32_t> basis = exterior_basis(m);
  std::vector<std::uint32_t> src, dst;
  for (auto s : basis) (std::popcount(s) % 2 == from ? src : dst).push_back(s);
  std::unordered_map<std::uint32_t, std::size_t> row_of;
  for (std::size_t i = 0; i < dst.size(); ++i) row_of[dst[i]] = i;
  RMatrix d(ctx, dst.size(), src.size());
  for (std::size_t col = 0; col < src.size(); ++col) {
    const std::uint32_t s = src[col];
    for (std::size_t j = 0; j < m; ++j) {
      const std::uint32_t bit = 1U << j;
      if (s & bit) {
        // contraction: e_S -> sign * f_j e_{S \ j}, sign from moving j to the front
        int sign = exterior_sign(bit, s & ~bit);
        d(row_of.at(s & ~bit), col) += sign > 0 ? f[j] : -f[j];
      } else if (wit) {
        int sign = exterior_sign(bit, s);
        d(row_of.at(s | bit), col) += sign > 0 ? (*wit)[j] : -(*wit)[j];
      }
    }
  }
  return d;
}

}  // namespace

MatrixFactorization make_koszul_mf(const KoszulData& kd) {
  kd.check();
  const RingCtx& ctx = kd.potential.ctx();
  RMatrix psi = koszul_block(ctx, kd.generators, &kd.witnesses, 0);
  RMatrix phi = koszul_block(ctx, kd.generators, &kd.witnesses, 1);
  return MatrixFactorization(kd.potential, std::move(phi), std::move(psi));
}

void require_in_m2(const Series& w) {
  if (w.is_zero()) throw PreconditionError("potential must be nonzero");
  if (*w.order() < 2) throw PreconditionError("potential must lie in m^2");
}

KoszulData decompose_potential(const Series& w, PeelOrder order) {
  if (!w.in_maximal_ideal()) throw PreconditionError("potential has a nonzero constant term");
  const RingCtx& ctx = w.ctx();
  PeelResult p = peel_variables(w, order);
  KoszulData kd{w, {}, std::move(p.parts)};
  for (std::size_t i = 0; i < ctx.n_vars(); ++i) kd.generators.push_back(Series::variable(ctx, i));
  kd.check();
  return kd;
}

MatrixFactorization stabilize_residue_field(const Series& w, PeelOrder order) {
  require_in_m2(w);
  return make_koszul_mf(decompose_potential(w, order));
}

MatrixFactorization stabilized_diagonal(const Series& w) {
  require_in_m2(w);
  const RingCtx& ctx = w.ctx();
  const std::size_t n = ctx.n_vars();
  RingCtx big = ctx.doubled();
  KoszulData kd;
  kd.potential = embed_shifted(w, big, n) - embed_shifted(w, big, 0);
  for (std::size_t i = 0; i < n; ++i) {
    kd.generators.push_back(Series::variable(big, i) - Series::variable(big, n + i));
    kd.witnesses.push_back(-difference_quotient(w, i));
  }
  return make_koszul_mf(kd);
}

EndomorphismData endomorphism_data(const Series& w) {
  MatrixFactorization k = stabilize_residue_field(w);
  Z2Complex hom = hom_complex(k, k);
  return {std::move(k), std::move(hom)};
}

Z2Complex koszul_complex(const std::vector<Series>& f) {
  if (f.empty()) throw PreconditionError("Koszul complex needs at least one element");
  const RingCtx& ctx = f[0].ctx();
  return Z2Complex(koszul_block(ctx, f, nullptr, 0), koszul_block(ctx, f, nullptr, 1));
}

}  // namespace mfcat
