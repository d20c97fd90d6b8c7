#include "mfcat/ainfinity.hpp"

#include <bit>
#include <unordered_map>

#include "mfcat/errors.hpp"
#include "mfcat/stabilize.hpp"

namespace mfcat {

namespace {

bool odd(unsigned p) { return p % 2 != 0; }

Scalar signed_value(const Scalar& c, bool negate) { return negate ? -c : c; }

}  // namespace

// ---------------------------------------------------------------- DgAlgebra

DgAlgebra::DgAlgebra(const Series& w, PeelOrder order) : w_(w), order_(order) {
  require_in_m2(w);
  if (w.ctx().n_vars() > 8) throw PreconditionError("the operator algebra supports at most 8 variables");
  PeelResult p = peel_variables(w, order);
  witnesses_ = std::move(p.parts);
}

DgAlgebra build_dg_algebra(const Series& w, PeelOrder order) { return DgAlgebra(w, order); }

SuperOp DgAlgebra::delta() const {
  SuperOp r(ctx());
  const Scalar one = Scalar::one(ctx().field());
  for (std::size_t i = 0; i < n_vars(); ++i) {
    r.add_term({Exponent::unit(i), 0, 1U << i}, one);
    for (const auto& [e, c] : witnesses_[i].terms()) r.add_term({e, 1U << i, 0}, c);
  }
  return r;
}

SuperOp DgAlgebra::commutator_differential(const SuperOp& a) const {
  SuperOp even(ctx()), odd_part(ctx());
  for (const auto& [m, c] : a.terms()) (m.parity() ? odd_part : even).add_term(m, c);
  SuperOp del = delta();
  return graded_commutator(del, even) + graded_commutator(del, odd_part);
}

SuperOp DgAlgebra::d(const SuperOp& a) const {
  SuperOp r(ctx());
  const std::size_t n = n_vars();
  for (const auto& [m, c] : a.terms()) {
    unsigned pos = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(m.theta >> i & 1U)) continue;
      r.add_term({m.alpha + Exponent::unit(i), m.theta & ~(1U << i), m.dtheta}, signed_value(c, odd(pos)));
      ++pos;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (!(m.dtheta >> i & 1U)) continue;
      for (const auto& [e, wc] : witnesses_[i].terms()) {
        r.add_term({m.alpha + e, m.theta, m.dtheta & ~(1U << i)}, signed_value(c * wc, odd(pos)));
      }
      ++pos;
    }
  }
  return r;
}

// ---------------------------------------------------------------- Contraction

Contraction::Contraction(const DgAlgebra& a) : a_(a) {
  const std::size_t n = a_.n_vars();
  for (std::size_t i = 0; i < n; ++i) {
    PeelResult p = peel_variables(a_.witnesses()[i], a_.order());
    if (!p.remainder.is_zero()) throw PreconditionError("witness with a constant term");
    c_.push_back(std::move(p.parts));
  }
  for (std::size_t s = 0; s < n; ++s) {
    homotopy_order_.push_back(a_.order() == PeelOrder::kIndexOrder ? s : n - 1 - s);
  }
  basis_ = exterior_basis(n);
  for (std::size_t i = 0; i < basis_.size(); ++i) index_of_[basis_[i]] = i;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    iota_.push_back(change_basis(
        SuperOp::monomial(a_.ctx(), {Exponent(), 0, basis_[i]}, Scalar::one(a_.ctx().field())), -1));
  }
}

Contraction build_contraction(const Series& w) { return Contraction(DgAlgebra(w)); }

std::string Contraction::label(std::size_t i) const {
  const std::uint32_t t = basis_.at(i);
  if (t == 0) return "1";
  std::string s;
  for (std::size_t j = 0; j < a_.n_vars(); ++j) {
    if (!(t >> j & 1U)) continue;
    if (!s.empty()) s += "*";
    s += "dbar" + std::to_string(j + 1);
  }
  return s;
}

unsigned Contraction::parity(std::size_t i) const {
  return static_cast<unsigned>(std::popcount(basis_.at(i))) % 2;
}

SuperOp Contraction::change_basis(const SuperOp& a, int sign) const {
  const std::size_t n = a_.n_vars();
  const RingCtx& ctx = a_.ctx();
  SuperOp out(ctx);
  for (const auto& [m, v] : a.terms()) {
    if (m.dtheta == 0) {
      out.add_term(m, v);
      continue;
    }
    SuperOp cur = SuperOp::monomial(ctx, {m.alpha, m.theta, 0}, v);
    for (std::size_t i = 0; i < n; ++i) {
      if (!(m.dtheta >> i & 1U)) continue;
      SuperOp next(ctx);
      for (const auto& [m2, v2] : cur.terms()) {
        next.add_term({m2.alpha, m2.theta, m2.dtheta | (1U << i)}, v2);
        const bool t2_odd = odd(static_cast<unsigned>(std::popcount(m2.dtheta)));
        for (std::size_t j = 0; j < n; ++j) {
          const std::uint32_t bit = 1U << j;
          if (m2.theta & bit) continue;
          const bool negate = ((exterior_sign(m2.theta, bit) < 0) != t2_odd) != (sign < 0);
          for (const auto& [e, cf] : c_[i][j].terms()) {
            next.add_term({m2.alpha + e, m2.theta | bit, m2.dtheta}, signed_value(v2 * cf, negate));
          }
        }
      }
      cur = std::move(next);
    }
    out += cur;
  }
  return out;
}

SuperOp Contraction::h_bar(const SuperOp& a) const {
  SuperOp out(a_.ctx());
  for (const auto& [m, v] : a.terms()) {
    for (std::size_t j : homotopy_order_) {
      const std::uint32_t bit = 1U << j;
      if (m.theta & bit) break;
      if (m.alpha[j] > 0) {
        Exponent b = m.alpha;
        b.set(j, m.alpha[j] - 1);
        out.add_term({b, m.theta | bit, m.dtheta}, signed_value(v, exterior_sign(bit, m.theta) < 0));
        break;
      }
    }
  }
  return out;
}

SuperOp Contraction::h(const SuperOp& a) const { return change_basis(h_bar(change_basis(a, 1)), -1); }

std::vector<Scalar> Contraction::pi(const SuperOp& a) const {
  std::vector<Scalar> out(basis_.size(), Scalar::zero(a_.ctx().field()));
  for (const auto& [m, v] : a.terms()) {
    if (m.alpha.degree() > 0) break;
    if (m.theta == 0) out[index_of_.at(m.dtheta)] = v;
  }
  return out;
}

SuperOp Contraction::iota(std::size_t i) const { return iota_.at(i); }

SuperOp Contraction::iota_pi(const SuperOp& a) const {
  std::vector<Scalar> p = pi(a);
  SuperOp out(a_.ctx());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!p[i].is_zero()) out += p[i] * iota_[i];
  }
  return out;
}

std::size_t homotopy_identity_failures(const Contraction& c, unsigned max_degree) {
  const DgAlgebra& a = c.algebra();
  const RingCtx& ctx = a.ctx();
  const std::uint32_t masks = 1U << a.n_vars();
  const Scalar one = Scalar::one(ctx.field());
  std::size_t failures = 0;
  for (const Exponent& alpha : monomial_basis(ctx, max_degree)) {
    for (std::uint32_t s = 0; s < masks; ++s) {
      for (std::uint32_t t = 0; t < masks; ++t) {
        SuperOp e = SuperOp::monomial(ctx, {alpha, s, t}, one);
        SuperOp lhs = a.d(c.h(e)) + c.h(a.d(e));
        SuperOp rhs = e - c.iota_pi(e);
        if (!(lhs == rhs)) ++failures;
      }
    }
  }
  return failures;
}

bool m1_vanishes(const Contraction& c) {
  for (std::size_t i = 0; i < c.dim(); ++i) {
    for (const Scalar& s : c.pi(c.algebra().d(c.iota(i)))) {
      if (!s.is_zero()) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------- transfer

std::vector<Scalar> AInfStructure::value(const std::vector<std::size_t>& args) const {
  auto it = products.find(args);
  if (it != products.end()) return it->second;
  return std::vector<Scalar>(basis.size(), Scalar::zero(field));
}

Scalar AInfStructure::coefficient(const std::vector<std::size_t>& args, std::size_t out) const {
  auto it = products.find(args);
  return it == products.end() ? Scalar::zero(field) : it->second.at(out);
}

std::size_t AInfStructure::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i] == label) return i;
  }
  throw PreconditionError("no basis element '" + label + "'");
}

namespace {

// Sign relating the reported m_k to the bar-form q_k on a basis tuple.
bool report_sign(const std::vector<unsigned>& parity, const std::vector<std::size_t>& args) {
  const std::size_t k = args.size();
  unsigned s = 0;
  for (std::size_t i = 0; i < k; ++i) s += static_cast<unsigned>(k - 1 - i) * parity[args[i]];
  return odd(s);
}

std::vector<std::size_t> decode(std::uint64_t code, std::size_t k, std::size_t base) {
  std::vector<std::size_t> out(k);
  for (std::size_t i = k; i-- > 0;) {
    out[i] = code % base;
    code /= base;
  }
  return out;
}

}  // namespace

AInfStructure transfer_minimal_model(const Series& w, unsigned max_arity) {
  if (max_arity < 2) throw PreconditionError("max arity must be at least 2");
  if (max_arity > 8) throw PreconditionError("max arity above 8 is not supported");
  Contraction con{DgAlgebra(w)};
  const std::size_t b = con.dim();
  AInfStructure out;
  out.field = w.ctx().field();
  out.max_arity = max_arity;
  for (std::size_t i = 0; i < b; ++i) {
    out.basis.push_back(con.label(i));
    out.parity.push_back(con.parity(i));
  }
  std::uint64_t total = 1;
  for (unsigned k = 0; k + 1 < max_arity; ++k) {
    total *= b;
    if (total > (1ULL << 22)) throw PreconditionError("tree transfer too large for this arity");
  }

  // hl[k][code]: H lambda_k on the tuple with base-b digits `code`.
  std::vector<std::vector<SuperOp>> hl(max_arity);
  std::vector<std::uint64_t> power(max_arity + 1, 1);
  for (unsigned k = 1; k <= max_arity; ++k) power[k] = power[k - 1] * b;
  for (std::size_t i = 0; i < b; ++i) hl[1].push_back(con.iota(i));
  std::vector<std::vector<unsigned>> parity_sum(max_arity);
  for (std::size_t i = 0; i < b; ++i) parity_sum[1].push_back(con.parity(i));

  for (unsigned k = 2; k <= max_arity; ++k) {
    const unsigned max_deg = max_arity - k;
    const bool keep = k < max_arity;
    if (keep) {
      hl[k].resize(power[k], SuperOp(w.ctx()));
      parity_sum[k].resize(power[k]);
    }
    for (std::uint64_t code = 0; code < power[k]; ++code) {
      SuperOp lam(w.ctx());
      for (unsigned i = 1; i < k; ++i) {
        const std::uint64_t pre = code / power[k - i];
        const std::uint64_t suf = code % power[k - i];
        const SuperOp& x = hl[i][pre];
        const SuperOp& y = hl[k - i][suf];
        if (x.is_zero() || y.is_zero()) continue;
        // parity of H lambda_i = sum |a| + i - 1
        const unsigned px = parity_sum[i][pre] + i - 1;
        SuperOp prod = multiply(x, y, max_deg);
        if (odd(px)) prod = -prod;
        lam += prod;
      }
      if (keep) {
        parity_sum[k][code] = parity_sum[1][code % b] + parity_sum[k - 1][code / b];
      }
      if (lam.is_zero()) continue;
      std::vector<Scalar> q = con.pi(lam);
      bool nonzero = false;
      for (const auto& s : q) nonzero = nonzero || !s.is_zero();
      if (nonzero) {
        std::vector<std::size_t> args = decode(code, k, b);
        if (report_sign(out.parity, args)) {
          for (auto& s : q) s = -s;
        }
        out.products.emplace(std::move(args), std::move(q));
      }
      if (keep) hl[k][code] = con.h(lam);
    }
  }
  return out;
}

StasheffReport check_stasheff(const AInfStructure& m, unsigned up_to) {
  StasheffReport rep;
  rep.checked_up_to = up_to;
  if (up_to > m.max_arity + 1) throw PreconditionError("Stasheff check beyond the computed arity");
  const std::size_t b = m.basis.size();
  // bar-form products keyed by arity and tuple code
  std::vector<std::unordered_map<std::uint64_t, std::vector<Scalar>>> q(m.max_arity + 1);
  for (const auto& [args, v] : m.products) {
    std::uint64_t code = 0;
    for (auto a : args) code = code * b + a;
    std::vector<Scalar> val = v;
    if (report_sign(m.parity, args)) {
      for (auto& s : val) s = -s;
    }
    q[args.size()].emplace(code, std::move(val));
  }
  auto lookup = [&](const std::size_t* t, std::size_t len) -> const std::vector<Scalar>* {
    if (len < 2 || len >= q.size()) return nullptr;
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < len; ++i) code = code * b + t[i];
    auto it = q[len].find(code);
    return it == q[len].end() ? nullptr : &it->second;
  };
  const Scalar zero = Scalar::zero(m.field);
  for (unsigned n = 3; n <= up_to; ++n) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < n; ++i) count *= b;
    std::vector<std::size_t> t(n);
    for (std::uint64_t code = 0; code < count; ++code) {
      t = decode(code, n, b);
      std::vector<Scalar> tot(b, zero);
      bool touched = false;
      unsigned prefix_sign = 0;
      for (std::size_t r = 0; r < n; ++r) {
        if (r > 0) prefix_sign += m.parity[t[r - 1]] + 1;
        for (std::size_t s = 2; s + r <= n; ++s) {
          const std::vector<Scalar>* inner = lookup(t.data() + r, s);
          if (!inner) continue;
          const std::size_t outer_len = n - s + 1;
          if (outer_len < 2) continue;
          // outer tuple: t[0..r) , T , t[r+s..n)
          std::vector<std::size_t> o;
          o.reserve(outer_len);
          for (std::size_t i = 0; i < r; ++i) o.push_back(t[i]);
          o.push_back(0);
          for (std::size_t i = r + s; i < n; ++i) o.push_back(t[i]);
          for (std::size_t tt = 0; tt < b; ++tt) {
            if ((*inner)[tt].is_zero()) continue;
            o[r] = tt;
            const std::vector<Scalar>* outer = lookup(o.data(), outer_len);
            if (!outer) continue;
            Scalar f = (*inner)[tt];
            if (odd(prefix_sign)) f = -f;
            for (std::size_t u = 0; u < b; ++u) {
              if (!(*outer)[u].is_zero()) {
                tot[u] += f * (*outer)[u];
                touched = true;
              }
            }
          }
        }
      }
      if (!touched) continue;
      for (const auto& s : tot) {
        if (!s.is_zero()) {
          ++rep.failures;
          break;
        }
      }
    }
  }
  return rep;
}

std::vector<Scalar> clifford_product(const std::vector<Scalar>& a, std::uint32_t j, std::uint32_t k,
                                     const std::vector<std::uint32_t>& basis) {
  const FieldSpec f = a.empty() ? FieldSpec() : a[0].field();
  std::vector<Scalar> out(basis.size(), Scalar::zero(f));
  Scalar c = Scalar(static_cast<long>(exterior_sign(j, k)), f);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if ((j & k) >> i & 1U) c *= -a[i];
  }
  const std::uint32_t target = j ^ k;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i] == target) out[i] = c;
  }
  return out;
}

bool clifford_check(const Series& w, unsigned max_arity) {
  const RingCtx& ctx = w.ctx();
  if (ctx.field().characteristic() == 2) throw PreconditionError("Clifford check needs characteristic != 2");
  const std::size_t n = ctx.n_vars();
  std::vector<Scalar> a(n, Scalar::zero(ctx.field()));
  for (const auto& [e, c] : w.terms()) {
    bool diagonal = false;
    for (std::size_t i = 0; i < n; ++i) diagonal = diagonal || e[i] == 2;
    if (e.degree() != 2 || !diagonal) {
      throw PreconditionError("Clifford check needs a diagonal quadratic potential");
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (e[i] == 2) a[i] = c;
    }
  }
  AInfStructure m = transfer_minimal_model(w, max_arity);
  const std::vector<std::uint32_t> basis = exterior_basis(n);
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (m.value({j, k}) != clifford_product(a, basis[j], basis[k], basis)) return false;
    }
  }
  for (const auto& [args, v] : m.products) {
    if (args.size() >= 3) return false;
  }
  return true;
}

}  // namespace mfcat
