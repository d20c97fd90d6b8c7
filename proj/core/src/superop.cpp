#include "mfcat/superop.hpp"

#include <bit>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "mfcat/errors.hpp"
#include "mfcat/stabilize.hpp"

namespace mfcat {

namespace {

struct Ordered {
  std::uint32_t theta;
  std::uint32_t dtheta;
  int sign;
};

std::vector<Ordered> normal_order_uncached(std::uint32_t t, std::uint32_t s);

// d_T theta_S rewritten as sum of sign * theta_A d_B.
const std::vector<Ordered>& normal_order(std::uint32_t t, std::uint32_t s) {
  static std::mutex mutex;
  static std::unordered_map<std::uint64_t, std::vector<Ordered>> cache;
  const std::uint64_t key = (std::uint64_t{t} << 32) | s;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  std::vector<Ordered> value = normal_order_uncached(t, s);
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(key, std::move(value)).first->second;
}

std::vector<Ordered> normal_order_uncached(std::uint32_t t, std::uint32_t s) {
  if (t == 0) return {{s, 0, 1}};
  if ((t & s) == 0) {
    int sign = (std::popcount(t) * std::popcount(s)) % 2 ? -1 : 1;
    return {{s, t, sign}};
  }
  // d_T = d_{T'} d_k with k the largest index of T.
  const int k = 31 - std::countl_zero(t);
  const std::uint32_t kbit = 1U << k;
  const std::uint32_t rest = t & ~kbit;
  // d_k theta_S = (-1)^{pos} theta_{S\k} [k in S] + (-1)^{|S|} theta_S d_k
  std::vector<Ordered> first;
  if (s & kbit) first.push_back({s & ~kbit, 0, std::popcount(s & (kbit - 1)) % 2 ? -1 : 1});
  first.push_back({s, kbit, std::popcount(s) % 2 ? -1 : 1});
  std::unordered_map<std::uint64_t, int> acc;
  std::vector<std::uint64_t> order;
  for (const auto& [a, b, sg] : first) {
    for (const auto& [a2, b2, sg2] : normal_order(rest, a)) {
      if (b2 & b) continue;
      int total = sg * sg2 * exterior_sign(b2, b);
      std::uint64_t key = (std::uint64_t{a2} << 32) | (b2 | b);
      auto [it, inserted] = acc.emplace(key, total);
      if (inserted) {
        order.push_back(key);
      } else {
        it->second += total;
      }
    }
  }
  std::vector<Ordered> out;
  for (auto key : order) {
    int c = acc[key];
    if (c != 0) out.push_back({static_cast<std::uint32_t>(key >> 32), static_cast<std::uint32_t>(key), c});
  }
  return out;
}

}  // namespace

unsigned SuperMonomial::parity() const noexcept {
  return static_cast<unsigned>(std::popcount(theta) + std::popcount(dtheta)) % 2;
}

SuperOp::SuperOp(RingCtx ctx) : ctx_(std::move(ctx)) {}

SuperOp SuperOp::from_series(const Series& s) {
  SuperOp r(s.ctx());
  for (const auto& [e, c] : s.terms()) r.add_term({e, 0, 0}, c);
  return r;
}

SuperOp SuperOp::theta(const RingCtx& ctx, std::size_t i) {
  if (i >= ctx.n_vars()) throw PreconditionError("theta index out of range");
  return monomial(ctx, {Exponent(), 1U << i, 0}, Scalar::one(ctx.field()));
}

SuperOp SuperOp::dtheta(const RingCtx& ctx, std::size_t i) {
  if (i >= ctx.n_vars()) throw PreconditionError("d/dtheta index out of range");
  return monomial(ctx, {Exponent(), 0, 1U << i}, Scalar::one(ctx.field()));
}

SuperOp SuperOp::monomial(const RingCtx& ctx, const SuperMonomial& m, const Scalar& c) {
  SuperOp r(ctx);
  r.add_term(m, c);
  return r;
}

Scalar SuperOp::coefficient(const SuperMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar::zero(ctx_.field()) : it->second;
}

std::optional<unsigned> SuperOp::parity() const {
  if (terms_.empty()) return std::nullopt;
  unsigned p = terms_.begin()->first.parity();
  for (const auto& [m, c] : terms_) {
    if (m.parity() != p) throw PreconditionError("element is not homogeneous");
  }
  return p;
}

unsigned SuperOp::x_degree() const noexcept {
  return terms_.empty() ? 0 : terms_.rbegin()->first.alpha.degree();
}

void SuperOp::add_term(const SuperMonomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  if (ctx_.truncated() && m.alpha.degree() > ctx_.truncation()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void SuperOp::check_ctx(const SuperOp& o) const {
  if (!(ctx_ == o.ctx_)) throw ContextMismatch("operators over different rings");
}

SuperOp& SuperOp::operator+=(const SuperOp& o) {
  check_ctx(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SuperOp& SuperOp::operator-=(const SuperOp& o) {
  check_ctx(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

SuperOp SuperOp::operator-() const {
  SuperOp r(ctx_);
  for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, -c);
  return r;
}

SuperOp multiply(const SuperOp& a, const SuperOp& b, unsigned max_x_degree) {
  if (!(a.ctx() == b.ctx())) throw ContextMismatch("operators over different rings");
  SuperOp r(a.ctx());
  for (const auto& [ma, ca] : a.terms()) {
    if (ma.alpha.degree() > max_x_degree) break;
    for (const auto& [mb, cb] : b.terms()) {
      if (ma.alpha.degree() + mb.alpha.degree() > max_x_degree) break;
      const Exponent alpha = ma.alpha + mb.alpha;
      for (const auto& [ta, tb, sg] : normal_order(ma.dtheta, mb.theta)) {
        if ((ma.theta & ta) || (tb & mb.dtheta)) continue;
        int sign = sg * exterior_sign(ma.theta, ta) * exterior_sign(tb, mb.dtheta);
        Scalar c = ca * cb;
        if (sign == -1) {
          c = -c;
        } else if (sign != 1) {
          c *= Scalar(static_cast<long>(sign), c.field());
        }
        r.add_term({alpha, ma.theta | ta, tb | mb.dtheta}, c);
      }
    }
  }
  return r;
}

SuperOp operator*(const SuperOp& a, const SuperOp& b) { return multiply(a, b); }

SuperOp operator*(const Scalar& c, const SuperOp& a) {
  SuperOp r(a.ctx());
  for (const auto& [m, v] : a.terms()) r.add_term(m, c * v);
  return r;
}

bool operator==(const SuperOp& a, const SuperOp& b) { return a.ctx_ == b.ctx_ && a.terms_ == b.terms_; }

SuperOp graded_commutator(const SuperOp& a, const SuperOp& b) {
  auto pa = a.parity(), pb = b.parity();
  if (!pa || !pb) return SuperOp(a.ctx());
  SuperOp r = a * b;
  SuperOp ba = b * a;
  if ((*pa) * (*pb) % 2) {
    r += ba;
  } else {
    r -= ba;
  }
  return r;
}

std::string SuperOp::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Series coeff = Series::monomial(ctx_, m.alpha, c);
    std::string cs = coeff.to_string();
    std::string sym;
    for (std::size_t i = 0; i < ctx_.n_vars(); ++i) {
      if (m.theta >> i & 1U) sym += "*t" + std::to_string(i + 1);
    }
    for (std::size_t i = 0; i < ctx_.n_vars(); ++i) {
      if (m.dtheta >> i & 1U) sym += "*dt" + std::to_string(i + 1);
    }
    if (!first) out += " + ";
    first = false;
    out += (sym.empty() || m.alpha.degree() > 0 || !c.is_one()) ? "(" + cs + ")" + sym : sym.substr(1);
  }
  return out;
}

}  // namespace mfcat
