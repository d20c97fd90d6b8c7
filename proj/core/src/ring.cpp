#include "mfcat/ring.hpp"

#include <algorithm>
#include <sstream>

#include "mfcat/errors.hpp"

namespace mfcat {

Exponent Exponent::unit(std::size_t var) {
  Exponent e;
  e.set(var, 1);
  return e;
}

void Exponent::set(std::size_t i, unsigned value) {
  if (i >= kMaxVars) throw PreconditionError("variable index out of range");
  if (value > kMaxExponent) throw PreconditionError("exponent exceeds 255");
  degree_ = static_cast<std::uint16_t>(degree_ - e_[i] + value);
  e_[i] = static_cast<std::uint8_t>(value);
}

Exponent operator+(const Exponent& a, const Exponent& b) {
  Exponent r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    unsigned v = unsigned(a.e_[i]) + b.e_[i];
    if (v > kMaxExponent) throw PreconditionError("exponent exceeds 255");
    r.e_[i] = static_cast<std::uint8_t>(v);
  }
  r.degree_ = static_cast<std::uint16_t>(a.degree_ + b.degree_);
  return r;
}

// ---------------------------------------------------------------- RingCtx

RingCtx::RingCtx() : RingCtx(std::vector<std::string>{"x"}) {}

RingCtx::RingCtx(std::vector<std::string> names, FieldSpec field, unsigned truncation) {
  if (names.empty()) throw PreconditionError("a ring needs at least one variable");
  if (names.size() > kMaxVars) {
    throw PreconditionError("at most " + std::to_string(kMaxVars) + " variables are supported");
  }
  if (truncation == 0) throw PreconditionError("truncation must be at least 1");
  if (truncation != kNoTruncation && truncation > kMaxExponent) {
    throw PreconditionError("finite truncation must not exceed 255");
  }
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i].empty()) throw PreconditionError("empty variable name");
    for (std::size_t j = 0; j < i; ++j) {
      if (names[i] == names[j]) throw PreconditionError("duplicate variable name " + names[i]);
    }
  }
  impl_ = std::make_shared<const Impl>(Impl{std::move(names), field, truncation});
}

RingCtx RingCtx::standard(std::size_t n, FieldSpec field, unsigned truncation) {
  std::vector<std::string> names;
  if (n <= 3) {
    static const char* const kNames[] = {"x", "y", "z"};
    for (std::size_t i = 0; i < n; ++i) names.emplace_back(kNames[i]);
  } else {
    for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  }
  return RingCtx(std::move(names), field, truncation);
}

std::optional<std::size_t> RingCtx::index_of(const std::string& name) const {
  const auto& names = impl_->names;
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names.begin());
}

RingCtx RingCtx::with_truncation(unsigned truncation) const {
  return RingCtx(impl_->names, impl_->field, truncation);
}

RingCtx RingCtx::concat(const RingCtx& a, const RingCtx& b) {
  if (!(a.field() == b.field())) throw ContextMismatch("cannot combine rings over different fields");
  std::vector<std::string> names = a.names();
  for (std::string name : b.names()) {
    while (std::find(names.begin(), names.end(), name) != names.end()) name += "'";
    names.push_back(name);
  }
  return RingCtx(std::move(names), a.field(), std::min(a.truncation(), b.truncation()));
}

RingCtx RingCtx::doubled() const { return concat(*this, *this); }

RingCtx RingCtx::parse(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  std::string part;
  while (std::getline(ss, part, ';')) parts.push_back(part);
  if (parts.empty()) throw ParseError("empty ring specification");
  auto trim = [](std::string s) {
    auto f = s.find_first_not_of(" \t");
    auto l = s.find_last_not_of(" \t");
    return f == std::string::npos ? std::string() : s.substr(f, l - f + 1);
  };
  std::vector<std::string> names;
  std::stringstream vs(parts[0]);
  std::string name;
  while (std::getline(vs, name, ',')) {
    name = trim(name);
    if (name.empty()) throw ParseError("empty variable name in '" + spec + "'");
    names.push_back(name);
  }
  FieldSpec field;
  unsigned truncation = kNoTruncation;
  for (std::size_t i = 1; i < parts.size(); ++i) {
    std::string p = trim(parts[i]);
    if (p.rfind("trunc=", 0) == 0) {
      std::string value = p.substr(6);
      if (value == "inf" || value == "none") continue;
      try {
        std::size_t used = 0;
        unsigned long t = std::stoul(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        truncation = static_cast<unsigned>(t);
      } catch (const std::exception&) {
        throw ParseError("bad truncation '" + value + "'");
      }
    } else if (!p.empty()) {
      field = FieldSpec::parse(p);
    }
  }
  try {
    return RingCtx(std::move(names), field, truncation);
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

std::string RingCtx::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < n_vars(); ++i) {
    if (i) s += ',';
    s += name(i);
  }
  s += ';' + field().to_string();
  if (truncated()) s += ";trunc=" + std::to_string(truncation());
  return s;
}

bool operator==(const RingCtx& a, const RingCtx& b) {
  if (a.impl_ == b.impl_) return true;
  return a.impl_->names == b.impl_->names && a.impl_->field == b.impl_->field &&
         a.impl_->truncation == b.impl_->truncation;
}

// ---------------------------------------------------------------- Series

Series Series::constant(const RingCtx& ctx, const Scalar& c) {
  Series s(ctx);
  s.add_term(Exponent(), c);
  return s;
}

Series Series::constant(const RingCtx& ctx, long c) {
  return constant(ctx, Scalar(c, ctx.field()));
}

Series Series::variable(const RingCtx& ctx, std::size_t i) {
  if (i >= ctx.n_vars()) throw PreconditionError("variable index out of range");
  return monomial(ctx, Exponent::unit(i), Scalar::one(ctx.field()));
}

Series Series::monomial(const RingCtx& ctx, const Exponent& e, const Scalar& c) {
  Series s(ctx);
  s.add_term(e, c);
  return s;
}

Scalar Series::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar::zero(ctx_.field()) : it->second;
}

unsigned Series::degree() const noexcept {
  return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
}

std::optional<unsigned> Series::order() const noexcept {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first.degree();
}

bool Series::in_maximal_ideal() const { return residue_map(*this).is_zero(); }

void Series::add_term(const Exponent& e, const Scalar& c) {
  if (c.is_zero()) return;
  if (!(c.field() == ctx_.field())) throw ContextMismatch("coefficient field differs from ring field");
  if (ctx_.truncated() && e.degree() > ctx_.truncation()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Series::check_ctx(const Series& other) const {
  if (!(ctx_ == other.ctx_)) {
    throw ContextMismatch("arithmetic between rings " + ctx_.to_string() + " and " +
                          other.ctx_.to_string());
  }
}

Series& Series::operator+=(const Series& other) {
  check_ctx(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Series& Series::operator-=(const Series& other) {
  check_ctx(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Series Series::operator-() const {
  Series r(ctx_);
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, -c);
  return r;
}

Series operator*(const Series& a, const Series& b) {
  a.check_ctx(b);
  Series r(a.ctx_);
  const unsigned cap = a.ctx_.truncation();
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      // terms iterate by ascending degree, so the rest of b overflows too
      if (ea.degree() + eb.degree() > cap) break;
      r.add_term(ea + eb, ca * cb);
    }
  }
  return r;
}

Series& Series::operator*=(const Series& other) { return *this = *this * other; }

Series operator*(const Scalar& c, const Series& a) { return scalar_mul(c, a); }

bool operator==(const Series& a, const Series& b) {
  return a.ctx_ == b.ctx_ && a.terms_ == b.terms_;
}

Series Series::pow(unsigned k) const {
  Series result = constant(ctx_, 1);
  Series base = *this;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k) base *= base;
  }
  return result;
}

Series Series::truncated_at(unsigned n) const {
  Series r(ctx_);
  for (const auto& [e, c] : terms_) {
    if (e.degree() > n) break;
    r.terms_.emplace_hint(r.terms_.end(), e, c);
  }
  return r;
}

Series Series::recast(const RingCtx& ctx) const {
  if (ctx.names() != ctx_.names() || !(ctx.field() == ctx_.field())) {
    throw ContextMismatch("recast requires identical variables and field");
  }
  Series r(ctx);
  for (const auto& [e, c] : terms_) r.add_term(e, c);
  return r;
}

std::string Series::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string coeff = c.to_string();
    bool negative = c.field().is_rational() && coeff[0] == '-';
    if (negative) coeff.erase(0, 1);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < ctx_.n_vars(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ctx_.name(i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += coeff;
    } else if (coeff == "1") {
      out += mono;
    } else {
      out += coeff + "*" + mono;
    }
  }
  return out;
}

Series scalar_mul(const Scalar& c, const Series& a) {
  Series r(a.ctx());
  if (c.is_zero()) return r;
  for (const auto& [e, v] : a.terms()) r.add_term(e, c * v);
  return r;
}

Series partial_derivative(const Series& a, std::size_t i) {
  if (i >= a.ctx().n_vars()) throw PreconditionError("partial derivative: variable index out of range");
  Series r(a.ctx());
  for (const auto& [e, c] : a.terms()) {
    if (e[i] == 0) continue;
    Exponent f = e;
    f.set(i, e[i] - 1);
    r.add_term(f, Scalar(static_cast<long>(e[i]), a.ctx().field()) * c);
  }
  return r;
}

SplitResult split_by_variable(const Series& a, std::size_t i) {
  if (i >= a.ctx().n_vars()) throw PreconditionError("split: variable index out of range");
  SplitResult out{Series(a.ctx()), Series(a.ctx())};
  for (const auto& [e, c] : a.terms()) {
    if (e[i] == 0) {
      out.remainder.add_term(e, c);
    } else {
      Exponent f = e;
      f.set(i, e[i] - 1);
      out.quotient.add_term(f, c);
    }
  }
  return out;
}

Series set_variables_to_zero(const Series& a, const std::vector<std::size_t>& vars) {
  Series r(a.ctx());
  for (const auto& [e, c] : a.terms()) {
    bool killed = std::any_of(vars.begin(), vars.end(), [&](std::size_t v) { return e[v] != 0; });
    if (!killed) r.add_term(e, c);
  }
  return r;
}

Series embed(const Series& a, const RingCtx& target, const std::vector<std::size_t>& var_map) {
  if (var_map.size() != a.ctx().n_vars()) throw PreconditionError("embed: variable map has wrong length");
  if (!(target.field() == a.ctx().field())) throw ContextMismatch("embed: fields differ");
  Series r(target);
  for (const auto& [e, c] : a.terms()) {
    Exponent f;
    for (std::size_t i = 0; i < var_map.size(); ++i) {
      if (e[i] == 0) continue;
      if (var_map[i] >= target.n_vars()) throw PreconditionError("embed: target variable out of range");
      f.set(var_map[i], f[var_map[i]] + e[i]);
    }
    r.add_term(f, c);
  }
  return r;
}

Series embed_shifted(const Series& a, const RingCtx& target, std::size_t offset) {
  std::vector<std::size_t> map(a.ctx().n_vars());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = i + offset;
  return embed(a, target, map);
}

Scalar residue_map(const Series& a) { return a.coefficient(Exponent()); }

Series difference_quotient(const Series& w, std::size_t i) {
  const RingCtx& ctx = w.ctx();
  const std::size_t n = ctx.n_vars();
  if (i >= n) throw PreconditionError("difference quotient: variable index out of range");
  if (2 * n > kMaxVars) throw PreconditionError("difference quotient: doubled ring too large");
  RingCtx big = ctx.doubled();
  const FieldSpec& field = ctx.field();
  Series q(big);
  for (const auto& [e, c] : w.terms()) {
    const unsigned a = e[i];
    if (a == 0) continue;
    Exponent base;
    for (std::size_t j = 0; j < i; ++j) base.set(n + j, e[j]);
    for (std::size_t j = i + 1; j < n; ++j) base.set(j, e[j]);
    // (x^a - y^a)/(x - y) = sum_k x^k y^{a-1-k}
    for (unsigned k = 0; k < a; ++k) {
      Exponent f = base;
      f.set(i, k);
      f.set(n + i, a - 1 - k);
      q.add_term(f, c);
    }
  }
  // Check (x_i - y_i) q = w(y_<i, x_>=i) - w(y_<=i, x_>i).
  std::vector<std::size_t> left(n), right(n);
  for (std::size_t j = 0; j < n; ++j) {
    left[j] = j < i ? n + j : j;
    right[j] = j <= i ? n + j : j;
  }
  Series diff = Series::variable(big, i) - Series::variable(big, n + i);
  Series lhs = diff * q;
  Series rhs = embed(w, big, left) - embed(w, big, right);
  if (big.truncated()) rhs = rhs.truncated_at(big.truncation());
  if (!(lhs == rhs)) throw VerificationError("difference quotient: inexact division");
  (void)field;
  return q;
}

std::size_t monomial_count(std::size_t n_vars, unsigned max_degree) {
  // C(n + d, n)
  std::size_t r = 1;
  for (std::size_t k = 1; k <= n_vars; ++k) r = r * (max_degree + k) / k;
  return r;
}

namespace {

void enumerate_degree(std::size_t n, std::size_t var, unsigned remaining, Exponent& cur,
                      std::vector<Exponent>& out) {
  if (var + 1 == n) {
    cur.set(var, remaining);
    out.push_back(cur);
    cur.set(var, 0);
    return;
  }
  for (unsigned k = remaining + 1; k-- > 0;) {
    cur.set(var, k);
    enumerate_degree(n, var + 1, remaining - k, cur, out);
  }
  cur.set(var, 0);
}

}  // namespace

std::vector<Exponent> monomial_basis(const RingCtx& ctx, unsigned max_degree) {
  std::vector<Exponent> out;
  out.reserve(monomial_count(ctx.n_vars(), max_degree));
  Exponent cur;
  for (unsigned d = 0; d <= max_degree; ++d) enumerate_degree(ctx.n_vars(), 0, d, cur, out);
  return out;
}

PeelResult peel_variables(const Series& a, PeelOrder order) {
  const std::size_t n = a.ctx().n_vars();
  PeelResult out{std::vector<Series>(n, Series(a.ctx())), Series(a.ctx())};
  Series rest = a;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t var = order == PeelOrder::kIndexOrder ? step : n - 1 - step;
    auto [q, r] = split_by_variable(rest, var);
    out.parts[var] = std::move(q);
    rest = std::move(r);
  }
  out.remainder = std::move(rest);
  return out;
}

}  // namespace mfcat
