#include "mfcat/linalg.hpp"

#include <map>
#include <variant>

#include "mfcat/errors.hpp"

namespace mfcat {

namespace {

struct RationalOps {
  using Value = mpq_class;
  explicit RationalOps(const FieldSpec&) {}
  Value from(const Scalar& s) const { return s.to_rational(); }
  bool is_zero(const Value& v) const { return sgn(v) == 0; }
  Value inverse(const Value& v) const { return 1 / v; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  // a - c*b
  Value sub_mul(const Value& a, const Value& c, const Value& b) const { return a - c * b; }
  Value neg(const Value& v) const { return -v; }
};

struct PrimeOps {
  using Value = std::uint64_t;
  explicit PrimeOps(const FieldSpec& f) : p(f.modulus()) {}
  Value from(const Scalar& s) const { return s.residue(); }
  bool is_zero(Value v) const { return v == 0; }
  Value inverse(Value v) const {
    Value result = 1, base = v, e = p - 2;
    while (e) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return result;
  }
  Value mul(Value a, Value b) const { return a * b % p; }
  Value sub_mul(Value a, Value c, Value b) const { return (a + p - c * b % p) % p; }
  Value neg(Value v) const { return v ? p - v : 0; }
  std::uint64_t p;
};

template <class Ops>
class Echelon {
 public:
  using Value = typename Ops::Value;
  using Row = std::vector<std::pair<std::size_t, Value>>;

  explicit Echelon(const FieldSpec& f) : ops_(f) {}

  Row convert(const SparseVector& v) const {
    Row r;
    r.reserve(v.size());
    for (const auto& [i, s] : v) {
      Value x = ops_.from(s);
      if (!ops_.is_zero(x)) r.emplace_back(i, std::move(x));
    }
    return r;
  }

  // Reduces r against the basis until its leading index is not a pivot.
  void reduce(Row& r) const {
    Row tmp;
    std::size_t start = 0;
    while (start < r.size()) {
      auto it = rows_.find(r[start].first);
      if (it == rows_.end()) break;  // new leading position
      const Value c = r[start].second;
      const Row& p = it->second;
      tmp.clear();
      tmp.reserve(r.size() + p.size());
      std::size_t a = start + 1, b = 1;
      while (a < r.size() || b < p.size()) {
        if (b >= p.size() || (a < r.size() && r[a].first < p[b].first)) {
          tmp.push_back(std::move(r[a++]));
        } else if (a >= r.size() || p[b].first < r[a].first) {
          tmp.emplace_back(p[b].first, ops_.sub_mul(Value(0), c, p[b].second));
          ++b;
        } else {
          Value v = ops_.sub_mul(r[a].second, c, p[b].second);
          if (!ops_.is_zero(v)) tmp.emplace_back(r[a].first, std::move(v));
          ++a;
          ++b;
        }
      }
      r.swap(tmp);
      start = 0;
    }
  }

  bool insert(const SparseVector& v) {
    Row r = convert(v);
    reduce(r);
    if (r.empty()) return false;
    Value inv = ops_.inverse(r.front().second);
    for (auto& e : r) e.second = ops_.mul(e.second, inv);
    std::size_t lead = r.front().first;
    rows_.emplace(lead, std::move(r));
    return true;
  }

  bool contains(const SparseVector& v) const {
    Row r = convert(v);
    reduce(r);
    return r.empty();
  }

  std::size_t rank() const { return rows_.size(); }

  std::vector<std::size_t> pivots() const {
    std::vector<std::size_t> out;
    out.reserve(rows_.size());
    for (const auto& [k, _] : rows_) out.push_back(k);
    return out;
  }

 private:
  Ops ops_;
  std::map<std::size_t, Row> rows_;
};

}  // namespace

struct RowEchelon::Impl {
  std::variant<Echelon<RationalOps>, Echelon<PrimeOps>> e;
  explicit Impl(const FieldSpec& f)
      : e(f.is_rational() ? decltype(e)(std::in_place_index<0>, f)
                          : decltype(e)(std::in_place_index<1>, f)) {}
};

RowEchelon::RowEchelon(FieldSpec field) : impl_(std::make_unique<Impl>(field)) {}
RowEchelon::RowEchelon(RowEchelon&&) noexcept = default;
RowEchelon& RowEchelon::operator=(RowEchelon&&) noexcept = default;
RowEchelon::~RowEchelon() = default;

bool RowEchelon::insert(const SparseVector& v) {
  return std::visit([&](auto& e) { return e.insert(v); }, impl_->e);
}

bool RowEchelon::contains(const SparseVector& v) const {
  return std::visit([&](const auto& e) { return e.contains(v); }, impl_->e);
}

std::size_t RowEchelon::rank() const noexcept {
  return std::visit([](const auto& e) { return e.rank(); }, impl_->e);
}

std::vector<std::size_t> RowEchelon::pivots() const {
  return std::visit([](const auto& e) { return e.pivots(); }, impl_->e);
}

KMatrix::KMatrix(std::size_t rows, std::size_t cols, FieldSpec field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, Scalar::zero(field)) {}

bool KMatrix::is_zero() const {
  for (const auto& s : data_) {
    if (!s.is_zero()) return false;
  }
  return true;
}

SparseVector KMatrix::column(std::size_t j) const {
  SparseVector v;
  for (std::size_t i = 0; i < rows_; ++i) {
    const Scalar& s = (*this)(i, j);
    if (!s.is_zero()) v.emplace_back(i, s);
  }
  return v;
}

std::size_t KMatrix::rank() const {
  RowEchelon e(field_);
  for (std::size_t j = 0; j < cols_; ++j) e.insert(column(j));
  return e.rank();
}

KMatrix operator*(const KMatrix& a, const KMatrix& b) {
  if (a.cols_ != b.rows_) throw PreconditionError("matrix product: shape mismatch");
  if (!(a.field_ == b.field_)) throw ContextMismatch("matrix product across fields");
  KMatrix r(a.rows_, b.cols_, a.field_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += x * b(k, j);
    }
  }
  return r;
}

}  // namespace mfcat
