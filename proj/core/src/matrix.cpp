#include "mfcat/matrix.hpp"

#include <algorithm>

#include "mfcat/errors.hpp"

namespace mfcat {

RMatrix::RMatrix(RingCtx ctx, std::size_t rows, std::size_t cols)
    : ctx_(std::move(ctx)), rows_(rows), cols_(cols), data_(rows * cols, Series(ctx_)) {}

RMatrix RMatrix::identity(const RingCtx& ctx, std::size_t n) {
  RMatrix m(ctx, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Series::constant(ctx, 1);
  return m;
}

RMatrix RMatrix::scalar(const Series& s, std::size_t n) {
  RMatrix m(s.ctx(), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = s;
  return m;
}

RMatrix RMatrix::from_rows(const RingCtx& ctx, const std::vector<std::vector<Series>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows[0].size() : 0;
  RMatrix m(ctx, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw PreconditionError("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) {
      if (!(rows[i][j].ctx() == ctx)) throw ContextMismatch("matrix entry from another ring");
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

RMatrix RMatrix::block(const RMatrix& a, const RMatrix& b, const RMatrix& c, const RMatrix& d) {
  if (a.rows_ != b.rows_ || c.rows_ != d.rows_ || a.cols_ != c.cols_ || b.cols_ != d.cols_) {
    throw PreconditionError("block matrix: incompatible shapes");
  }
  RMatrix m(a.ctx_, a.rows_ + c.rows_, a.cols_ + b.cols_);
  auto place = [&](const RMatrix& blk, std::size_t r0, std::size_t c0) {
    if (!(blk.ctx_ == a.ctx_)) throw ContextMismatch("block matrix: mixed rings");
    for (std::size_t i = 0; i < blk.rows_; ++i) {
      for (std::size_t j = 0; j < blk.cols_; ++j) m(r0 + i, c0 + j) = blk(i, j);
    }
  };
  place(a, 0, 0);
  place(b, 0, a.cols_);
  place(c, a.rows_, 0);
  place(d, a.rows_, a.cols_);
  return m;
}

RMatrix RMatrix::block_diagonal(const RMatrix& a, const RMatrix& b) {
  return block(a, RMatrix(a.ctx_, a.rows_, b.cols_), RMatrix(a.ctx_, b.rows_, a.cols_), b);
}

bool RMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Series& s) { return s.is_zero(); });
}

unsigned RMatrix::max_degree() const {
  unsigned d = 0;
  for (const auto& s : data_) d = std::max(d, s.degree());
  return d;
}

RMatrix RMatrix::transpose() const {
  RMatrix t(ctx_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

KMatrix RMatrix::reduce_mod_m() const {
  KMatrix k(rows_, cols_, ctx_.field());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) k(i, j) = residue_map((*this)(i, j));
  }
  return k;
}

RMatrix RMatrix::embedded(const RingCtx& target, const std::vector<std::size_t>& var_map) const {
  RMatrix m(target, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = embed(data_[i], target, var_map);
  return m;
}

RMatrix RMatrix::set_variables_to_zero(const std::vector<std::size_t>& vars) const {
  RMatrix m(ctx_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) {
    m.data_[i] = mfcat::set_variables_to_zero(data_[i], vars);
  }
  return m;
}

RMatrix RMatrix::operator-() const {
  RMatrix m(ctx_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = -data_[i];
  return m;
}

namespace {

void check_same_shape(const RMatrix& a, const RMatrix& b) {
  if (!(a.ctx() == b.ctx())) throw ContextMismatch("matrices over different rings");
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw PreconditionError("matrix sum: shape mismatch");
  }
}

}  // namespace

RMatrix operator+(const RMatrix& a, const RMatrix& b) {
  check_same_shape(a, b);
  RMatrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] += b.data_[i];
  return m;
}

RMatrix operator-(const RMatrix& a, const RMatrix& b) {
  check_same_shape(a, b);
  RMatrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] -= b.data_[i];
  return m;
}

RMatrix operator*(const RMatrix& a, const RMatrix& b) {
  if (!(a.ctx_ == b.ctx_)) throw ContextMismatch("matrices over different rings");
  if (a.cols_ != b.rows_) throw PreconditionError("matrix product: shape mismatch");
  RMatrix m(a.ctx_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Series& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) m(i, j) += x * b(k, j);
      }
    }
  }
  return m;
}

RMatrix operator*(const Series& s, const RMatrix& a) {
  if (!(s.ctx() == a.ctx_)) throw ContextMismatch("scalar from another ring");
  RMatrix m(a.ctx_, a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) m.data_[i] = s * a.data_[i];
  return m;
}

bool operator==(const RMatrix& a, const RMatrix& b) {
  return a.ctx_ == b.ctx_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string RMatrix::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    s += i ? ", [" : "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) s += ", ";
      s += (*this)(i, j).to_string();
    }
    s += "]";
  }
  return s + "]";
}

RMatrix kron(const RMatrix& a, const RMatrix& b) {
  if (!(a.ctx() == b.ctx())) throw ContextMismatch("kron: matrices over different rings");
  RMatrix m(a.ctx(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.rows(); ++j) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          if (!b(j, l).is_zero()) m(i * b.rows() + j, k * b.cols() + l) = a(i, k) * b(j, l);
        }
      }
    }
  }
  return m;
}

namespace {

RMatrix minor_matrix(const RMatrix& a, std::size_t row, std::size_t col) {
  RMatrix m(a.ctx(), a.rows() - 1, a.cols() - 1);
  for (std::size_t i = 0, r = 0; i < a.rows(); ++i) {
    if (i == row) continue;
    for (std::size_t j = 0, c = 0; j < a.cols(); ++j) {
      if (j == col) continue;
      m(r, c++) = a(i, j);
    }
    ++r;
  }
  return m;
}

}  // namespace

Series determinant(const RMatrix& a) {
  if (a.rows() != a.cols()) throw PreconditionError("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return Series::constant(a.ctx(), 1);
  if (n == 1) return a(0, 0);
  Series det(a.ctx());
  for (std::size_t j = 0; j < n; ++j) {
    if (a(0, j).is_zero()) continue;
    Series term = a(0, j) * determinant(minor_matrix(a, 0, j));
    if (j % 2) {
      det -= term;
    } else {
      det += term;
    }
  }
  return det;
}

RMatrix adjugate(const RMatrix& a) {
  if (a.rows() != a.cols()) throw PreconditionError("adjugate of a non-square matrix");
  const std::size_t n = a.rows();
  RMatrix adj(a.ctx(), n, n);
  if (n == 1) {
    adj(0, 0) = Series::constant(a.ctx(), 1);
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Series c = determinant(minor_matrix(a, j, i));
      adj(i, j) = (i + j) % 2 ? -c : c;
    }
  }
  return adj;
}

}  // namespace mfcat
