#ifndef MFCAT_MATRIX_HPP
#define MFCAT_MATRIX_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "mfcat/linalg.hpp"
#include "mfcat/ring.hpp"

namespace mfcat {

// Dense matrix with entries in a RingCtx.
class RMatrix {
 public:
  RMatrix() = default;
  RMatrix(RingCtx ctx, std::size_t rows, std::size_t cols);

  static RMatrix identity(const RingCtx& ctx, std::size_t n);
  static RMatrix scalar(const Series& s, std::size_t n);  // s * id
  // Rows of series; all must share one context.
  static RMatrix from_rows(const RingCtx& ctx, const std::vector<std::vector<Series>>& rows);
  // [[a, b], [c, d]]; blocks must have compatible shapes.
  static RMatrix block(const RMatrix& a, const RMatrix& b, const RMatrix& c, const RMatrix& d);
  static RMatrix block_diagonal(const RMatrix& a, const RMatrix& b);

  const RingCtx& ctx() const noexcept { return ctx_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Series& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Series& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  bool is_zero() const;
  // Largest total degree among the entries.
  unsigned max_degree() const;
  RMatrix transpose() const;
  // Constant terms of all entries.
  KMatrix reduce_mod_m() const;
  // Every entry passed through `embed` into `target`.
  RMatrix embedded(const RingCtx& target, const std::vector<std::size_t>& var_map) const;
  RMatrix set_variables_to_zero(const std::vector<std::size_t>& vars) const;

  RMatrix operator-() const;
  friend RMatrix operator+(const RMatrix& a, const RMatrix& b);
  friend RMatrix operator-(const RMatrix& a, const RMatrix& b);
  friend RMatrix operator*(const RMatrix& a, const RMatrix& b);
  friend RMatrix operator*(const Series& s, const RMatrix& a);
  friend bool operator==(const RMatrix& a, const RMatrix& b);

  std::string to_string() const;

 private:
  RingCtx ctx_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Series> data_;
};

// Kronecker product a (x) b; the row index of a is the outer one.
RMatrix kron(const RMatrix& a, const RMatrix& b);

// Classical adjugate; adj(A) * A = A * adj(A) = det(A) * id.
RMatrix adjugate(const RMatrix& a);
Series determinant(const RMatrix& a);

}  // namespace mfcat

#endif  // MFCAT_MATRIX_HPP
