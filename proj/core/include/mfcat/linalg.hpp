#ifndef MFCAT_LINALG_HPP
#define MFCAT_LINALG_HPP

#include <cstddef>
#include <memory>
#include <utility>
#include <vector>

#include "mfcat/scalar.hpp"

namespace mfcat {

// Sparse vector over k: (index, value) pairs sorted by index, no zeros.
using SparseVector = std::vector<std::pair<std::size_t, Scalar>>;

// Incrementally maintained echelon basis of a subspace of k^N. The pivot of
// a basis vector is its smallest index, so the pivot set is the set of
// leading positions of the subspace and does not depend on insertion order.
class RowEchelon {
 public:
  explicit RowEchelon(FieldSpec field = {});
  RowEchelon(const RowEchelon&) = delete;
  RowEchelon& operator=(const RowEchelon&) = delete;
  RowEchelon(RowEchelon&&) noexcept;
  RowEchelon& operator=(RowEchelon&&) noexcept;
  ~RowEchelon();

  // Adds v to the spanning set; returns true iff the rank grew.
  bool insert(const SparseVector& v);
  bool contains(const SparseVector& v) const;
  std::size_t rank() const noexcept;
  // Ascending.
  std::vector<std::size_t> pivots() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Dense matrix over k, row-major.
class KMatrix {
 public:
  KMatrix() = default;
  KMatrix(std::size_t rows, std::size_t cols, FieldSpec field);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const FieldSpec& field() const noexcept { return field_; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  bool is_zero() const;
  std::size_t rank() const;
  SparseVector column(std::size_t j) const;

  friend KMatrix operator*(const KMatrix& a, const KMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  FieldSpec field_;
  std::vector<Scalar> data_;
};

}  // namespace mfcat

#endif  // MFCAT_LINALG_HPP
