#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "bisplit/oracle/field.hpp"

namespace bisplit::oracle {

using Element = PrimeField::Element;

/// Dense row-major matrix over a prime field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  /// Zero rows with the given width.
  explicit Matrix(std::size_t cols) : cols_(cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Element& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Element at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<Element> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Element> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  /// Appends a row; its width must equal cols().
  void append_row(std::span<const Element> values);
  /// Appends every row of other; widths must match.
  void append_rows(const Matrix& other);
  void truncate_rows(std::size_t n);

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Element> data_;
};

/// Gaussian elimination in place. With reduced = true the result is the
/// reduced row echelon form; otherwise only entries below each pivot are
/// cleared. Zero rows end up at the bottom. Returns the pivot columns.
std::vector<std::size_t> eliminate(const PrimeField& field, Matrix& m, bool reduced);

std::size_t rank(const PrimeField& field, Matrix m);

/// Reduced row echelon basis of the row space (zero rows dropped).
Matrix row_basis(const PrimeField& field, Matrix m);

/// Basis of { x : m x = 0 }, one vector per row.
Matrix kernel(const PrimeField& field, const Matrix& m);

/// Basis of the intersection of the row spaces of u and v (Zassenhaus).
Matrix intersect_row_spaces(const PrimeField& field, const Matrix& u, const Matrix& v);

}  // namespace bisplit::oracle
