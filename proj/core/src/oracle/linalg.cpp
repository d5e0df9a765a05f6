#include "bisplit/oracle/linalg.hpp"

#include <algorithm>
#include <cstdint>

#include "bisplit/error.hpp"

namespace bisplit::oracle {

void Matrix::append_row(std::span<const Element> values) {
  if (values.size() != cols_) throw InvalidInput("matrix row width mismatch");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

void Matrix::append_rows(const Matrix& other) {
  if (other.cols_ != cols_) throw InvalidInput("matrix row width mismatch");
  data_.insert(data_.end(), other.data_.begin(), other.data_.end());
  rows_ += other.rows_;
}

void Matrix::truncate_rows(std::size_t n) {
  if (n >= rows_) return;
  rows_ = n;
  data_.resize(n * cols_);
}

std::vector<std::size_t> eliminate(const PrimeField& field, Matrix& m, bool reduced) {
  const std::uint64_t p = field.prime();
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && m.at(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != rank) std::swap_ranges(m.row(pivot).begin(), m.row(pivot).end(), m.row(rank).begin());

    auto prow = m.row(rank);
    const Element scale = field.inv(prow[col]);
    for (std::size_t k = col; k < m.cols(); ++k) prow[k] = field.mul(prow[k], scale);

    const std::size_t first = reduced ? 0 : rank + 1;
    for (std::size_t r = first; r < m.rows(); ++r) {
      if (r == rank) continue;
      auto row = m.row(r);
      const Element f = row[col];
      if (f == 0) continue;
      const std::uint64_t nf = p - f;
      for (std::size_t k = col; k < m.cols(); ++k)
        if (prow[k] != 0) row[k] = static_cast<Element>((row[k] + nf * prow[k]) % p);
    }
    pivots.push_back(col);
    ++rank;
  }
  return pivots;
}

std::size_t rank(const PrimeField& field, Matrix m) { return eliminate(field, m, false).size(); }

Matrix row_basis(const PrimeField& field, Matrix m) {
  const std::size_t r = eliminate(field, m, true).size();
  m.truncate_rows(r);
  return m;
}

Matrix kernel(const PrimeField& field, const Matrix& m) {
  Matrix rref = m;
  const std::vector<std::size_t> pivots = eliminate(field, rref, true);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  Matrix out(m.cols());
  std::vector<Element> vec(m.cols());
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::fill(vec.begin(), vec.end(), 0);
    vec[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) vec[pivots[r]] = field.neg(rref.at(r, free));
    out.append_row(vec);
  }
  return out;
}

Matrix intersect_row_spaces(const PrimeField& field, const Matrix& u, const Matrix& v) {
  if (u.cols() != v.cols()) throw InvalidInput("intersect_row_spaces: width mismatch");
  const std::size_t n = u.cols();
  // [u | u] over [v | 0]: rows whose left half eliminates to zero carry the
  // intersection in their right half.
  Matrix z(u.rows() + v.rows(), 2 * n);
  for (std::size_t r = 0; r < u.rows(); ++r)
    for (std::size_t c = 0; c < n; ++c) z.at(r, c) = z.at(r, n + c) = u.at(r, c);
  for (std::size_t r = 0; r < v.rows(); ++r)
    for (std::size_t c = 0; c < n; ++c) z.at(u.rows() + r, c) = v.at(r, c);

  const std::vector<std::size_t> pivots = eliminate(field, z, false);
  Matrix out(n);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] < n) continue;
    out.append_row(z.row(r).subspan(n));
  }
  return row_basis(field, std::move(out));
}

}  // namespace bisplit::oracle
