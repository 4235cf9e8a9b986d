#include "ars/linalg.hpp"

#include "ars/errors.hpp"

#include <utility>

namespace ars {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows, std::size_t cols) {
  RationalMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      throw DimensionMismatch("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = rows[i][j];
  }
  return m;
}

RationalVector RationalMatrix::row(std::size_t i) const {
  return RationalVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                        data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
  if (cols_ != other.rows_)
    throw DimensionMismatch("matrix product shape mismatch");
  RationalMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      if (is_zero((*this)(i, k)))
        continue;
      for (std::size_t j = 0; j < other.cols_; ++j)
        out(i, j) += (*this)(i, k) * other(k, j);
    }
  return out;
}

namespace {

// Bareiss elimination in place. Returns the rank and the sign of the row
// permutation applied.
std::pair<std::size_t, int> bareiss(RationalMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  Rational previous(1);
  std::size_t r = 0;
  int sign = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && is_zero(m(pivot, c)))
      ++pivot;
    if (pivot == rows)
      continue;
    if (pivot != r) {
      for (std::size_t j = 0; j < cols; ++j)
        std::swap(m(pivot, j), m(r, j));
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j)
        m(i, j) = (m(i, j) * m(r, c) - m(i, c) * m(r, j)) / previous;
      m(i, c) = 0;
    }
    previous = m(r, c);
    ++r;
  }
  return {r, sign};
}

} // namespace

std::size_t rank(RationalMatrix m) { return bareiss(m).first; }

Rational determinant(RationalMatrix m) {
  if (m.rows() != m.cols())
    throw DimensionMismatch("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0)
    return Rational(1);
  const auto [r, sign] = bareiss(m);
  if (r < n)
    return Rational(0);
  return sign * m(n - 1, n - 1);
}

std::vector<RationalVector> row_reduce(std::vector<RationalVector> rows, std::size_t cols) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && is_zero(rows[pivot][c]))
      ++pivot;
    if (pivot == rows.size())
      continue;
    std::swap(rows[pivot], rows[r]);
    const Rational lead = rows[r][c];
    for (auto& x : rows[r])
      x /= lead;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || is_zero(rows[i][c]))
        continue;
      const Rational f = rows[i][c];
      for (std::size_t j = 0; j < cols; ++j)
        rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
  if (m.rows() != m.cols())
    throw DimensionMismatch("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<RationalVector> aug(n, RationalVector(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      aug[i][j] = m(i, j);
    aug[i][n + i] = 1;
  }
  auto reduced = row_reduce(aug, 2 * n);
  RationalMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i >= reduced.size() || reduced[i][i] != 1)
      return std::nullopt;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i && !is_zero(reduced[i][j]))
        return std::nullopt;
      out(i, j) = reduced[i][n + j];
    }
  }
  return out;
}

} // namespace ars
