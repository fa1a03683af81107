#include "torelli/linear.hpp"

#include <utility>

namespace torelli {
namespace {

// Gauss-Jordan elimination in place; returns pivot columns.
std::vector<std::size_t> row_reduce(Matrix& m, std::size_t columns) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < columns && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && sgn(m[sel][col]) == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    const Scalar inv = 1 / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || sgn(m[r][col]) == 0) continue;
      const Scalar f = m[r][col];
      for (std::size_t c = col; c < m[r].size(); ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t column_count(const Matrix& matrix) {
  if (matrix.empty()) return 0;
  const std::size_t n = matrix.front().size();
  for (const auto& row : matrix)
    if (row.size() != n)
      throw LinearSystemError(LinearSystemError::Kind::malformed, "matrix is not rectangular");
  return n;
}

}  // namespace

std::vector<Scalar> solve_linear(const Matrix& matrix, std::span<const Scalar> rhs) {
  const std::size_t n = column_count(matrix);
  if (rhs.size() != matrix.size())
    throw LinearSystemError(LinearSystemError::Kind::malformed, "rhs length differs from row count");

  Matrix aug = matrix;
  for (std::size_t r = 0; r < aug.size(); ++r) aug[r].push_back(rhs[r]);
  const auto pivots = row_reduce(aug, n + 1);

  if (!pivots.empty() && pivots.back() == n)
    throw LinearSystemError(LinearSystemError::Kind::inconsistent, "inconsistent linear system");
  if (pivots.size() < n)
    throw LinearSystemError(LinearSystemError::Kind::underdetermined, "underdetermined linear system");

  std::vector<Scalar> x(n);
  for (std::size_t r = 0; r < n; ++r) x[pivots[r]] = aug[r][n];
  return x;
}

std::size_t matrix_rank(const Matrix& matrix) {
  Matrix m = matrix;
  return row_reduce(m, column_count(matrix)).size();
}

}  // namespace torelli
