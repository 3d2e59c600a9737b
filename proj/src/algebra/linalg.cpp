#include "flowcount/algebra/linalg.hpp"

#include <algorithm>

#include "flowcount/error.hpp"

namespace flowcount {

namespace {

/// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> row_reduce(RationalMatrix& m, std::size_t columns) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < columns && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && sgn(m[sel][col]) == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    BigRational inv = 1 / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || sgn(m[r][col]) == 0) continue;
      BigRational f = m[r][col];
      for (std::size_t c = col; c < m[r].size(); ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

void check_width(const RationalMatrix& rows, std::size_t columns) {
  for (const auto& r : rows) {
    if (r.size() != columns) throw InputError("matrix row has wrong length");
  }
}

}  // namespace

std::vector<IntVector> kernel_basis(const RationalMatrix& rows, std::size_t columns) {
  check_width(rows, columns);
  RationalMatrix m = rows;
  auto pivots = row_reduce(m, columns);
  std::vector<bool> is_pivot(columns, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<IntVector> basis;
  for (std::size_t free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(columns, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][free];
    basis.push_back(primitive(std::span<const BigRational>(v)));
  }
  return basis;
}

std::size_t rank(const RationalMatrix& rows, std::size_t columns) {
  check_width(rows, columns);
  RationalMatrix m = rows;
  return row_reduce(m, columns).size();
}

std::optional<RationalVector> solve_in_basis(const std::vector<RationalVector>& columns,
                                             const RationalVector& rhs) {
  const std::size_t n = rhs.size();
  if (columns.size() != n) throw InputError("solve_in_basis: matrix is not square");
  RationalMatrix aug(n, RationalVector(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = columns[j][i];
    aug[i][n] = rhs[i];
  }
  auto pivots = row_reduce(aug, n);
  if (pivots.size() != n) return std::nullopt;
  RationalVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug[i][n];
  return x;
}

bool IneqSystem::add(std::span<const BigRational> normal) {
  if (normal.size() != dimension_) throw InputError("IneqSystem: row has wrong dimension");
  IntVector row = primitive(normal);
  if (std::all_of(row.begin(), row.end(), [](const BigInt& x) { return sgn(x) == 0; })) return false;
  if (std::find(rows_.begin(), rows_.end(), row) != rows_.end()) return false;
  rows_.push_back(std::move(row));
  return true;
}

bool IneqSystem::add(std::span<const BigInt> normal) {
  RationalVector r = to_rational(normal);
  return add(std::span<const BigRational>(r));
}

IneqSystem IneqSystem::without(std::size_t row) const {
  IneqSystem out(dimension_);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i != row) out.rows_.push_back(rows_[i]);
  }
  return out;
}

bool IneqSystem::contains_strictly(std::span<const BigRational> point) const {
  for (const auto& row : rows_) {
    RationalVector r = to_rational(row);
    if (sgn(dot(std::span<const BigRational>(r), point)) <= 0) return false;
  }
  return true;
}

bool IneqSystem::contains(std::span<const BigRational> point) const {
  for (const auto& row : rows_) {
    RationalVector r = to_rational(row);
    if (sgn(dot(std::span<const BigRational>(r), point)) < 0) return false;
  }
  return true;
}

}  // namespace flowcount
