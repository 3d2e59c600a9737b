#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "flowcount/algebra/number.hpp"

namespace flowcount {

using RationalMatrix = std::vector<RationalVector>;

/// Null-space basis of a matrix with `columns` columns, each basis vector
/// scaled to a primitive integer vector. Empty when the kernel is trivial.
std::vector<IntVector> kernel_basis(const RationalMatrix& rows, std::size_t columns);

std::size_t rank(const RationalMatrix& rows, std::size_t columns);

/// Solves the square system `columns * x = rhs` where the matrix is given by
/// its columns. Returns nullopt if singular.
std::optional<RationalVector> solve_in_basis(const std::vector<RationalVector>& columns,
                                             const RationalVector& rhs);

/// Homogeneous system of inequalities normal . x >= 0.
class IneqSystem {
 public:
  explicit IneqSystem(std::size_t dimension) : dimension_(dimension) {}

  /// Adds a row after reducing it to a primitive integer vector. Exact
  /// duplicates and zero rows are dropped. Returns true if the row was new.
  bool add(std::span<const BigRational> normal);
  bool add(std::span<const BigInt> normal);

  std::size_t dimension() const { return dimension_; }
  const std::vector<IntVector>& rows() const { return rows_; }
  std::size_t size() const { return rows_.size(); }

  IneqSystem without(std::size_t row) const;
  bool contains_strictly(std::span<const BigRational> point) const;
  bool contains(std::span<const BigRational> point) const;

 private:
  std::size_t dimension_;
  std::vector<IntVector> rows_;
};

}  // namespace flowcount
