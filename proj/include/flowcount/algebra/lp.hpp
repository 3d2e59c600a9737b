#pragma once

#include <cstddef>
#include <vector>

#include "flowcount/algebra/linalg.hpp"

namespace flowcount {

struct LpSolution {
  enum class Status { kOptimal, kUnbounded };
  Status status = Status::kOptimal;
  BigRational value;
  RationalVector point;
  std::size_t pivots = 0;
};

/// Maximizes objective . y subject to rows * y <= rhs with y free.
///
/// Requires rhs >= 0 so that y = 0 is a feasible starting vertex. Dense
/// tableau over exact rationals, Bland's least-index rule, so degenerate
/// cone systems cannot cycle.
LpSolution lp_maximize(const RationalVector& objective, const RationalMatrix& rows,
                       const RationalVector& rhs);

/// Optimum of objective . x over the cone `system` cut by objective . x <= 1.
/// 0 means objective . x <= 0 is implied by the system; 1 means it is not.
BigRational lp_max(std::span<const BigRational> objective, const IneqSystem& system);
BigRational lp_max(std::span<const BigInt> objective, const IneqSystem& system);

/// A point with normal . x >= 1 for every row, or nullopt when the cone has
/// empty interior.
std::optional<RationalVector> interior_point(const IneqSystem& system);

}  // namespace flowcount
