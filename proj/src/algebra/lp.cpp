#include "flowcount/algebra/lp.hpp"

#include "flowcount/error.hpp"

namespace flowcount {

LpSolution lp_maximize(const RationalVector& objective, const RationalMatrix& rows,
                       const RationalVector& rhs) {
  const std::size_t n = objective.size();
  const std::size_t m = rows.size();
  if (rhs.size() != m) throw InputError("lp_maximize: rhs length mismatch");
  for (const auto& row : rows) {
    if (row.size() != n) throw InputError("lp_maximize: row length mismatch");
  }
  for (const auto& b : rhs) {
    if (sgn(b) < 0) throw InputError("lp_maximize: rhs must be nonnegative");
  }

  // Columns: u (n), v (n), slack (m); y = u - v.
  const std::size_t width = 2 * n + m;
  RationalMatrix tab(m, RationalVector(width, 0));
  RationalVector b = rhs;
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      tab[i][j] = rows[i][j];
      tab[i][n + j] = -rows[i][j];
    }
    tab[i][2 * n + i] = 1;
    basis[i] = 2 * n + i;
  }
  RationalVector cost(width, 0);
  for (std::size_t j = 0; j < n; ++j) {
    cost[j] = objective[j];
    cost[n + j] = -objective[j];
  }

  LpSolution sol;
  BigRational value = 0;
  for (;;) {
    std::size_t enter = width;
    for (std::size_t j = 0; j < width; ++j) {
      if (sgn(cost[j]) > 0) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;

    std::size_t leave = m;
    BigRational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (sgn(tab[i][enter]) <= 0) continue;
      BigRational ratio = b[i] / tab[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) {
      sol.status = LpSolution::Status::kUnbounded;
      return sol;
    }

    BigRational inv = 1 / tab[leave][enter];
    for (auto& x : tab[leave]) x *= inv;
    b[leave] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || sgn(tab[i][enter]) == 0) continue;
      BigRational f = tab[i][enter];
      for (std::size_t j = 0; j < width; ++j) tab[i][j] -= f * tab[leave][j];
      b[i] -= f * b[leave];
    }
    BigRational f = cost[enter];
    for (std::size_t j = 0; j < width; ++j) cost[j] -= f * tab[leave][j];
    value += f * b[leave];
    basis[leave] = enter;
    ++sol.pivots;
  }

  RationalVector column_value(width, 0);
  for (std::size_t i = 0; i < m; ++i) column_value[basis[i]] = b[i];
  sol.point.resize(n);
  for (std::size_t j = 0; j < n; ++j) sol.point[j] = column_value[j] - column_value[n + j];
  sol.value = value;
  return sol;
}

BigRational lp_max(std::span<const BigRational> objective, const IneqSystem& system) {
  const std::size_t n = system.dimension();
  if (objective.size() != n) throw InputError("lp_max: objective has wrong dimension");
  RationalMatrix rows;
  RationalVector rhs;
  for (const auto& normal : system.rows()) {
    RationalVector row(n);
    for (std::size_t j = 0; j < n; ++j) row[j] = -normal[j];
    rows.push_back(std::move(row));
    rhs.emplace_back(0);
  }
  rows.emplace_back(objective.begin(), objective.end());
  rhs.emplace_back(1);
  auto sol = lp_maximize(RationalVector(objective.begin(), objective.end()), rows, rhs);
  if (sol.status != LpSolution::Status::kOptimal) {
    throw InternalError("lp_max: objective cap did not bound the program");
  }
  return sol.value;
}

BigRational lp_max(std::span<const BigInt> objective, const IneqSystem& system) {
  RationalVector q = to_rational(objective);
  return lp_max(std::span<const BigRational>(q), system);
}

std::optional<RationalVector> interior_point(const IneqSystem& system) {
  const std::size_t n = system.dimension();
  RationalMatrix rows;
  RationalVector rhs;
  for (const auto& normal : system.rows()) {
    RationalVector row(n + 1);
    for (std::size_t j = 0; j < n; ++j) row[j] = -normal[j];
    row[n] = 1;
    rows.push_back(std::move(row));
    rhs.emplace_back(0);
  }
  RationalVector cap(n + 1, 0);
  cap[n] = 1;
  rows.push_back(cap);
  rhs.emplace_back(1);
  auto sol = lp_maximize(cap, rows, rhs);
  if (sol.status != LpSolution::Status::kOptimal) {
    throw InternalError("interior_point: slack program unbounded");
  }
  if (sgn(sol.value) <= 0) return std::nullopt;
  sol.point.pop_back();
  return sol.point;
}

}  // namespace flowcount
