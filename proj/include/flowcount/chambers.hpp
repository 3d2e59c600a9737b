#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "flowcount/algebra/linalg.hpp"
#include "flowcount/algebra/number.hpp"
#include "flowcount/network.hpp"

namespace flowcount {

/// Subset of column indices (bit i = column i, 0-based). At most 64 columns.
using IndexSet = std::uint64_t;

std::vector<std::size_t> members(IndexSet set);
IndexSet make_index_set(std::span<const std::size_t> indices);

/// Hyperplane spanned by r-1 independent columns.
struct Wall {
  IntVector normal;  // primitive, first nonzero entry positive
  IndexSet zeros = 0;
  IndexSet pos = 0;
  IndexSet neg = 0;

  bool interior() const { return pos != 0 && neg != 0; }
  /// Columns on the side with the given sign (+1 or -1).
  IndexSet side(int sign) const { return sign > 0 ? pos : neg; }
};

/// A chamber as the sorted set of basic subsets whose cones contain it.
struct Chamber {
  std::vector<IndexSet> basics;
  /// A point in the interior of every listed cone and on no wall.
  RationalVector witness;

  bool operator==(const Chamber& other) const { return basics == other.basics; }
};

struct EssentialWall {
  std::size_t wall = 0;
  /// The chamber lies on the side sign * normal >= 0.
  int side = 1;
  bool interior = false;
};

/// Inclusion-minimal members, sorted and deduplicated.
std::vector<IndexSet> minimal_nonfaces(std::vector<IndexSet> family);
/// Inclusion-minimal sets meeting every member of the family (Berge's
/// algorithm), sorted.
std::vector<IndexSet> minimal_transversals(const std::vector<IndexSet>& family);

/// Distinct roots e_i - e_j (i < j, positive multiplicity) with the last
/// coordinate dropped, ordered by (i, j).
std::vector<IntVector> positive_roots(const RootConfiguration& cfg);

class ChamberComplex {
 public:
  /// Columns must be distinct, nonzero and span R^r (r = column length).
  explicit ChamberComplex(std::vector<IntVector> columns);

  std::size_t dimension() const { return dimension_; }
  const std::vector<IntVector>& columns() const { return columns_; }
  const std::vector<Wall>& walls() const { return walls_; }

  bool is_basic(IndexSet set) const;
  /// Closed-cone membership of a point in C(sigma).
  bool cone_contains(IndexSet sigma, std::span<const BigRational> point) const;

  /// For each wall, the columns on the side of the lexicographic tope
  /// phi_1 + eps phi_2 + eps^2 phi_3 + ...
  std::vector<IndexSet> lex_tope_positions() const;
  Chamber lexicographic_chamber() const;

  /// Facet inequalities of every cone in the chamber, oriented inward.
  IneqSystem inequalities(const Chamber& chamber) const;
  std::vector<EssentialWall> essential_walls(const Chamber& chamber) const;
  /// Adjacent chamber across an essential interior wall (index into walls()).
  Chamber reflexion(const Chamber& chamber, std::size_t wall) const;

  /// All chambers, depth-first from the lexicographic chamber, in
  /// discovery order.
  std::vector<Chamber> enumerate() const;

  /// The chamber containing a regular point of the cone.
  Chamber locate(std::span<const BigRational> point) const;

  /// Interior point of the intersection of the cones, moved off every wall.
  std::optional<RationalVector> witness(const std::vector<IndexSet>& basics) const;

 private:
  Chamber make_chamber(std::vector<IndexSet> basics) const;
  std::size_t wall_through(IndexSet facet) const;

  std::size_t dimension_ = 0;
  std::vector<IntVector> columns_;
  std::vector<Wall> walls_;
};

/// {"columns": [[1,-1],...], "chambers": [{"basics": [[1,2],...], "witness": ["p/q",...]}]}
/// with 1-based column indices.
std::string chambers_to_json(const ChamberComplex& complex, const std::vector<Chamber>& chambers);

}  // namespace flowcount
