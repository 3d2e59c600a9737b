#pragma once

#include <cstddef>
#include <vector>

#include "flowcount/algebra/number.hpp"
#include "flowcount/network.hpp"

namespace flowcount {

/// Brute-force flow enumeration, independent of the residue engine. Meant
/// for small instances only.
///
/// Requires zero excess sum and an acyclic uncapacitated subgraph (cycles
/// must pass through a capacitated arc).
BigInt brute_count(const Network& net);

struct Enumeration {
  /// Flows indexed by original arc number.
  std::vector<IntVector> flows;
  /// More flows exist beyond the limit.
  bool truncated = false;
  /// Arc indices in the order the search assigns them; flows are listed in
  /// lexicographic order of this sequence.
  std::vector<std::size_t> processing_order;
};

Enumeration brute_enumerate(const Network& net, std::size_t limit);

}  // namespace flowcount
