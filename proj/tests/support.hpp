#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "flowcount/algebra/number.hpp"
#include "flowcount/network.hpp"

namespace flowcount::testing {

std::string read_fixture(const std::string& name);
Network load_fixture(const std::string& name);

IntVector ints(std::initializer_list<long> values);
RationalVector rats(std::initializer_list<long> values);

/// Network on nodes "1".."n" with the given arcs (1-based endpoints).
Network make_network(const std::vector<long>& excess, const std::vector<std::pair<int, int>>& arcs,
                     const std::vector<long>& capacities = {});

/// Random connected network. When `capacitated` is set every arc gets a
/// capacity in [1, max_cap] and arcs may run in any direction (cycles
/// allowed); otherwise arcs run from lower to higher node index.
Network random_network(std::mt19937_64& rng, std::size_t nodes, std::size_t arcs, bool capacitated,
                       long max_abs_excess, long max_cap = 3, unsigned max_mult = 2);

}  // namespace flowcount::testing
