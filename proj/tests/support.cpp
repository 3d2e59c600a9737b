#include "support.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace flowcount::testing {

std::string read_fixture(const std::string& name) {
  std::ifstream in(std::string(FLOWCOUNT_FIXTURES) + "/" + name);
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Network load_fixture(const std::string& name) { return network_from_json(read_fixture(name)); }

IntVector ints(std::initializer_list<long> values) {
  IntVector out;
  for (long v : values) out.emplace_back(v);
  return out;
}

RationalVector rats(std::initializer_list<long> values) {
  RationalVector out;
  for (long v : values) out.emplace_back(v);
  return out;
}

Network make_network(const std::vector<long>& excess, const std::vector<std::pair<int, int>>& arcs,
                     const std::vector<long>& capacities) {
  std::vector<Node> nodes;
  for (std::size_t i = 0; i < excess.size(); ++i) nodes.push_back({std::to_string(i + 1), BigInt(excess[i])});
  std::vector<Arc> out;
  for (std::size_t k = 0; k < arcs.size(); ++k) {
    Arc a{static_cast<std::size_t>(arcs[k].first - 1), static_cast<std::size_t>(arcs[k].second - 1), std::nullopt};
    if (k < capacities.size() && capacities[k] > 0) a.capacity = BigInt(capacities[k]);
    out.push_back(a);
  }
  return Network(std::move(nodes), std::move(out));
}

Network random_network(std::mt19937_64& rng, std::size_t nodes, std::size_t arcs, bool capacitated,
                       long max_abs_excess, long max_cap, unsigned max_mult) {
  auto pick = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  std::map<std::pair<std::size_t, std::size_t>, unsigned> used;
  std::vector<Arc> list;
  auto add = [&](std::size_t u, std::size_t v) {
    if (!capacitated && u > v) std::swap(u, v);
    if (used[{u, v}] >= max_mult) return false;
    ++used[{u, v}];
    Arc a{u, v, std::nullopt};
    if (capacitated) a.capacity = BigInt(static_cast<long>(pick(1, static_cast<std::size_t>(max_cap))));
    list.push_back(a);
    return true;
  };
  // Spanning tree first so the network is connected.
  for (std::size_t v = 1; v < nodes; ++v) {
    const std::size_t u = pick(0, v - 1);
    if (capacitated && pick(0, 1) == 1) add(v, u);
    else add(u, v);
  }
  std::size_t guard = 0;
  while (list.size() < arcs && guard++ < 1000) {
    const std::size_t u = pick(0, nodes - 1), v = pick(0, nodes - 1);
    if (u != v) add(u, v);
  }
  // Random unit transfers keep the sum at zero and every entry within bounds.
  std::vector<long> excess(nodes, 0);
  const std::size_t transfers = pick(0, nodes * static_cast<std::size_t>(max_abs_excess));
  for (std::size_t k = 0; k < transfers; ++k) {
    const std::size_t i = pick(0, nodes - 1), j = pick(0, nodes - 1);
    if (i == j || excess[i] >= max_abs_excess || excess[j] <= -max_abs_excess) continue;
    ++excess[i];
    --excess[j];
  }
  std::vector<Node> ns;
  for (std::size_t i = 0; i < nodes; ++i) ns.push_back({std::to_string(i + 1), BigInt(excess[i])});
  return Network(std::move(ns), std::move(list));
}

}  // namespace flowcount::testing
