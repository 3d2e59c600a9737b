#include "flowcount/network.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <tuple>
#include <unordered_set>

#include "flowcount/error.hpp"

namespace flowcount {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void join(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

/// Kahn's algorithm, smallest available index first. Returns fewer than n
/// nodes when a directed cycle exists.
std::vector<std::size_t> topological_order(std::size_t n, const std::vector<Arc>& arcs) {
  std::vector<std::size_t> indegree(n, 0);
  std::vector<std::vector<std::size_t>> out(n);
  for (const auto& a : arcs) {
    ++indegree[a.head];
    out[a.tail].push_back(a.head);
  }
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t v = 0; v < n; ++v) {
    if (indegree[v] == 0) ready.push(v);
  }
  std::vector<std::size_t> order;
  while (!ready.empty()) {
    std::size_t v = ready.top();
    ready.pop();
    order.push_back(v);
    for (auto w : out[v]) {
      if (--indegree[w] == 0) ready.push(w);
    }
  }
  return order;
}

bool graph_connected(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  if (n <= 1) return true;
  DisjointSets sets(n);
  for (auto [a, b] : edges) sets.join(a, b);
  std::size_t root = sets.find(0);
  for (std::size_t v = 1; v < n; ++v) {
    if (sets.find(v) != root) return false;
  }
  return true;
}

}  // namespace

Network::Network(std::vector<Node> nodes, std::vector<Arc> arcs)
    : nodes_(std::move(nodes)), arcs_(std::move(arcs)) {
  std::unordered_set<std::string> seen;
  for (const auto& n : nodes_) {
    if (!seen.insert(n.id).second) throw InputError("duplicate node id '" + n.id + "'");
  }
  for (const auto& a : arcs_) {
    if (a.tail >= nodes_.size() || a.head >= nodes_.size()) throw InputError("arc endpoint out of range");
    if (a.tail == a.head) throw InputError("self-loop at node '" + nodes_[a.tail].id + "'");
    if (a.capacity && sgn(*a.capacity) <= 0) throw InputError("arc capacity must be a positive integer");
  }
}

std::optional<std::size_t> Network::find(std::string_view id) const {
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].id == id) return i;
  }
  return std::nullopt;
}

void Network::set_excess(std::size_t node, BigInt excess) { nodes_.at(node).excess = std::move(excess); }

std::vector<BigInt> Network::excesses() const {
  std::vector<BigInt> out;
  out.reserve(nodes_.size());
  for (const auto& n : nodes_) out.push_back(n.excess);
  return out;
}

BigInt Network::excess_sum() const {
  BigInt s = 0;
  for (const auto& n : nodes_) s += n.excess;
  return s;
}

bool Network::has_capacities() const {
  return std::any_of(arcs_.begin(), arcs_.end(), [](const Arc& a) { return a.capacity.has_value(); });
}

bool Network::all_capacitated() const {
  return std::all_of(arcs_.begin(), arcs_.end(), [](const Arc& a) { return a.capacity.has_value(); });
}

bool Network::is_acyclic() const { return topological_order(nodes_.size(), arcs_).size() == nodes_.size(); }

bool Network::is_connected() const {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& a : arcs_) edges.emplace_back(a.tail, a.head);
  return graph_connected(nodes_.size(), edges);
}

Diagnostics validate(const Network& net) {
  Diagnostics d;
  d.excess_sum = net.excess_sum();
  d.zero_sum = sgn(d.excess_sum) == 0;
  d.connected = net.is_connected();
  d.cyclic = !net.is_acyclic();
  d.capacitated = net.has_capacities();
  if (!d.zero_sum) d.messages.push_back("excesses sum to " + to_string(d.excess_sum) + ", not 0");
  if (!d.connected) d.messages.push_back("network is disconnected");
  if (d.cyclic) d.messages.push_back("network has a directed cycle");
  if (d.capacitated) d.messages.push_back("network has arc capacities");
  return d;
}

Reduction reduce_to_acyclic(const Network& net) {
  const bool acyclic = net.is_acyclic();
  Reduction out;
  if (acyclic && !net.has_capacities()) {
    out.network = net;
    for (std::size_t f = 0; f < net.arc_count(); ++f) out.arc_map.push_back({f, std::nullopt});
    return out;
  }
  if (!acyclic && !net.all_capacitated()) {
    throw InputError("cyclic network with uncapacitated arcs: flow set may be unbounded and cannot be reduced");
  }

  std::vector<Node> nodes = net.nodes();
  std::vector<Arc> forward, backward;
  out.arc_map.resize(net.arc_count());
  std::unordered_set<std::string> ids;
  for (const auto& n : nodes) ids.insert(n.id);
  std::vector<std::size_t> backward_of;

  for (std::size_t f = 0; f < net.arc_count(); ++f) {
    const Arc& arc = net.arcs()[f];
    if (!arc.capacity) {
      out.arc_map[f].forward = forward.size();
      forward.push_back(arc);
      continue;
    }
    std::string id = "arc" + std::to_string(f + 1);
    while (ids.count(id)) id += "'";
    ids.insert(id);
    std::size_t arc_node = nodes.size();
    nodes.push_back({id, *arc.capacity});
    nodes[arc.tail].excess -= *arc.capacity;
    out.arc_map[f].forward = forward.size();
    forward.push_back({arc_node, arc.head, std::nullopt});
    backward_of.push_back(f);
    backward.push_back({arc_node, arc.tail, std::nullopt});
  }
  for (std::size_t k = 0; k < backward.size(); ++k) {
    out.arc_map[backward_of[k]].backward = forward.size() + k;
  }
  forward.insert(forward.end(), backward.begin(), backward.end());
  out.network = Network(std::move(nodes), std::move(forward));
  return out;
}

RootConfiguration make_root_configuration(std::vector<std::vector<unsigned>> mult) {
  RootConfiguration cfg;
  const std::size_t n = mult.size();
  if (n == 0) throw InputError("root configuration needs at least one node");
  for (std::size_t i = 0; i < n; ++i) {
    if (mult[i].size() != n) throw InputError("multiplicity matrix must be square");
    for (std::size_t j = 0; j <= i; ++j) {
      if (mult[i][j] != 0) throw InputError("multiplicity matrix must be strictly upper triangular");
    }
  }
  cfg.rank = n - 1;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      cfg.total += mult[i][j];
      cfg.max_mult = std::max(cfg.max_mult, mult[i][j]);
      if (mult[i][j] > 0) edges.emplace_back(i, j);
    }
  }
  if (!graph_connected(n, edges)) throw InputError("root configuration does not span E_r (graph disconnected)");
  cfg.t.resize(cfg.rank);
  for (std::size_t j = 0; j < cfg.rank; ++j) {
    long s = 0;
    for (std::size_t k = j + 1; k < n; ++k) s += mult[j][k];
    cfg.t[j] = s - 1;
  }
  cfg.mult = std::move(mult);
  return cfg;
}

RootConfiguration complete_configuration(std::size_t nodes) {
  std::vector<std::vector<unsigned>> mult(nodes, std::vector<unsigned>(nodes, 0));
  for (std::size_t i = 0; i < nodes; ++i) {
    for (std::size_t j = i + 1; j < nodes; ++j) mult[i][j] = 1;
  }
  return make_root_configuration(std::move(mult));
}

RootConfiguration bipartite_configuration(std::size_t rows, std::size_t cols) {
  const std::size_t n = rows + cols;
  std::vector<std::vector<unsigned>> mult(n, std::vector<unsigned>(n, 0));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = rows; j < n; ++j) mult[i][j] = 1;
  }
  return make_root_configuration(std::move(mult));
}

Embedding embed(const Network& net) {
  if (net.node_count() == 0) throw InputError("cannot embed an empty network");
  if (net.has_capacities()) throw InputError("embed: network has capacities; reduce it first");
  if (!net.is_connected()) throw InputError("embed: network is disconnected");
  if (sgn(net.excess_sum()) != 0) throw InputError("embed: excesses do not sum to zero");
  auto order = topological_order(net.node_count(), net.arcs());
  if (order.size() != net.node_count()) throw InputError("embed: network has a directed cycle");

  std::vector<std::size_t> label(net.node_count());
  for (std::size_t k = 0; k < order.size(); ++k) label[order[k]] = k;
  std::vector<std::vector<unsigned>> mult(order.size(), std::vector<unsigned>(order.size(), 0));
  for (const auto& a : net.arcs()) ++mult[label[a.tail]][label[a.head]];

  Embedding e;
  e.config = make_root_configuration(std::move(mult));
  for (auto v : order) e.excess.push_back(net.nodes()[v].excess);
  e.order = std::move(order);
  return e;
}

std::vector<Network> components(const Network& net) {
  DisjointSets sets(net.node_count());
  for (const auto& a : net.arcs()) sets.join(a.tail, a.head);
  std::vector<std::size_t> component_of(net.node_count(), SIZE_MAX);
  std::vector<std::vector<std::size_t>> members;
  for (std::size_t v = 0; v < net.node_count(); ++v) {
    std::size_t root = sets.find(v);
    if (component_of[root] == SIZE_MAX) {
      component_of[root] = members.size();
      members.emplace_back();
    }
    members[component_of[root]].push_back(v);
  }
  std::vector<std::size_t> local(net.node_count());
  std::vector<std::vector<Node>> nodes(members.size());
  for (std::size_t c = 0; c < members.size(); ++c) {
    for (auto v : members[c]) {
      local[v] = nodes[c].size();
      nodes[c].push_back(net.nodes()[v]);
    }
  }
  std::vector<std::vector<Arc>> arcs(members.size());
  for (const auto& a : net.arcs()) {
    std::size_t c = component_of[sets.find(a.tail)];
    arcs[c].push_back({local[a.tail], local[a.head], a.capacity});
  }
  std::vector<Network> out;
  for (std::size_t c = 0; c < members.size(); ++c) out.emplace_back(std::move(nodes[c]), std::move(arcs[c]));
  return out;
}

namespace {

std::vector<Node> numbered_nodes(std::size_t n) {
  std::vector<Node> nodes;
  for (std::size_t i = 1; i <= n; ++i) nodes.push_back({std::to_string(i), 0});
  return nodes;
}

}  // namespace

Network complete_graph(std::size_t n) {
  if (n < 2) throw InputError("complete_graph needs n >= 2");
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) arcs.push_back({i, j, std::nullopt});
  }
  return Network(numbered_nodes(n), std::move(arcs));
}

Network transportation(std::size_t m, std::size_t n) {
  if (m < 1 || n < 1) throw InputError("transportation needs m, n >= 1");
  std::vector<Node> nodes;
  for (std::size_t i = 1; i <= m; ++i) nodes.push_back({"r" + std::to_string(i), 0});
  for (std::size_t j = 1; j <= n; ++j) nodes.push_back({"c" + std::to_string(j), 0});
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) arcs.push_back({i, m + j, std::nullopt});
  }
  return Network(std::move(nodes), std::move(arcs));
}

Network pitman_stanley(std::size_t n) {
  if (n < 2) throw InputError("pitman_stanley needs n >= 2");
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    arcs.push_back({i, i + 1, std::nullopt});
    if (i + 1 != n - 1) arcs.push_back({i, n - 1, std::nullopt});
  }
  // {n-1, n} has multiplicity two.
  arcs.push_back({n - 2, n - 1, std::nullopt});
  std::stable_sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) {
    return std::tie(a.tail, a.head) < std::tie(b.tail, b.head);
  });
  return Network(numbered_nodes(n), std::move(arcs));
}

}  // namespace flowcount
