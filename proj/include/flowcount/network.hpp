#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "flowcount/algebra/number.hpp"

namespace flowcount {

struct Node {
  std::string id;
  BigInt excess;
};

struct Arc {
  std::size_t tail = 0;
  std::size_t head = 0;
  std::optional<BigInt> capacity;
};

/// Directed multigraph with integer excesses (out-flow minus in-flow) and
/// optional positive arc capacities.
class Network {
 public:
  Network() = default;
  Network(std::vector<Node> nodes, std::vector<Arc> arcs);

  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  std::size_t node_count() const { return nodes_.size(); }
  std::size_t arc_count() const { return arcs_.size(); }

  std::optional<std::size_t> find(std::string_view id) const;
  void set_excess(std::size_t node, BigInt excess);
  /// Excesses in node order.
  std::vector<BigInt> excesses() const;
  BigInt excess_sum() const;

  bool has_capacities() const;
  bool all_capacitated() const;
  bool is_acyclic() const;
  bool is_connected() const;

 private:
  std::vector<Node> nodes_;
  std::vector<Arc> arcs_;
};

Network network_from_json(std::string_view text);
std::string network_to_json(const Network& net);

struct Diagnostics {
  bool zero_sum = true;
  BigInt excess_sum;
  bool connected = true;
  bool cyclic = false;
  bool capacitated = false;
  std::vector<std::string> messages;
};

Diagnostics validate(const Network& net);

/// Image of an original arc in the reduced network: `forward` carries x_f,
/// `backward` carries cap(f) - x_f (absent when the arc was kept as is).
struct ArcImage {
  std::size_t forward = 0;
  std::optional<std::size_t> backward;
};

struct Reduction {
  Network network;
  std::vector<ArcImage> arc_map;
};

/// Replaces every capacitated arc f = (i -> j) by an arc-node f with excess
/// cap(f) and the two arcs f -> j and f -> i; node i's excess drops by
/// cap(f). The result is acyclic and uncapacitated with the same integer
/// flows. Acyclic uncapacitated inputs are returned unchanged.
Reduction reduce_to_acyclic(const Network& net);

/// Multiplicities of e_i - e_j over A_r^+ and the quantities derived from
/// them. Node labels are 0-based here; label r is the sink-side node r+1.
struct RootConfiguration {
  std::size_t rank = 0;
  std::vector<std::vector<unsigned>> mult;  // (rank+1) x (rank+1), used for i < j
  unsigned total = 0;                       // N
  std::vector<long> t;                      // t_j, j < rank
  unsigned max_mult = 0;

  unsigned m(std::size_t i, std::size_t j) const { return mult[i][j]; }
};

/// Validates the multiplicity matrix (upper triangular, spanning) and fills
/// the derived fields.
RootConfiguration make_root_configuration(std::vector<std::vector<unsigned>> mult);

RootConfiguration complete_configuration(std::size_t nodes);
RootConfiguration bipartite_configuration(std::size_t rows, std::size_t cols);

struct Embedding {
  RootConfiguration config;
  std::vector<BigInt> excess;       // relabeled order, length rank+1
  std::vector<std::size_t> order;   // order[k] = original node at label k
};

/// Topological relabeling (ties by original order) of a connected acyclic
/// uncapacitated network into A_r^+ form.
Embedding embed(const Network& net);

/// Weakly connected components with their induced excesses.
std::vector<Network> components(const Network& net);

/// Builders; excesses are zero and are set by the caller.
Network complete_graph(std::size_t n);
Network transportation(std::size_t m, std::size_t n);
Network pitman_stanley(std::size_t n);

}  // namespace flowcount
