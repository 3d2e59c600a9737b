#include "flowcount/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>

#include "flowcount/error.hpp"

namespace flowcount {

namespace {

class Search {
 public:
  explicit Search(const Network& net) : net_(net) {
    const std::size_t n = net.node_count();
    if (n == 0) throw InputError("oracle: network has no nodes");
    if (sgn(net.excess_sum()) != 0) throw InputError("oracle: excesses do not sum to zero");

    // Topological order of the uncapacitated subgraph.
    std::vector<std::size_t> indegree(n, 0);
    std::vector<std::vector<std::size_t>> out(n);
    for (const auto& a : net.arcs()) {
      if (a.capacity) continue;
      out[a.tail].push_back(a.head);
      ++indegree[a.head];
    }
    std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
    for (std::size_t v = 0; v < n; ++v) {
      if (indegree[v] == 0) ready.push(v);
    }
    std::vector<std::size_t> position(n);
    std::size_t placed = 0;
    while (!ready.empty()) {
      const auto v = ready.top();
      ready.pop();
      position[v] = placed++;
      for (auto w : out[v]) {
        if (--indegree[w] == 0) ready.push(w);
      }
    }
    if (placed != n) throw InputError("oracle: uncapacitated arcs form a directed cycle");

    order_.resize(net.arc_count());
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t x, std::size_t y) {
      const auto& a = net.arcs()[x];
      const auto& b = net.arcs()[y];
      return std::pair(position[a.tail], position[a.head]) < std::pair(position[b.tail], position[b.head]);
    });

    bound_ = 0;
    for (const auto& node : net.nodes()) {
      if (sgn(node.excess) > 0) bound_ += node.excess;
    }
    for (const auto& a : net.arcs()) {
      if (a.capacity) {
        if (sgn(*a.capacity) < 0) throw InputError("oracle: negative capacity");
        bound_ += *a.capacity;
      }
    }

    // Remaining unassigned arcs per node, split by direction.
    out_left_.assign(n, 0);
    in_left_.assign(n, 0);
    for (const auto& a : net.arcs()) {
      ++out_left_[a.tail];
      ++in_left_[a.head];
    }
    balance_.assign(n, BigInt(0));  // assigned out-flow minus in-flow
    flow_.assign(net.arc_count(), BigInt(0));
  }

  const std::vector<std::size_t>& order() const { return order_; }

  /// Calls visit() for each feasible flow; visit returns false to stop.
  void run(const std::function<bool(const IntVector&)>& visit) {
    for (std::size_t v = 0; v < net_.node_count(); ++v) {
      if (out_left_[v] + in_left_[v] == 0 && sgn(net_.nodes()[v].excess) != 0) return;
    }
    visit_ = &visit;
    stopped_ = false;
    descend(0);
  }

 private:
  BigInt need(std::size_t v) const { return net_.nodes()[v].excess - balance_[v]; }

  void descend(std::size_t k) {
    if (stopped_) return;
    if (k == order_.size()) {
      for (std::size_t v = 0; v < net_.node_count(); ++v) {
        if (sgn(need(v)) != 0) return;
      }
      if (!(*visit_)(flow_)) stopped_ = true;
      return;
    }
    const std::size_t idx = order_[k];
    const Arc& arc = net_.arcs()[idx];
    const std::size_t u = arc.tail, v = arc.head;

    BigInt lo = 0;
    BigInt hi = arc.capacity ? *arc.capacity : bound_;
    // Tail: out - in must reach excess. With no in-arcs left, the remaining
    // out-flow is exactly need(u); with no other arcs left, x is forced.
    const bool tail_last = out_left_[u] == 1 && in_left_[u] == 0;
    const bool head_last = in_left_[v] == 1 && out_left_[v] == 0;
    if (in_left_[u] == 0) hi = std::min(hi, need(u));
    if (out_left_[v] == 0) hi = std::min(hi, BigInt(-need(v)));
    if (tail_last) lo = std::max(lo, need(u));
    if (head_last) lo = std::max(lo, BigInt(-need(v)));
    if (tail_last) hi = std::min(hi, need(u));
    if (head_last) hi = std::min(hi, BigInt(-need(v)));

    --out_left_[u];
    --in_left_[v];
    for (BigInt x = lo; x <= hi && !stopped_; ++x) {
      flow_[idx] = x;
      balance_[u] += x;
      balance_[v] -= x;
      descend(k + 1);
      balance_[u] -= x;
      balance_[v] += x;
    }
    flow_[idx] = 0;
    ++out_left_[u];
    ++in_left_[v];
  }

  const Network& net_;
  std::vector<std::size_t> order_;
  BigInt bound_;
  std::vector<std::size_t> out_left_, in_left_;
  IntVector balance_;
  IntVector flow_;
  const std::function<bool(const IntVector&)>* visit_ = nullptr;
  bool stopped_ = false;
};

}  // namespace

BigInt brute_count(const Network& net) {
  Search search(net);
  BigInt total = 0;
  search.run([&](const IntVector&) {
    ++total;
    return true;
  });
  return total;
}

Enumeration brute_enumerate(const Network& net, std::size_t limit) {
  Search search(net);
  Enumeration out;
  out.processing_order = search.order();
  search.run([&](const IntVector& flow) {
    if (out.flows.size() == limit) {
      out.truncated = true;
      return false;
    }
    out.flows.push_back(flow);
    return true;
  });
  return out;
}

}  // namespace flowcount
