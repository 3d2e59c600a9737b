#include "flowcount/error.hpp"
#include "flowcount/residue.hpp"

namespace flowcount {

namespace {

void require_zero_sum(const Network& net) {
  if (net.node_count() == 0) throw InputError("network has no nodes");
  if (sgn(net.excess_sum()) != 0) throw InputError("excesses do not sum to zero");
}

/// Reduced, per-component embeddings; nullopt entries mark components whose
/// excesses do not balance (no feasible flow).
std::vector<std::optional<Embedding>> prepare(const Network& net) {
  require_zero_sum(net);
  const Reduction reduced = reduce_to_acyclic(net);
  std::vector<std::optional<Embedding>> out;
  for (const auto& part : components(reduced.network)) {
    if (sgn(part.excess_sum()) != 0) {
      out.emplace_back();
    } else {
      out.emplace_back(embed(part));
    }
  }
  return out;
}

void accumulate_stats(ResidueStats& into, const ResidueStats& from) {
  into.steps += from.steps;
  into.max_table = std::max(into.max_table, from.max_table);
  into.pole_bound_flags += from.pole_bound_flags;
}

}  // namespace

Evaluation<BigInt> count_network(const Network& net, const ResidueOptions& options) {
  Evaluation<BigInt> out;
  out.value = 1;
  for (const auto& e : prepare(net)) {
    if (!e) return Evaluation<BigInt>{};
    auto part = count(e->config, e->excess, options);
    out.value *= part.value;
    out.sp_size += part.sp_size;
    accumulate_stats(out.stats, part.stats);
    if (out.value == 0) break;
  }
  return out;
}

Evaluation<BigRational> volume_network(const Network& net, const ResidueOptions& options) {
  Evaluation<BigRational> out;
  out.value = 1;
  for (const auto& e : prepare(net)) {
    if (!e) return Evaluation<BigRational>{};
    auto part = volume(e->config, to_rational(e->excess), options);
    out.value *= part.value;
    out.sp_size += part.sp_size;
    accumulate_stats(out.stats, part.stats);
    if (out.value == 0) break;
  }
  return out;
}

Evaluation<Poly> polynomial_network(const Network& net, const ResidueOptions& options) {
  require_zero_sum(net);
  if (net.has_capacities()) throw InputError("polynomial: capacitated networks are not supported; reduce first");
  if (!net.is_acyclic()) throw InputError("polynomial: network has a directed cycle");
  if (!net.is_connected()) throw InputError("polynomial: network is disconnected");
  const Embedding e = embed(net);
  std::vector<std::string> names;
  for (std::size_t k = 0; k < e.config.rank; ++k) names.push_back("a_" + net.nodes()[e.order[k]].id);
  return chamber_polynomial(e.config, e.excess, options, names);
}

Evaluation<Poly> ehrhart_network(const Network& net, const ResidueOptions& options) {
  Evaluation<Poly> out;
  out.value = Poly::constant({"t"}, 1);
  for (const auto& e : prepare(net)) {
    if (!e) throw InputError("ehrhart: a connected component has nonzero excess sum");
    auto part = ehrhart_polynomial(e->config, e->excess, options);
    out.value *= part.value;
    out.sp_size += part.sp_size;
    accumulate_stats(out.stats, part.stats);
  }
  return out;
}

}  // namespace flowcount
