#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "flowcount/algebra/laurent.hpp"
#include "flowcount/algebra/series.hpp"
#include "flowcount/error.hpp"

namespace flowcount {

/// The factor (z_plus - z_minus)^{-mult}.
struct DifferenceFactor {
  std::size_t plus = 0;
  std::size_t minus = 0;
  unsigned mult = 1;
};

/// Analytic numerator factor attached to one z-variable.
template <typename R>
struct NumeratorFactor {
  enum class Kind { kOne, kBinomial, kExponential };
  Kind kind = Kind::kOne;
  /// Exponent e of (1+z)^e, or scale a of exp(a z).
  R parameter = R(0);

  std::vector<R> series(std::size_t order) const {
    switch (kind) {
      case Kind::kBinomial:
        return binomial_series(parameter, order);
      case Kind::kExponential:
        return exponential_series(parameter, order);
      case Kind::kOne:
        break;
    }
    std::vector<R> out(order + 1, R(0));
    out[0] = R(1);
    return out;
  }

  static NumeratorFactor one() { return {}; }
  static NumeratorFactor binomial(R exponent) { return {Kind::kBinomial, std::move(exponent)}; }
  static NumeratorFactor exponential(R scale) { return {Kind::kExponential, std::move(scale)}; }
};

enum class FactorMode { kCount, kVolume, kSymbolic, kEhrhart };

/// scale * prod_i numerator_i(z_i) * prod_i z_i^{-pole_i} * prod (z_p - z_q)^{-m}.
/// Poles may be negative (a monomial numerator).
template <typename R>
struct FactorSystem {
  std::size_t rank = 0;
  FactorMode mode = FactorMode::kCount;
  R scale = R(1);
  std::vector<NumeratorFactor<R>> numerators;
  std::vector<int> monomial_poles;
  std::vector<DifferenceFactor> differences;

  explicit FactorSystem(std::size_t r = 0)
      : rank(r), numerators(r), monomial_poles(r, 0) {}
};

struct ResidueStats {
  std::size_t steps = 0;
  std::size_t max_table = 0;
  /// Steps where the exact truncation degree exceeded the a-priori pole
  /// bound (cross-check only; never fatal).
  std::size_t pole_bound_flags = 0;
};

/// A-priori bound on the pole order in the variable eliminated at 1-based
/// position k (of r), for maximum multiplicity m. The monomial term
/// (r-k+1)m is added on top of the difference-pole estimate.
inline long pole_order_bound(long m, long r, long k) {
  return m * (r - k) * (r - k + 1) / 2 - (r - k) + (r - k + 1) * m;
}

/// Res_{z_{w(1)}=0} ... Res_{z_{w(r)}=0} of the factor system, where
/// `order[i]` is w(i+1) (0-based variable index). The innermost residue
/// is taken first; factors are brought in as their variable is reached.
template <typename R>
R iterated_residue(std::span<const std::size_t> order, const FactorSystem<R>& fs,
                   ResidueStats* stats = nullptr) {
  const std::size_t r = fs.rank;
  if (r > kMaxVariables) throw InputError("too many variables for the residue engine");
  if (order.size() != r || fs.numerators.size() != r || fs.monomial_poles.size() != r) {
    throw InputError("iterated_residue: dimension mismatch");
  }
  {
    std::vector<bool> seen(r, false);
    for (auto v : order) {
      if (v >= r || seen[v]) throw InputError("iterated_residue: order is not a permutation");
      seen[v] = true;
    }
  }
  for (const auto& d : fs.differences) {
    if (d.plus >= r || d.minus >= r || d.plus == d.minus) throw InputError("iterated_residue: bad difference factor");
  }

  long m = 0;
  for (auto p : fs.monomial_poles) m = std::max<long>(m, p);
  for (const auto& d : fs.differences) m = std::max<long>(m, d.mult);

  std::vector<bool> active(r, true);
  std::vector<bool> consumed(fs.differences.size(), false);
  LaurentTable<R> table = LaurentTable<R>::constant(fs.scale);

  for (std::size_t pos = r; pos-- > 0;) {
    if (table.empty()) return R(0);
    const std::size_t v = order[pos];

    struct Expansion {
      std::size_t other;
      unsigned mult;
    };
    std::vector<Expansion> expansions;
    Monomial prefactor;
    bool negate = false;
    for (std::size_t i = 0; i < fs.differences.size(); ++i) {
      const auto& d = fs.differences[i];
      if (consumed[i] || (d.plus != v && d.minus != v)) continue;
      const std::size_t other = d.plus == v ? d.minus : d.plus;
      consumed[i] = true;
      // (z_u - v)^{-m} = z_u^{-m} (1 - v/z_u)^{-m};  (v - z_u)^{-m} = (-1)^m of the same.
      expansions.push_back({other, d.mult});
      prefactor[other] = static_cast<std::int16_t>(prefactor[other] - static_cast<int>(d.mult));
      if (d.plus == v && d.mult % 2 == 1) negate = !negate;
    }

    const int pole = fs.monomial_poles[v];
    const int lowest = table.min_exponent(v);
    const long degree = static_cast<long>(pole) - 1 - lowest;
    if (stats) {
      ++stats->steps;
      stats->max_table = std::max(stats->max_table, table.size());
      if (degree + 1 > pole_order_bound(m, static_cast<long>(r), static_cast<long>(pos + 1))) {
        ++stats->pole_bound_flags;
      }
    }
    if (degree < 0) return R(0);
    const auto D = static_cast<std::size_t>(degree);

    // series[k] = [v^k] numerator(v) * prod (1 - v/z_u)^{-m_u}, a table in the other variables.
    std::vector<LaurentTable<R>> series(D + 1);
    {
      auto numer = fs.numerators[v].series(D);
      for (std::size_t k = 0; k <= D; ++k) series[k].add(Monomial{}, numer[k]);
    }
    for (const auto& e : expansions) {
      auto g = geometric_pole_series(e.mult, D);
      std::vector<R> gr(g.begin(), g.end());
      std::vector<LaurentTable<R>> next(D + 1);
      for (std::size_t k = 0; k <= D; ++k) {
        for (std::size_t j = 0; j <= k; ++j) {
          Monomial shift;
          shift[e.other] = static_cast<std::int16_t>(-static_cast<int>(j));
          for (const auto& [mono, c] : series[k - j].terms()) next[k].accumulate(mono + shift, c, gr[j]);
        }
        next[k].prune();
      }
      series = std::move(next);
    }

    std::map<int, LaurentTable<R>> by_power;
    for (const auto& [mono, c] : table.terms()) {
      Monomial rest = mono;
      const int e = rest[v];
      rest[v] = 0;
      by_power[e].add(rest, c);
    }
    LaurentTable<R> next;
    for (const auto& [e, part] : by_power) {
      const long k = static_cast<long>(pole) - 1 - e;
      if (k < 0) continue;
      next.add_product(part, series[static_cast<std::size_t>(k)]);
    }
    next.shift(prefactor);
    if (negate) next.scale(R(-1));
    table = std::move(next);
    active[v] = false;
  }

  R result(0);
  for (const auto& [mono, c] : table.terms()) {
    if (!(mono == Monomial{})) throw InternalError("iterated_residue: z-variables survived the last residue");
    result += c;
  }
  return result;
}

}  // namespace flowcount
