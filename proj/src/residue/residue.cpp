#include <algorithm>
#include <atomic>
#include <thread>

#include "flowcount/error.hpp"
#include "flowcount/residue.hpp"

namespace flowcount {

namespace {

template <typename R>
FactorSystem<R> pole_skeleton(const RootConfiguration& cfg) {
  const std::size_t r = cfg.rank;
  FactorSystem<R> fs(r);
  for (std::size_t i = 0; i < r; ++i) {
    fs.monomial_poles[i] = static_cast<int>(cfg.m(i, r));
    for (std::size_t j = i + 1; j < r; ++j) {
      if (cfg.m(i, j) > 0) fs.differences.push_back({i, j, cfg.m(i, j)});
    }
  }
  return fs;
}

void merge(ResidueStats& into, const ResidueStats& from) {
  into.steps += from.steps;
  into.max_table = std::max(into.max_table, from.max_table);
  into.pole_bound_flags += from.pole_bound_flags;
}

template <typename T>
void check_excess(const RootConfiguration& cfg, std::span<const T> a) {
  if (a.size() != cfg.rank + 1) throw InputError("excess vector must have one entry per node");
  T sum(0);
  for (const auto& x : a) sum += x;
  if (sgn(sum) != 0) throw InputError("excess vector must sum to zero");
}

std::vector<SpecialPermutation> permutations_for(const RootConfiguration& cfg, const RationalVector& a,
                                                 const ResidueOptions& options) {
  const RationalVector d = deform(a, cfg, default_epsilon(cfg, options.epsilon_divisor));
  const std::span<const BigRational> head(d.data(), cfg.rank);
  if (cfg.rank <= 20 && !is_regular(head)) {
    throw InternalError("deformed excess vector is not regular; epsilon too large");
  }
  return special_permutations(d, cfg.rank);
}

std::vector<std::string> default_names(const RootConfiguration& cfg, std::vector<std::string> names) {
  if (names.empty()) return indexed_names("a", cfg.rank);
  if (names.size() != cfg.rank) throw InputError("need one variable name per independent coordinate");
  return names;
}

}  // namespace

FactorSystem<BigInt> count_factors(const RootConfiguration& cfg, std::span<const BigInt> a) {
  auto fs = pole_skeleton<BigInt>(cfg);
  fs.mode = FactorMode::kCount;
  for (std::size_t i = 0; i < cfg.rank; ++i) {
    fs.numerators[i] = NumeratorFactor<BigInt>::binomial(a[i] + cfg.t[i]);
  }
  return fs;
}

FactorSystem<BigRational> volume_factors(const RootConfiguration& cfg, std::span<const BigRational> a) {
  auto fs = pole_skeleton<BigRational>(cfg);
  fs.mode = FactorMode::kVolume;
  for (std::size_t i = 0; i < cfg.rank; ++i) fs.numerators[i] = NumeratorFactor<BigRational>::exponential(a[i]);
  return fs;
}

FactorSystem<Poly> chamber_factors(const RootConfiguration& cfg, const std::vector<std::string>& names) {
  auto fs = pole_skeleton<Poly>(cfg);
  fs.mode = FactorMode::kSymbolic;
  for (std::size_t i = 0; i < cfg.rank; ++i) {
    fs.numerators[i] = NumeratorFactor<Poly>::binomial(Poly::variable(names, i) + Poly(cfg.t[i]));
  }
  fs.scale = Poly::constant(names, 1);
  return fs;
}

FactorSystem<Poly> volume_polynomial_factors(const RootConfiguration& cfg, const std::vector<std::string>& names) {
  auto fs = pole_skeleton<Poly>(cfg);
  fs.mode = FactorMode::kSymbolic;
  for (std::size_t i = 0; i < cfg.rank; ++i) fs.numerators[i] = NumeratorFactor<Poly>::exponential(Poly::variable(names, i));
  fs.scale = Poly::constant(names, 1);
  return fs;
}

FactorSystem<Poly> ehrhart_factors(const RootConfiguration& cfg, std::span<const BigInt> direction,
                                   const std::string& name) {
  const std::vector<std::string> vars{name};
  auto fs = pole_skeleton<Poly>(cfg);
  fs.mode = FactorMode::kEhrhart;
  const Poly t = Poly::variable(vars, 0);
  for (std::size_t i = 0; i < cfg.rank; ++i) {
    Poly exponent = t;
    exponent *= BigRational(direction[i]);
    exponent += Poly(cfg.t[i]);
    fs.numerators[i] = NumeratorFactor<Poly>::binomial(exponent);
  }
  fs.scale = Poly::constant(vars, 1);
  return fs;
}

template <typename R>
Evaluation<R> residue_sum(const std::vector<SpecialPermutation>& sp, const FactorSystem<R>& fs,
                          const ResidueOptions& options) {
  Evaluation<R> out;
  out.sp_size = sp.size();
  out.value = fs.scale * R(0);
  std::vector<R> terms(sp.size());
  const unsigned workers =
      std::max(1u, std::min<unsigned>(options.workers, static_cast<unsigned>(std::max<std::size_t>(sp.size(), 1))));
  std::vector<ResidueStats> stats(workers);
  std::atomic<std::size_t> next{0};
  auto run = [&](unsigned worker) {
    for (std::size_t k = next++; k < sp.size(); k = next++) {
      R value = iterated_residue<R>(sp[k].w, fs, &stats[worker]);
      if (sp[k].sign() < 0) value = R(0) - value;
      terms[k] = std::move(value);
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          run(w);
        } catch (...) {
          errors[w] = std::current_exception();
          next = sp.size();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  // Fixed summation order keeps the result independent of scheduling.
  for (auto& term : terms) out.value += term;
  for (const auto& s : stats) merge(out.stats, s);
  return out;
}

template Evaluation<BigInt> residue_sum(const std::vector<SpecialPermutation>&, const FactorSystem<BigInt>&,
                                        const ResidueOptions&);
template Evaluation<BigRational> residue_sum(const std::vector<SpecialPermutation>&,
                                             const FactorSystem<BigRational>&, const ResidueOptions&);
template Evaluation<Poly> residue_sum(const std::vector<SpecialPermutation>&, const FactorSystem<Poly>&,
                                      const ResidueOptions&);

Evaluation<BigInt> count(const RootConfiguration& cfg, std::span<const BigInt> a, const ResidueOptions& options) {
  check_excess(cfg, a);
  Evaluation<BigInt> out;
  if (!check_in_cone(a)) return out;
  if (cfg.rank == 0) {
    out.value = 1;
    return out;
  }
  const auto sp = permutations_for(cfg, to_rational(a), options);
  return residue_sum(sp, count_factors(cfg, a), options);
}

Evaluation<BigRational> volume(const RootConfiguration& cfg, std::span<const BigRational> a,
                               const ResidueOptions& options) {
  check_excess(cfg, a);
  Evaluation<BigRational> out;
  if (!check_in_cone(a)) return out;
  if (cfg.rank == 0) {
    out.value = 1;
    return out;
  }
  const auto sp = permutations_for(cfg, RationalVector(a.begin(), a.end()), options);
  return residue_sum(sp, volume_factors(cfg, a), options);
}

namespace {

Evaluation<Poly> symbolic(const RootConfiguration& cfg, std::span<const BigInt> a, const ResidueOptions& options,
                          std::vector<std::string> names, bool exponential) {
  check_excess(cfg, a);
  names = default_names(cfg, std::move(names));
  Evaluation<Poly> out;
  if (!check_in_cone(a)) {
    out.value = Poly::zero(names);
    return out;
  }
  if (cfg.rank == 0) {
    out.value = Poly::constant(names, 1);
    return out;
  }
  const auto sp = permutations_for(cfg, to_rational(a), options);
  auto fs = exponential ? volume_polynomial_factors(cfg, names) : chamber_factors(cfg, names);
  out = residue_sum(sp, fs, options);
  out.value = out.value.with_variables(names);
  return out;
}

}  // namespace

Evaluation<Poly> chamber_polynomial(const RootConfiguration& cfg, std::span<const BigInt> a,
                                    const ResidueOptions& options, std::vector<std::string> names) {
  return symbolic(cfg, a, options, std::move(names), false);
}

Evaluation<Poly> volume_polynomial(const RootConfiguration& cfg, std::span<const BigInt> a,
                                   const ResidueOptions& options, std::vector<std::string> names) {
  return symbolic(cfg, a, options, std::move(names), true);
}

Evaluation<Poly> ehrhart_polynomial(const RootConfiguration& cfg, std::span<const BigInt> direction,
                                    const ResidueOptions& options) {
  check_excess(cfg, direction);
  if (!check_in_cone(direction)) throw InputError("ehrhart: direction lies outside the cone of positive roots");
  const std::vector<std::string> vars{"t"};
  Evaluation<Poly> out;
  if (cfg.rank == 0) {
    out.value = Poly::constant(vars, 1);
    return out;
  }
  const auto sp = permutations_for(cfg, to_rational(direction), options);
  out = residue_sum(sp, ehrhart_factors(cfg, direction), options);
  out.value = out.value.with_variables(vars);
  return out;
}

Evaluation<BigInt> kostant_count(std::span<const BigInt> a, const ResidueOptions& options) {
  if (a.empty()) throw InputError("kostant: empty vector");
  return count(complete_configuration(a.size()), a, options);
}

Evaluation<BigInt> transportation_count(std::span<const BigInt> rows, std::span<const BigInt> cols,
                                        const ResidueOptions& options) {
  if (rows.empty() || cols.empty()) throw InputError("transport: need at least one row and one column");
  Evaluation<BigInt> out;
  BigInt row_sum = 0, col_sum = 0;
  for (const auto& x : rows) {
    if (sgn(x) < 0) return out;
    row_sum += x;
  }
  for (const auto& x : cols) {
    if (sgn(x) < 0) return out;
    col_sum += x;
  }
  if (row_sum != col_sum) return out;
  IntVector a(rows.begin(), rows.end());
  for (const auto& x : cols) a.push_back(-x);
  return count(bipartite_configuration(rows.size(), cols.size()), a, options);
}

}  // namespace flowcount
