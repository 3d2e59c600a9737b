#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "flowcount/algebra/number.hpp"
#include "flowcount/algebra/poly.hpp"
#include "flowcount/network.hpp"
#include "flowcount/residue/iterated.hpp"

namespace flowcount {

struct ResidueOptions {
  /// Worker threads for the sum over special permutations (0 or 1: serial).
  unsigned workers = 1;
  /// The deformation uses epsilon = 1 / (2 m r^2 * epsilon_divisor).
  unsigned long epsilon_divisor = 1;
};

/// A permutation w of {0..r-1} (w[i] is the variable eliminated at
/// position i+1) together with its descent count.
struct SpecialPermutation {
  std::vector<std::size_t> w;
  unsigned descents = 0;
  int sign() const { return descents % 2 == 0 ? 1 : -1; }
};

/// All prefix sums a_1 + ... + a_i for i = 1..r are >= 0, where the vector
/// has length r+1 (the last coordinate is ignored).
bool check_in_cone(std::span<const BigInt> a);
bool check_in_cone(std::span<const BigRational> a);

BigRational default_epsilon(const RootConfiguration& cfg, unsigned long divisor = 1);

/// a + eps * (sum of all roots with multiplicity) + eps^2 (e_1 + ... + e_r - r e_{r+1}).
RationalVector deform(std::span<const BigRational> a, const RootConfiguration& cfg,
                      const BigRational& epsilon);
RationalVector deform(std::span<const BigRational> a, const RootConfiguration& cfg);

/// No nonempty subset of the first r coordinates sums to zero.
bool is_regular(std::span<const BigRational> d);

/// Permutations admitted by the prefix-sum sign pattern of d (length >= r),
/// in lexicographic order. The sign of each is (-1)^descents.
std::vector<SpecialPermutation> special_permutations(std::span<const BigRational> d, std::size_t r);

/// Factor systems over the z-variables. All share the poles
/// z_i^{-m_{i,r+1}} (z_i - z_j)^{-m_ij}.
FactorSystem<BigInt> count_factors(const RootConfiguration& cfg, std::span<const BigInt> a);
FactorSystem<BigRational> volume_factors(const RootConfiguration& cfg, std::span<const BigRational> a);
/// Numerators (1+z_i)^{a_i + t_i} with a_i symbolic.
FactorSystem<Poly> chamber_factors(const RootConfiguration& cfg, const std::vector<std::string>& names);
/// Numerators exp(a_i z_i) with a_i symbolic.
FactorSystem<Poly> volume_polynomial_factors(const RootConfiguration& cfg,
                                             const std::vector<std::string>& names);
/// Numerators (1+z_i)^{d_i t + t_i}.
FactorSystem<Poly> ehrhart_factors(const RootConfiguration& cfg, std::span<const BigInt> direction,
                                   const std::string& name = "t");

template <typename R>
struct Evaluation {
  R value{};
  /// |Sp(def(a))|; 0 when no residue was computed (e.g. a outside the cone).
  std::size_t sp_size = 0;
  ResidueStats stats;
};

/// Signed sum of iterated residues over the given permutations.
template <typename R>
Evaluation<R> residue_sum(const std::vector<SpecialPermutation>& sp, const FactorSystem<R>& fs,
                          const ResidueOptions& options = {});

/// Number of lattice points of the flow polytope (excess vector a of length r+1).
Evaluation<BigInt> count(const RootConfiguration& cfg, std::span<const BigInt> a,
                         const ResidueOptions& options = {});
/// Lattice-normalized volume for a rational excess vector.
Evaluation<BigRational> volume(const RootConfiguration& cfg, std::span<const BigRational> a,
                               const ResidueOptions& options = {});
/// Polynomial in a_1..a_r (named by `names`, default a1..ar) that counts
/// lattice points on the closed chamber containing def(a).
Evaluation<Poly> chamber_polynomial(const RootConfiguration& cfg, std::span<const BigInt> a,
                                    const ResidueOptions& options = {},
                                    std::vector<std::string> names = {});
/// Volume polynomial of the same chamber (homogeneous of degree N - r).
Evaluation<Poly> volume_polynomial(const RootConfiguration& cfg, std::span<const BigInt> a,
                                   const ResidueOptions& options = {},
                                   std::vector<std::string> names = {});
/// Polynomial in t counting lattice points of the dilates t * P(direction).
Evaluation<Poly> ehrhart_polynomial(const RootConfiguration& cfg, std::span<const BigInt> direction,
                                    const ResidueOptions& options = {});

/// Kostant partition function of A_r for the vector a (length r+1).
Evaluation<BigInt> kostant_count(std::span<const BigInt> a, const ResidueOptions& options = {});
/// Nonnegative integer m x n matrices with the given row and column sums.
Evaluation<BigInt> transportation_count(std::span<const BigInt> rows, std::span<const BigInt> cols,
                                        const ResidueOptions& options = {});

/// Network-level entry points. Capacitated or cyclic networks are reduced
/// first; disconnected networks are evaluated per component.
Evaluation<BigInt> count_network(const Network& net, const ResidueOptions& options = {});
Evaluation<BigRational> volume_network(const Network& net, const ResidueOptions& options = {});
/// Requires a connected acyclic uncapacitated network; variables are
/// named a_<node id> in embedding order (the last node is dependent).
Evaluation<Poly> polynomial_network(const Network& net, const ResidueOptions& options = {});
Evaluation<Poly> ehrhart_network(const Network& net, const ResidueOptions& options = {});

}  // namespace flowcount
