#include <gtest/gtest.h>

#include "flowcount/error.hpp"
#include "flowcount/oracle.hpp"
#include "flowcount/residue.hpp"
#include "support.hpp"

namespace flowcount {
namespace {

using testing::ints;
using testing::load_fixture;
using testing::rats;

RootConfiguration pitman_stanley_config() { return embed(pitman_stanley(3)).config; }

TEST(Cone, PrefixSums) {
  EXPECT_TRUE(check_in_cone(std::span<const BigInt>(ints({1, 0, -1}))));
  EXPECT_FALSE(check_in_cone(std::span<const BigInt>(ints({-1, 0, 1}))));
  EXPECT_TRUE(check_in_cone(std::span<const BigInt>(ints({6, 8, -5, -9}))));
  EXPECT_TRUE(check_in_cone(std::span<const BigInt>(ints({0, 0, 0}))));
}

TEST(Deform, CompleteGraphK4) {
  const auto cfg = complete_configuration(4);
  EXPECT_EQ(default_epsilon(cfg), make_rational(1, 18));
  const auto d = deform(rats({1, 0, -1, 0}), cfg);
  const RationalVector expected{make_rational(379, 324), make_rational(19, 324), make_rational(-341, 324),
                                make_rational(-57, 324)};
  EXPECT_EQ(d, expected);
  BigRational sum = 0;
  for (const auto& x : d) sum += x;
  EXPECT_EQ(sum, 0);
  EXPECT_TRUE(is_regular(std::span<const BigRational>(d.data(), 3)));
}

TEST(Deform, ZeroVectorOnK3) {
  const auto cfg = complete_configuration(3);
  const BigRational eps = make_rational(1, 8);
  const auto d = deform(rats({0, 0, 0}), cfg);
  EXPECT_EQ(d, (RationalVector{eps * 2 + eps * eps, eps * eps, eps * -2 - eps * eps * 2}));
}

TEST(Deform, RegularVectorKeepsItsTope) {
  const auto cfg = complete_configuration(3);
  const auto a = rats({1, 2, -3});
  const auto d = deform(a, cfg);
  // Signs of all subset sums over the first r coordinates agree.
  for (unsigned mask = 1; mask < 4; ++mask) {
    BigRational sa = 0, sd = 0;
    for (unsigned i = 0; i < 2; ++i) {
      if (mask >> i & 1u) {
        sa += a[i];
        sd += d[i];
      }
    }
    EXPECT_EQ(sgn(sa), sgn(sd));
  }
}

TEST(Deform, RegularityCheck) {
  EXPECT_FALSE(is_regular(rats({1, -1, 2})));
  EXPECT_FALSE(is_regular(rats({0, 3})));
  EXPECT_TRUE(is_regular(rats({1, 2, 4})));
}

TEST(SpecialPermutations, PositiveVectorGivesIdentity) {
  const auto sp = special_permutations(rats({1, 2, 3, -6}), 3);
  ASSERT_EQ(sp.size(), 1u);
  EXPECT_EQ(sp[0].w, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(sp[0].sign(), 1);
}

TEST(SpecialPermutations, RankTwoMixedSigns) {
  const auto cfg = complete_configuration(3);
  const auto sp = special_permutations(deform(rats({1, -2, 1}), cfg), 2);
  ASSERT_EQ(sp.size(), 2u);
  EXPECT_EQ(sp[0].w, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(sp[0].sign(), 1);
  EXPECT_EQ(sp[1].w, (std::vector<std::size_t>{1, 0}));
  EXPECT_EQ(sp[1].sign(), -1);
}

TEST(SpecialPermutations, DescentsMatchPermutation) {
  const auto cfg = complete_configuration(6);
  const auto sp = special_permutations(deform(rats({3, -2, 2, 5, -4, -4}), cfg), 5);
  ASSERT_FALSE(sp.empty());
  for (const auto& p : sp) {
    unsigned descents = 0;
    for (std::size_t i = 0; i + 1 < p.w.size(); ++i) descents += p.w[i] > p.w[i + 1] ? 1 : 0;
    EXPECT_EQ(descents, p.descents);
  }
}

TEST(SpecialPermutations, TenNodeVector) {
  const auto cfg = complete_configuration(10);
  const auto a = ints({30201, 59791, 70017, 41731, 58270, -81016, -68993, -47000, -43001, -20000});
  EXPECT_EQ(special_permutations(deform(to_rational(a), cfg), 9).size(), 9572u);
}

FactorSystem<BigRational> simple_fraction(const std::vector<std::size_t>& w) {
  // 1 / ((z_w1 - z_w2) ... (z_w(r-1) - z_wr) z_wr)
  FactorSystem<BigRational> fs(w.size());
  fs.mode = FactorMode::kVolume;
  fs.monomial_poles[w.back()] = 1;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) fs.differences.push_back({w[i], w[i + 1], 1});
  return fs;
}

TEST(IteratedResidue, SimpleFractionExamples) {
  const std::vector<std::size_t> id{0, 1}, swap{1, 0};
  EXPECT_EQ(iterated_residue<BigRational>(id, simple_fraction(id)), 1);
  EXPECT_EQ(iterated_residue<BigRational>(id, simple_fraction(swap)), 0);
}

TEST(IteratedResidue, CompleteGraphK3) {
  const auto cfg = complete_configuration(3);
  const auto a = ints({1, 1, -2});
  const std::vector<std::size_t> id{0, 1};
  // (1+z1)^2 (1+z2) / (z1 z2 (z1 - z2)): the coefficient extraction gives 2.
  EXPECT_EQ(iterated_residue<BigInt>(id, count_factors(cfg, a)), 2);
  EXPECT_EQ(brute_count(testing::make_network({1, 1, -2}, {{1, 2}, {1, 3}, {2, 3}})), 2);
}

TEST(IteratedResidue, RejectsMalformedInput) {
  FactorSystem<BigInt> fs(2);
  EXPECT_THROW(iterated_residue<BigInt>(std::vector<std::size_t>{0, 0}, fs), InputError);
  EXPECT_THROW(iterated_residue<BigInt>(std::vector<std::size_t>{0}, fs), InputError);
  fs.differences.push_back({1, 1, 1});
  EXPECT_THROW(iterated_residue<BigInt>(std::vector<std::size_t>{0, 1}, fs), InputError);
}

TEST(Count, CompleteGraphK4) {
  const auto cfg = complete_configuration(4);
  EXPECT_EQ(count(cfg, ints({6, 8, -5, -9})).value, 223);
  EXPECT_EQ(count(cfg, ints({9, 11, -12, -8})).value, 330);
  EXPECT_EQ(count(cfg, ints({1000, 1, -1000, -1})).value, 3002);
  EXPECT_EQ(count(cfg, ints({4383, -886, -2777, -720})).value, 785528058);
  EXPECT_EQ(to_string(count(cfg, ints({69295, 62008, -28678, -102625})).value), "179777378508547");
}

TEST(Count, SmallCases) {
  EXPECT_EQ(count(complete_configuration(3), ints({1, 0, -1})).value, 2);
  EXPECT_EQ(count(complete_configuration(5), ints({0, 0, 0, 0, 0})).value, 1);
  EXPECT_EQ(count(pitman_stanley_config(), ints({0, 0, 0})).value, 1);
  const auto outside = count(complete_configuration(3), ints({-1, 0, 1}));
  EXPECT_EQ(outside.value, 0);
  EXPECT_EQ(outside.sp_size, 0u);
  EXPECT_THROW(count(complete_configuration(3), ints({1, 0, 0})), InputError);
  EXPECT_THROW(count(complete_configuration(3), ints({1, -1})), InputError);
}

TEST(Count, CompleteGraphK6HasOneSpecialPermutation) {
  const auto e = kostant_count(ints({1, 2, 3, 4, 5, -15}));
  EXPECT_EQ(e.value, 5880);
  EXPECT_EQ(e.sp_size, 1u);
}

TEST(Count, ParallelMatchesSerial) {
  const auto cfg = complete_configuration(5);
  const auto a = ints({125, 50, -75, -33, -67});
  ResidueOptions par;
  par.workers = 4;
  EXPECT_EQ(count(cfg, a, par).value, count(cfg, a).value);
  EXPECT_EQ(count(cfg, a, par).value, 6950747024);
}

TEST(Count, PoleBoundCrossCheckIsRecorded) {
  const auto e = count(complete_configuration(5), ints({763, 41, -227, -89, -488}));
  EXPECT_EQ(e.stats.steps, e.sp_size * 4);
  EXPECT_EQ(e.stats.pole_bound_flags, 0u);
}

TEST(Kostant, ZeilbergerProducts) {
  for (long r = 3; r <= 6; ++r) {
    IntVector a;
    for (long i = 1; i <= r; ++i) a.emplace_back(i);
    a.emplace_back(-r * (r + 1) / 2);
    BigInt expected = 1;
    for (long i = 1; i <= r; ++i) {
      BigInt num, d1, d2;
      mpz_fac_ui(num.get_mpz_t(), 2 * i);
      mpz_fac_ui(d1.get_mpz_t(), i);
      mpz_fac_ui(d2.get_mpz_t(), i + 1);
      expected *= num / (d1 * d2);
    }
    EXPECT_EQ(kostant_count(a).value, expected) << "r=" << r;
  }
}

TEST(Transportation, FourByFourMargins) {
  EXPECT_EQ(to_string(transportation_count(ints({220, 215, 93, 64}), ints({108, 286, 71, 127})).value),
            "1225914276768514");
  EXPECT_EQ(transportation_count(ints({1, 1}), ints({1, 1})).value, 2);
  EXPECT_EQ(transportation_count(ints({2, 1}), ints({1, 1})).value, 0);
  EXPECT_EQ(transportation_count(ints({-1, 1}), ints({0, 0})).value, 0);
  EXPECT_EQ(transportation_count(ints({0, 0}), ints({0, 0, 0})).value, 1);
}

TEST(Volume, PitmanStanley) {
  const auto cfg = pitman_stanley_config();
  EXPECT_EQ(volume(cfg, rats({1, 1, -2})).value, make_rational(3, 2));
  EXPECT_EQ(volume(cfg, rats({0, 0, 0})).value, 0);
  EXPECT_EQ(volume(cfg, rats({-1, 0, 1})).value, 0);
}

TEST(Volume, MatchesEhrhartLeadingCoefficientOnK4) {
  const auto cfg = complete_configuration(4);
  const auto a = ints({6, 8, -5, -9});
  const Poly ehr = ehrhart_polynomial(cfg, a).value;
  EXPECT_EQ(ehr.degree(), 3);
  EXPECT_EQ(ehr.coefficient({3}), volume(cfg, to_rational(a)).value);
}

TEST(ChamberPolynomial, PitmanStanleyNiceChamber) {
  const auto e = chamber_polynomial(pitman_stanley_config(), ints({1, 1, -2}));
  EXPECT_EQ(e.value.to_string(), "1/2*a1^2 + a1*a2 + 3/2*a1 + a2 + 1");
  EXPECT_EQ(e.sp_size, 1u);
  EXPECT_EQ(e.value.evaluate(rats({1, 0})), 3);
  EXPECT_EQ(e.value.evaluate(rats({2, 1})), 9);
  EXPECT_EQ(brute_count(testing::make_network({1, 0, -1}, {{1, 2}, {1, 3}, {2, 3}, {2, 3}})), 3);
  EXPECT_EQ(brute_count(testing::make_network({2, 1, -3}, {{1, 2}, {1, 3}, {2, 3}, {2, 3}})), 9);
}

TEST(ChamberPolynomial, CompleteGraphK3NiceChamber) {
  const auto p = chamber_polynomial(complete_configuration(3), ints({1, 1, -2})).value;
  EXPECT_EQ(p.to_string(), "a1 + 1");
  EXPECT_EQ(p.degree(), 1);
  EXPECT_EQ(p.evaluate(rats({1, 1})), 2);
}

TEST(ChamberPolynomial, CustomNamesAndOutsideCone) {
  const auto p = chamber_polynomial(complete_configuration(3), ints({1, 1, -2}), {}, {"x", "y"}).value;
  EXPECT_EQ(p.to_string(), "x + 1");
  EXPECT_TRUE(chamber_polynomial(complete_configuration(3), ints({-1, 0, 1})).value.is_zero());
}

TEST(VolumePolynomial, PitmanStanley) {
  const auto p = volume_polynomial(pitman_stanley_config(), ints({1, 1, -2})).value;
  EXPECT_EQ(p.to_string(), "1/2*a1^2 + a1*a2");
}

TEST(Ehrhart, CompleteGraphK6FactoredForm) {
  const std::vector<std::string> vars{"t"};
  const Poly t = Poly::variable(vars, 0);
  auto lin = [&](long a, long b) { return t * Poly(a) + Poly(b); };
  Poly quintic = Poly::constant(vars, 0);
  const long c[] = {5040, 50574, 184639, 307649, 233897, 64921};
  Poly power = Poly::constant(vars, 1);
  for (long k : c) {
    quintic += power * Poly(k);
    power = power * t;
  }
  Poly expected = lin(6, 1) * lin(1, 4) * lin(1, 3) * lin(1, 2) * lin(1, 1) * quintic;
  expected *= make_rational(1, 120960);
  const auto e = ehrhart_polynomial(complete_configuration(6), ints({1, 2, 3, 4, 5, -15}));
  EXPECT_EQ(e.value, expected);
  EXPECT_EQ(e.value.constant_term(), 1);
  EXPECT_EQ(e.value.evaluate(rats({1})), 5880);
}

TEST(Ehrhart, K4ValueAtOne) {
  const Poly p = ehrhart_polynomial(complete_configuration(4), ints({6, 8, -5, -9})).value;
  EXPECT_EQ(p.evaluate(rats({1})), 223);
  EXPECT_EQ(p.constant_term(), 1);
  EXPECT_THROW(ehrhart_polynomial(complete_configuration(3), ints({-1, 0, 1})), InputError);
}

TEST(Pipeline, NetworkEntryPoints) {
  EXPECT_EQ(count_network(load_fixture("k4.json")).value, 223);
  EXPECT_EQ(count_network(load_fixture("two_components.json")).value, 6);
  EXPECT_EQ(count_network(load_fixture("g1.json")).value, 0);
  EXPECT_EQ(count_network(load_fixture("cap_cycle_square.json")).value,
            brute_count(load_fixture("cap_cycle_square.json")));
  EXPECT_EQ(volume_network(load_fixture("pitman_stanley3.json")).value, make_rational(3, 2));
  EXPECT_EQ(polynomial_network(load_fixture("pitman_stanley3.json")).value.to_string(),
            "1/2*a_1^2 + a_1*a_2 + 3/2*a_1 + a_2 + 1");
  EXPECT_EQ(ehrhart_network(load_fixture("pitman_stanley3.json")).value.evaluate(rats({1})), 5);
  EXPECT_THROW(count_network(load_fixture("nonzero_sum.json")), InputError);
  EXPECT_THROW(count_network(load_fixture("cyclic_uncapacitated.json")), InputError);
  EXPECT_THROW(polynomial_network(load_fixture("g1.json")), InputError);
  EXPECT_THROW(polynomial_network(load_fixture("two_components.json")), InputError);
}

TEST(Pipeline, UnbalancedComponentCountsZero) {
  const Network net = testing::make_network({1, -1, 2, -2}, {{1, 3}, {2, 4}});
  EXPECT_EQ(count_network(net).value, 0);
  EXPECT_EQ(brute_count(net), 0);
  EXPECT_THROW(ehrhart_network(net), InputError);
}

TEST(Pipeline, EhrhartOfCapacitatedNetworkMatchesDilatedCounts) {
  const Network net = load_fixture("cap_cycle_triangle.json");
  const Poly p = ehrhart_network(net).value;
  for (long t = 0; t <= 3; ++t) {
    std::vector<Node> nodes = net.nodes();
    std::vector<Arc> arcs = net.arcs();
    for (auto& n : nodes) n.excess *= t;
    for (auto& a : arcs) *a.capacity *= std::max(t, 1L);
    if (t == 0) {
      EXPECT_EQ(p.evaluate(rats({0})), 1);
      continue;
    }
    const Network dilated(std::move(nodes), std::move(arcs));
    EXPECT_EQ(p.evaluate(rats({t})), brute_count(dilated)) << "t=" << t;
  }
}

}  // namespace
}  // namespace flowcount
