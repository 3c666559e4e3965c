#include <gtest/gtest.h>

#include <map>
#include <vector>

#include "conifold_dt/flop.hpp"
#include "conifold_dt/oracles.hpp"

using namespace conifold_dt;

namespace {

LaurentMonomial mono(std::vector<int> e) { return LaurentMonomial(std::move(e)); }

}  // namespace

TEST(FlopChainBases, Conifold) {
  const auto bases = flop_chain_bases(1);
  ASSERT_EQ(bases.size(), 2u);
  EXPECT_EQ(bases[0].images, (std::vector<LaurentMonomial>{mono({1})}));
  EXPECT_EQ(bases[1].images, (std::vector<LaurentMonomial>{mono({-1})}));
}

TEST(FlopChainBases, OneThreeTable) {
  const auto bases = flop_chain_bases(3);
  ASSERT_EQ(bases.size(), 4u);
  // R_1 = Q_1^-1, R_2 = Q_2, R_3 = Q_3
  EXPECT_EQ(bases[1].images,
            (std::vector<LaurentMonomial>{mono({-1, 0, 0}), mono({0, 1, 0}), mono({0, 0, 1})}));
  // S_1 = R_1, S_2 = R_2^-1, S_3 = R_3
  EXPECT_EQ(bases[2].images,
            (std::vector<LaurentMonomial>{mono({-1, 0, 0}), mono({0, -1, 0}), mono({0, 0, 1})}));
  // T_3 = S_3^-1
  EXPECT_EQ(bases[3].images,
            (std::vector<LaurentMonomial>{mono({-1, 0, 0}), mono({0, -1, 0}), mono({0, 0, -1})}));
}

TEST(FlopChainBases, RejectsOtherDiagrams) {
  try {
    flop_chain_bases(StripDiagram(2, 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::unsupported_diagram);
  }
  EXPECT_THROW(flop_total(0), Error);
}

TEST(BasisMap, AppliesToProducts) {
  const auto bases = flop_chain_bases(3);
  // S_1 S_2 S_3 = Q_1^-1 Q_2^-1 Q_3
  EXPECT_EQ(bases[2].apply(mono({1, 1, 1})), mono({-1, -1, 1}));
  EXPECT_EQ(bases[2].apply(mono({0, 2, 0})), mono({0, -2, 0}));
}

// The reduced factors of each resolution of C_{1,3}, already written in the
// Q basis, as listed term by term in the reference table.
TEST(FlopContribution, OneThreePerResolution) {
  const auto c = flop_contributions(3);
  ASSERT_EQ(c.size(), 4u);
  const std::vector<std::vector<std::pair<std::vector<int>, int>>> expected = {
      {{{1, 0, 0}, -1}, {{1, 1, 0}, -1}, {{1, 1, 1}, -1}, {{0, 1, 0}, 1}, {{0, 1, 1}, 1}, {{0, 0, 1}, 1}},
      {{{-1, 0, 0}, -1}, {{-1, 1, 0}, 1}, {{-1, 1, 1}, 1}, {{0, 1, 0}, -1}, {{0, 1, 1}, -1}, {{0, 0, 1}, 1}},
      {{{-1, 0, 0}, 1}, {{-1, -1, 0}, -1}, {{-1, -1, 1}, 1}, {{0, -1, 0}, -1}, {{0, -1, 1}, 1}, {{0, 0, 1}, -1}},
      {{{-1, 0, 0}, 1}, {{-1, -1, 0}, 1}, {{-1, -1, -1}, -1}, {{0, -1, 0}, 1}, {{0, -1, -1}, -1}, {{0, 0, -1}, -1}},
  };
  for (std::size_t t = 0; t < 4; ++t) {
    SignedFactorList want(3);
    for (const auto& [m, e] : expected[t]) want.add(mono(m), e);
    want.set_m1_power(2);
    EXPECT_EQ(c[t], want) << "resolution " << t;
  }
}

TEST(FlopTotal, OneThreeMatchesReference) {
  const auto f = flop_total(3);
  EXPECT_EQ(f.m1_power(), 8);
  EXPECT_EQ(f.factors().size(), 12u);
  EXPECT_EQ(f, oracle::flop_c13_reference());
  int up = 0, down = 0;
  for (const auto& [x, e] : f.factors()) (e > 0 ? up : down) += 1;
  EXPECT_EQ(up, 6);
  EXPECT_EQ(down, 6);
  // Not an inverse pairing: Q1^-1 Q2 is upstairs, Q1 Q2^-1 is absent.
  EXPECT_EQ(f.exponent(LaurentMonomial({-1, 1, 0})), 1);
  EXPECT_EQ(f.exponent(LaurentMonomial({1, -1, 0})), 0);
}

// The reference form for the conifold is M(Q_1,q) M(Q_1^-1,q), but each
// conifold resolution contributes M(Q_1,q)^-1 (its two triangulations
// total M(Q_1,q)^-2), so the same chain procedure that reproduces the
// C_{1,3} list gives exponent -1 on both factors here. The +1 signs in
// that form follow the opposite overall sign convention.
TEST(FlopTotal, ConifoldPairsInverseArguments) {
  const auto f = flop_total(1);
  EXPECT_EQ(f.m1_power(), 2);
  ASSERT_EQ(f.factors().size(), 2u);
  EXPECT_EQ(f.exponent(mono({1})), -1);
  EXPECT_EQ(f.exponent(mono({-1})), -1);
}

// Hand computation for the three resolutions {1}, {2}, {3} of C_{1,2}:
//   {1}: Q1^-1-type edge, Q2 '+' : M(Q1)^-1 M(Q1Q2)^-1 M(Q2)
//   {2}: both edges '-', basis (Q1^-1, Q2): M(Q1^-1)^-1 M(Q1^-1Q2) M(Q2)^-1
//   {3}: e1 '+', e2 '-', basis (Q1^-1, Q2^-1): M(Q1^-1) M(Q1^-1Q2^-1)^-1 M(Q2^-1)^-1
// M(Q2) and M(Q1^-1) cancel.
TEST(FlopTotal, OneTwoHandComputed) {
  SignedFactorList want(2);
  want.add(mono({1, 0}), -1);
  want.add(mono({1, 1}), -1);
  want.add(mono({-1, 1}), 1);
  want.add(mono({-1, -1}), -1);
  want.add(mono({0, -1}), -1);
  want.set_m1_power(Rational(9, 2));
  const auto f = flop_total(2);
  EXPECT_EQ(f, want);
  EXPECT_EQ(f.m1_power_times_2(), 9);
}

TEST(FlopTotal, CancellationIsAssociative) {
  for (int n = 1; n <= 8; ++n) {
    const StripDiagram d(1, n);
    const auto chain = flop_chain(d);
    const auto bases = flop_chain_bases(d);
    std::map<LaurentMonomial, BigInt> raw;
    std::size_t contributed = 0;
    for (std::size_t t = 0; t < chain.size(); ++t)
      for (const auto& p : edge_path_list(d)) {
        raw[bases[t].apply(path_monomial(n, p))] += path_sign(chain[t], p);
        ++contributed;
      }
    EXPECT_EQ(contributed, static_cast<std::size_t>(n + 1) * n * (n + 1) / 2);
    std::erase_if(raw, [](const auto& kv) { return kv.second == 0; });
    const auto f = flop_total(n);
    EXPECT_EQ(f.factors(), raw) << n;
    // Reverse-order accumulation.
    SignedFactorList rev(static_cast<std::size_t>(n));
    const auto parts = flop_contributions(n);
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) rev += *it;
    EXPECT_EQ(rev, f);
  }
}
