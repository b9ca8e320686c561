#include <gtest/gtest.h>

#include <algorithm>

#include "hnn/analysis.hpp"
#include "hnn/calculus.hpp"
#include "hnn/errors.hpp"
#include "support.hpp"

namespace hnn {
namespace {

std::vector<std::string> formatted(const Group& g, const std::vector<HnnWord>& ws) {
  std::vector<std::string> out;
  for (const HnnWord& w : ws) out.push_back(g.format(w));
  return out;
}

std::vector<std::string> formatted(const Group& g, const std::vector<NormalForm>& ws) {
  std::vector<std::string> out;
  for (const NormalForm& w : ws) out.push_back(format_word(g.oracle(), w));
  return out;
}

std::vector<std::string> exponents(const FolnerChain& c) {
  std::vector<std::string> out;
  for (const BaseElement& h : c.elements) out.push_back(to_string(BsOracle::exponent(h)));
  return out;
}

TEST(IccBs, Examples) {
  EXPECT_EQ(icc_decide_bs(2, 3).status, IccStatus::Icc);
  EXPECT_TRUE(icc_decide_bs(2, 3).witness.empty());

  const Group g22 = Group::bs(2, 2);
  const IccVerdict v22 = icc_decide_bs(2, 2);
  EXPECT_EQ(v22.status, IccStatus::NotIcc);
  EXPECT_EQ(formatted(g22, v22.witness), (std::vector<std::string>{"b^2"}));

  const Group g33 = Group::bs(3, -3);
  const IccVerdict v33 = icc_decide_bs(3, -3);
  EXPECT_EQ(v33.status, IccStatus::NotIcc);
  EXPECT_EQ(formatted(g33, v33.witness), (std::vector<std::string>{"b^-3", "b^3"}));

  EXPECT_THROW(icc_decide_bs(0, 2), InvalidArgument);
}

TEST(IccBs, GridMatchesAbsoluteValuePredicate) {
  for (int m = -6; m <= 6; ++m) {
    for (int n = -6; n <= 6; ++n) {
      if (m == 0 || n == 0) continue;
      const IccVerdict v = icc_decide_bs(m, n);
      EXPECT_EQ(v.status == IccStatus::Icc, std::abs(m) != std::abs(n)) << m << "," << n;
      EXPECT_NE(v.status, IccStatus::Empirical);
      if (v.status == IccStatus::NotIcc) EXPECT_TRUE(is_closed_finite_class(Group::bs(m, n), v.witness));
    }
  }
}

TEST(IccZd, Examples) {
  const Group hex = Group::zd(IntegerMatrix{{0, -1}, {1, 1}});
  const IccVerdict v = icc_decide(hex);
  EXPECT_EQ(v.status, IccStatus::NotIcc);
  EXPECT_GE(v.witness.size(), 1u);
  EXPECT_LE(v.witness.size(), 6u);
  EXPECT_TRUE(is_closed_finite_class(hex, v.witness));

  EXPECT_EQ(icc_decide_zd(IntegerMatrix{{2, 1}, {1, 1}}).status, IccStatus::Icc);

  const Group one = Group::zd(IntegerMatrix{{1}});
  const IccVerdict trivial = icc_decide(one);
  EXPECT_EQ(trivial.status, IccStatus::NotIcc);
  ASSERT_EQ(trivial.witness.size(), 1u);
  EXPECT_EQ(trivial.witness[0].t_length(), 0u);
  EXPECT_FALSE(is_trivial(one.oracle(), trivial.witness[0]));

  EXPECT_THROW(icc_decide_zd(IntegerMatrix{{1, 1}, {1, 1}}), InvalidArgument);
}

TEST(IccWitness, RejectsNonClasses) {
  const Group g = Group::bs(2, 3);
  EXPECT_FALSE(is_closed_finite_class(g, {g.parse("b^2")}));
  EXPECT_FALSE(is_closed_finite_class(g, {}));
  EXPECT_FALSE(is_closed_finite_class(Group::bs(2, 2), {g.parse("1")}));
  EXPECT_FALSE(is_closed_finite_class(Group::bs(2, -2), {g.parse("b^2")}));
}

TEST(FixedPointFreeHypothesis, Examples) {
  EXPECT_TRUE(thm1_hypothesis_bs(2, 3, 10));
  EXPECT_FALSE(thm1_hypothesis_bs(2, -2, 2));
  EXPECT_TRUE(thm1_hypothesis_bs(2, -2, 1));
  EXPECT_FALSE(thm1_hypothesis_bs(2, 2, 1));
}

TEST(FixedPointFreeHypothesis, GridMatchesAbsoluteValuePredicate) {
  for (int m = -6; m <= 6; ++m)
    for (int n = -6; n <= 6; ++n)
      if (m && n) EXPECT_EQ(thm1_hypothesis_bs(m, n, 12), std::abs(m) != std::abs(n)) << m << "," << n;
}

TEST(Orbit, CentralAndDegenerateCases) {
  const Group g22 = Group::bs(2, 2);
  for (unsigned r : {0u, 1u, 3u, 6u})
    EXPECT_EQ(formatted(g22, orbit_sample(g22, g22.parse("b^2"), r)), (std::vector<std::string>{"b^2"}));
  const Group g2m2 = Group::bs(2, -2);
  EXPECT_EQ(formatted(g2m2, orbit_sample(g2m2, g2m2.parse("b^2"), 1)), (std::vector<std::string>{"b^-2", "b^2"}));
  EXPECT_EQ(formatted(g2m2, orbit_sample(g2m2, g2m2.parse("b^2"), 6)), (std::vector<std::string>{"b^-2", "b^2"}));
}

TEST(Orbit, Bs23ContainsExpectedConjugates) {
  const Group g = Group::bs(2, 3);
  const auto orbit = formatted(g, orbit_sample(g, g.parse("b^3"), 4));
  EXPECT_GE(orbit.size(), 3u);
  for (const char* w : {"b^3", "b^2", "a^-1 b^2 a"})
    EXPECT_NE(std::find(orbit.begin(), orbit.end(), w), orbit.end()) << w;
  EXPECT_TRUE(std::is_sorted(orbit.begin(), orbit.end()));
}

TEST(Orbit, GrowsStrictlyInIccGroups) {
  for (auto [m, n] : {std::pair{2, 3}, std::pair{1, 2}, std::pair{3, -2}}) {
    const Group g = Group::bs(m, n);
    for (const std::string x : {std::string("b"), "b^" + std::to_string(n), std::string("a")}) {
      std::size_t previous = 0, at_even = 0;
      for (unsigned r = 0; r <= 6; ++r) {
        const std::size_t size = orbit_sample(g, g.parse(x), r).size();
        EXPECT_GE(size, previous) << g.describe() << " " << x << " r=" << r;
        if (r >= 2 && r % 2 == 0) {
          EXPECT_GT(size, at_even) << g.describe() << " " << x << " r=" << r;
          at_even = size;
        }
        previous = size;
      }
    }
  }
}

TEST(Orbit, ProbeReportsEvidence) {
  const Group g = Group::bs(2, 3);
  const unsigned radii[] = {1, 2, 3};
  const IccVerdict v = icc_probe(g, g.parse("b"), radii);
  EXPECT_EQ(v.status, IccStatus::Empirical);
  ASSERT_EQ(v.evidence.size(), 3u);
  EXPECT_EQ(v.evidence[1].radius, 2u);
  EXPECT_LT(v.evidence[0].orbit_size, v.evidence[2].orbit_size);
}

TEST(Folner, BsExponents) {
  EXPECT_EQ(exponents(folner_chain_bs(2, 3, 2)), (std::vector<std::string>{"54", "36", "24"}));
  EXPECT_EQ(exponents(folner_chain_bs(2, 3, 1)), (std::vector<std::string>{"18", "12"}));
  EXPECT_EQ(exponents(folner_chain_bs(2, 2, 2)), (std::vector<std::string>{"16", "16", "16"}));
  EXPECT_THROW(folner_chain_bs(2, 3, 0), InvalidArgument);
}

TEST(Folner, LongChainsVerifyWithBigExponents) {
  for (unsigned k : {10u, 30u, 50u}) EXPECT_NO_THROW(verify_folner_chain(*make_bs(2, 3), folner_chain_bs(2, 3, k), true));
  // 2 * 3^51 is far beyond 64 bits.
  EXPECT_EQ(BsOracle::exponent(folner_chain_bs(2, 3, 50).elements.front()), 2 * pow(BigInt(3), 51));
}

TEST(Folner, VerificationCatchesBrokenChains) {
  FolnerChain c = folner_chain_bs(2, 3, 3);
  c.elements[2] = BsOracle::b(BsOracle::exponent(c.elements[2]) + 6);
  EXPECT_THROW(verify_folner_chain(*make_bs(2, 3), c, true), InternalError);
}

TEST(Folner, AscendingChains) {
  const Group cat = Group::zd(IntegerMatrix{{2, 1}, {1, 1}});
  const BaseOracle& o = cat.oracle();
  const FolnerChain c = folner_chain_ascending(o, o.generators().front(), 2);
  std::vector<std::string> got;
  for (const BaseElement& h : c.elements) got.push_back(o.format(h));
  EXPECT_EQ(got, (std::vector<std::string>{"e1", "e1^2 e2", "e1^5 e2^3"}));

  // phi(b^k) = b^{2k} on H = Z: m = 2, n = 1 in the a b^m a^-1 = b^n convention.
  const Group bs21 = Group::bs(2, 1);
  const FolnerChain d = folner_chain_ascending(bs21.oracle(), BsOracle::b(1), 2);
  EXPECT_EQ(exponents(d), (std::vector<std::string>{"1", "2", "4"}));

  EXPECT_THROW(folner_chain_ascending(o, o.identity(), 2), InvalidArgument);
  EXPECT_THROW(folner_chain_ascending(Group::bs(2, 3).oracle(), BsOracle::b(1), 2), HypothesisError);
}

TEST(Folner, RatiosAtKTen) {
  const Group g = Group::bs(2, 3);
  const FolnerChain c = folner_chain_bs(2, 3, 10);
  EXPECT_EQ(symdiff_ratio(g.oracle(), c, g.parse("b")), ExactRatio(0));
  EXPECT_EQ(symdiff_ratio(g.oracle(), c, g.parse("a")), ExactRatio(2, 9));
  EXPECT_EQ(symdiff_ratio(g.oracle(), c, g.parse("a^2")), ExactRatio(4, 9));
  EXPECT_EQ(to_string(ExactRatio(2, 9)), "2/9");
  EXPECT_EQ(to_string(ExactRatio(0)), "0/1");
}

TEST(Folner, RatioIsBoundedByLength) {
  const Group g = Group::bs(2, 3);
  test::Rng rng(41);
  for (unsigned k : {5u, 10u, 20u}) {
    const FolnerChain c = folner_chain_bs(2, 3, k);
    for (int i = 0; i < 100; ++i) {
      const HnnWord w = test::random_word(g, rng, 5);
      const ExactRatio bound(2 * static_cast<long long>(length(g.oracle(), w)), k - 1);
      ASSERT_LE(symdiff_ratio(g.oracle(), c, w), bound) << g.format(w) << " k=" << k;
    }
  }
}

TEST(Escape, Examples) {
  const Group g = Group::bs(2, 3);
  EXPECT_EQ(escape_exponent(g, {g.parse("b")}, 10).exponent, 1u);
  EXPECT_EQ(escape_exponent(g, {g.parse("b^3")}, 10).exponent, 2u);
  const Group g24 = Group::bs(2, 4);
  EXPECT_NO_THROW(escape_exponent(g24, {g24.parse("b^4")}, 10));
  const Group g42 = Group::bs(4, 2);
  EXPECT_THROW(escape_exponent(g42, {g42.parse("b^2")}, 10), HypothesisError);
  EXPECT_THROW(escape_exponent(g, {g.parse("1")}, 10), InvalidArgument);
  EXPECT_THROW(escape_exponent(g, {g.parse("b^81")}, 2), ExhaustedError);
  EXPECT_FALSE(escape_hypothesis_bs(4, 2));
  EXPECT_TRUE(escape_hypothesis_bs(2, 4));
}

TEST(Escape, Persists) {
  const Group g = Group::bs(2, 3);
  const BaseOracle& o = g.oracle();
  test::Rng rng(42);
  // Base elements, the setting in which escape is permanent.
  for (int i = 0; i < 60; ++i) {
    std::vector<HnnWord> f;
    for (int s = 0; s < 3; ++s) {
      const long long z = test::uniform(rng, 1, 300) * (test::uniform(rng, 0, 1) ? 1 : -1);
      f.push_back(base_word(BsOracle::b(z)));
    }
    const unsigned n0 = escape_exponent(g, f, 64).exponent;
    for (unsigned n = n0; n <= n0 + 5; ++n) {
      const HnnWord an = power(o, g.parse("a"), n);
      for (const HnnWord& x : f) ASSERT_GE(length(o, conjugate(o, inv(o, an), x)), 1u);
    }
  }
}

}  // namespace
}  // namespace hnn
