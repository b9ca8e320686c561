#include <gtest/gtest.h>

#include <numeric>

#include "hnn/calculus.hpp"
#include "hnn/errors.hpp"
#include "hnn/integer_matrix.hpp"
#include "hnn/polynomial.hpp"
#include "hnn/zd_base.hpp"
#include "support.hpp"

namespace hnn {
namespace {

BaseElement v(std::initializer_list<long long> xs) {
  IntVector out;
  for (long long x : xs) out.emplace_back(x);
  return ZdOracle::vec(out);
}

IntegerMatrix random_matrix(test::Rng& rng, std::size_t d, int spread) {
  IntegerMatrix m(d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) m(r, c) = test::uniform(rng, -spread, spread);
  return m;
}

TEST(IntegerMatrix, ParseAndPrint) {
  const IntegerMatrix m = IntegerMatrix::parse("2,1;1,1");
  EXPECT_EQ(m, (IntegerMatrix{{2, 1}, {1, 1}}));
  EXPECT_EQ(IntegerMatrix::parse(" 0, -1 ; 1 ,1").to_string(), "0,-1;1,1");
  EXPECT_THROW(IntegerMatrix::parse("1,2;3"), ParseError);
  EXPECT_THROW(IntegerMatrix::parse("1,x"), ParseError);
  EXPECT_THROW(IntegerMatrix::parse(""), ParseError);
}

TEST(IntegerMatrix, DeterminantRankKernel) {
  EXPECT_EQ(determinant(IntegerMatrix{{2, 1}, {1, 1}}), 1);
  EXPECT_EQ(determinant(IntegerMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 3}}), -3);
  EXPECT_EQ(rank(IntegerMatrix{{1, 2}, {2, 4}}), 1u);
  const IntVector k = integer_kernel_vector(IntegerMatrix{{2, 4}, {3, 6}});
  ASSERT_EQ(k.size(), 2u);
  EXPECT_EQ(2 * k[0] + 4 * k[1], 0);
  EXPECT_EQ(gcd(k[0], k[1]), 1);
  EXPECT_TRUE(integer_kernel_vector(IntegerMatrix{{2, 1}, {1, 1}}).empty());
}

TEST(IntegerMatrix, LowerBasisSpansTheSameLattice) {
  test::Rng rng(31);
  for (int i = 0; i < 200; ++i) {
    const std::size_t d = test::uniform(rng, 1, 3);
    const IntegerMatrix a = random_matrix(rng, d, 4);
    if (determinant(a) == 0) continue;
    const LatticeBasis lb = lower_hermite_basis(a);
    EXPECT_EQ(a * lb.unimodular, lb.basis);
    EXPECT_EQ(abs(determinant(lb.unimodular)), 1);
    for (std::size_t r = 0; r < d; ++r) {
      EXPECT_GT(lb.basis(r, r), 0);
      for (std::size_t c = r + 1; c < d; ++c) EXPECT_EQ(lb.basis(r, c), 0);
    }
  }
}

TEST(CharacteristicPolynomial, MatchesDeterminantAtIntegers) {
  test::Rng rng(32);
  for (int i = 0; i < 100; ++i) {
    const std::size_t d = test::uniform(rng, 1, 4);
    const IntegerMatrix a = random_matrix(rng, d, 5);
    const std::vector<BigInt> p = characteristic_polynomial(a);
    ASSERT_EQ(p.size(), d + 1);
    EXPECT_EQ(p.back(), 1);
    for (long long x = -3; x <= 3; ++x) {
      // det(x I - A) against the polynomial evaluated at x.
      IntegerMatrix shifted = IntegerMatrix::identity(d);
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) shifted(r, c) = (r == c ? BigInt(x) : BigInt(0)) - a(r, c);
      BigInt value = 0;
      for (std::size_t e = p.size(); e-- > 0;) value = value * x + p[e];
      ASSERT_EQ(value, determinant(shifted));
    }
  }
}

TEST(Cyclotomic, SmallCases) {
  EXPECT_EQ(cyclotomic(1), Polynomial::from_integers({-1, 1}));
  EXPECT_EQ(cyclotomic(2), Polynomial::from_integers({1, 1}));
  EXPECT_EQ(cyclotomic(6), Polynomial::from_integers({1, -1, 1}));
  EXPECT_EQ(cyclotomic(12), Polynomial::from_integers({1, 0, -1, 0, 1}));
  for (unsigned k = 1; k <= 40; ++k) EXPECT_EQ(static_cast<unsigned long long>(cyclotomic(k).degree()), totient(k));
}

TEST(Cyclotomic, TotientCutoffIsExhaustive) {
  // Sieve of Euler's phi far past the cutoff.
  constexpr unsigned kLimit = 20000;
  std::vector<unsigned> phi(kLimit + 1);
  std::iota(phi.begin(), phi.end(), 0u);
  for (unsigned p = 2; p <= kLimit; ++p) {
    if (phi[p] != p) continue;
    for (unsigned q = p; q <= kLimit; q += p) phi[q] -= phi[q] / p;
  }
  for (unsigned k = 1; k <= kLimit; ++k) ASSERT_EQ(totient(k), phi[k]) << k;
  for (std::size_t d = 1; d <= 12; ++d) {
    const unsigned bound = root_of_unity_search_bound(d);
    EXPECT_EQ(bound, 2 * d * d + 1);
    for (unsigned k = bound + 1; k <= kLimit; ++k) ASSERT_GT(phi[k], d) << "d=" << d << " k=" << k;
  }
}

TEST(ZdOracle, MembershipAndPhi) {
  const auto even = make_zd(IntegerMatrix{{2, 0}, {0, 2}});
  EXPECT_FALSE(even->in_K(v({1, 0})));
  EXPECT_TRUE(even->in_K(v({2, 4})));
  EXPECT_TRUE(even->in_H(v({1, 0})));

  const auto cat = make_zd(IntegerMatrix{{2, 1}, {1, 1}});
  EXPECT_EQ(cat->phi(v({1, 0})), v({2, 1}));
  EXPECT_EQ(cat->phi_inv(v({2, 1})), v({1, 0}));
  EXPECT_THROW(make_zd(IntegerMatrix{{1, 2}, {2, 4}}), InvalidArgument);
  EXPECT_THROW(even->phi_inv(v({1, 0})), DomainError);
}

TEST(ZdOracle, TransversalHasDeterminantSize) {
  const auto o = make_zd(IntegerMatrix{{2, 1}, {0, 3}});
  EXPECT_EQ(o->left_transversal(Subgroup::H)->size(), 1u);
  const auto reps = o->left_transversal(Subgroup::K);
  ASSERT_TRUE(reps.has_value());
  EXPECT_EQ(reps->size(), 6u);
  EXPECT_TRUE(o->is_identity(reps->front()));
  // Distinct cosets.
  for (std::size_t i = 0; i < reps->size(); ++i)
    for (std::size_t j = i + 1; j < reps->size(); ++j) EXPECT_FALSE(o->in_K(o->mul((*reps)[i], o->inv((*reps)[j]))));
}

TEST(ZdOracle, LawsHold) {
  test::Rng rng(33);
  for (int i = 0; i < 60; ++i) {
    const std::size_t d = test::uniform(rng, 1, 3);
    const IntegerMatrix m = random_matrix(rng, d, 3);
    if (determinant(m) == 0) continue;
    const auto o = make_zd(m);
    for (int s = 0; s < 40; ++s) {
      const BaseElement x = test::random_base(*o, rng, 20);
      for (Subgroup sg : {Subgroup::H, Subgroup::K}) {
        const Split l = o->split_left(sg, x);
        ASSERT_TRUE(o->contains(sg, l.sub));
        ASSERT_EQ(o->mul(l.sub, l.rep), x);
        ASSERT_EQ(o->is_identity(l.rep), o->contains(sg, x));
        // Same coset gives the same representative.
        const BaseElement shifted = o->mul(o->phi(test::random_base(*o, rng, 5)), x);
        if (sg == Subgroup::K) ASSERT_EQ(o->split_left(sg, shifted).rep, l.rep);
      }
      ASSERT_TRUE(o->in_K(o->phi(x)));
      ASSERT_EQ(o->phi_inv(o->phi(x)), x);
      if (o->in_K(x)) ASSERT_EQ(o->phi(o->phi_inv(x)), x);
    }
  }
}

TEST(ZdWords, ParseAndFormat) {
  const auto o = make_zd(IntegerMatrix{{2, 1}, {1, 1}});
  const HnnWord w = parse_word(*o, "t^-1 e1 t");
  EXPECT_EQ(format_word(*o, britton_reduce(*o, w)), "e1^2 e2");
  EXPECT_EQ(o->format(v({0, 0})), "1");
  EXPECT_EQ(o->format(v({2, -1})), "e1^2 e2^-1");
  EXPECT_THROW(parse_word(*o, "e3"), ParseError);
  EXPECT_THROW(parse_word(*o, "a"), ParseError);
}

TEST(RootOfUnity, Examples) {
  EXPECT_EQ(has_root_of_unity_eigenvalue(IntegerMatrix{{0, -1}, {1, 1}}), 6u);
  EXPECT_EQ(has_root_of_unity_eigenvalue(IntegerMatrix{{1}}), 1u);
  EXPECT_FALSE(has_root_of_unity_eigenvalue(IntegerMatrix{{2, 1}, {1, 1}}).has_value());
  EXPECT_EQ(has_root_of_unity_eigenvalue(IntegerMatrix{{-1}}), 2u);
  EXPECT_EQ(matrix_power(IntegerMatrix{{0, -1}, {1, 1}}, 6), IntegerMatrix::identity(2));
}

TEST(FixedLattice, Examples) {
  EXPECT_EQ(fixed_lattice_rank(IntegerMatrix{{0, -1}, {1, 1}}, 6), 2u);
  for (unsigned j = 1; j <= 6; ++j) EXPECT_EQ(fixed_lattice_rank(IntegerMatrix{{2, 1}, {1, 1}}, j), 0u);
  EXPECT_EQ(fixed_lattice_rank(IntegerMatrix{{1}}, 1), 1u);
}

TEST(RootOfUnity, PeriodBound) {
  EXPECT_EQ(root_of_unity_period_bound(1), 2u);
  EXPECT_EQ(root_of_unity_period_bound(2), 12u);
  EXPECT_EQ(root_of_unity_period_bound(3), 12u);
  EXPECT_EQ(root_of_unity_period_bound(4), 120u);
}

TEST(RootOfUnity, CyclotomicTestMatchesFixedLattices) {
  test::Rng rng(34);
  int checked = 0;
  for (int i = 0; i < 600; ++i) {
    const std::size_t d = test::uniform(rng, 1, 3);
    const IntegerMatrix m = random_matrix(rng, d, 3);
    if (determinant(m) == 0) continue;
    const unsigned long long period = root_of_unity_period_bound(d);
    bool some_fixed = false;
    IntegerMatrix power = IntegerMatrix::identity(d);
    for (unsigned j = 1; j <= period && !some_fixed; ++j) {
      power = power * m;
      some_fixed = rank(power - IntegerMatrix::identity(d)) < d;
    }
    const auto k = has_root_of_unity_eigenvalue(m);
    ASSERT_EQ(k.has_value(), some_fixed) << m.to_string();
    if (k) ASSERT_GT(fixed_lattice_rank(m, *k), 0u) << m.to_string();
    ++checked;
  }
  EXPECT_GT(checked, 300);
}

}  // namespace
}  // namespace hnn
