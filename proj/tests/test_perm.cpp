#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "wreathmono/errors.hpp"
#include "wreathmono/perm.hpp"

using namespace wm;

TEST(Perm, ProductReadsLeftToRight) {
  Perm p = Perm::transposition(3, 0, 1), q = Perm::transposition(3, 0, 2);
  EXPECT_EQ(p * q, Perm::from_cycles(3, {{0, 1, 2}}));
  EXPECT_EQ(to_cycle_string(p * q), "(1,2,3)");
}

TEST(Perm, MatchesComposeOracle) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 200; ++k) {
    Perm p = oracle::random_perm(9, rng), q = oracle::random_perm(9, rng);
    EXPECT_EQ(oracle::images(p * q), oracle::compose(oracle::images(p), oracle::images(q)));
    EXPECT_TRUE((p * p.inverse()).is_identity());
  }
}

TEST(Perm, ConjugateRelabelsCycles) {
  std::mt19937_64 rng(4);
  for (int k = 0; k < 100; ++k) {
    Perm x = oracle::random_perm(8, rng), y = oracle::random_perm(8, rng);
    Perm c = conjugate(x, y);
    EXPECT_EQ(c, y.inverse() * x * y);
    for (Point i = 0; i < 8; ++i) EXPECT_EQ(c[y[i]], y[x[i]]);
    EXPECT_EQ(commutator(x, y), x.inverse() * y.inverse() * x * y);
  }
}

TEST(Perm, OrderAndSignAgreeWithPowers) {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 100; ++k) {
    Perm x = oracle::random_perm(10, rng);
    std::uint64_t o = 1;
    Perm y = x;
    while (!y.is_identity()) y = y * x, ++o;
    EXPECT_EQ(x.order(), o);
    EXPECT_EQ(x.pow(static_cast<long long>(o)), Perm(10));
    EXPECT_EQ(x.pow(-1), x.inverse());
    EXPECT_EQ(x.sign(), (10 - static_cast<int>(oracle::cycles(x))) % 2 == 0 ? 1 : -1);
    EXPECT_EQ(x.num_cycles(), oracle::cycles(x));
  }
}

TEST(Perm, Parsing) {
  EXPECT_EQ(parse_perm("(1,2,3)(4,5)"), Perm::from_cycles(5, {{0, 1, 2}, {3, 4}}));
  EXPECT_EQ(parse_perm("[2,3,1]"), Perm::from_cycles(3, {{0, 1, 2}}));
  EXPECT_EQ(parse_perm("()", 4), Perm(4));
  EXPECT_EQ(to_image_string(Perm::transposition(3, 0, 2)), "[3,2,1]");
  EXPECT_THROW(parse_perm("[1,1,2]"), InvalidInput);
  EXPECT_THROW(parse_perm("(1,2"), InvalidInput);
}

TEST(CycleType, ParseAndPrint) {
  CycleType t = CycleType::parse("[2^3,1^2]");
  EXPECT_EQ(t.parts(), (std::vector<unsigned>{2, 2, 2, 1, 1}));
  EXPECT_EQ(t.degree(), 8u);
  EXPECT_EQ(t.str(), "[2^3,1^2]");
  EXPECT_EQ(t.sign(), -1);
  EXPECT_EQ(CycleType::parse("[3,1,4]").parts(), (std::vector<unsigned>{4, 3, 1}));
  EXPECT_EQ(cycle_type(canonical_perm(t)), t);
  EXPECT_TRUE(CycleType::identity(5).is_identity());
}
