#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "wreathmono/group.hpp"

using namespace wm;

TEST(Group, OrderMatchesClosure) {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 40; ++k) {
    std::size_t n = 3 + k % 4;
    std::vector<Perm> gens{oracle::random_perm(n, rng)};
    if (k % 3) gens.push_back(oracle::random_perm(n, rng));
    PermGroup g(n, gens);
    EXPECT_EQ(g.order(), BigInt(oracle::closure(gens).size()));
  }
}

TEST(Group, MembershipMatchesClosure) {
  // dihedral group of the square inside S_4
  std::vector<Perm> gens{Perm::from_cycles(4, {{0, 1, 2, 3}}), Perm::from_cycles(4, {{0, 2}})};
  PermGroup g(4, gens);
  auto els = oracle::closure(gens);
  std::vector<Point> v{0, 1, 2, 3};
  do {
    Perm p(v);
    EXPECT_EQ(g.contains(p), els.count(oracle::images(p)) == 1);
  } while (std::next_permutation(v.begin(), v.end()));
}

TEST(Group, SymmetricAndAlternating) {
  Perm c = Perm::from_cycles(9, {{0, 1, 2, 3, 4, 5, 6, 7, 8}}), t = Perm::transposition(9, 0, 1);
  PermGroup s9(9, {c, t});
  EXPECT_EQ(s9.order(), factorial(9));
  EXPECT_TRUE(contains_alternating(s9));
  PermGroup a9(9, {Perm::from_cycles(9, {{0, 1, 2}}), Perm::from_cycles(9, {{2, 3, 4, 5, 6, 7, 8}})});
  EXPECT_EQ(a9.order(), factorial(9) / 2);
  PermGroup cyc(9, {c});
  EXPECT_FALSE(contains_alternating(cyc));
  EXPECT_EQ(factorial(20), BigInt("2432902008176640000"));
}

TEST(Group, OrbitsAndBlocks) {
  std::vector<Perm> gens{Perm::from_cycles(6, {{0, 1}, {2, 3}})};
  EXPECT_EQ(orbits(6, gens).size(), oracle::num_orbits(6, gens));
  EXPECT_FALSE(is_transitive(6, gens));

  // C_6 is imprimitive with blocks of size 2 and 3
  std::vector<Perm> c6{Perm::from_cycles(6, {{0, 1, 2, 3, 4, 5}})};
  auto pr = is_primitive(6, c6);
  EXPECT_FALSE(pr.primitive);
  ASSERT_TRUE(pr.blocks.has_value());
  EXPECT_TRUE(pr.blocks->respected_by(c6));
  auto bs = minimal_block_system(6, c6, 0, 3);
  EXPECT_EQ(bs.blocks.size(), 3u);
  EXPECT_TRUE(bs.respected_by(c6));

  // C_5 has prime degree, so it is primitive
  EXPECT_TRUE(is_primitive(5, {Perm::from_cycles(5, {{0, 1, 2, 3, 4}})}).primitive);
}

TEST(Group, JordanShortcutNeverContradictsExactTest) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 30; ++k) {
    std::size_t n = 9 + k % 3;
    PermGroup g(n, {oracle::random_perm(n, rng), oracle::random_perm(n, rng)});
    auto j = contains_alternating_jordan(g);
    if (j) {
      EXPECT_EQ(*j, contains_alternating(g));
    }
  }
}
