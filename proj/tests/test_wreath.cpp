#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "wreathmono/errors.hpp"
#include "wreathmono/wreath.hpp"

using namespace wm;

namespace {
std::vector<std::vector<unsigned>> all_points(std::size_t ell, std::size_t t) {
  std::vector<std::vector<unsigned>> out;
  std::size_t n = 1;
  for (std::size_t i = 0; i < t; ++i) n *= ell;
  for (std::size_t r = 0; r < n; ++r) {
    auto p = unrank_point(r, ell, t);
    out.emplace_back(p.begin(), p.end());
  }
  return out;
}
}  // namespace

TEST(Wreath, ActionIsAHomomorphism) {
  std::mt19937_64 rng(13);
  for (int k = 0; k < 50; ++k) {
    std::size_t ell = 3 + k % 3, t = 2 + k % 2;
    auto x = oracle::random_element(ell, t, rng), y = oracle::random_element(ell, t, rng);
    for (const auto& d : all_points(ell, t)) {
      WreathPoint wd(d.begin(), d.end());
      auto lhs = wreath_act(x * y, wd);
      auto rhs = oracle::act(y, oracle::act(x, d));
      EXPECT_EQ(std::vector<unsigned>(lhs.begin(), lhs.end()), rhs);
    }
  }
}

TEST(Wreath, InverseIdentityAndEmbedding) {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 50; ++k) {
    auto x = oracle::random_element(4, 3, rng), y = oracle::random_element(4, 3, rng);
    EXPECT_TRUE((x * x.inverse()).is_identity());
    EXPECT_EQ(embed(x * y), embed(x) * embed(y));
    EXPECT_EQ(embed_imprimitive(x * y), embed_imprimitive(x) * embed_imprimitive(y));
    EXPECT_EQ(from_imprimitive(embed_imprimitive(x), 4, 3), x);
    EXPECT_EQ(conjugate(x, y), y.inverse() * x * y);
    EXPECT_EQ(product({x, y, x}), x * y * x);
  }
  for (std::size_t r = 0; r < 64; ++r) EXPECT_EQ(rank_point(unrank_point(r, 4, 3), 4), r);
}

TEST(Wreath, ReducedFormOracle) {
  std::mt19937_64 rng(19);
  for (int k = 0; k < 200; ++k) {
    std::size_t ell = 5 + k % 4, t = 2 + k % 3;
    auto x = oracle::random_element(ell, t, rng);
    auto rf = reduced_form(x);
    EXPECT_TRUE(rf.z.top().is_identity());
    EXPECT_EQ(conjugate(x, rf.z), rf.y);
    EXPECT_EQ(rf.y.top(), x.top());
    auto orb = x.top().cycles(true);
    ASSERT_EQ(rf.reps.size(), orb.size());
    for (std::size_t o = 0; o < orb.size(); ++o) {
      for (Point i : orb[o]) {
        if (i == rf.reps[o]) {
          // orbit product computed by hand
          Perm p(ell);
          Point j = i;
          for (std::size_t s = 0; s < orb[o].size(); ++s) p = p * x.base(j), j = x.top()[j];
          EXPECT_EQ(cycle_type(rf.y.base(i)), cycle_type(p));
          EXPECT_EQ(orbit_product(x, i), p);
        } else {
          EXPECT_TRUE(rf.y.base(i).is_identity());
        }
      }
    }
  }
}

TEST(Wreath, ClassDescriptors) {
  auto d = ClassDescriptor::parse("([9],[1^9])s");
  EXPECT_TRUE(d.swap);
  EXPECT_EQ(d.ell(), 9u);
  EXPECT_EQ(d.str(), "([9],[1^9])s");
  auto x = from_class(d);
  EXPECT_EQ(class_descriptor(x), d);
  auto e = ClassDescriptor::parse("([5],[3,2])");
  EXPECT_EQ(class_descriptor(from_class(e)), e);
  // classes are conjugation invariant
  std::mt19937_64 rng(23);
  for (int k = 0; k < 20; ++k) {
    auto z = WreathElement::from_base({oracle::random_perm(5, rng), oracle::random_perm(5, rng)});
    EXPECT_EQ(class_descriptor(conjugate(from_class(e), z)), e);
  }
  EXPECT_THROW(ClassDescriptor::parse("([3],[2])"), InvalidInput);
}
