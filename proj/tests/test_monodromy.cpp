#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "wreathmono/errors.hpp"
#include "wreathmono/monodromy.hpp"
#include "wreathmono/ramify.hpp"
#include "wreathmono/realize.hpp"

using namespace wm;

namespace {
std::vector<WreathElement> random_t2_tuple(std::size_t ell, std::mt19937_64& rng) {
  auto b = [&] { return std::vector<Perm>{oracle::random_perm(ell, rng), oracle::random_perm(ell, rng)}; };
  std::vector<WreathElement> t{WreathElement(b(), swap_top()), WreathElement(b(), swap_top()),
                               WreathElement::from_base(b())};
  t.push_back(product(t).inverse());
  return t;
}
}  // namespace

TEST(Monodromy, ProductOne) {
  std::mt19937_64 rng(37);
  auto t = random_t2_tuple(5, rng);
  EXPECT_TRUE(check_product_one(t));
  t.pop_back();
  EXPECT_FALSE(check_product_one(t));
}

TEST(Monodromy, KernelMatchesClosure) {
  std::mt19937_64 rng(41);
  for (int k = 0; k < 10; ++k) {
    std::size_t ell = 3;
    auto t = random_t2_tuple(ell, rng);
    std::vector<Perm> gens;
    for (const auto& x : t) gens.push_back(embed_imprimitive(x));
    auto all = oracle::closure(gens);
    // kernel elements fix the block {0..ell-1} setwise
    std::size_t kernel_size = 0;
    for (const auto& g : all) kernel_size += g[0] < ell;
    std::vector<Perm> kgens;
    for (const auto& x : kernel_K(t)) {
      EXPECT_TRUE(x.top().is_identity());
      kgens.push_back(embed_imprimitive(x));
    }
    std::size_t got = kgens.empty() ? 1 : oracle::closure(kgens).size();
    EXPECT_EQ(got, kernel_size);
    EXPECT_EQ(imprimitive_group(t).order(), BigInt(all.size()));
  }
}

TEST(Monodromy, PairSumGenusAgreesWithRiemannHurwitz) {
  std::mt19937_64 rng(43);
  int checked = 0;
  for (int k = 0; k < 60; ++k) {
    std::size_t ell = 4 + k % 4;
    auto t = random_t2_tuple(ell, rng);
    std::vector<Perm> perms;
    for (const auto& x : t) perms.push_back(embed(x));
    if (oracle::num_orbits(ell * ell, perms) != 1) continue;
    ++checked;
    long rh = genus_from_tuple(t).genus;
    EXPECT_EQ(rh, oracle::genus(perms));
    EXPECT_EQ(lemma71_genus(lemma71_input_from_tuple(t)), rh);
  }
  EXPECT_GT(checked, 20);
}

TEST(Monodromy, SignFingerprint) {
  Perm t5 = Perm::transposition(5, 0, 1), id(5);
  WreathElement odd_first({t5, id}, Perm(2)), swap({id, id}, swap_top());
  EXPECT_EQ(sign_image(odd_first), (SignImage{1, 0, 0}));
  EXPECT_EQ(sign_image(swap), (SignImage{0, 0, 1}));
  EXPECT_EQ(sign_multiply(sign_image(odd_first), sign_image(swap)), sign_image(odd_first * swap));
  // <(odd,1), s> has image of order 8; the full group S wr S_2
  auto fp = sign_fingerprint({odd_first, swap});
  EXPECT_EQ(fp.subgroup.size(), 8u);
  EXPECT_EQ(classify_fingerprint(fp), GroupId::SwrS2);
  auto fp2 = sign_fingerprint({swap, WreathElement({t5, t5}, Perm(2))});
  EXPECT_EQ(classify_fingerprint(fp2), GroupId::SfibS2);
  EXPECT_EQ(parse_group_id(to_string(GroupId::A2C4)), GroupId::A2C4);
}

TEST(Monodromy, RealizedTupleIsPrimitiveProductType) {
  auto r = realize("I1.1", 9, 2u);
  auto rep = is_product_type(r.tuple);
  EXPECT_TRUE(rep.transitive_on_points);
  EXPECT_TRUE(rep.K_contains_alternating);
  EXPECT_TRUE(rep.primitive);
  EXPECT_EQ(rep.group_id, GroupId::SwrS2);
  EXPECT_EQ(rep.order, factorial(9) * factorial(9) * 2);
  EXPECT_TRUE(identify_group(r.tuple).order_matches);
}
