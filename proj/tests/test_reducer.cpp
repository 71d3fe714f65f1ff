#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "wreathmono/errors.hpp"
#include "wreathmono/io.hpp"
#include "wreathmono/reducer.hpp"

using namespace wm;

namespace {
std::vector<WreathElement> cycle_triple(std::size_t ell, std::mt19937_64& rng) {
  Perm one(ell);
  WreathElement x1({oracle::random_perm(ell, rng), one, one}, Perm::from_cycles(3, {{0, 1, 2}}));
  WreathElement x2({oracle::random_perm(ell, rng), oracle::random_perm(ell, rng), oracle::random_perm(ell, rng)},
                   Perm::transposition(3, 0, 1));
  return {x1, x2, (x1 * x2).inverse()};
}

std::vector<WreathElement> dihedral_tuple(std::size_t ell, std::mt19937_64& rng) {
  auto b = [&] {
    std::vector<Perm> v;
    for (int i = 0; i < 4; ++i) v.push_back(oracle::random_perm(ell, rng));
    return v;
  };
  Perm s1 = Perm::transposition(4, 1, 3), s2 = Perm::from_cycles(4, {{0, 1}, {2, 3}});
  std::vector<WreathElement> u{WreathElement(b(), s1), WreathElement(b(), s2), WreathElement(b(), s2),
                               WreathElement(b(), s1), WreathElement(b(), Perm(4))};
  u.push_back(product(u).inverse());
  return u;
}

bool transitive_on_points(const std::vector<WreathElement>& t) {
  std::vector<Perm> p;
  for (const auto& x : t) p.push_back(embed(x));
  return oracle::num_orbits(p.front().degree(), p) == 1;
}

// (branch, orbit) pairs of the tuple's top images.
std::multiset<std::pair<std::size_t, std::vector<Point>>> all_orbits(const std::vector<WreathElement>& t) {
  std::multiset<std::pair<std::size_t, std::vector<Point>>> out;
  for (std::size_t j = 0; j < t.size(); ++j)
    for (const auto& orb : t[j].top().cycles(true)) out.insert({j, orb});
  return out;
}
}  // namespace

TEST(Reducer, SwapMovePreservesProduct) {
  std::mt19937_64 rng(61);
  auto t = dihedral_tuple(5, rng);
  auto before = product(t);
  auto x0 = t[0], x1 = t[1];
  swap_move(t, 0);
  EXPECT_EQ(product(t), before);
  EXPECT_EQ(t[0], x1);
  EXPECT_EQ(t[1], conjugate(x0, x1));
}

TEST(Reducer, WorkedExampleCertificate) {
  auto t = read_tuple_file(WM_TEST_DATA "/reduced_example.json");
  auto m = reduced_multiset(t);
  EXPECT_EQ(m.s, 3u);
  EXPECT_EQ(certificate_string(m, element_names(m, t)), "a·b1·c2·b2·c1");
  EXPECT_TRUE(verify_multiset(m, t));
  EXPECT_TRUE(m.transitive);
}

TEST(Reducer, ElementsAreOrbitProductsAndCertificateMultipliesOut) {
  std::mt19937_64 rng(67);
  for (int k = 0; k < 50; ++k) {
    std::vector<WreathElement> t;
    do t = k % 2 ? cycle_triple(6, rng) : normalize_LGY(dihedral_tuple(6, rng));
    while (!transitive_on_points(t));
    auto m = reduced_multiset(t);
    WreathElement zz = WreathElement::from_base(m.z);
    std::multiset<std::pair<std::size_t, std::vector<Point>>> got;
    for (const auto& e : m.elements) {
      WreathElement y = conjugate(t[e.j], zz);
      // hand-computed orbit product from the representative
      Perm p(6);
      Point i = e.rep;
      do {
        p = p * y.base(i);
        i = y.top()[i];
      } while (i != e.rep);
      EXPECT_EQ(e.y, p);
      for (const auto& orb : t[e.j].top().cycles(true))
        if (std::find(orb.begin(), orb.end(), e.rep) != orb.end()) {
          got.insert({e.j, orb});
          EXPECT_EQ(e.len, orb.size());
        }
    }
    EXPECT_EQ(got, all_orbits(t));
    // product of the certificate word in order
    Perm p(6);
    std::vector<int> used(m.elements.size(), 0);
    for (const auto& c : m.certificate) {
      ++used[c.index];
      p = p * (c.exponent > 0 ? m.elements[c.index].y : m.elements[c.index].y.inverse());
    }
    EXPECT_TRUE(p.is_identity());
    for (int u : used) EXPECT_EQ(u, 1);
    EXPECT_GE(hatf_genus(m).total_ramification, 2 * 6 - 2);
  }
}

TEST(Reducer, NormalizeReachesNormalForm) {
  std::mt19937_64 rng(71);
  for (int k = 0; k < 20; ++k) {
    auto t = dihedral_tuple(5, rng);
    swap_move(t, 3);
    swap_move(t, 0);
    swap_move(t, 4);
    auto n = normalize_LGY(t);
    EXPECT_EQ(lgy_s(n), 4u);
    EXPECT_EQ(product(n), product(t));
  }
}

TEST(Reducer, PreconditionsAndTamperDetection) {
  std::mt19937_64 rng(73);
  std::vector<WreathElement> t2{oracle::random_element(5, 2, rng)};
  t2.push_back(t2[0].inverse());
  EXPECT_THROW(reduced_multiset(t2), InvalidInput);

  auto t = cycle_triple(5, rng);
  auto m = reduced_multiset(t);
  ASSERT_TRUE(check_multiset(m, t).ok());
  auto bad = m;
  bad.elements[0].y = bad.elements[0].y * Perm::transposition(5, 0, 1);
  EXPECT_FALSE(check_multiset(bad, t).elements_match);
  auto dup = m;
  dup.certificate.push_back(dup.certificate.front());
  EXPECT_FALSE(check_multiset(dup, t).ok());
}
