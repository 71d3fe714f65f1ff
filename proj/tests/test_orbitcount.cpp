#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "wreathmono/orbitcount.hpp"

using namespace wm;

namespace {
// Orbits of <x> on Delta^I x Z/ord(sigma), counted by walking every point.
long brute_rpi(const WreathElement& x) {
  std::size_t ell = x.ell(), t = x.t(), m = x.top().order();
  std::size_t n = 1;
  for (std::size_t i = 0; i < t; ++i) n *= ell;
  auto count = [&](std::size_t mm) {
    std::vector<char> seen(n * mm, 0);
    long orbits = 0;
    for (std::size_t s = 0; s < n * mm; ++s) {
      if (seen[s]) continue;
      ++orbits;
      std::size_t p = s;
      while (!seen[p]) {
        seen[p] = 1;
        auto d = unrank_point(p / mm, ell, t);
        auto nd = oracle::act(x, std::vector<unsigned>(d.begin(), d.end()));
        std::size_t r = rank_point(WreathPoint(nd.begin(), nd.end()), ell);
        p = r * mm + (p % mm + 1) % mm;
      }
    }
    return orbits;
  };
  return static_cast<long>(m) * count(1) - count(m);
}
}  // namespace

TEST(OrbitCount, BruteForceMatchesIndependentWalk) {
  std::mt19937_64 rng(47);
  for (int k = 0; k < 40; ++k) {
    auto x = oracle::random_element(3 + k % 3, 2 + k % 2, rng);
    auto r = rpi_bruteforce(x);
    EXPECT_EQ(r.rpi, brute_rpi(x));
    EXPECT_EQ(r.m, x.top().order());
  }
}

TEST(OrbitCount, ClosedFormForSwap) {
  std::mt19937_64 rng(53);
  for (int k = 0; k < 100; ++k) {
    std::size_t ell = 3 + k % 6;
    Perm a = oracle::random_perm(ell, rng), b = oracle::random_perm(ell, rng);
    WreathElement x({a, b}, swap_top());
    long odd = 0;
    for (const auto& c : (a * b).cycles(true)) odd += c.size() % 2;
    EXPECT_EQ(rpi_closed_form_t2(a * b), odd);
    EXPECT_EQ(rpi_bruteforce(x).rpi, odd);
  }
}

TEST(OrbitCount, CosetActionIsTheTopImage) {
  std::mt19937_64 rng(59);
  std::vector<WreathElement> t{oracle::random_element(3, 2, rng), oracle::random_element(3, 2, rng)};
  t[0] = WreathElement(t[0].base(), swap_top());
  t.push_back(product(t).inverse());
  Perm prod(coset_action(t, 0).degree());
  for (std::size_t i = 0; i < t.size(); ++i) prod = prod * coset_action(t, i);
  EXPECT_TRUE(prod.is_identity());
  EXPECT_EQ(coset_action(t, 0).degree(), 2u);
}
