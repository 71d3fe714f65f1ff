// Brute-force reference computations used as independent oracles.
#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "wreathmono/perm.hpp"
#include "wreathmono/wreath.hpp"

namespace oracle {

using Img = std::vector<unsigned>;

// apply p then q
inline Img compose(const Img& p, const Img& q) {
  Img r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
  return r;
}

inline Img images(const wm::Perm& p) { return Img(p.images().begin(), p.images().end()); }

// All elements of <gens>, by breadth-first closure.
inline std::set<Img> closure(const std::vector<wm::Perm>& gens) {
  std::size_t n = gens.front().degree();
  Img id(n);
  for (unsigned i = 0; i < n; ++i) id[i] = i;
  std::set<Img> seen{id};
  std::vector<Img> frontier{id};
  while (!frontier.empty()) {
    std::vector<Img> next;
    for (const auto& g : frontier)
      for (const auto& s : gens) {
        Img h = compose(g, images(s));
        if (seen.insert(h).second) next.push_back(h);
      }
    frontier.swap(next);
  }
  return seen;
}

inline std::size_t num_orbits(std::size_t n, const std::vector<wm::Perm>& gens) {
  std::vector<int> comp(n, -1);
  std::size_t c = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> stack{s};
    comp[s] = static_cast<int>(c);
    while (!stack.empty()) {
      auto p = stack.back();
      stack.pop_back();
      for (const auto& g : gens)
        if (comp[g[static_cast<wm::Point>(p)]] < 0) {
          comp[g[static_cast<wm::Point>(p)]] = static_cast<int>(c);
          stack.push_back(g[static_cast<wm::Point>(p)]);
        }
    }
    ++c;
  }
  return c;
}

inline std::size_t cycles(const wm::Perm& p) { return num_orbits(p.degree(), {p}); }

// Product action straight from delta^{a sigma}(i) = delta(i^{sigma^-1})^{a(i^{sigma^-1})}.
inline std::vector<unsigned> act(const wm::WreathElement& w, const std::vector<unsigned>& delta) {
  std::size_t t = w.t();
  wm::Perm sinv = w.top().inverse();
  std::vector<unsigned> out(t);
  for (std::size_t i = 0; i < t; ++i) {
    auto j = sinv[static_cast<wm::Point>(i)];
    out[i] = w.base(j)[delta[j]];
  }
  return out;
}

// Riemann-Hurwitz from cycle counts: 2g - 2 = -2n + sum (n - #cycles).
inline long genus(const std::vector<wm::Perm>& tuple) {
  long n = static_cast<long>(tuple.front().degree()), total = 0;
  for (const auto& p : tuple) total += n - static_cast<long>(cycles(p));
  return (total - 2 * n + 2) / 2;
}

template <class Rng>
wm::Perm random_perm(std::size_t n, Rng& rng) {
  std::vector<wm::Point> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<wm::Point>(i);
  std::shuffle(v.begin(), v.end(), rng);
  return wm::Perm(v);
}

template <class Rng>
wm::WreathElement random_element(std::size_t ell, std::size_t t, Rng& rng) {
  std::vector<wm::Perm> base;
  for (std::size_t i = 0; i < t; ++i) base.push_back(random_perm(ell, rng));
  return wm::WreathElement(base, random_perm(t, rng));
}

// All partitions of n, parts descending.
inline void partitions(unsigned n, unsigned max, std::vector<unsigned>& cur, std::vector<std::vector<unsigned>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (unsigned k = std::min(n, max); k >= 1; --k) {
    cur.push_back(k);
    partitions(n - k, k, cur, out);
    cur.pop_back();
  }
}
inline std::vector<std::vector<unsigned>> partitions(unsigned n) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur;
  partitions(n, n, cur, out);
  return out;
}

}  // namespace oracle
