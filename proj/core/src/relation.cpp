#include "wreathmono/relation.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <random>

#include "wreathmono/errors.hpp"
#include "wreathmono/group.hpp"

namespace wm {

long cycle_type_distance(const CycleType& a, const CycleType& b) {
  auto ma = a.multiplicities(), mb = b.multiplicities();
  long d = 0;
  for (const auto& [k, c] : ma) {
    auto it = mb.find(k);
    d += std::labs(static_cast<long>(c) - (it == mb.end() ? 0L : static_cast<long>(it->second)));
  }
  for (const auto& [k, c] : mb)
    if (!ma.count(k)) d += c;
  return d + std::labs(static_cast<long>(a.size()) - static_cast<long>(b.size()));
}

std::optional<AnnealResult> solve_product_one(const std::vector<CycleType>& classes, const AnnealOptions& opt) {
  if (classes.empty()) throw InvalidInput("no classes given");
  unsigned n = classes.front().degree();
  int sign = 1;
  for (const auto& c : classes) {
    if (c.degree() != n) throw InvalidInput("classes have different degrees");
    sign *= c.sign();
  }
  if (sign != 1) return std::nullopt;

  std::vector<std::size_t> live;  // indices of non-identity classes
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (!classes[i].is_identity()) live.push_back(i);

  AnnealResult res;
  auto finish = [&](const std::vector<Perm>& xs) {
    res.tuple.assign(classes.size(), Perm(n));
    for (std::size_t k = 0; k < live.size(); ++k) res.tuple[live[k]] = xs[k];
  };
  if (live.empty()) {
    if (opt.require_transitive && n > 1) return std::nullopt;
    finish({});
    return res;
  }
  if (live.size() == 1) return std::nullopt;  // a single non-trivial element cannot have product 1

  std::mt19937_64 rng(opt.seed);
  const CycleType& target = classes[live.back()];
  std::size_t free = live.size() - 1;
  std::uniform_int_distribution<std::size_t> pick(0, free - 1);
  std::uniform_int_distribution<Point> point(0, n - 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  for (std::size_t attempt = 0; attempt < opt.attempts; ++attempt) {
    res.attempts = attempt + 1;
    std::vector<Perm> xs;
    for (std::size_t k = 0; k < free; ++k) xs.push_back(random_of_type(classes[live[k]], rng));
    auto forced = [&](const std::vector<Perm>& v) {
      Perm p(n);
      for (const auto& x : v) p *= x;
      return p.inverse();
    };
    long energy = cycle_type_distance(cycle_type(forced(xs)), target);
    double temp = opt.start_temperature;
    for (std::size_t it = 0; it < opt.max_iterations; ++it) {
      ++res.iterations;
      if (energy == 0) {
        xs.push_back(forced(xs));
        if (!opt.require_transitive || is_transitive(n, xs)) {
          finish(xs);
          return res;
        }
        xs.pop_back();
        energy = 1;  // keep walking from a non-generating solution
      }
      std::size_t k = pick(rng);
      Point a = point(rng), b = point(rng);
      if (a == b) continue;
      Perm old = xs[k];
      xs[k] = conjugate(xs[k], Perm::transposition(n, a, b));
      long e = cycle_type_distance(cycle_type(forced(xs)), target);
      if (e <= energy || unit(rng) < std::exp(static_cast<double>(energy - e) / temp)) {
        energy = e;
      } else {
        xs[k] = std::move(old);
      }
      temp = std::max(opt.min_temperature, temp * opt.cooling);
    }
  }
  return std::nullopt;
}

std::optional<Perm> simultaneous_conjugator(const std::vector<Perm>& xs, const std::vector<Perm>& ys,
                                            std::size_t node_cap, bool* capped) {
  if (xs.size() != ys.size()) throw InvalidInput("conjugator search needs equally many xs and ys");
  if (capped) *capped = false;
  if (xs.empty()) return std::nullopt;
  std::size_t n = xs.front().degree();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i].degree() != n || ys[i].degree() != n) throw InvalidInput("degree mismatch");
    if (cycle_type(xs[i]) != cycle_type(ys[i])) return std::nullopt;
  }
  std::vector<Perm> xinv, yinv;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    xinv.push_back(xs[i].inverse());
    yinv.push_back(ys[i].inverse());
  }
  constexpr Point kUnset = ~Point{0};
  std::vector<Point> z(n, kUnset);
  std::vector<char> used(n, 0);
  std::size_t nodes = 0;

  // z y = x z: z(x(p)) = y(z(p)). Assign p -> q and close under the
  // generators; returns the assigned points so they can be undone.
  auto assign = [&](Point p, Point q, std::vector<Point>& trail) {
    std::vector<std::pair<Point, Point>> stack{{p, q}};
    while (!stack.empty()) {
      auto [u, v] = stack.back();
      stack.pop_back();
      if (z[u] != kUnset) {
        if (z[u] != v) return false;
        continue;
      }
      if (used[v]) return false;
      z[u] = v;
      used[v] = 1;
      trail.push_back(u);
      for (std::size_t i = 0; i < xs.size(); ++i) {
        stack.emplace_back(xs[i][u], ys[i][v]);
        stack.emplace_back(xinv[i][u], yinv[i][v]);
      }
    }
    return true;
  };
  auto undo = [&](const std::vector<Point>& trail) {
    for (Point u : trail) {
      used[z[u]] = 0;
      z[u] = kUnset;
    }
  };

  std::function<bool()> rec = [&]() -> bool {
    Point p = 0;
    while (p < n && z[p] != kUnset) ++p;
    if (p == n) return true;
    for (Point q = 0; q < n; ++q) {
      if (used[q]) continue;
      if (++nodes > node_cap) {
        if (capped) *capped = true;
        return false;
      }
      std::vector<Point> trail;
      if (assign(p, q, trail) && rec()) return true;
      undo(trail);
      if (capped && *capped) return false;
    }
    return false;
  };
  if (!rec()) return std::nullopt;
  return Perm(std::move(z));
}

}  // namespace wm
