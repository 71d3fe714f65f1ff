#include "wreathmono/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "wreathmono/errors.hpp"

namespace wm {

BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned k = 2; k <= n; ++k) r *= k;
  return r;
}

namespace {

void add_level(StabChain& c, Point base) {
  StabChain::Level L;
  L.base = base;
  L.pos.assign(c.degree, -1);
  L.orbit.push_back(base);
  L.pos[base] = 0;
  L.transversal.push_back(Perm(c.degree));
  L.transversal_inv.push_back(Perm(c.degree));
  L.done.push_back(0);
  c.levels.push_back(std::move(L));
}

void extend_orbit(StabChain& c, std::size_t l) {
  auto& L = c.levels[l];
  for (std::size_t k = 0; k < L.orbit.size(); ++k) {
    for (std::size_t gid : L.gens) {
      const Perm& g = c.strong[gid];
      Point img = g[L.orbit[k]];
      if (L.pos[img] >= 0) continue;
      L.pos[img] = static_cast<int>(L.orbit.size());
      L.orbit.push_back(img);
      Perm t = L.transversal[k] * g;
      L.transversal_inv.push_back(t.inverse());
      L.transversal.push_back(std::move(t));
      L.done.push_back(0);
    }
  }
}

}  // namespace

StabChain StabChain::build(std::size_t degree, const std::vector<Perm>& gens,
                           const std::vector<Point>& base_prefix) {
  StabChain c;
  c.degree = degree;
  for (Point b : base_prefix) {
    if (b >= degree) throw InvalidInput("base point out of range");
    add_level(c, b);
  }
  for (const auto& g : gens) {
    if (g.degree() != degree) throw InvalidInput("generator degree mismatch");
    if (!g.is_identity()) c.strong.push_back(g);
  }
  if (c.strong.empty()) return c;
  if (c.levels.empty()) {
    Point b = static_cast<Point>(degree);
    for (const auto& g : c.strong) b = std::min(b, g.first_moved());
    add_level(c, b);
  }
  for (std::size_t id = 0; id < c.strong.size(); ++id) c.levels[0].gens.push_back(id);
  extend_orbit(c, 0);

  long i = static_cast<long>(c.levels.size()) - 1;
  while (i >= 0) {
    bool restart = false;
    const std::size_t li = static_cast<std::size_t>(i);
    for (std::size_t k = 0; k < c.levels[li].orbit.size() && !restart; ++k) {
      while (c.levels[li].done[k] < c.levels[li].gens.size()) {
        auto& L = c.levels[li];
        const Perm& x = c.strong[L.gens[L.done[k]]];
        ++L.done[k];
        Point gamma = x[L.orbit[k]];
        Perm h = L.transversal[k] * x * L.transversal_inv[static_cast<std::size_t>(L.pos[gamma])];
        if (h.is_identity()) continue;
        auto [y, j] = c.sift(std::move(h), li + 1);
        if (y.is_identity()) continue;
        if (j == c.levels.size()) add_level(c, y.first_moved());
        c.strong.push_back(std::move(y));
        std::size_t id = c.strong.size() - 1;
        for (std::size_t l = li + 1; l <= j; ++l) {
          c.levels[l].gens.push_back(id);
          extend_orbit(c, l);
        }
        i = static_cast<long>(j);
        restart = true;
        break;
      }
    }
    if (!restart) --i;
  }
  return c;
}

std::pair<Perm, std::size_t> StabChain::sift(Perm g, std::size_t from) const {
  for (std::size_t l = from; l < levels.size(); ++l) {
    const auto& L = levels[l];
    int p = L.pos[g[L.base]];
    if (p < 0) return {std::move(g), l};
    g *= L.transversal_inv[static_cast<std::size_t>(p)];
  }
  return {std::move(g), levels.size()};
}

bool StabChain::contains(const Perm& g) const {
  if (g.degree() != degree) throw InvalidInput("degree mismatch in membership test");
  return sift(g).first.is_identity();
}

BigInt StabChain::order() const {
  BigInt r = 1;
  for (const auto& L : levels) r *= L.orbit.size();
  return r;
}

std::vector<Point> StabChain::base() const {
  std::vector<Point> b;
  for (const auto& L : levels) b.push_back(L.base);
  return b;
}

std::vector<std::size_t> StabChain::basic_orbit_lengths() const {
  std::vector<std::size_t> r;
  for (const auto& L : levels) r.push_back(L.orbit.size());
  return r;
}

// ---------------------------------------------------------------------------

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> gens)
    : degree_(degree), gens_(std::move(gens)), cache_(std::make_shared<Cache>()) {
  for (const auto& g : gens_)
    if (g.degree() != degree_) throw InvalidInput("generators must share one degree");
}

PermGroup::PermGroup(std::vector<Perm> gens)
    : PermGroup(gens.empty() ? 0 : gens.front().degree(), std::move(gens)) {
  if (gens_.empty()) throw InvalidInput("a group needs at least one generator");
}

const StabChain& PermGroup::chain() const {
  std::call_once(cache_->once, [this] { cache_->chain = StabChain::build(degree_, gens_); });
  return cache_->chain;
}

bool BlockSystem::respected_by(const std::vector<Perm>& gens) const {
  if (blocks.empty()) return true;
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.size();
  std::vector<std::size_t> which(n);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (Point x : blocks[b]) which[x] = b;
  for (const auto& g : gens)
    for (const auto& b : blocks) {
      std::size_t target = which[g[b.front()]];
      for (Point x : b)
        if (which[g[x]] != target) return false;
    }
  return true;
}

std::vector<std::vector<Point>> orbits(std::size_t degree, const std::vector<Perm>& gens) {
  std::vector<int> label(degree, -1);
  std::vector<std::vector<Point>> out;
  for (std::size_t s = 0; s < degree; ++s) {
    if (label[s] >= 0) continue;
    std::vector<Point> orb{static_cast<Point>(s)};
    label[s] = static_cast<int>(out.size());
    for (std::size_t k = 0; k < orb.size(); ++k)
      for (const auto& g : gens) {
        Point y = g[orb[k]];
        if (label[y] < 0) {
          label[y] = static_cast<int>(out.size());
          orb.push_back(y);
        }
      }
    std::sort(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  return out;
}

std::vector<std::vector<Point>> orbits(const PermGroup& g) {
  return orbits(g.degree(), g.generators());
}

bool is_transitive(std::size_t degree, const std::vector<Perm>& gens) {
  return degree <= 1 || orbits(degree, gens).size() == 1;
}

bool is_transitive(const PermGroup& g) { return is_transitive(g.degree(), g.generators()); }

BlockSystem minimal_block_system(std::size_t degree, const std::vector<Perm>& gens, Point alpha,
                                 Point beta) {
  std::vector<Point> parent(degree);
  std::iota(parent.begin(), parent.end(), Point{0});
  auto find = [&](Point x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  std::deque<std::pair<Point, Point>> queue;
  auto unite = [&](Point a, Point b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent[b] = a;
    queue.emplace_back(a, b);
  };
  unite(alpha, beta);
  while (!queue.empty()) {
    auto [x, y] = queue.front();
    queue.pop_front();
    for (const auto& g : gens) unite(g[x], g[y]);
  }
  std::vector<std::vector<Point>> byroot(degree);
  for (Point x = 0; x < degree; ++x) byroot[find(x)].push_back(x);
  BlockSystem bs;
  for (auto& b : byroot)
    if (!b.empty()) bs.blocks.push_back(std::move(b));
  return bs;
}

PrimitivityResult is_primitive(std::size_t degree, const std::vector<Perm>& gens) {
  if (degree < 2) throw InvalidInput("primitivity needs degree >= 2");
  if (!is_transitive(degree, gens)) throw InvalidInput("primitivity test on an intransitive group");
  for (Point beta = 1; beta < degree; ++beta) {
    auto bs = minimal_block_system(degree, gens, 0, beta);
    if (bs.blocks.size() > 1) return {false, std::move(bs)};
  }
  return {true, std::nullopt};
}

PrimitivityResult is_primitive(const PermGroup& g) { return is_primitive(g.degree(), g.generators()); }

BigInt group_order(const PermGroup& g) { return g.order(); }

bool contains_alternating(const PermGroup& g) {
  std::size_t n = g.degree();
  if (n <= 2) return true;
  return g.order() * 2 >= factorial(static_cast<unsigned>(n));
}

namespace {

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

unsigned two_adic(unsigned x) {
  unsigned e = 0;
  while (x % 2 == 0) {
    x /= 2;
    ++e;
  }
  return e;
}

}  // namespace

std::optional<bool> contains_alternating_jordan(const PermGroup& g) {
  std::size_t n = g.degree();
  if (n < 5 || !is_transitive(g)) return std::nullopt;
  bool has_cycle_power = false;
  for (const auto& x : g.generators()) {
    const auto& parts = cycle_type(x).parts();
    for (unsigned p = 2; p + 2 < n && !has_cycle_power; ++p) {
      if (!is_prime(p)) continue;
      auto divisible = std::count_if(parts.begin(), parts.end(), [p](unsigned c) { return c % p == 0; });
      if (divisible == 1) has_cycle_power = true;
    }
    if (n >= 9 && !has_cycle_power) {
      unsigned best = 0;
      for (unsigned c : parts) best = std::max(best, two_adic(c));
      if (best > 0 &&
          std::count_if(parts.begin(), parts.end(), [best](unsigned c) { return two_adic(c) == best; }) == 2)
        has_cycle_power = true;
    }
    if (has_cycle_power) break;
  }
  if (!has_cycle_power) return std::nullopt;
  if (!is_primitive(g).primitive) return std::nullopt;
  return true;
}

}  // namespace wm
