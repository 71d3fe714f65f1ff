#include "wreathmono/orbitcount.hpp"

#include <algorithm>
#include <map>

#include "wreathmono/errors.hpp"

namespace wm {

RpiRecord rpi_bruteforce(const WreathElement& x, const Perm& m_action, std::size_t cap) {
  std::size_t n = 1;
  for (std::size_t k = 0; k < x.t(); ++k) n *= x.ell();
  std::size_t m = m_action.degree();
  if (m == 0) throw InvalidInput("the coset model must be nonempty");
  if (n * m > cap) throw InvalidInput("orbit enumeration exceeds the configured cap");
  Perm e = embed(x);
  RpiRecord r;
  r.x = x;
  r.m = m;
  r.orbits_base = e.num_cycles();
  // <x> acts on Delta^I x M diagonally; count its orbits by walking cycles.
  std::vector<char> seen(n * m, 0);
  for (std::size_t s = 0; s < n * m; ++s) {
    if (seen[s]) continue;
    ++r.orbits_product;
    std::size_t p = s;
    while (!seen[p]) {
      seen[p] = 1;
      std::size_t d = p / m, c = p % m;
      p = static_cast<std::size_t>(e[static_cast<Point>(d)]) * m + m_action[static_cast<Point>(c)];
    }
  }
  r.rpi = static_cast<long>(m * r.orbits_base) - static_cast<long>(r.orbits_product);
  return r;
}

RpiRecord rpi_bruteforce(const WreathElement& x, std::size_t cap) {
  auto ord = static_cast<std::size_t>(x.top().order());
  std::vector<Point> shift(ord);
  for (std::size_t k = 0; k < ord; ++k) shift[k] = static_cast<Point>((k + 1) % ord);
  return rpi_bruteforce(x, Perm(std::move(shift)), cap);
}

Perm coset_action(const std::vector<WreathElement>& tuple, std::size_t index) {
  if (index >= tuple.size()) throw InvalidInput("tuple index out of range");
  // enumerate the image group on I by closure
  std::vector<Perm> elems{Perm(tuple.front().t())};
  std::map<Perm, std::size_t> where{{elems.front(), 0}};
  for (std::size_t k = 0; k < elems.size(); ++k)
    for (const auto& w : tuple) {
      Perm y = elems[k] * w.top();
      if (where.emplace(y, elems.size()).second) elems.push_back(y);
    }
  std::vector<Point> img(elems.size());
  const Perm& s = tuple[index].top();
  for (std::size_t k = 0; k < elems.size(); ++k) img[k] = static_cast<Point>(where.at(elems[k] * s));
  return Perm(std::move(img));
}

long rpi_closed_form_t2(const Perm& a) {
  long odd = 0;
  CycleType ct = cycle_type(a);
  for (unsigned k : ct.parts()) odd += (k % 2 == 1);
  return odd;
}

}  // namespace wm
