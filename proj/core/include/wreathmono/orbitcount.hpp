#pragma once

#include <cstddef>
#include <vector>

#include "wreathmono/perm.hpp"
#include "wreathmono/wreath.hpp"

namespace wm {

struct RpiRecord {
  WreathElement x;
  std::size_t m = 0;               // size of the model of G/K
  std::size_t orbits_base = 0;     // orbits of <x> on Delta^I
  std::size_t orbits_product = 0;  // orbits of <x> on Delta^I x M
  long rpi = 0;                    // m * orbits_base - orbits_product
};

// Largest |Delta|^t * |M| enumerated before refusing.
inline constexpr std::size_t kRpiDefaultCap = 4'000'000;

// x acts on M through m_action (a permutation of M); the default models M as
// the regular <sigma>-set, i.e. a cyclic shift of length ord(top(x)).
RpiRecord rpi_bruteforce(const WreathElement& x, const Perm& m_action, std::size_t cap = kRpiDefaultCap);
RpiRecord rpi_bruteforce(const WreathElement& x, std::size_t cap = kRpiDefaultCap);

// Action of tuple[index] on the right cosets of K in G, where G is generated
// by the tuple: G/K is the image group on I, acting on itself regularly.
Perm coset_action(const std::vector<WreathElement>& tuple, std::size_t index);

// Number of odd-length cycles of a.
long rpi_closed_form_t2(const Perm& a);

}  // namespace wm
