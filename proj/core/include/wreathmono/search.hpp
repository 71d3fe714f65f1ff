#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "wreathmono/group.hpp"
#include "wreathmono/perm.hpp"

namespace wm {

struct SearchQuery {
  unsigned degree = 0;
  std::vector<CycleType> classes;
  bool require_transitive = true;
  bool require_primitive = false;
  std::optional<BigInt> order_target;
  std::size_t limit = 0;  // 0: no limit
  unsigned cap = 12;      // largest degree accepted
  // Keep one tuple per simultaneous-conjugacy class (transitive tuples only).
  bool dedupe = false;
  unsigned workers = 1;
};

struct SearchResult {
  std::vector<std::vector<Perm>> tuples;
  std::uint64_t nodes = 0;     // partial tuples visited
  std::uint64_t candidates = 0; // complete tuples with the right cycle types
  bool limit_hit = false;
  bool exhaustive() const { return !limit_hit; }
};

// All members of a class, ordered lexicographically by image sequence.
// Throws InvalidInput if the class has more than max_size elements.
std::vector<Perm> class_members(const CycleType& t, std::size_t max_size = 5'000'000);

// Product-1 tuples with the given classes. x_1 is the canonical element of
// classes[0], x_2..x_{r-1} run over class members in order, x_r is forced.
// Throws InvalidInput on infeasible parity, degree above the cap, or r < 2.
SearchResult find_tuples(const SearchQuery& q);

// Same check without the throw: true iff the sign product is +1.
bool parity_feasible(const std::vector<CycleType>& classes);

struct ExistenceResult {
  bool exists = false;
  std::optional<std::vector<Perm>> witness;
  std::uint64_t nodes = 0;
  std::uint64_t candidates = 0;
};
ExistenceResult exists_primitive_tuple(SearchQuery q);

// Relabeling of a transitive tuple that is invariant under simultaneous
// conjugation: smallest breadth-first relabeling over all start points.
std::vector<Perm> canonical_tuple_form(const std::vector<Perm>& tuple);

}  // namespace wm
