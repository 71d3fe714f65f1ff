#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wreathmono/perm.hpp"

namespace wm {

struct AnnealOptions {
  std::uint64_t seed = 1;
  std::size_t max_iterations = 400'000;  // per attempt
  std::size_t attempts = 40;
  double start_temperature = 1.0;
  double cooling = 0.9999;
  double min_temperature = 0.3;
  bool require_transitive = true;
};

struct AnnealResult {
  std::vector<Perm> tuple;  // one element per class, product = 1
  std::size_t iterations = 0;
  std::size_t attempts = 0;
};

// Finds x_1 ... x_r in S_n with the given cycle types and x_1 ... x_r = 1 by
// simulated annealing: x_1..x_{r-1} move by conjugation with random
// transpositions, x_r is forced, and the energy measures how far the cycle
// type of x_r is from its target. Identity classes are filled with 1.
// Deterministic for a fixed seed. nullopt if every attempt fails.
std::optional<AnnealResult> solve_product_one(const std::vector<CycleType>& classes,
                                              const AnnealOptions& opt = {});

// Distance between cycle types used as the annealing energy.
long cycle_type_distance(const CycleType& a, const CycleType& b);

// z with x_i^z = y_i for all i, by propagation and backtracking. Searching
// through at most node_cap assignments; nullopt if none exists (or the cap
// is hit, which callers can detect with the out parameter).
std::optional<Perm> simultaneous_conjugator(const std::vector<Perm>& xs, const std::vector<Perm>& ys,
                                            std::size_t node_cap = 1'000'000, bool* capped = nullptr);

// Uniform random conjugate of the canonical element of a cycle type.
template <class Rng>
Perm random_of_type(const CycleType& t, Rng& rng);

// Uniformly random permutation of degree n.
template <class Rng>
Perm random_perm(std::size_t n, Rng& rng);

}  // namespace wm

#include "wreathmono/relation_impl.hpp"
