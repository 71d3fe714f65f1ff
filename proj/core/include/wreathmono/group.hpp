#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "wreathmono/perm.hpp"

namespace wm {

using BigInt = boost::multiprecision::cpp_int;

BigInt factorial(unsigned n);

// Base and strong generating set built by deterministic Schreier-Sims.
struct StabChain {
  struct Level {
    Point base = 0;
    std::vector<std::size_t> gens;   // indices into StabChain::strong
    std::vector<Point> orbit;
    std::vector<int> pos;            // point -> index in orbit, -1 if absent
    std::vector<Perm> transversal;   // base^transversal[k] == orbit[k]
    std::vector<Perm> transversal_inv;
    std::vector<std::size_t> done;   // Schreier pairs already checked per orbit point
  };
  std::size_t degree = 0;
  std::vector<Perm> strong;
  std::vector<Level> levels;

  static StabChain build(std::size_t degree, const std::vector<Perm>& gens,
                         const std::vector<Point>& base_prefix = {});
  // Residue after sifting and the level where sifting stopped.
  std::pair<Perm, std::size_t> sift(Perm g, std::size_t from = 0) const;
  bool contains(const Perm& g) const;
  BigInt order() const;
  std::vector<Point> base() const;
  std::vector<std::size_t> basic_orbit_lengths() const;
};

// A permutation group given by generators. The stabilizer chain is built on
// first use; concurrent readers see a single chain.
class PermGroup {
 public:
  PermGroup(std::size_t degree, std::vector<Perm> gens);
  explicit PermGroup(std::vector<Perm> gens);

  std::size_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }

  const StabChain& chain() const;
  BigInt order() const { return chain().order(); }
  bool contains(const Perm& g) const { return chain().contains(g); }

 private:
  struct Cache {
    std::once_flag once;
    StabChain chain;
  };
  std::size_t degree_;
  std::vector<Perm> gens_;
  std::shared_ptr<Cache> cache_;
};

struct BlockSystem {
  std::vector<std::vector<Point>> blocks;
  bool respected_by(const std::vector<Perm>& gens) const;
};

struct PrimitivityResult {
  bool primitive = false;
  std::optional<BlockSystem> blocks;  // set when imprimitive
};

std::vector<std::vector<Point>> orbits(std::size_t degree, const std::vector<Perm>& gens);
std::vector<std::vector<Point>> orbits(const PermGroup& g);
bool is_transitive(std::size_t degree, const std::vector<Perm>& gens);
bool is_transitive(const PermGroup& g);

// Smallest block containing {alpha, beta}.
BlockSystem minimal_block_system(std::size_t degree, const std::vector<Perm>& gens, Point alpha,
                                 Point beta);
PrimitivityResult is_primitive(const PermGroup& g);
PrimitivityResult is_primitive(std::size_t degree, const std::vector<Perm>& gens);

BigInt group_order(const PermGroup& g);

// Exact test: |G| >= n!/2.
bool contains_alternating(const PermGroup& g);
// Jordan-type shortcut: returns true when G is primitive and some generator
// power is a p-cycle (p prime, p < n-2) or a double transposition (n >= 9).
// nullopt when the shortcut does not apply.
std::optional<bool> contains_alternating_jordan(const PermGroup& g);

}  // namespace wm
