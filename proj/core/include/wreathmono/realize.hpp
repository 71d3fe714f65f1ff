#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wreathmono/monodromy.hpp"
#include "wreathmono/tables.hpp"
#include "wreathmono/wreath.hpp"

namespace wm {

struct RealizeOptions {
  Variant variant = Variant::Default;
  std::uint64_t seed = 1;
  std::size_t solver_rounds = 24;  // annealing restarts with fresh seeds
};

struct Realization {
  std::string id;
  unsigned ell = 0;
  std::optional<unsigned> a;
  Variant variant = Variant::Default;
  std::vector<WreathElement> tuple;  // in the row's class order
  std::vector<ClassDescriptor> classes;
  std::string method;                // construction that produced the tuple
  std::vector<std::string> notes;
};

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CoverReport {
  std::string id;
  unsigned ell = 0;
  std::optional<unsigned> a;
  Variant variant = Variant::Default;
  std::string method;
  std::vector<Check> checks;
  long genus = -1;          // Riemann-Hurwitz on ell^2 points
  long genus_pairs = -1;    // pair-sum formula
  int expected_genus = 0;
  GroupId group = GroupId::Other;
  GroupId expected_group = GroupId::Other;
  BigInt order = 0;
  std::vector<std::string> notes;
  bool pass() const;
};

// Reorders a product-1 tuple into the given class order with braid moves
// (x_i, x_{i+1}) -> (x_{i+1}, x_i^{x_{i+1}}). Throws std::logic_error if the
// multisets of classes differ.
std::vector<WreathElement> braid_reorder(std::vector<WreathElement> tuple, const std::vector<ClassDescriptor>& order);

// Product-1 tuple for a Table 1 row. Needs ell >= 9. The construction is
// checked against every verify_row condition; on failure the next candidate
// is tried, and the last candidate is returned with a note if none passes.
Realization realize(const std::string& id, unsigned ell, std::optional<unsigned> a = std::nullopt,
                    const RealizeOptions& opt = {});

// Runs all checks on an existing tuple.
CoverReport analyze_realization(const Realization& r);
CoverReport verify_row(const std::string& id, unsigned ell, std::optional<unsigned> a = std::nullopt,
                       const RealizeOptions& opt = {});

// Explicit degree-ell relations used by the constructions: permutations with
// product 1, keyed by row id. nullopt if the row has none at these parameters.
std::optional<std::vector<Perm>> explicit_relation(const std::string& id, unsigned ell, std::optional<unsigned> a);

}  // namespace wm
