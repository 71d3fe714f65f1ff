#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wreathmono/perm.hpp"
#include "wreathmono/wreath.hpp"

namespace wm {

// Certificates that a Table 4 configuration cannot give a primitive group:
// every element of K lies in {(u, w(u))} for an explicit w.
enum class WitnessKind { InvolutionZ, VConjugator, InvertingZ };
std::string to_string(WitnessKind k);

struct Relation {
  std::string name;  // e.g. "z^2 = 1"
  bool holds = false;
};

struct NonexistenceParams {
  // I1A.N1: adbc = 1, a, b l-cycles, c, d transpositions.
  // I1A.N2: abcd = 1, a, b l-cycles, c, d disjoint transpositions.
  // F4.N1/N2: [a, b] = v^-1 with v of type [2^2] / [3]; c, d unused.
  Perm a, b, c, d;
};

struct Witness {
  std::string id;
  WitnessKind kind = WitnessKind::InvolutionZ;
  Perm z;
  std::vector<Relation> relations;
  std::vector<WreathElement> tuple;  // the configuration the witness refutes
  bool tuple_ok = false;             // product 1 with the row's classes
  std::size_t K_generators = 0;
  bool K_in_twisted_diagonal = false;
  bool valid() const;
};

// Throws InvalidInput when the parameters violate the row's relations.
Witness nonexistence_witness(const std::string& id, const NonexistenceParams& p);
// Random parameters satisfying the row's relations.
NonexistenceParams random_params(const std::string& id, unsigned ell, std::uint64_t seed);

struct WitnessSweep {
  std::string id;
  std::vector<unsigned> ells;
  std::size_t draws = 0, verified = 0;
  std::vector<std::string> failures;
};
WitnessSweep witness_sweep(const std::string& id, const std::vector<unsigned>& ells, std::size_t draws_per_ell,
                           std::uint64_t seed = 1);

// F4.N3 at small l: all tuples s, s, s, s, (d1, d2) with d1, d2 transpositions,
// up to conjugation, counted by whether they generate a primitive group.
struct SmallDegreeEvidence {
  unsigned ell = 0;
  std::uint64_t tuples = 0;
  std::uint64_t transitive = 0;
  std::uint64_t primitive = 0;
  std::string annotation;
};
SmallDegreeEvidence f4n3_evidence(unsigned ell = 5);

// Exhaustive search for a primitive product-1 tuple in the listed classes.
struct SearchEvidence {
  std::string id;
  unsigned degree = 0;
  bool primitive_found = false;
  std::uint64_t nodes = 0;
  std::uint64_t candidates = 0;
};
SearchEvidence primitive_search_evidence(const std::string& id);

}  // namespace wm
