#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "wreathmono/perm.hpp"
#include "wreathmono/ramify.hpp"
#include "wreathmono/wreath.hpp"

namespace wm {

// Swap move at position i: (x_i, x_{i+1}) -> (x_{i+1}, x_i^{x_{i+1}}).
void swap_move(std::vector<WreathElement>& tuple, std::size_t i);

// Reorders a product-1 tuple by swap moves so that the top images satisfy:
// sigma_i = 1 iff i > s with s in {3, 4}; sigma_1 a t-cycle if s = 3;
// <sigma_1, sigma_2> = <sigma_3, sigma_4> = the top group if s = 4.
// Needs t > 2, the top ramification listed in Table 2, and some sigma_j with
// a power acting as a transposition. Throws InvalidInput otherwise.
std::vector<WreathElement> normalize_LGY(std::vector<WreathElement> tuple);
// The normal form above, checked directly; returns s or 0.
std::size_t lgy_s(const std::vector<WreathElement>& tuple);

struct MultisetElement {
  std::size_t j = 0;    // branch index
  Point rep = 0;        // representative of the sigma_j orbit
  std::size_t len = 1;  // orbit length
  Perm y;
};

struct CertificateTerm {
  std::size_t index = 0;  // into elements
  int exponent = 1;       // +1 or -1
};

struct ReducedMultiset {
  std::size_t ell = 0, t = 0, s = 0;
  std::vector<Perm> z;  // base conjugator applied to every branch cycle
  std::vector<MultisetElement> elements;
  std::vector<CertificateTerm> certificate;
  bool transitive = false;
  // (branch, position) pairs consumed while growing z and the product word
  std::size_t p_size = 0, q_size = 0;
};

// Conjugation of every x_j by the base element z, then one product over all
// orbit products y_{theta,j}. Preconditions (LG_Y, genus 0 top cover, Galois
// closure of genus <= 1) throw InvalidInput; an inconsistent end state
// throws std::logic_error.
ReducedMultiset reduced_multiset(const std::vector<WreathElement>& tuple);

struct MultisetCheck {
  bool elements_match = false;
  bool each_orbit_once = false;
  bool certificate_product = false;
  bool transitive = false;
  bool ok() const { return elements_match && each_orbit_once && certificate_product && transitive; }
};
MultisetCheck check_multiset(const ReducedMultiset& m, const std::vector<WreathElement>& source);
bool verify_multiset(const ReducedMultiset& m, const std::vector<WreathElement>& source);

// Riemann-Hurwitz for the degree ell cover with one branch point per element.
// total_ramification >= 2 ell - 2 is the genus >= 0 inequality.
GenusReport hatf_genus(const ReducedMultiset& m);

// Branch j gets the letter 'a' + j; branches with several top orbits append
// the orbit number (orbits ordered by smallest point, counted from 1).
std::vector<std::string> element_names(const ReducedMultiset& m, const std::vector<WreathElement>& source);
// "a·b1·c2" rendering of the certificate.
std::string certificate_string(const ReducedMultiset& m, const std::vector<std::string>& names);

}  // namespace wm
