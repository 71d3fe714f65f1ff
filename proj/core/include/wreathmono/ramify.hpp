#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "wreathmono/perm.hpp"
#include "wreathmono/wreath.hpp"

namespace wm {

using Rational = boost::rational<long long>;

struct RamificationDatum {
  unsigned degree = 0;
  std::vector<CycleType> points;  // trivial partitions dropped

  static RamificationDatum from_points(unsigned degree, const std::vector<CycleType>& pts);
};

struct GenusReport {
  long genus = 0;
  long total_ramification = 0;
  std::vector<long> contributions;
  std::size_t degree = 0;
};

long rh_contribution(const CycleType& e);

// Riemann-Hurwitz over the line from per-point contributions.
// Throws when the total is odd or the genus negative.
GenusReport genus_from_ramification(std::size_t degree, const std::vector<CycleType>& points);
// Checks product = 1 and transitivity first.
GenusReport genus_from_perms(const std::vector<Perm>& tuple);
GenusReport genus_from_tuple(const std::vector<WreathElement>& tuple);

// 2g - 2 = -2m + sum m (1 - 1/e_i)
long galois_genus(long m, const std::vector<long>& indices);

struct AbhyankarFiber {
  std::vector<unsigned> indices;  // ramification index of each fiber point, descending
  long contribution = 0;          // sum over pairs of r1 - gcd(r1, r2)
  unsigned long long fiber_degree() const;
};
// Fiber of the minimal cover dominating two covers with local ramification
// e1, e2 over a point. With require_equal_degree the partitions must describe
// full fibers of the same degree.
AbhyankarFiber abhyankar_fiber(const CycleType& e1, const CycleType& e2, bool require_equal_degree = true);

unsigned long long galois_closure_index(const CycleType& e);

enum class AgMode { Strict, Plurality };

struct AlmostGaloisReport {
  std::optional<unsigned> m;  // nullopt means infinity
  bool determined = true;     // strict mode: false if neither finite nor infinite type applies
  AgMode mode = AgMode::Plurality;
  unsigned alpha = 0;
  Rational error_bound{0};    // strict mode: epsilon_{alpha,m} for finite m
  std::size_t count = 0;      // number of parts equal to m (finite m)
  std::string str() const;
};

Rational almost_galois_threshold(unsigned ell, unsigned alpha, unsigned k);
Rational almost_galois_epsilon(unsigned alpha, unsigned k);
AlmostGaloisReport almost_galois_type(const CycleType& e, unsigned alpha, AgMode mode);

// m finite: #{orbits of length m} >= (ell - bound)/m; m infinite: #orbits <= bound.
bool perm_almost_galois(const Perm& x, std::optional<unsigned> m, const Rational& bound);

long pair_sum_s1(const CycleType& e);                         // sum (r1 - gcd)
long pair_sum_s12(const CycleType& e1, const CycleType& e2);  // sum (r + s - 2 gcd)

struct Lemma71Input {
  unsigned ell = 0;
  long genus_y1 = 0;
  std::vector<CycleType> r_points;                          // E_h1 over ramification points of Y -> P^1
  std::vector<std::pair<CycleType, CycleType>> s_points;    // (E_h1, E_h2), one per conjugate pair
};
long lemma71_genus(const Lemma71Input& in);

// Extracts the data above from a t = 2 product-1 tuple: swaps give the
// R-points, non-trivial base elements (A1, A2) give S-points, and g_{Y1}
// follows from Riemann-Hurwitz for h1 over Y.
Lemma71Input lemma71_input_from_tuple(const std::vector<WreathElement>& tuple);

}  // namespace wm
