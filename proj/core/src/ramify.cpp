#include "wreathmono/ramify.hpp"

#include <algorithm>
#include <numeric>

#include "wreathmono/errors.hpp"
#include "wreathmono/group.hpp"

namespace wm {

RamificationDatum RamificationDatum::from_points(unsigned degree, const std::vector<CycleType>& pts) {
  RamificationDatum d;
  d.degree = degree;
  for (const auto& p : pts) {
    if (p.degree() != degree) throw InvalidInput("partition " + p.str() + " does not sum to " + std::to_string(degree));
    if (!p.is_identity()) d.points.push_back(p);
  }
  return d;
}

long rh_contribution(const CycleType& e) {
  return static_cast<long>(e.degree()) - static_cast<long>(e.size());
}

GenusReport genus_from_ramification(std::size_t degree, const std::vector<CycleType>& points) {
  GenusReport r;
  r.degree = degree;
  for (const auto& e : points) {
    if (e.degree() != degree) throw InvalidInput("partition " + e.str() + " has the wrong degree");
    long c = rh_contribution(e);
    r.contributions.push_back(c);
    r.total_ramification += c;
  }
  if (r.total_ramification % 2 != 0)
    throw InvalidInput("total ramification is odd; the data is inconsistent");
  long two_g = -2 * static_cast<long>(degree) + r.total_ramification + 2;
  r.genus = two_g / 2;
  if (r.genus < 0) throw InvalidInput("negative genus; the data cannot come from a connected cover");
  return r;
}

GenusReport genus_from_perms(const std::vector<Perm>& tuple) {
  if (tuple.empty()) throw InvalidInput("empty tuple");
  std::size_t n = tuple.front().degree();
  Perm prod(n);
  for (const auto& x : tuple) prod *= x;
  if (!prod.is_identity()) throw InvalidInput("tuple product is not the identity");
  if (!is_transitive(n, tuple)) throw InvalidInput("tuple generates an intransitive group");
  std::vector<CycleType> pts;
  for (const auto& x : tuple) pts.push_back(cycle_type(x));
  return genus_from_ramification(n, pts);
}

GenusReport genus_from_tuple(const std::vector<WreathElement>& tuple) {
  std::vector<Perm> perms;
  perms.reserve(tuple.size());
  for (const auto& w : tuple) perms.push_back(embed(w));
  return genus_from_perms(perms);
}

long galois_genus(long m, const std::vector<long>& indices) {
  if (m <= 0) throw InvalidInput("group order must be positive");
  Rational rhs(-2 * m);
  for (long e : indices) {
    if (e <= 0 || m % e != 0)
      throw InvalidInput("branch index " + std::to_string(e) + " does not divide " + std::to_string(m));
    rhs += Rational(m) * (Rational(1) - Rational(1, e));
  }
  Rational g = (rhs + 2) / 2;
  if (g.denominator() != 1) throw InvalidInput("non-integral genus; the index data is not realizable");
  if (g.numerator() < 0) throw InvalidInput("negative genus");
  return g.numerator();
}

unsigned long long AbhyankarFiber::fiber_degree() const {
  unsigned long long s = 0;
  for (unsigned e : indices) s += e;
  return s;
}

AbhyankarFiber abhyankar_fiber(const CycleType& e1, const CycleType& e2, bool require_equal_degree) {
  if (require_equal_degree && e1.degree() != e2.degree())
    throw InvalidInput("fiber partitions have different degrees");
  AbhyankarFiber f;
  for (unsigned r1 : e1.parts())
    for (unsigned r2 : e2.parts()) {
      unsigned g = std::gcd(r1, r2);
      f.indices.insert(f.indices.end(), g, r1 / g * r2);
      f.contribution += static_cast<long>(r1) - g;
    }
  std::sort(f.indices.begin(), f.indices.end(), std::greater<>());
  return f;
}

unsigned long long galois_closure_index(const CycleType& e) {
  unsigned long long l = 1;
  for (unsigned k : e.parts()) l = std::lcm(l, static_cast<unsigned long long>(k));
  return l;
}

Rational almost_galois_threshold(unsigned ell, unsigned alpha, unsigned k) {
  long a1 = static_cast<long>(alpha) + 1, kk = k;
  return Rational(ell, kk) - Rational(2 * a1 * (kk + 1)) - Rational(2 * a1 * (kk * kk - 1), 3);
}

Rational almost_galois_epsilon(unsigned alpha, unsigned k) {
  long a1 = static_cast<long>(alpha) + 1, kk = k;
  return Rational(2 * a1 * kk) * (Rational(kk + 1) + Rational(kk * kk - 1, 3));
}

std::string AlmostGaloisReport::str() const {
  if (!determined) return "undetermined";
  return m ? std::to_string(*m) : std::string("inf");
}

AlmostGaloisReport almost_galois_type(const CycleType& e, unsigned alpha, AgMode mode) {
  AlmostGaloisReport r;
  r.mode = mode;
  unsigned ell = e.degree();
  if (mode == AgMode::Strict) {
    if (alpha == 0) throw InvalidInput("alpha must be positive");
    r.alpha = alpha;
    for (unsigned k = 1; k <= 6; ++k) {
      auto c = e.count(k);
      if (Rational(static_cast<long long>(c)) >= almost_galois_threshold(ell, alpha, k)) {
        r.m = k;
        r.count = c;
        r.error_bound = almost_galois_epsilon(alpha, k);
        return r;
      }
    }
    bool small = true;
    for (unsigned k = 1; k <= 6; ++k)
      if (e.count(k) > 2 * (alpha + 1) * (k + 1)) small = false;
    r.determined = small;
    return r;
  }
  unsigned best = 0;
  std::size_t best_count = 0;
  for (unsigned k = 1; k <= 6; ++k) {
    auto c = e.count(k);
    if (c > best_count || (c == best_count && c > 0 && k * c > best * best_count)) {
      best = k;
      best_count = c;
    }
  }
  if (best_count > 0 && 2 * best * best_count > ell) {
    r.m = best;
    r.count = best_count;
    r.error_bound = Rational(static_cast<long long>(ell - best * best_count));
  }
  return r;
}

bool perm_almost_galois(const Perm& x, std::optional<unsigned> m, const Rational& bound) {
  CycleType e = cycle_type(x);
  if (m) {
    if (*m < 1 || *m > 6) throw InvalidInput("almost Galois type must lie in 1..6 or be infinite");
    Rational need = (Rational(static_cast<long long>(x.degree())) - bound) / static_cast<long long>(*m);
    return Rational(static_cast<long long>(e.count(*m))) >= need;
  }
  return Rational(static_cast<long long>(e.size())) <= bound;
}

long pair_sum_s1(const CycleType& e) {
  long s = 0;
  for (unsigned r1 : e.parts())
    for (unsigned r2 : e.parts()) s += static_cast<long>(r1) - std::gcd(r1, r2);
  return s;
}

long pair_sum_s12(const CycleType& e1, const CycleType& e2) {
  long s = 0;
  for (unsigned r : e1.parts())
    for (unsigned q : e2.parts()) s += static_cast<long>(r) + q - 2 * static_cast<long>(std::gcd(r, q));
  return s;
}

long lemma71_genus(const Lemma71Input& in) {
  long rhs = 2 * static_cast<long>(in.ell) * (in.genus_y1 - 1);
  for (const auto& [a, b] : in.s_points) {
    if (a.degree() != in.ell || b.degree() != in.ell) throw InvalidInput("S-point partition has the wrong degree");
    rhs += pair_sum_s12(a, b);
  }
  for (const auto& e : in.r_points) {
    if (e.degree() != in.ell) throw InvalidInput("R-point partition has the wrong degree");
    rhs += pair_sum_s1(e);
    for (unsigned r : e.parts()) rhs -= (r % 2 == 1);
  }
  if ((rhs + 4) % 4 != 0) throw InvalidInput("non-integral genus from the pair sums");
  long g = (rhs + 4) / 4;
  if (g < 0) throw InvalidInput("negative genus from the pair sums");
  return g;
}

Lemma71Input lemma71_input_from_tuple(const std::vector<WreathElement>& tuple) {
  if (tuple.empty() || tuple.front().t() != 2) throw InvalidInput("the pair-sum genus needs a t = 2 tuple");
  Lemma71Input in;
  in.ell = static_cast<unsigned>(tuple.front().ell());
  long swaps = 0, r_h1 = 0;
  for (const auto& x : tuple) {
    if (!x.top().is_identity()) {
      ++swaps;
      CycleType e = cycle_type(x.base(0) * x.base(1));
      r_h1 += rh_contribution(e);
      in.r_points.push_back(std::move(e));
    } else if (!x.is_identity()) {
      CycleType a = cycle_type(x.base(0)), b = cycle_type(x.base(1));
      r_h1 += rh_contribution(a) + rh_contribution(b);
      in.s_points.emplace_back(std::move(a), std::move(b));
    }
  }
  if (swaps % 2 != 0) throw InvalidInput("odd number of swaps; the product cannot be the identity");
  long two_gy_minus_2 = swaps - 4;  // degree-2 cover branched at the swaps
  long two_gy1_minus_2 = static_cast<long>(in.ell) * two_gy_minus_2 + r_h1;
  if (two_gy1_minus_2 % 2 != 0) throw InvalidInput("odd ramification for h1");
  in.genus_y1 = two_gy1_minus_2 / 2 + 1;
  return in;
}

}  // namespace wm
