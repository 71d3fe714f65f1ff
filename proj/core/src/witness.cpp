#include "wreathmono/witness.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "wreathmono/errors.hpp"
#include "wreathmono/group.hpp"
#include "wreathmono/monodromy.hpp"
#include "wreathmono/relation.hpp"
#include "wreathmono/search.hpp"
#include "wreathmono/tables.hpp"

namespace wm {

namespace {

bool is_type(const Perm& x, std::initializer_list<unsigned> moved) {
  std::vector<unsigned> parts(moved);
  std::size_t fixed = x.degree();
  for (unsigned p : parts) fixed -= p;
  parts.insert(parts.end(), fixed, 1u);
  return cycle_type(x) == CycleType(parts);
}

bool is_long_cycle(const Perm& x) { return is_type(x, {static_cast<unsigned>(x.degree())}); }
bool is_transposition(const Perm& x) { return is_type(x, {2}); }

// Cycle of x through p, starting at p.
std::vector<Point> cycle_from(const Perm& x, Point p) {
  std::vector<Point> c{p};
  for (Point q = x[p]; q != p; q = x[q]) c.push_back(q);
  return c;
}

// adbc = 1 with a, b l-cycles and c, d transpositions: an involution z with
// z a z = b and z c z = d. Aligns the l-cycles so that z carries c to d.
std::optional<Perm> involution_z(const Perm& a, const Perm& b, const Perm& c, const Perm& d) {
  std::size_t n = a.degree();
  auto cc = c.cycles().front(), dc = d.cycles().front();
  for (Point p : cc)
    for (Point q : dc) {
      Point p2 = p == cc[0] ? cc[1] : cc[0];
      Point q2 = q == dc[0] ? dc[1] : dc[0];
      auto ua = cycle_from(a, p), ub = cycle_from(b, q);
      auto j = std::find(ua.begin(), ua.end(), p2) - ua.begin();
      if (ub[j] != q2) continue;
      std::vector<Point> img(n);
      for (std::size_t k = 0; k < n; ++k) img[ua[k]] = ub[k];
      Perm z(img);
      if ((z * z).is_identity() && conjugate(a, z) == b && conjugate(c, z) == d) return z;
    }
  // fall back to a conjugator search; accept only an involution
  if (auto z = simultaneous_conjugator({a, c}, {b, d}))
    if ((*z * *z).is_identity()) return z;
  return std::nullopt;
}

template <class Rng>
Perm random_conjugator(const Perm& x, const Perm& y, Rng& rng) {
  std::map<std::size_t, std::vector<std::vector<Point>>> xc, yc;
  for (auto& c : x.cycles(true)) xc[c.size()].push_back(c);
  for (auto& c : y.cycles(true)) yc[c.size()].push_back(c);
  std::vector<Point> img(x.degree());
  for (auto& [len, cs] : xc) {
    auto& ds = yc[len];
    std::shuffle(ds.begin(), ds.end(), rng);
    for (std::size_t i = 0; i < cs.size(); ++i) {
      std::size_t r = std::uniform_int_distribution<std::size_t>(0, len - 1)(rng);
      for (std::size_t k = 0; k < len; ++k) img[cs[i][k]] = ds[i][(k + r) % len];
    }
  }
  return Perm(img);
}

WreathElement pair(const Perm& a, const Perm& b) { return WreathElement({a, b}, Perm(2)); }
WreathElement pair_s(const Perm& a, const Perm& b) { return WreathElement({a, b}, swap_top()); }

bool classes_match(const std::vector<WreathElement>& t, const std::vector<std::string>& expected, unsigned ell) {
  std::vector<ClassDescriptor> got, want = instantiate_classes(expected, ell, std::nullopt);
  for (const auto& x : t) got.push_back(class_descriptor(x));
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  return got == want;
}

// K is contained in {(u, w(u))}
template <class F>
std::pair<std::size_t, bool> kernel_in_graph(const std::vector<WreathElement>& tuple, F w) {
  auto K = kernel_K(tuple);
  bool ok = std::all_of(K.begin(), K.end(), [&](const WreathElement& k) { return w(k.base(0)) == k.base(1); });
  return {K.size(), ok};
}

}  // namespace

std::string to_string(WitnessKind k) {
  switch (k) {
    case WitnessKind::InvolutionZ: return "involution-z";
    case WitnessKind::VConjugator: return "v-conjugator";
    case WitnessKind::InvertingZ: return "inverting-z";
  }
  return "?";
}

bool Witness::valid() const {
  return tuple_ok && K_in_twisted_diagonal &&
         std::all_of(relations.begin(), relations.end(), [](const Relation& r) { return r.holds; });
}

Witness nonexistence_witness(const std::string& id, const NonexistenceParams& p) {
  Witness w;
  w.id = id;
  const Perm &a = p.a, &b = p.b, &c = p.c, &d = p.d;
  std::size_t n = a.degree();
  if (n == 0 || b.degree() != n) throw InvalidInput("witness parameters need a and b of equal degree");
  Perm one(n);

  if (id == "I1A.N1") {
    if (c.degree() != n || d.degree() != n) throw InvalidInput("c and d need degree " + std::to_string(n));
    if (!is_long_cycle(a) || !is_long_cycle(b) || !is_transposition(c) || !is_transposition(d))
      throw InvalidInput("I1A.N1 needs l-cycles a, b and transpositions c, d");
    if (!(a * d * b * c).is_identity()) throw InvalidInput("I1A.N1 needs adbc = 1");
    w.kind = WitnessKind::InvolutionZ;
    auto z = involution_z(a, b, c, d);
    if (!z) throw std::logic_error("I1A.N1: no involution z found");
    w.z = *z;
    w.relations = {{"z^2 = 1", (w.z * w.z).is_identity()},
                   {"z a z = b", w.z * a * w.z == b},
                   {"z c z = d", w.z * c * w.z == d}};
    Perm e = b * c;
    w.tuple = {pair(b, a), pair(c, d), pair_s(e.inverse(), e), pair_s(one, one)};
    auto [k, ok] = kernel_in_graph(w.tuple, [&](const Perm& u) { return w.z * u * w.z; });
    w.K_generators = k;
    w.K_in_twisted_diagonal = ok;
  } else if (id == "I1A.N2") {
    if (c.degree() != n || d.degree() != n) throw InvalidInput("c and d need degree " + std::to_string(n));
    if (!is_long_cycle(a) || !is_long_cycle(b) || !is_transposition(c) || !is_transposition(d) ||
        !is_type(c * d, {2, 2}))
      throw InvalidInput("I1A.N2 needs l-cycles a, b and disjoint transpositions c, d");
    if (!(a * b * c * d).is_identity()) throw InvalidInput("I1A.N2 needs abcd = 1");
    w.kind = WitnessKind::VConjugator;
    Perm a0 = d * a * d;  // a0 d b c = 1
    auto z = involution_z(a0, b, c, d);
    if (!z) throw std::logic_error("I1A.N2: no involution z found");
    w.z = d * *z;
    const Perm& v = w.z;
    Perm vi = v.inverse();
    w.relations = {{"v^2 = cd", v * v == c * d},
                   {"v b v^-1 = a", v * b * vi == a},
                   {"v a v^-1 = cdbcd", v * a * vi == c * d * b * c * d}};
    Perm e = b * c * d;
    w.tuple = {pair(b, a), pair_s(c * d, one), pair_s(e, e.inverse())};
    auto [k, ok] = kernel_in_graph(w.tuple, [&](const Perm& u) { return v * u * vi; });
    w.K_generators = k;
    w.K_in_twisted_diagonal = ok;
  } else if (id == "F4.N1" || id == "F4.N2") {
    Perm v = commutator(a, b).inverse();
    bool n1 = id == "F4.N1";
    if (n1 ? !is_type(v, {2, 2}) : !is_type(v, {3}))
      throw InvalidInput(id + " needs [a,b] of type " + (n1 ? "[2^2]" : "[3]"));
    w.kind = WitnessKind::InvertingZ;
    auto z = simultaneous_conjugator({a, b}, {a.inverse(), b.inverse()});
    if (!z) throw std::logic_error(id + ": no inverting element found");
    w.z = *z;
    w.relations = {{"a^z = a^-1", conjugate(a, w.z) == a.inverse()}, {"b^z = b^-1", conjugate(b, w.z) == b.inverse()}};
    Perm c2 = (a * b).inverse();
    w.tuple = {pair_s(one, one), pair_s(a.inverse(), a), pair_s(b, b.inverse()), pair_s(c2.inverse() * v, c2)};
    auto [k, ok] = kernel_in_graph(w.tuple, [&](const Perm& u) { return conjugate(u, w.z); });
    w.K_generators = k;
    w.K_in_twisted_diagonal = ok;
  } else {
    throw InvalidInput("no witness construction for " + id);
  }
  w.tuple_ok = check_product_one(w.tuple) && classes_match(w.tuple, find_table4_row(id).classes, static_cast<unsigned>(n));
  return w;
}

NonexistenceParams random_params(const std::string& id, unsigned ell, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  NonexistenceParams p;
  CycleType lcyc({ell});
  CycleType tr = CycleType::parse("[2,1^" + std::to_string(ell - 2) + "]");
  if (id == "I1A.N1") {
    p.b = random_of_type(lcyc, rng);
    p.c = random_of_type(tr, rng);
    Perm w = p.c * p.b.inverse();  // = ad, two cycles
    auto cs = w.cycles(true);
    if (cs.size() != 2) throw std::logic_error("c b^-1 should have two cycles");
    auto pick = [&](const std::vector<Point>& v) { return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)]; };
    p.d = Perm::transposition(ell, pick(cs[0]), pick(cs[1]));
    p.a = w * p.d;
    return p;
  }
  if (id == "I1A.N2") {
    for (int tries = 0; tries < 100000; ++tries) {
      p.b = random_of_type(lcyc, rng);
      p.c = random_of_type(tr, rng);
      p.d = random_of_type(tr, rng);
      if (!is_type(p.c * p.d, {2, 2})) continue;
      p.a = (p.b * p.c * p.d).inverse();
      if (is_long_cycle(p.a)) return p;
    }
    throw std::runtime_error("I1A.N2: no random parameters found");
  }
  if (id == "F4.N1" || id == "F4.N2") {
    CycleType vt = CycleType::parse(id == "F4.N1" ? "[2^2,1^" + std::to_string(ell - 4) + "]"
                                                  : "[3,1^" + std::to_string(ell - 3) + "]");
    for (int tries = 0; tries < 100000; ++tries) {
      p.a = random_perm(ell, rng);
      Perm v = random_of_type(vt, rng);
      Perm target = p.a * v.inverse();  // a^b
      if (cycle_type(target) != cycle_type(p.a)) continue;
      p.b = random_conjugator(p.a, target, rng);
      p.c = p.d = Perm(ell);
      return p;
    }
    throw std::runtime_error(id + ": no random parameters found");
  }
  throw InvalidInput("no parameter family for " + id);
}

WitnessSweep witness_sweep(const std::string& id, const std::vector<unsigned>& ells, std::size_t draws_per_ell,
                           std::uint64_t seed) {
  WitnessSweep s;
  s.id = id;
  s.ells = ells;
  for (unsigned ell : ells)
    for (std::size_t k = 0; k < draws_per_ell; ++k) {
      ++s.draws;
      std::uint64_t sd = seed * 1000003 + ell * 7919 + k;
      try {
        auto w = nonexistence_witness(id, random_params(id, ell, sd));
        if (w.valid()) ++s.verified;
        else s.failures.push_back("l=" + std::to_string(ell) + " seed " + std::to_string(sd) + ": witness did not verify");
      } catch (const std::exception& e) {
        s.failures.push_back("l=" + std::to_string(ell) + " seed " + std::to_string(sd) + ": " + e.what());
      }
    }
  return s;
}

SmallDegreeEvidence f4n3_evidence(unsigned ell) {
  if (ell < 3 || ell > 6) throw InvalidInput("F4.N3 enumeration is limited to 3 <= l <= 6");
  SmallDegreeEvidence ev;
  ev.ell = ell;
  // Up to conjugacy in S_l wr S_2 the first swap is s and d1 = (1,2); then
  // s, (a^-1,a)s, (b,b^-1)s, (c,c^-1)s, (d1,d2) has product 1 iff c = d1 a b
  // and d2 = b^-1 a^-1 d1 b a; only tuples with d2 a transposition count.
  Perm one(ell), d1 = Perm::transposition(ell, 0, 1);
  std::vector<Point> img(ell);
  for (Point i = 0; i < ell; ++i) img[i] = i;
  std::vector<Perm> all;
  do all.emplace_back(img);
  while (std::next_permutation(img.begin(), img.end()));
  for (const auto& a : all)
    for (const auto& b : all) {
      Perm c = d1 * a * b;
      Perm d2 = b.inverse() * a.inverse() * d1 * b * a;
      if (!is_transposition(d2)) continue;
      std::vector<WreathElement> t{pair_s(one, one), pair_s(a.inverse(), a), pair_s(b, b.inverse()),
                                   pair_s(c, c.inverse()), pair(d1, d2)};
      if (!check_product_one(t)) throw std::logic_error("F4.N3 enumeration produced a tuple without product 1");
      ++ev.tuples;
      std::vector<Perm> gens;
      for (const auto& x : t) gens.push_back(embed(x));
      if (!is_transitive(ell * ell, gens)) continue;
      ++ev.transitive;
      if (is_primitive(ell * ell, gens).primitive) ++ev.primitive;
    }
  ev.annotation = "exhaustive up to conjugacy at l=" + std::to_string(ell) + "; not exhaustive at l>=9";
  return ev;
}

SearchEvidence primitive_search_evidence(const std::string& id) {
  const auto& rows = table_data().primitive_searches;
  auto it = std::find_if(rows.begin(), rows.end(), [&](const PrimitiveSearchRow& r) { return r.id == id; });
  if (it == rows.end()) throw InvalidInput("no primitive search listed for " + id);
  SearchQuery q;
  q.degree = it->degree;
  q.classes = it->classes;
  q.require_primitive = true;
  auto res = exists_primitive_tuple(q);
  return {id, it->degree, res.exists, res.nodes, res.candidates};
}

}  // namespace wm
