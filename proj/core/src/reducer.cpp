#include "wreathmono/reducer.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "wreathmono/errors.hpp"
#include "wreathmono/group.hpp"
#include "wreathmono/monodromy.hpp"
#include "wreathmono/tables.hpp"

namespace wm {

namespace {

std::vector<Perm> tops(const std::vector<WreathElement>& tuple) {
  std::vector<Perm> out;
  for (const auto& x : tuple) out.push_back(x.top());
  return out;
}

void check_shape(const std::vector<WreathElement>& tuple) {
  if (tuple.empty()) throw InvalidInput("empty tuple");
  std::size_t ell = tuple.front().ell(), t = tuple.front().t();
  for (const auto& x : tuple)
    if (x.ell() != ell || x.t() != t) throw InvalidInput("tuple elements have different shapes");
  if (t <= 2) throw InvalidInput("needs t > 2, got t = " + std::to_string(t));
  if (!check_product_one(tuple)) throw InvalidInput("tuple does not have product 1");
}

long group_order(std::size_t degree, const std::vector<Perm>& gens) {
  return static_cast<long>(PermGroup(degree, gens).order());
}

bool has_transposition_power(const Perm& s) {
  std::uint64_t o = s.order();
  for (std::uint64_t k = 1; k < o; ++k) {
    Perm p = s.pow(static_cast<long long>(k));
    if (p.num_cycles() == p.degree() - 1) return true;
  }
  return false;
}

bool in_table2(const std::vector<Perm>& sig) {
  std::size_t t = sig.front().degree();
  std::vector<CycleType> got;
  for (const auto& s : sig)
    if (!s.is_identity()) got.push_back(cycle_type(s));
  std::sort(got.begin(), got.end());
  for (const auto& row : table_data().table2) {
    if (row.degree != t) continue;
    auto want = row.classes;
    std::sort(want.begin(), want.end());
    if (want == got) return true;
  }
  return false;
}

std::vector<std::vector<Point>> orbits_of(const Perm& s) { return s.cycles(true); }

}  // namespace

void swap_move(std::vector<WreathElement>& tuple, std::size_t i) {
  if (i + 1 >= tuple.size()) throw InvalidInput("swap position out of range");
  WreathElement a = tuple[i], b = tuple[i + 1];
  tuple[i] = b;
  tuple[i + 1] = conjugate(a, b);
}

std::size_t lgy_s(const std::vector<WreathElement>& tuple) {
  auto sig = tops(tuple);
  std::size_t s = 0;
  while (s < sig.size() && !sig[s].is_identity()) ++s;
  for (std::size_t i = s; i < sig.size(); ++i)
    if (!sig[i].is_identity()) return 0;
  std::size_t t = sig.empty() ? 0 : sig.front().degree();
  if (s == 3) return sig[0].cycles(true).size() == 1 ? 3 : 0;
  if (s == 4) {
    long g = group_order(t, sig);
    bool ok = group_order(t, {sig[0], sig[1]}) == g && group_order(t, {sig[2], sig[3]}) == g;
    return ok ? 4 : 0;
  }
  return 0;
}

std::vector<WreathElement> normalize_LGY(std::vector<WreathElement> tuple) {
  check_shape(tuple);
  auto sig = tops(tuple);
  if (!in_table2(sig)) throw InvalidInput("ramification of the action on I is not in Table 2");
  if (std::none_of(sig.begin(), sig.end(), has_transposition_power))
    throw InvalidInput("no branch cycle has a power acting as a transposition on I");
  if (lgy_s(tuple) != 0) return tuple;

  // stable bubble sort by decreasing order of the top image
  auto ord = [&](std::size_t i) { return tuple[i].top().order(); };
  for (bool moved = true; moved;) {
    moved = false;
    for (std::size_t i = 0; i + 1 < tuple.size(); ++i)
      if (ord(i) < ord(i + 1)) {
        swap_move(tuple, i);
        moved = true;
      }
  }
  sig = tops(tuple);
  std::size_t s = 0;
  while (s < sig.size() && !sig[s].is_identity()) ++s;
  if (s == 4) {
    std::size_t t = sig.front().degree();
    if (group_order(t, {sig[0], sig[1]}) != group_order(t, sig)) swap_move(tuple, 1);
  }
  if (lgy_s(tuple) == 0) throw InvalidInput("swap moves did not reach the (LG_Y) normal form");
  return tuple;
}

ReducedMultiset reduced_multiset(const std::vector<WreathElement>& tuple) {
  check_shape(tuple);
  std::size_t s = lgy_s(tuple);
  if (s == 0) throw InvalidInput("tuple does not satisfy (LG_Y); run normalize_LGY first");
  const std::size_t r = tuple.size(), ell = tuple.front().ell(), t = tuple.front().t();
  auto sig = tops(tuple);
  {
    GenusReport gy;
    try {
      gy = genus_from_perms(sig);
    } catch (const std::exception& e) {
      throw InvalidInput(std::string("action on I: ") + e.what());
    }
    if (gy.genus != 0) throw InvalidInput("the cover given by the action on I has genus " + std::to_string(gy.genus));
    std::vector<long> orders;
    for (const auto& x : sig)
      if (!x.is_identity()) orders.push_back(static_cast<long>(x.order()));
    long g = galois_genus(group_order(t, sig), orders);
    if (g > 1) throw InvalidInput("Galois closure of the action on I has genus " + std::to_string(g));
  }
  const std::size_t j1_end = s - 2;  // J1 = [0, s-2), J2 = {s-2, s-1}, J3 = [s, r)

  ReducedMultiset m;
  m.ell = ell;
  m.t = t;
  m.s = s;

  // Step I: grow z from the point 0 along J1 so that J1 elements become reduced.
  std::vector<Perm> z(t, Perm(ell));
  std::vector<bool> in1(t, false);
  in1[0] = true;
  std::vector<std::set<Point>> P(r);
  for (std::size_t added = 1; added < t;) {
    bool found = false;
    for (Point i = 0; i < t && !found; ++i) {
      if (in1[i]) continue;
      for (std::size_t j = 0; j < j1_end && !found; ++j) {
        Point ii = sig[j][i];
        if (!in1[ii]) continue;
        z[i] = tuple[j].base(i) * z[ii];
        in1[i] = true;
        P[j].insert(i);
        found = true;
      }
    }
    if (!found) throw std::logic_error("J1 top images are not transitive on I");
    ++added;
  }
  m.z = z;
  m.p_size = t - 1;
  WreathElement Z = WreathElement::from_base(z);
  std::vector<WreathElement> x;
  for (const auto& e : tuple) x.push_back(conjugate(e, Z));

  // J1 representatives: the one point of each orbit outside P_j
  std::vector<std::vector<bool>> is_rep(r, std::vector<bool>(t, false));
  for (std::size_t j = 0; j < j1_end; ++j)
    for (const auto& orb : orbits_of(sig[j])) {
      std::size_t outside = 0;
      for (Point p : orb)
        if (!P[j].count(p)) {
          is_rep[j][p] = true;
          ++outside;
        }
      if (outside != 1) throw std::logic_error("J1 element not reduced after Step I");
    }

  // Step II: equation E_i reads prod_j a_j(i^{pi_j}) = 1, pi_j = sigma_1 ... sigma_{j-1}.
  std::vector<Perm> pi(r, Perm(t)), pi_inv(r);
  for (std::size_t j = 1; j < r; ++j) pi[j] = pi[j - 1] * sig[j - 1];
  for (std::size_t j = 0; j < r; ++j) pi_inv[j] = pi[j].inverse();
  struct Term {
    std::size_t j;
    Point p;
  };
  auto equation = [&](Point i, std::size_t from) {
    std::vector<Term> e;
    for (std::size_t k = 0; k < r; ++k) {
      std::size_t j = (from + k) % r;
      e.push_back({j, pi[j][i]});
    }
    return e;
  };
  std::vector<Term> word = equation(0, 0);

  // Step III: insert the remaining equations next to J2 terms, one top orbit at a time.
  std::vector<bool> in2(t, false);
  in2[0] = true;
  std::size_t covered = 1;
  while (covered < t) {
    bool found = false;
    for (Point mu = 0; mu < t && !found; ++mu) {
      if (!in2[mu]) continue;
      for (std::size_t k = j1_end; k < s && !found; ++k) {
        // orbit of mu under sigma_k conjugated to equation indices
        bool escapes = false;
        for (Point i = pi_inv[k][sig[k][pi[k][mu]]]; i != mu; i = pi_inv[k][sig[k][pi[k][i]]])
          if (!in2[i]) escapes = true;
        if (!escapes) continue;
        found = true;
        Point start = pi[k][mu];
        auto at = std::find_if(word.begin(), word.end(), [&](const Term& w) { return w.j == k && w.p == start; });
        if (at == word.end()) throw std::logic_error("J2 term missing from the product word");
        std::size_t pos = static_cast<std::size_t>(at - word.begin());
        for (Point q = sig[k][start]; q != start; q = sig[k][q]) {
          Point nu = pi_inv[k][q];
          if (in2[nu]) throw std::logic_error("top orbit meets the inserted set twice");
          auto e = equation(nu, k);  // a_k(q) R L = 1
          word.insert(word.begin() + static_cast<std::ptrdiff_t>(pos + 1), e.begin(), e.end());
          ++pos;
          in2[nu] = true;
          ++covered;
          ++m.q_size;
        }
      }
    }
    if (!found) throw std::logic_error("no J2 orbit leaves the inserted set");
  }
  if (m.q_size != t - 1) throw std::logic_error("|Q| != t - 1 at termination");

  // Step IV: read the elements off the word.
  for (std::size_t w = 0; w < word.size();) {
    auto [j, p] = word[w];
    const Perm& a = x[j].base(p);
    if (j < j1_end) {
      if (is_rep[j][p]) {
        std::size_t len = 1;
        for (Point q = sig[j][p]; q != p; q = sig[j][q]) ++len;
        m.certificate.push_back({m.elements.size(), 1});
        m.elements.push_back({j, p, len, a});
      } else if (!a.is_identity()) {
        throw std::logic_error("non-representative J1 base entry is not trivial");
      }
      ++w;
    } else if (j >= s) {
      m.certificate.push_back({m.elements.size(), 1});
      m.elements.push_back({j, p, 1, a});
      ++w;
    } else {
      Perm y = a;
      std::size_t len = 1, v = w + 1;
      for (Point q = sig[j][p]; q != p; q = sig[j][q], ++len, ++v) {
        if (v >= word.size() || word[v].j != j || word[v].p != q)
          throw std::logic_error("J2 orbit block is not contiguous in the product word");
        y *= x[j].base(q);
      }
      m.certificate.push_back({m.elements.size(), 1});
      m.elements.push_back({j, p, len, y});
      w = v;
    }
  }
  std::vector<Perm> ys;
  for (const auto& e : m.elements) ys.push_back(e.y);
  m.transitive = is_transitive(ell, ys);
  return m;
}

MultisetCheck check_multiset(const ReducedMultiset& m, const std::vector<WreathElement>& source) {
  MultisetCheck c;
  if (source.empty() || m.z.size() != source.front().t()) return c;
  const std::size_t ell = source.front().ell();
  WreathElement Z = WreathElement::from_base(m.z);
  std::vector<WreathElement> x;
  for (const auto& e : source) x.push_back(conjugate(e, Z));

  c.elements_match = true;
  std::set<std::pair<std::size_t, Point>> seen;  // (j, smallest point of orbit)
  for (const auto& e : m.elements) {
    if (e.j >= x.size() || e.rep >= x[e.j].t() || e.y.degree() != ell) {
      c.elements_match = false;
      continue;
    }
    const Perm& s = x[e.j].top();
    Point lo = e.rep;
    std::size_t len = 1;
    for (Point q = s[e.rep]; q != e.rep; q = s[q], ++len) lo = std::min(lo, q);
    if (len != e.len || orbit_product(x[e.j], e.rep) != e.y) c.elements_match = false;
    seen.insert({e.j, lo});
  }
  std::size_t orbits = 0;
  for (const auto& xi : x) orbits += xi.top().cycles(true).size();
  c.each_orbit_once = seen.size() == m.elements.size() && orbits == m.elements.size();

  std::vector<int> used(m.elements.size(), 0);
  Perm prod(ell);
  bool well_formed = true;
  for (const auto& term : m.certificate) {
    if (term.index >= m.elements.size() || (term.exponent != 1 && term.exponent != -1)) {
      well_formed = false;
      break;
    }
    ++used[term.index];
    const Perm& y = m.elements[term.index].y;
    prod *= term.exponent == 1 ? y : y.inverse();
  }
  c.certificate_product = well_formed && std::all_of(used.begin(), used.end(), [](int u) { return u == 1; }) &&
                          prod.is_identity();

  std::vector<Perm> ys;
  for (const auto& e : m.elements) ys.push_back(e.y);
  c.transitive = !ys.empty() && is_transitive(ell, ys);
  return c;
}

bool verify_multiset(const ReducedMultiset& m, const std::vector<WreathElement>& source) {
  return check_multiset(m, source).ok();
}

GenusReport hatf_genus(const ReducedMultiset& m) {
  std::vector<Perm> ys;
  Perm prod(m.ell);
  for (const auto& term : m.certificate) {
    const Perm& y = m.elements.at(term.index).y;
    prod *= term.exponent == 1 ? y : y.inverse();
  }
  for (const auto& e : m.elements) ys.push_back(e.y);
  if (!prod.is_identity()) throw InvalidInput("certificate product is not the identity");
  if (ys.empty() || !is_transitive(m.ell, ys)) throw InvalidInput("multiset is not transitive");
  std::vector<CycleType> pts;
  for (const auto& y : ys) pts.push_back(cycle_type(y));
  return genus_from_ramification(m.ell, pts);
}

std::vector<std::string> element_names(const ReducedMultiset& m, const std::vector<WreathElement>& source) {
  std::vector<std::string> out;
  for (const auto& e : m.elements) {
    std::string name = e.j < 26 ? std::string(1, static_cast<char>('a' + e.j)) : "x" + std::to_string(e.j + 1) + "_";
    if (e.j < source.size()) {
      auto orbs = source[e.j].top().cycles(true);
      if (orbs.size() > 1)
        for (std::size_t k = 0; k < orbs.size(); ++k)
          if (std::find(orbs[k].begin(), orbs[k].end(), e.rep) != orbs[k].end()) name += std::to_string(k + 1);
    }
    out.push_back(name);
  }
  return out;
}

std::string certificate_string(const ReducedMultiset& m, const std::vector<std::string>& names) {
  std::string out;
  for (const auto& term : m.certificate) {
    if (!out.empty()) out += "·";
    out += term.index < names.size() ? names[term.index] : "y" + std::to_string(term.index);
    if (term.exponent == -1) out += "^-1";
  }
  return out;
}

}  // namespace wm
