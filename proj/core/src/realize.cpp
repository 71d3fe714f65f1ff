#include "wreathmono/realize.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "wreathmono/errors.hpp"
#include "wreathmono/ramify.hpp"
#include "wreathmono/relation.hpp"

namespace wm {

namespace {

// Product of 1-based cycles, composed left to right; cycles may overlap.
Perm cyc(std::size_t n, const std::vector<std::vector<Point>>& cycles) {
  Perm p(n);
  for (const auto& c : cycles) {
    if (c.size() < 2) continue;
    std::vector<Point> z;
    for (Point x : c) z.push_back(x - 1);
    p *= Perm::from_cycles(n, {z});
  }
  return p;
}

std::vector<Point> run(Point lo, Point hi) {  // lo..hi inclusive, either direction
  std::vector<Point> v;
  if (lo <= hi) {
    for (Point p = lo; p <= hi; ++p) v.push_back(p);
  } else {
    for (Point p = lo; p >= hi; --p) v.push_back(p);
  }
  return v;
}

std::vector<Point> step(Point lo, Point hi, int by) {
  std::vector<Point> v;
  if (by > 0) {
    for (long p = lo; p <= static_cast<long>(hi); p += by) v.push_back(static_cast<Point>(p));
  } else {
    for (long p = lo; p >= static_cast<long>(hi); p += by) v.push_back(static_cast<Point>(p));
  }
  return v;
}

std::vector<Point> cat(std::vector<Point> a, const std::vector<Point>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Perm close_relation(const std::vector<Perm>& xs) {
  Perm p(xs.front().degree());
  for (const auto& x : xs) p *= x;
  return p.inverse();
}

unsigned smallest_coprime_shift(unsigned ell) {
  for (unsigned u = 2; u + 2 <= ell; ++u)
    if (std::gcd(u, ell) == 1) return u;
  return 1;
}

WreathElement pair(const Perm& a, const Perm& b) { return WreathElement({a, b}, Perm(2)); }
WreathElement pair_s(const Perm& a, const Perm& b) { return WreathElement({a, b}, swap_top()); }

struct TwoSwapShape {
  std::vector<ClassDescriptor> nonswaps;
  CycleType e1, e2;
};

TwoSwapShape two_swap_shape(const std::vector<ClassDescriptor>& cls) {
  TwoSwapShape sh;
  std::vector<CycleType> swaps;
  for (const auto& d : cls) {
    if (d.swap) swaps.push_back(d.first);
    else sh.nonswaps.push_back(d);
  }
  if (swaps.size() != 2) throw std::logic_error("two-swap construction used on a row with " + std::to_string(swaps.size()) + " swaps");
  sh.e1 = swaps[0];
  sh.e2 = swaps[1];
  return sh;
}

// Slot types [p_1..p_k, u, q_1..q_k, y] for an orientation mask.
std::vector<CycleType> slot_types(const TwoSwapShape& sh, unsigned mask) {
  std::size_t k = sh.nonswaps.size();
  std::vector<CycleType> t(2 * k + 2);
  for (std::size_t i = 0; i < k; ++i) {
    bool flip = (mask >> i) & 1u;
    t[i] = flip ? sh.nonswaps[i].second : sh.nonswaps[i].first;
    t[k + 1 + i] = flip ? sh.nonswaps[i].first : sh.nonswaps[i].second;
  }
  t[k] = sh.e1;
  t[2 * k + 1] = sh.e2;
  return t;
}

// Non-swaps (p_i, q_i), then (u, 1)s and (Q^-1, (P u)^-1)s; product 1 iff
// p_1..p_k u q_1..q_k y = 1 with y in the class of the second swap.
std::vector<WreathElement> build_two_swap(const std::vector<Perm>& slots, std::size_t k) {
  std::size_t n = slots.front().degree();
  std::vector<WreathElement> out;
  Perm P(n), Q(n);
  for (std::size_t i = 0; i < k; ++i) {
    out.push_back(pair(slots[i], slots[k + 1 + i]));
    P *= slots[i];
    Q *= slots[k + 1 + i];
  }
  const Perm& u = slots[k];
  out.push_back(pair_s(u, Perm(n)));
  out.push_back(pair_s(Q.inverse(), (P * u).inverse()));
  return out;
}

// Places an explicit relation into the slots, up to rotation and reversal.
std::optional<std::vector<Perm>> fit_relation(const std::vector<Perm>& rel, const TwoSwapShape& sh, unsigned mask) {
  auto types = slot_types(sh, mask);
  std::vector<std::size_t> live;
  for (std::size_t i = 0; i < types.size(); ++i)
    if (!types[i].is_identity()) live.push_back(i);
  std::size_t m = rel.size();
  if (live.size() != m) return std::nullopt;
  std::vector<Perm> rev;
  for (std::size_t i = m; i-- > 0;) rev.push_back(rel[i].inverse());
  for (const std::vector<Perm>* w : {&rel, static_cast<const std::vector<Perm>*>(&rev)})
    for (std::size_t r = 0; r < m; ++r) {
      bool ok = true;
      for (std::size_t j = 0; j < m && ok; ++j) ok = cycle_type((*w)[(r + j) % m]) == types[live[j]];
      if (!ok) continue;
      std::size_t n = rel.front().degree();
      std::vector<Perm> slots(types.size(), Perm(n));
      for (std::size_t j = 0; j < m; ++j) slots[live[j]] = (*w)[(r + j) % m];
      return slots;
    }
  return std::nullopt;
}

bool same_class_multiset(std::vector<ClassDescriptor> a, std::vector<ClassDescriptor> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

using Candidate = std::function<std::optional<std::vector<WreathElement>>()>;

std::vector<Candidate> swap_square_candidates(const std::string& id, unsigned ell, std::optional<unsigned> a) {
  std::vector<Candidate> out;
  auto recipe = [ell](Perm b, Perm d, Perm u, Perm v) {
    return std::vector<WreathElement>{pair(b, d), pair_s(Perm(ell), u), pair_s(b * v, b.inverse())};
  };
  if (id == "I2.2a") {
    out.push_back([=]() -> std::optional<std::vector<WreathElement>> {
      std::vector<std::vector<Point>> bc, dc;
      for (Point i = 1; i + 3 <= ell; i += 2) bc.push_back({i, i + 1});
      for (Point i = 2; i + 2 <= ell; i += 2) dc.push_back({i, i + 1});
      Perm b = cyc(ell, bc), d = cyc(ell, dc), v = cyc(ell, {{ell - 1, ell}});
      Perm u = cyc(ell, {cat(step(2, ell, 2), step(ell - 1, 1, -2))});
      return recipe(b, d, u, v);
    });
  } else if (id == "I2.10b" && a) {
    unsigned k = *a;
    out.push_back([=]() -> std::optional<std::vector<WreathElement>> {
      std::vector<std::vector<Point>> bc, dc;
      for (Point i = 1; i + 2 <= ell; i += 2) bc.push_back({i, i + 1});
      for (Point i = 2; i + 1 <= ell; i += 2) dc.push_back({i, i + 1});
      Perm b = cyc(ell, bc), d = cyc(ell, dc), v = cyc(ell, {{2 * k, 1}});
      Perm u = cyc(ell, {step(2 * k - 1, 1, -2), cat(step(2, ell - 1, 2), step(ell, 2 * k + 1, -2))});
      return recipe(b, d, u, v);
    });
  } else if (id == "I1A.2a" || (id == "I1A.5a" && a)) {
    out.push_back([=]() -> std::optional<std::vector<WreathElement>> {
      Perm b = id == "I1A.2a" ? cyc(ell, {run(1, ell)}) : cyc(ell, {run(1, *a), run(*a + 1, ell)});
      Perm v = id == "I1A.2a" ? cyc(ell, {{2, 3}}) : cyc(ell, {{1, *a + 1}});
      Perm u = b * v * b.inverse();  // u^b = v
      return recipe(b, b.inverse(), u, v);
    });
  }
  return out;
}

std::vector<Candidate> four_swap_candidates(const std::string& id, unsigned ell, Variant variant) {
  std::vector<Candidate> out;
  bool three_cycle = (id == "F4.5");
  bool double_tr = (id == "F4.4");
  // second: the single non-swap sits in the second coordinate, (1, d2).
  auto build = [=](Perm b, Perm c, bool second) -> std::optional<std::vector<WreathElement>> {
    std::size_t n = ell;
    // first coordinate: d1 e1 u = (v^-1)^{bc} [c,b]; second: d2 = c b c^-1 b^-1
    Perm X = second ? c * b * c.inverse() * b.inverse() : commutator(c, b);
    if (second && !(three_cycle || double_tr)) return std::nullopt;
    Perm u(n), v(n), d1(n), e1(n);
    auto split = [&](const Perm& x) -> std::optional<std::pair<Perm, Perm>> {
      auto cs = x.cycles();
      std::vector<std::pair<Perm, Perm>> tries;
      if (cs.size() == 2 && cs[0].size() == 2 && cs[1].size() == 2) {
        tries.emplace_back(Perm::from_cycles(n, {cs[0]}), Perm::from_cycles(n, {cs[1]}));
      } else if (cs.size() == 1 && cs[0].size() == 3) {
        Point p = cs[0][0], q = cs[0][1], r = cs[0][2];
        tries.emplace_back(Perm::transposition(n, p, q), Perm::transposition(n, p, r));
        tries.emplace_back(Perm::transposition(n, p, r), Perm::transposition(n, p, q));
      }
      for (auto& t : tries)
        if (t.first * t.second == x) return t;
      return std::nullopt;
    };
    CycleType xt = cycle_type(X);
    if (id == "F4.1" || id == "F4.2" || id == "F4.3") {
      auto s = split(X);
      if (!s) return std::nullopt;
      if (id == "F4.3") {
        d1 = s->first;
        e1 = s->second;
      } else {
        v = conjugate(s->first, (b * c).inverse());
        Perm R = conjugate(v.inverse(), b * c) * X;
        (id == "F4.1" ? u : d1) = R;
      }
    } else {
      if (double_tr) {
        auto m = xt.multiplicities();
        if (!(m.count(2) && m[2] == 2 && xt.size() == n - 2)) return std::nullopt;
      }
      if (three_cycle) {
        auto m = xt.multiplicities();
        if (!(m.count(3) && m[3] == 1 && xt.size() == n - 2)) return std::nullopt;
      }
      d1 = X;
    }
    Perm a = (b * c * (second ? Perm(n) : d1 * e1)).inverse();
    std::vector<WreathElement> t{pair_s(Perm(n), Perm(n)), pair_s(a.inverse(), a), pair_s(b, u * b.inverse()),
                                 pair_s(c.inverse() * v, c)};
    if (second) t.push_back(pair(Perm(n), d1));
    else if (!d1.is_identity()) t.push_back(pair(d1, Perm(n)));
    if (!e1.is_identity()) t.push_back(pair(e1, Perm(n)));
    return t;
  };

  std::vector<std::pair<Perm, Perm>> params;
  if (variant == Variant::Even && (three_cycle || double_tr)) {
    Perm b = ell % 2 ? cyc(ell, {run(1, ell)}) : cyc(ell, {{1, 2}, run(3, ell)});
    if (ell % 2) params.emplace_back(b, three_cycle ? cyc(ell, {{1, 3}, {2, 4}}) : cyc(ell, {{1, 4}, {2, 5}}));
    else params.emplace_back(b, three_cycle ? cyc(ell, {{1, 2, 3}}) : cyc(ell, {{1, 3}, {2, 4}}));
    // deterministic fallback: small even c
    for (Point p = 2; p <= std::min(ell, 7u); ++p)
      for (Point q = 2; q <= std::min(ell, 7u); ++q)
        if (p != q) params.emplace_back(b, cyc(ell, {{1, p, q}}));
    for (Point p = 2; p <= std::min(ell, 7u); ++p)
      for (Point q = 2; q <= std::min(ell, 7u); ++q)
        for (Point r = q + 1; r <= std::min(ell, 7u); ++r)
          if (p != q && p != r) params.emplace_back(b, cyc(ell, {{1, p}, {q, r}}));
  } else {
    Perm b = cyc(ell, {run(1, ell)});
    if (three_cycle) params.emplace_back(b, cyc(ell, {{1, 2}}));
    for (Point k = 3; k <= ell; ++k)
      if (std::gcd(k - 1, ell) == 1) params.emplace_back(b, cyc(ell, {{1, k}}));
    if (!three_cycle)
      for (Point k = 3; k <= ell; ++k)
        if (std::gcd(k - 1, ell) != 1) params.emplace_back(b, cyc(ell, {{1, k}}));
  }
  for (bool second : {false, true})
    for (auto& [b, c] : params) out.push_back([=]() { return build(b, c, second); });
  return out;
}

}  // namespace

std::optional<std::vector<Perm>> explicit_relation(const std::string& id, unsigned ell, std::optional<unsigned> a) {
  std::size_t n = ell;
  auto rel3 = [](Perm x1, Perm x2) {
    Perm x3 = close_relation({x1, x2});
    return std::vector<Perm>{std::move(x1), std::move(x2), std::move(x3)};
  };
  if (id == "I1A.1" || id == "I1A.3" || id == "I1A.2b" || id == "I1A.2c") {
    unsigned u = id == "I1A.1" ? 1 : smallest_coprime_shift(ell);
    Perm t1 = cyc(n, {{1, u + 1}}), t2 = cyc(n, {{2, u + 2}});
    Perm x3 = cyc(n, {run(1, ell)});
    // for u = 1 the transpositions overlap; this order gives (1,2,3)
    Perm x2 = t2 * t1;
    Perm x1 = close_relation({x2, x3});
    if (id == "I1A.2b" || id == "I1A.2c") return std::vector<Perm>{close_relation({t2, t1, x3}), t2, t1, x3};
    return std::vector<Perm>{x1, x2, x3};
  }
  if ((id == "I1A.4" || id == "I1A.6" || id == "I1A.5b" || id == "I1A.5c") && a) {
    unsigned k = *a;
    Perm x = cyc(n, {run(1, k), run(k + 1, ell)});
    if (id == "I1A.4") return rel3(cyc(n, {{1, k + 1, ell + 1 - k}}), x);
    if (id == "I1A.6") {
      if (k > 1) return rel3(cyc(n, {run(k + 1, 2), cat(run(ell, k + 2), {1})}), x);
      return rel3(cyc(n, {cat(run(ell - 1, 3), {ell, 2})}), cyc(n, {run(1, ell - 1)}));
    }
    Perm y = cyc(n, {{1, k + 1}});
    return std::vector<Perm>{x, x.inverse(), y, y.inverse()};
  }
  if (id == "F2.1" && ell % 3 == 0) {
    Point u = ell / 3;
    std::vector<std::vector<Point>> c1{{1, 2, 3 * u}, {3 * u - 2, 3 * u - 1}}, c2;
    for (Point i = 1; i + 2 <= u; ++i) c1.push_back({3 * i, 3 * i + 1, 3 * i + 2});
    for (Point i = 0; i < u; ++i) c2.push_back({3 * i + 1, 3 * i + 2, 3 * i + 3});
    return rel3(cyc(n, c1), cyc(n, c2));
  }
  if (id == "F2.2" && ell % 3 == 2) {
    Point u = (ell - 2) / 3;
    std::vector<std::vector<Point>> c1{{2, 3 * u + 2}, {1, 3, 4}}, c2;
    for (Point i = 2; i <= u; ++i) c1.push_back({3 * i - 1, 3 * i, 3 * i + 1});
    for (Point i = 1; i <= u; ++i) c2.push_back({3 * i, 3 * i + 1, 3 * i + 2});
    return rel3(cyc(n, c1), cyc(n, c2));
  }
  if (id == "F2.3" && ell % 3 == 1) {
    Point u = (ell - 1) / 3;
    std::vector<std::vector<Point>> c1{{1, 2, 3 * u + 1}}, c2;
    for (Point i = 1; i + 1 <= u; ++i) c1.push_back({3 * i, 3 * i + 1, 3 * i + 2});
    for (Point i = 0; i < u; ++i) c2.push_back({3 * i + 1, 3 * i + 2, 3 * i + 3});
    return rel3(cyc(n, c1), cyc(n, c2));
  }
  return std::nullopt;
}

std::vector<WreathElement> braid_reorder(std::vector<WreathElement> tuple, const std::vector<ClassDescriptor>& order) {
  if (tuple.size() != order.size()) throw std::logic_error("braid_reorder: length mismatch");
  for (std::size_t j = 0; j < order.size(); ++j) {
    std::size_t i = j;
    while (i < tuple.size() && class_descriptor(tuple[i]) != order[j]) ++i;
    if (i == tuple.size()) throw std::logic_error("braid_reorder: class " + order[j].str() + " missing");
    for (; i > j; --i) {
      WreathElement moved = tuple[i];
      WreathElement pushed = conjugate(tuple[i - 1], moved);
      tuple[i - 1] = std::move(moved);
      tuple[i] = std::move(pushed);
    }
  }
  return tuple;
}

bool CoverReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

CoverReport analyze_realization(const Realization& r) {
  CoverReport rep;
  rep.id = r.id;
  rep.ell = r.ell;
  rep.a = r.a;
  rep.variant = r.variant;
  rep.method = r.method;
  rep.notes = r.notes;
  const auto& row = find_row(r.id);
  rep.expected_genus = row.expected_genus;
  rep.expected_group = expected_group(row, r.ell, r.variant);
  auto& t = r.tuple;

  std::vector<ClassDescriptor> got;
  for (const auto& x : t) got.push_back(class_descriptor(x));
  rep.checks.push_back({"ramification", got == r.classes, ""});
  rep.checks.push_back({"product_one", check_product_one(t), ""});

  ProductTypeReport pt = is_product_type(t);
  rep.order = pt.order;
  rep.checks.push_back({"transitive", pt.transitive_on_points, ""});
  rep.checks.push_back({"primitive", pt.primitive, ""});
  rep.checks.push_back({"contains_A2", pt.K_contains_alternating && pt.K_order_consistent, ""});

  Check g{"genus", false, ""}, g2{"genus_routes_agree", false, ""};
  try {
    rep.genus = genus_from_tuple(t).genus;
    g.pass = rep.genus == rep.expected_genus;
    g.detail = "g=" + std::to_string(rep.genus) + " expected " + std::to_string(rep.expected_genus);
  } catch (const InvalidInput& e) {
    g.detail = e.what();
  }
  try {
    rep.genus_pairs = lemma71_genus(lemma71_input_from_tuple(t));
    g2.pass = rep.genus >= 0 && rep.genus_pairs == rep.genus;
    g2.detail = "pair-sum g=" + std::to_string(rep.genus_pairs);
  } catch (const InvalidInput& e) {
    g2.detail = e.what();
  }
  rep.checks.push_back(g);
  rep.checks.push_back(g2);
  rep.group = pt.group_id;
  rep.checks.push_back({"group", rep.group == rep.expected_group,
                        to_string(rep.group) + " expected " + to_string(rep.expected_group)});
  for (const auto& d : pt.diagnostics) rep.notes.push_back(d);
  return rep;
}

Realization realize(const std::string& id, unsigned ell, std::optional<unsigned> a, const RealizeOptions& opt) {
  const auto& row = find_row(id);
  if (ell < 9) throw InvalidInput("realization needs l >= 9");
  if (opt.variant == Variant::Even && !row.has_variants())
    throw InvalidInput("type " + id + " has no even variant");
  Realization r;
  r.id = id;
  r.ell = ell;
  r.a = a;
  r.variant = opt.variant;
  r.classes = instantiate_row(id, ell, a).classes;

  std::vector<std::pair<std::string, Candidate>> candidates;
  if (row.recipe == "four_swap") {
    for (auto& c : four_swap_candidates(id, ell, opt.variant)) candidates.emplace_back("four_swap", std::move(c));
  } else {
    TwoSwapShape sh = two_swap_shape(r.classes);
    std::size_t k = sh.nonswaps.size();
    unsigned masks = 1u << k;
    if (row.recipe == "swap_square")
      for (auto& c : swap_square_candidates(id, ell, a)) candidates.emplace_back("swap_square", std::move(c));
    if (row.recipe == "explicit") {
      if (auto rel = explicit_relation(id, ell, a)) {
        for (unsigned mask = 0; mask < masks; ++mask)
          candidates.emplace_back("explicit", [rel = *rel, sh, mask, k]() -> std::optional<std::vector<WreathElement>> {
            auto slots = fit_relation(rel, sh, mask);
            if (!slots) return std::nullopt;
            return build_two_swap(*slots, k);
          });
      }
    }
    for (std::size_t round = 0; round < opt.solver_rounds; ++round)
      for (unsigned mask = 0; mask < masks; ++mask)
        candidates.emplace_back("solver", [sh, mask, k, round, seed = opt.seed]() -> std::optional<std::vector<WreathElement>> {
          AnnealOptions ao;
          ao.seed = seed * 1000003 + round * 7919 + mask;
          ao.attempts = 4;
          auto sol = solve_product_one(slot_types(sh, mask), ao);
          if (!sol) return std::nullopt;
          return build_two_swap(sol->tuple, k);
        });
  }

  std::optional<Realization> last;
  std::size_t tried = 0;
  for (auto& [method, make] : candidates) {
    auto t = make();
    if (!t) continue;
    ++tried;
    std::vector<ClassDescriptor> got;
    for (const auto& x : *t) got.push_back(class_descriptor(x));
    if (!same_class_multiset(got, r.classes)) continue;
    Realization cand = r;
    cand.method = method;
    cand.tuple = braid_reorder(std::move(*t), r.classes);
    auto rep = analyze_realization(cand);
    if (rep.pass()) {
      if (method == "solver" && row.recipe != "solver") cand.notes.push_back("explicit construction failed; solver used");
      return cand;
    }
    last = std::move(cand);
  }
  if (!last) throw std::runtime_error("no candidate tuple with the right ramification for " + id);
  last->notes.push_back("no candidate passed all checks after " + std::to_string(tried) + " tries");
  return *last;
}

CoverReport verify_row(const std::string& id, unsigned ell, std::optional<unsigned> a, const RealizeOptions& opt) {
  return analyze_realization(realize(id, ell, a, opt));
}

}  // namespace wm
