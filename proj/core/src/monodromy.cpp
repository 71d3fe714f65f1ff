#include "wreathmono/monodromy.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "wreathmono/errors.hpp"

namespace wm {

std::string to_string(GroupId id) {
  switch (id) {
    case GroupId::AwrS2: return "AwrS2";
    case GroupId::SwrS2: return "SwrS2";
    case GroupId::SfibS2: return "SfibS2";
    case GroupId::A2C4: return "A2C4";
    case GroupId::Other: return "other";
  }
  return "other";
}

GroupId parse_group_id(const std::string& s) {
  if (s == "AwrS2") return GroupId::AwrS2;
  if (s == "SwrS2") return GroupId::SwrS2;
  if (s == "SfibS2") return GroupId::SfibS2;
  if (s == "A2C4") return GroupId::A2C4;
  if (s == "other") return GroupId::Other;
  throw InvalidInput("unknown group id '" + s + "'");
}

bool check_product_one(const std::vector<WreathElement>& tuple) {
  if (tuple.empty()) return true;
  return product(tuple).is_identity();
}

std::vector<WreathElement> kernel_K(const std::vector<WreathElement>& tuple) {
  if (tuple.empty()) throw InvalidInput("empty tuple");
  std::size_t t = tuple.front().t(), ell = tuple.front().ell();
  std::vector<WreathElement> gens;
  {
    std::set<WreathElement> seen;
    for (const auto& g : tuple)
      if (!g.is_identity() && seen.insert(g).second) gens.push_back(g);
  }
  for (Point p = 0; p < t; ++p) {
    std::map<Point, WreathElement> trans{{p, WreathElement::identity(ell, t)}};
    std::vector<Point> orbit{p};
    for (std::size_t k = 0; k < orbit.size(); ++k)
      for (const auto& g : gens) {
        Point q = g.top()[orbit[k]];
        if (!trans.count(q)) {
          trans.emplace(q, trans.at(orbit[k]) * g);
          orbit.push_back(q);
        }
      }
    std::vector<WreathElement> next;
    std::set<WreathElement> seen;
    for (Point q : orbit)
      for (const auto& g : gens) {
        WreathElement s = trans.at(q) * g * trans.at(g.top()[q]).inverse();
        if (!s.is_identity() && seen.insert(s).second) next.push_back(std::move(s));
      }
    gens = std::move(next);
  }
  return gens;
}

PermGroup imprimitive_group(const std::vector<WreathElement>& tuple) {
  if (tuple.empty()) throw InvalidInput("empty tuple");
  std::vector<Perm> gens;
  for (const auto& w : tuple) gens.push_back(embed_imprimitive(w));
  return PermGroup(tuple.front().ell() * tuple.front().t(), std::move(gens));
}

std::vector<Perm> top_image(const std::vector<WreathElement>& tuple) {
  std::vector<Perm> elems{Perm(tuple.front().t())};
  std::set<Perm> seen{elems.front()};
  for (std::size_t k = 0; k < elems.size(); ++k)
    for (const auto& w : tuple) {
      Perm y = elems[k] * w.top();
      if (seen.insert(y).second) elems.push_back(std::move(y));
    }
  return elems;
}

SignImage sign_image(const WreathElement& x) {
  if (x.t() != 2) throw InvalidInput("sign fingerprints are defined for t = 2");
  return {x.base(0).sign() < 0 ? 1 : 0, x.base(1).sign() < 0 ? 1 : 0, x.top().is_identity() ? 0 : 1};
}

SignImage sign_multiply(const SignImage& a, const SignImage& b) {
  // (e sigma)(f tau): coordinate i picks up f(i^sigma)
  int f0 = a[2] ? b[1] : b[0];
  int f1 = a[2] ? b[0] : b[1];
  return {(a[0] + f0) % 2, (a[1] + f1) % 2, (a[2] + b[2]) % 2};
}

SignFingerprint sign_fingerprint(const std::vector<WreathElement>& tuple) {
  SignFingerprint fp;
  for (const auto& x : tuple) fp.generator_images.push_back(sign_image(x));
  std::set<SignImage> seen{{0, 0, 0}};
  std::vector<SignImage> elems{{0, 0, 0}};
  for (std::size_t k = 0; k < elems.size(); ++k)
    for (const auto& g : fp.generator_images) {
      SignImage y = sign_multiply(elems[k], g);
      if (seen.insert(y).second) elems.push_back(y);
    }
  fp.subgroup.assign(seen.begin(), seen.end());
  return fp;
}

GroupId classify_fingerprint(const SignFingerprint& fp) {
  const auto& H = fp.subgroup;
  auto has = [&](SignImage e) { return std::find(H.begin(), H.end(), e) != H.end(); };
  bool any_swap = std::any_of(H.begin(), H.end(), [](const SignImage& e) { return e[2] == 1; });
  if (!any_swap) return GroupId::Other;
  switch (H.size()) {
    case 2: return GroupId::AwrS2;
    case 4:
      // the cyclic subgroup of order 4 contains (1,0)s; the Klein group with
      // a swap is {1, (1,1), s, (1,1)s}
      if (has({1, 0, 1}) || has({0, 1, 1})) return GroupId::A2C4;
      return GroupId::SfibS2;
    case 8: return GroupId::SwrS2;
    default: return GroupId::Other;
  }
}

namespace {

WreathElement three_cycle_at(std::size_t ell, std::size_t t, std::size_t coord, Point k) {
  std::vector<Perm> base(t, Perm(ell));
  base[coord] = Perm::from_cycles(ell, {{0, 1, k}});
  return WreathElement::from_base(std::move(base));
}

}  // namespace

ProductTypeReport is_product_type(const std::vector<WreathElement>& tuple, const AnalysisOptions& opt) {
  if (tuple.empty()) throw InvalidInput("empty tuple");
  ProductTypeReport r;
  r.ell = tuple.front().ell();
  r.t = tuple.front().t();
  for (const auto& x : tuple)
    if (x.ell() != r.ell || x.t() != r.t) throw InvalidInput("tuple elements have different shapes");
  if (r.t < 2) throw InvalidInput("product-type analysis needs t >= 2");
  if (r.ell < 5) throw InvalidInput("product-type analysis needs ell >= 5");

  std::vector<Perm> embedded;
  for (const auto& x : tuple) embedded.push_back(embed(x));
  std::size_t n = embedded.front().degree();
  r.transitive_on_points = is_transitive(n, embedded);

  auto image = top_image(tuple);
  r.image_order = image.size();
  {
    std::vector<Perm> tops;
    for (const auto& x : tuple) tops.push_back(x.top());
    r.transitive_on_I = is_transitive(r.t, tops);
  }

  PermGroup G = imprimitive_group(tuple);
  r.order = G.order();

  r.K_generators = kernel_K(tuple);
  if (opt.compute_K_order) {
    std::vector<Perm> kg;
    for (const auto& k : r.K_generators) kg.push_back(embed_imprimitive(k));
    PermGroup K(r.ell * r.t, std::move(kg));
    r.K_order = K.order();
    if (r.K_order * r.image_order != r.order)
      r.diagnostics.push_back("|G| != |K| * |image|; kernel generators incomplete");
  } else {
    r.K_order = r.order / r.image_order;
  }

  bool all_proj = true;
  for (std::size_t i = 0; i < r.t; ++i) {
    std::vector<Perm> proj;
    for (const auto& k : r.K_generators) proj.push_back(k.base(i));
    bool full;
    if (proj.empty()) {
      full = false;
    } else {
      PermGroup P(r.ell, proj);
      full = contains_alternating(P);
      auto fast = contains_alternating_jordan(P);
      if (fast && *fast != full) {
        r.jordan_agrees = false;
        r.diagnostics.push_back("Jordan shortcut disagrees with the order test");
      }
    }
    r.projections_contain_alternating.push_back(full);
    all_proj = all_proj && full;
  }

  bool member = true;
  for (std::size_t i = 0; i < r.t && member; ++i)
    for (Point k = 2; k < r.ell && member; ++k)
      member = G.contains(embed_imprimitive(three_cycle_at(r.ell, r.t, i, k)));
  r.K_contains_alternating = member;
  BigInt half = factorial(static_cast<unsigned>(r.ell)) / 2;
  BigInt need = 1;
  for (std::size_t i = 0; i < r.t; ++i) need *= half;
  r.K_order_consistent = (r.K_order % need == 0);
  if (member && !r.K_order_consistent) r.diagnostics.push_back("K contains A^t but |K| is not divisible by (ell!/2)^t");
  if (r.t == 2 && !member && r.K_order >= need)
    r.diagnostics.push_back("order of K exceeds (ell!/2)^2 without containing A^2");

  if (all_proj) r.primitive_by_criterion = r.K_contains_alternating && r.transitive_on_I;
  if (r.transitive_on_points && n <= opt.generic_primitivity_cap)
    r.primitive_generic = is_primitive(n, embedded).primitive;
  if (!r.transitive_on_points) {
    r.primitive = false;
  } else if (r.primitive_generic) {
    r.primitive = *r.primitive_generic;
  } else if (r.primitive_by_criterion) {
    r.primitive = *r.primitive_by_criterion;
  } else {
    r.diagnostics.push_back("primitivity undecided: block test skipped and projection hypothesis fails");
  }
  if (r.primitive_generic && r.primitive_by_criterion && *r.primitive_generic != *r.primitive_by_criterion)
    r.diagnostics.push_back("block test and kernel criterion disagree");

  if (r.t == 2) r.group_id = identify_group(tuple, r).id;
  return r;
}

IdentifyResult identify_group(const std::vector<WreathElement>& tuple, const ProductTypeReport& rep) {
  IdentifyResult out;
  if (rep.t != 2) throw InvalidInput("group identification is defined for t = 2");
  out.fingerprint = sign_fingerprint(tuple);
  if (!rep.primitive || !rep.K_contains_alternating) {
    out.diagnostics.push_back("precondition failed: need a primitive group containing A_ell^2");
    return out;
  }
  out.id = classify_fingerprint(out.fingerprint);
  BigInt half = factorial(static_cast<unsigned>(rep.ell)) / 2;
  BigInt expect = half * half * out.fingerprint.subgroup.size();
  out.order_matches = (expect == rep.order);
  if (!out.order_matches) {
    out.diagnostics.push_back("fingerprint image size does not match |G|");
    out.id = GroupId::Other;
  }
  return out;
}

IdentifyResult identify_group(const std::vector<WreathElement>& tuple) {
  AnalysisOptions opt;
  opt.compute_K_order = false;
  auto rep = is_product_type(tuple, opt);
  return identify_group(tuple, rep);
}

}  // namespace wm
