#include "wreathmono/io.hpp"

#include <fstream>

#include "wreathmono/errors.hpp"

#ifndef WREATHMONO_VERSION
#define WREATHMONO_VERSION "0.0.0"
#endif

namespace wm {

namespace {

json opt_json(const std::optional<unsigned>& a) { return a ? json(*a) : json(nullptr); }

json checks_json(const std::vector<Check>& checks) {
  json out = json::array();
  for (const auto& c : checks) out.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return out;
}

}  // namespace

std::string library_version() { return WREATHMONO_VERSION; }
std::string data_version() { return table_data().version; }

json perm_to_json(const Perm& p) {
  json out = json::array();
  for (Point x : p.images()) out.push_back(x + 1);
  return out;
}

Perm perm_from_json(const json& j, std::size_t degree) {
  if (!j.is_array()) throw InvalidInput("permutation must be an array of images");
  if (j.size() != degree)
    throw InvalidInput("permutation has " + std::to_string(j.size()) + " images, expected " + std::to_string(degree));
  std::vector<Point> img;
  for (const auto& v : j) {
    if (!v.is_number_integer() || v.get<long long>() < 1 || v.get<long long>() > static_cast<long long>(degree))
      throw InvalidInput("permutation image out of range: " + v.dump());
    img.push_back(static_cast<Point>(v.get<long long>() - 1));
  }
  return Perm(std::move(img));
}

json tuple_to_json(const std::vector<WreathElement>& tuple) {
  json els = json::array();
  for (const auto& x : tuple) {
    json base = json::array();
    for (const auto& b : x.base()) base.push_back(perm_to_json(b));
    els.push_back({{"base", base}, {"top", perm_to_json(x.top())}});
  }
  std::size_t ell = tuple.empty() ? 0 : tuple.front().ell(), t = tuple.empty() ? 0 : tuple.front().t();
  return {{"ell", ell}, {"t", t}, {"elements", els}};
}

std::vector<WreathElement> tuple_from_json(const json& doc) {
  try {
    std::size_t ell = doc.at("ell").get<std::size_t>(), t = doc.at("t").get<std::size_t>();
    if (ell == 0 || t == 0) throw InvalidInput("ell and t must be positive");
    std::vector<WreathElement> out;
    for (const auto& e : doc.at("elements")) {
      const auto& base = e.at("base");
      if (!base.is_array() || base.size() != t)
        throw InvalidInput("each element needs a base of " + std::to_string(t) + " permutations");
      std::vector<Perm> b;
      for (const auto& p : base) b.push_back(perm_from_json(p, ell));
      out.emplace_back(std::move(b), perm_from_json(e.at("top"), t));
    }
    if (out.empty()) throw InvalidInput("tuple has no elements");
    return out;
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed tuple document: ") + e.what());
  }
}

std::vector<WreathElement> read_tuple_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw InvalidInput(path + ": " + e.what());
  }
  return tuple_from_json(doc);
}

json to_json(const CoverReport& r) {
  json notes = r.notes;
  return {{"id", r.id},
          {"ell", r.ell},
          {"a", opt_json(r.a)},
          {"variant", to_string(r.variant)},
          {"method", r.method},
          {"checks", checks_json(r.checks)},
          {"genus", r.genus},
          {"genus_pairs", r.genus_pairs},
          {"expected_genus", r.expected_genus},
          {"group", to_string(r.group)},
          {"expected_group", to_string(r.expected_group)},
          {"order", r.order.str()},
          {"notes", notes},
          {"pass", r.pass()}};
}

json to_json(const Realization& r) {
  json classes = json::array();
  for (const auto& c : r.classes) classes.push_back(c.str());
  return {{"id", r.id},      {"ell", r.ell},         {"a", opt_json(r.a)}, {"variant", to_string(r.variant)},
          {"method", r.method}, {"classes", classes}, {"tuple", tuple_to_json(r.tuple)}, {"notes", r.notes}};
}

json to_json(const Table2Report& r) {
  return {{"row", r.row},
          {"tuples", r.tuples},
          {"nodes", r.nodes},
          {"exists", r.exists},
          {"orders_match", r.orders_match},
          {"centers_match", r.centers_match},
          {"observed", r.observed},
          {"galois_observed", r.galois_observed},
          {"galois_match", r.galois_match},
          {"galois_genus", r.galois_genus_value},
          {"genus_match", r.genus_match},
          {"pass", r.pass}};
}

json to_json(const Table3Report& r) {
  return {{"case", r.name}, {"m", r.m}, {"indices", r.indices}, {"genus", r.genus}, {"pass", r.pass}, {"error", r.error}};
}

json to_json(const Witness& w) {
  json rel = json::array();
  for (const auto& r : w.relations) rel.push_back({{"relation", r.name}, {"holds", r.holds}});
  return {{"id", w.id},
          {"kind", to_string(w.kind)},
          {"z", perm_to_json(w.z)},
          {"relations", rel},
          {"tuple", tuple_to_json(w.tuple)},
          {"tuple_ok", w.tuple_ok},
          {"K_generators", w.K_generators},
          {"K_in_twisted_diagonal", w.K_in_twisted_diagonal},
          {"valid", w.valid()}};
}

json to_json(const WitnessSweep& s) {
  return {{"id", s.id},
          {"ells", s.ells},
          {"draws", s.draws},
          {"verified", s.verified},
          {"failures", s.failures},
          {"pass", s.draws > 0 && s.verified == s.draws}};
}

json to_json(const SmallDegreeEvidence& e) {
  return {{"id", "F4.N3"},           {"ell", e.ell},           {"tuples", e.tuples},
          {"transitive", e.transitive}, {"primitive", e.primitive}, {"annotation", e.annotation},
          {"pass", e.primitive == 0}};
}

json to_json(const SearchEvidence& e) {
  return {{"id", e.id},       {"degree", e.degree},         {"primitive_found", e.primitive_found},
          {"nodes", e.nodes}, {"candidates", e.candidates}, {"pass", !e.primitive_found}};
}

json to_json(const GenusReport& g) {
  return {{"genus", g.genus},
          {"degree", g.degree},
          {"total_ramification", g.total_ramification},
          {"contributions", g.contributions}};
}

json to_json(const ReducedMultiset& m) {
  json z = json::array(), els = json::array(), cert = json::array();
  for (const auto& p : m.z) z.push_back(perm_to_json(p));
  for (const auto& e : m.elements)
    els.push_back({{"branch", e.j + 1}, {"rep", e.rep + 1}, {"len", e.len}, {"perm", perm_to_json(e.y)}});
  for (const auto& c : m.certificate) cert.push_back(json::array({c.index, c.exponent}));
  return {{"ell", m.ell}, {"t", m.t},          {"s", m.s},
          {"z", z},       {"elements", els},  {"certificate", cert},
          {"transitive", m.transitive}};
}

ReducedMultiset multiset_from_json(const json& doc) {
  try {
    ReducedMultiset m;
    m.ell = doc.at("ell").get<std::size_t>();
    m.t = doc.at("t").get<std::size_t>();
    m.s = doc.value("s", std::size_t{0});
    for (const auto& p : doc.at("z")) m.z.push_back(perm_from_json(p, m.ell));
    for (const auto& e : doc.at("elements")) {
      MultisetElement el;
      el.j = e.at("branch").get<std::size_t>() - 1;
      el.rep = static_cast<Point>(e.at("rep").get<std::size_t>() - 1);
      el.len = e.at("len").get<std::size_t>();
      el.y = perm_from_json(e.at("perm"), m.ell);
      m.elements.push_back(std::move(el));
    }
    for (const auto& c : doc.at("certificate")) m.certificate.push_back({c.at(0).get<std::size_t>(), c.at(1).get<int>()});
    m.transitive = doc.value("transitive", false);
    return m;
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed multiset document: ") + e.what());
  }
}

}  // namespace wm
