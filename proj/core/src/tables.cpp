#include "wreathmono/tables.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "wreathmono/errors.hpp"
#include "wreathmono/search.hpp"

namespace wm {

namespace detail {
extern const std::string_view kTableJson;
}

namespace {

class ExprParser {
 public:
  ExprParser(std::string_view s, const std::map<char, long>& vars) : s_(s), vars_(vars) {}

  Rational parse() {
    Rational v = sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  std::string_view s_;
  const std::map<char, long>& vars_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& why) const {
    throw InvalidInput("bad expression '" + std::string(s_) + "': " + why);
  }
  void skip() {
    while (pos_ < s_.size() && s_[pos_] == ' ') ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  Rational sum() {
    Rational v = term();
    for (;;) {
      if (eat('+')) v += term();
      else if (eat('-')) v -= term();
      else return v;
    }
  }
  Rational term() {
    Rational v = factor();
    for (;;) {
      if (eat('*')) {
        v *= factor();
      } else if (eat('/')) {
        Rational d = factor();
        if (d.numerator() == 0) fail("division by zero");
        v /= d;
      } else {
        return v;
      }
    }
  }
  Rational factor() {
    skip();
    if (eat('-')) return -factor();
    if (eat('(')) {
      Rational v = sum();
      if (!eat(')')) fail("missing ')'");
      return v;
    }
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long long v = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) v = v * 10 + (s_[pos_++] - '0');
      return Rational(v);
    }
    auto it = vars_.find(c);
    if (it == vars_.end()) fail("unknown symbol '" + std::string(1, c) + "'");
    ++pos_;
    return Rational(it->second);
  }
};

// Splits at commas that are not nested in (), [].
std::vector<std::string_view> split_top(std::string_view s) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '(' || c == '[') ++depth;
    else if (c == ')' || c == ']') --depth;
    else if (c == ',' && depth == 0) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  out.push_back(s.substr(start));
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

long as_nonneg_int(const Rational& r, std::string_view expr, const char* what, long ell) {
  if (r.denominator() != 1 || r.numerator() < 0)
    throw InvalidInput(std::string(what) + " " + std::string(expr) + " is not a nonnegative integer at l=" +
                       std::to_string(ell));
  return static_cast<long>(r.numerator());
}

CycleType eval_partition(std::string_view text, const std::map<char, long>& vars, unsigned ell) {
  text = trim(text);
  if (text == "1") return CycleType::identity(ell);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']')
    throw InvalidInput("partition must be bracketed: " + std::string(text));
  std::vector<unsigned> parts;
  for (auto entry : split_top(text.substr(1, text.size() - 2))) {
    entry = trim(entry);
    // exponent separator '^' at depth 0
    int depth = 0;
    std::size_t caret = std::string_view::npos;
    for (std::size_t i = 0; i < entry.size(); ++i) {
      if (entry[i] == '(') ++depth;
      else if (entry[i] == ')') --depth;
      else if (entry[i] == '^' && depth == 0) caret = i;
    }
    std::string_view base = entry, expo = "1";
    if (caret != std::string_view::npos) {
      base = entry.substr(0, caret);
      expo = entry.substr(caret + 1);
    }
    long k = as_nonneg_int(eval_expr(base, vars), base, "part", ell);
    long e = as_nonneg_int(eval_expr(expo, vars), expo, "exponent", ell);
    if (k == 0 && e > 0) throw InvalidInput("part " + std::string(base) + " vanishes at l=" + std::to_string(ell));
    parts.insert(parts.end(), static_cast<std::size_t>(e), static_cast<unsigned>(k));
  }
  CycleType t(parts);
  if (t.degree() != ell)
    throw InvalidInput("partition " + std::string(text) + " sums to " + std::to_string(t.degree()) + ", not " +
                       std::to_string(ell));
  return t;
}

ClassDescriptor eval_descriptor(std::string_view text, const std::map<char, long>& vars, unsigned ell) {
  text = trim(text);
  if (text == "s") return {CycleType::identity(ell), CycleType::identity(ell), true};
  bool swap = false;
  if (!text.empty() && text.back() == 's') {
    swap = true;
    text = trim(text.substr(0, text.size() - 1));
  }
  if (text.size() < 2 || text.front() != '(' || text.back() != ')')
    throw InvalidInput("descriptor must be parenthesized: " + std::string(text));
  auto pieces = split_top(text.substr(1, text.size() - 2));
  if (pieces.size() != 2) throw InvalidInput("descriptor needs two entries: " + std::string(text));
  CycleType A = eval_partition(pieces[0], vars, ell);
  CycleType B = eval_partition(pieces[1], vars, ell);
  if (swap) {
    if (!B.is_identity()) throw InvalidInput("swap descriptor with non-trivial second entry");
    return {std::move(A), std::move(B), true};
  }
  if (A < B) std::swap(A, B);
  return {std::move(A), std::move(B), false};
}

std::vector<CycleType> parse_classes(const nlohmann::json& arr) {
  std::vector<CycleType> out;
  for (const auto& c : arr) out.push_back(CycleType::parse(c.get<std::string>()));
  return out;
}

}  // namespace

Rational eval_expr(std::string_view expr, const std::map<char, long>& vars) {
  return ExprParser(expr, vars).parse();
}

std::string to_string(Variant v) { return v == Variant::Even ? "even" : "default"; }

Variant parse_variant(const std::string& s) {
  if (s == "default") return Variant::Default;
  if (s == "even") return Variant::Even;
  throw InvalidInput("unknown variant '" + s + "' (expected default or even)");
}

TableData parse_table_data(const nlohmann::json& doc) {
  TableData d;
  d.version = doc.at("version").get<std::string>();
  for (const auto& r : doc.at("table1")) {
    TableRow row;
    row.id = r.at("id").get<std::string>();
    row.classes = r.at("classes").get<std::vector<std::string>>();
    row.uses_a = r.at("uses_a").get<bool>();
    row.expected_genus = r.at("genus").get<int>();
    row.group_rule = r.at("group");
    row.recipe = r.at("recipe").get<std::string>();
    d.table1.push_back(std::move(row));
  }
  for (const auto& r : doc.at("table2")) {
    Table2Row row;
    row.degree = r.at("degree").get<unsigned>();
    row.classes = parse_classes(r.at("classes"));
    row.galois = r.at("galois").get<std::string>();
    row.mon = r.at("mon").get<std::string>();
    row.order = r.at("order").get<unsigned>();
    row.center = r.at("center").get<unsigned>();
    row.genus = r.at("genus").get<int>();
    d.table2.push_back(std::move(row));
  }
  for (const auto& r : doc.at("table3")) {
    Table3Row row;
    row.name = r.at("case").get<std::string>();
    row.indices = r.at("indices").get<std::vector<std::string>>();
    row.group = r.at("group").get<std::string>();
    row.genus = r.at("genus").get<int>();
    if (r.contains("fixed_m")) row.fixed_m = r.at("fixed_m").get<long>();
    if (r.contains("m_rule")) {
      row.min_m = r.at("m_rule").at("min").get<long>();
      row.divisor = r.at("m_rule").at("divisor").get<long>();
    }
    d.table3.push_back(std::move(row));
  }
  for (const auto& r : doc.at("table4")) {
    d.table4.push_back({r.at("id").get<std::string>(), r.at("classes").get<std::vector<std::string>>(),
                        r.at("method").get<std::string>()});
  }
  for (const auto& r : doc.at("primitive_searches")) {
    d.primitive_searches.push_back(
        {r.at("id").get<std::string>(), r.at("degree").get<unsigned>(), parse_classes(r.at("classes"))});
  }
  return d;
}

const TableData& table_data() {
  static const TableData data = parse_table_data(nlohmann::json::parse(detail::kTableJson));
  return data;
}

const TableRow& find_row(const std::string& id) {
  for (const auto& r : table_data().table1)
    if (r.id == id) return r;
  throw InvalidInput("unknown ramification type '" + id + "'");
}

const Table4Row& find_table4_row(const std::string& id) {
  for (const auto& r : table_data().table4)
    if (r.id == id) return r;
  throw InvalidInput("unknown non-occurring type '" + id + "'");
}

std::vector<ClassDescriptor> instantiate_classes(const std::vector<std::string>& classes, unsigned ell,
                                                 std::optional<unsigned> a) {
  std::map<char, long> vars{{'l', static_cast<long>(ell)}};
  bool needs_a = std::any_of(classes.begin(), classes.end(),
                             [](const std::string& c) { return c.find('a') != std::string::npos; });
  if (needs_a) {
    if (!a) throw InvalidInput("this type needs the parameter a");
    if (*a == 0 || 2 * *a >= ell) throw InvalidInput("a must satisfy 0 < a < l/2");
    if (std::gcd(*a, ell) != 1) throw InvalidInput("a must be prime to l");
    vars['a'] = static_cast<long>(*a);
  } else if (a) {
    throw InvalidInput("this type takes no parameter a");
  }
  std::vector<ClassDescriptor> out;
  for (const auto& c : classes) out.push_back(eval_descriptor(c, vars, ell));
  return out;
}

Instantiation instantiate_row(const std::string& id, unsigned ell, std::optional<unsigned> a) {
  const auto& row = find_row(id);
  if (ell < 7) throw InvalidInput("l must be at least 7");
  Instantiation inst;
  inst.classes = instantiate_classes(row.classes, ell, a);
  if (ell < 9) inst.warnings.push_back("l < 9: arithmetic only; group-theoretic claims need l >= 9");
  return inst;
}

bool row_valid(const TableRow& row, unsigned ell, std::optional<unsigned> a) {
  try {
    instantiate_classes(row.classes, ell, a);
    return true;
  } catch (const InvalidInput&) {
    return false;
  }
}

std::vector<std::optional<unsigned>> parameter_choices(const TableRow& row, unsigned ell) {
  std::vector<std::optional<unsigned>> out;
  if (!row.uses_a) {
    if (row_valid(row, ell, std::nullopt)) out.emplace_back(std::nullopt);
    return out;
  }
  for (unsigned a = 1; 2 * a < ell; ++a)
    if (row_valid(row, ell, a)) out.emplace_back(a);
  return out;
}

GroupId expected_group(const TableRow& row, unsigned ell, Variant v) {
  const auto& g = row.group_rule;
  if (g.is_string()) return parse_group_id(g.get<std::string>());
  if (g.contains("variants")) return parse_group_id(g.at("variants").at(to_string(v)).get<std::string>());
  unsigned mod = g.at("mod").get<unsigned>();
  std::string key = std::to_string(ell % mod);
  if (!g.at("cases").contains(key))
    throw InvalidInput("no group recorded for " + row.id + " at l = " + std::to_string(ell));
  return parse_group_id(g.at("cases").at(key).get<std::string>());
}

namespace {

std::vector<Perm> enumerate_group(const std::vector<Perm>& gens, std::size_t limit) {
  std::vector<Perm> elems{Perm(gens.front().degree())};
  std::set<Perm> seen{elems.front()};
  for (std::size_t k = 0; k < elems.size(); ++k)
    for (const auto& g : gens) {
      Perm y = elems[k] * g;
      if (seen.insert(y).second) {
        elems.push_back(std::move(y));
        if (elems.size() > limit) throw InvalidInput("group too large to enumerate");
      }
    }
  return elems;
}

// "[3^2],[2^3]^2" -> multiset of (index, copies) entries, one per point
std::multiset<std::pair<unsigned, unsigned>> parse_galois(const std::string& s) {
  std::multiset<std::pair<unsigned, unsigned>> out;
  for (auto item : split_top(s)) {
    item = trim(item);
    auto close = item.find(']');
    if (item.empty() || item.front() != '[' || close == std::string_view::npos)
      throw InvalidInput("bad Galois ramification entry " + std::string(item));
    CycleType t = CycleType::parse(item.substr(0, close + 1));
    unsigned reps = 1;
    auto rest = trim(item.substr(close + 1));
    if (!rest.empty()) {
      if (rest.front() != '^') throw InvalidInput("bad Galois ramification entry " + std::string(item));
      reps = static_cast<unsigned>(std::stoul(std::string(rest.substr(1))));
    }
    auto m = t.multiplicities();
    if (m.size() != 1) throw InvalidInput("Galois ramification must be uniform: " + std::string(item));
    for (unsigned r = 0; r < reps; ++r) out.emplace(m.begin()->first, m.begin()->second);
  }
  return out;
}

}  // namespace

Table2Report verify_table2(std::size_t index) {
  const auto& rows = table_data().table2;
  if (index >= rows.size()) throw InvalidInput("no such row in the transitive-ramification table");
  const auto& row = rows[index];
  Table2Report rep;
  rep.row = index;
  SearchQuery q;
  q.degree = row.degree;
  q.classes = row.classes;
  q.require_transitive = true;
  q.dedupe = true;
  auto res = find_tuples(q);
  rep.nodes = res.nodes;
  rep.tuples = res.tuples.size();
  rep.exists = !res.tuples.empty();
  rep.orders_match = rep.exists;
  rep.centers_match = rep.exists;
  std::set<std::string> observed;
  for (const auto& t : res.tuples) {
    auto elems = enumerate_group(t, 100000);
    std::size_t center = 0;
    for (const auto& z : elems)
      if (std::all_of(t.begin(), t.end(), [&](const Perm& g) { return z * g == g * z; })) ++center;
    if (elems.size() != row.order) rep.orders_match = false;
    if (center != row.center) rep.centers_match = false;
    observed.insert(std::to_string(elems.size()) + "/" + std::to_string(center));
  }
  rep.observed.assign(observed.begin(), observed.end());

  // Galois closure: index lcm(E) at each point, |G|/e points above it
  std::multiset<std::pair<unsigned, unsigned>> galois;
  std::vector<long> idx;
  for (const auto& c : row.classes) {
    auto e = static_cast<unsigned>(galois_closure_index(c));
    galois.emplace(e, row.order / e);
    idx.push_back(e);
  }
  std::string obs;
  for (const auto& c : row.classes) {
    auto e = galois_closure_index(c);
    if (!obs.empty()) obs += ",";
    obs += "[" + std::to_string(e) + "^" + std::to_string(row.order / e) + "]";
  }
  rep.galois_observed = obs;
  rep.galois_match = (galois == parse_galois(row.galois));
  rep.galois_genus_value = galois_genus(row.order, idx);
  rep.genus_match = (rep.galois_genus_value == row.genus);
  rep.pass = rep.exists && rep.orders_match && rep.centers_match && rep.galois_match && rep.genus_match;
  return rep;
}

long default_m(const Table3Row& row) { return row.fixed_m ? *row.fixed_m : row.min_m; }

Table3Report verify_table3(const std::string& name, long m) {
  const Table3Row* row = nullptr;
  for (const auto& r : table_data().table3)
    if (r.name == name) row = &r;
  if (!row) throw InvalidInput("unknown Galois type '" + name + "'");
  if (row->fixed_m ? m != *row->fixed_m : (m < row->min_m || m % row->divisor != 0))
    throw InvalidInput("m = " + std::to_string(m) + " does not fit Galois type " + name);
  Table3Report rep;
  rep.name = name;
  rep.m = m;
  std::map<char, long> vars{{'m', m}};
  for (const auto& e : row->indices) {
    Rational v = eval_expr(e, vars);
    if (v.denominator() != 1 || v.numerator() <= 0) throw InvalidInput("index " + e + " is not a positive integer");
    rep.indices.push_back(static_cast<long>(v.numerator()));
  }
  try {
    rep.genus = galois_genus(m, rep.indices);
    rep.pass = (rep.genus == row->genus);
  } catch (const InvalidInput& e) {
    rep.error = e.what();
  }
  return rep;
}

}  // namespace wm
