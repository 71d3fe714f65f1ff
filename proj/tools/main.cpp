// wreathmono: realization, verification and reduction of product-type covers.
// Exit codes: 0 all checks pass, 1 a check failed, 2 invalid input.
#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "wreathmono/errors.hpp"
#include "wreathmono/io.hpp"
#include "wreathmono/monodromy.hpp"
#include "wreathmono/ramify.hpp"
#include "wreathmono/realize.hpp"
#include "wreathmono/reducer.hpp"
#include "wreathmono/search.hpp"
#include "wreathmono/tables.hpp"
#include "wreathmono/witness.hpp"

using namespace wm;

namespace {

struct Output {
  bool requested = false;
  std::string path;  // empty or "-" means stdout
};

void add_json_option(CLI::App* cmd, Output& out) {
  cmd->add_option_function<std::string>(
         "--json", [&out](const std::string& p) { out.requested = true, out.path = p; },
         "Write the JSON report to PATH (stdout when omitted)")
      ->expected(0, 1)
      ->default_str("-");
  cmd->callback([cmd, &out] {
    if (cmd->count("--json") > 0) out.requested = true;
  });
}

json run_report(const std::string& command, json parameters, json result, bool pass) {
  return {{"command", command},
          {"parameters", std::move(parameters)},
          {"result", std::move(result)},
          {"pass", pass},
          {"tool_version", library_version()},
          {"data_version", data_version()}};
}

void emit(const Output& out, const json& report) {
  if (!out.requested) return;
  if (out.path.empty() || out.path == "-") {
    std::cout << report.dump(2) << "\n";
    return;
  }
  std::ofstream f(out.path);
  if (!f) throw InvalidInput("cannot write " + out.path);
  f << report.dump(2) << "\n";
}

std::optional<unsigned> opt_a(int a) { return a > 0 ? std::optional<unsigned>(static_cast<unsigned>(a)) : std::nullopt; }

std::pair<unsigned, unsigned> parse_range(const std::string& s) {
  auto colon = s.find(':');
  try {
    if (colon == std::string::npos) {
      unsigned v = static_cast<unsigned>(std::stoul(s));
      return {v, v};
    }
    unsigned lo = static_cast<unsigned>(std::stoul(s.substr(0, colon)));
    unsigned hi = static_cast<unsigned>(std::stoul(s.substr(colon + 1)));
    if (lo > hi) throw InvalidInput("empty range " + s);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw InvalidInput("range must look like A:B, got '" + s + "'");
  }
}

// Runs f(i) for i in [0, n) on `workers` threads; results keep index order.
template <class F>
std::vector<json> run_grid(std::size_t n, unsigned workers, F f) {
  std::vector<json> out(n);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < n;) out[i] = f(i);
  };
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  return out;
}

void print_checks(const CoverReport& r) {
  std::cout << r.id << " ell=" << r.ell;
  if (r.a) std::cout << " a=" << *r.a;
  std::cout << " variant=" << to_string(r.variant) << " method=" << r.method << "\n";
  for (const auto& c : r.checks)
    std::cout << "  " << (c.pass ? "ok  " : "FAIL") << " " << c.name << (c.detail.empty() ? "" : ": " + c.detail)
              << "\n";
  std::cout << "  genus " << r.genus << " (expected " << r.expected_genus << "), group " << to_string(r.group)
            << " (expected " << to_string(r.expected_group) << "), order " << r.order.str() << "\n";
  for (const auto& n : r.notes) std::cout << "  note: " << n << "\n";
}

int cmd_realize(const std::string& id, unsigned ell, int a, const std::string& variant, std::uint64_t seed,
                const Output& out) {
  RealizeOptions opt;
  opt.variant = parse_variant(variant);
  opt.seed = seed;
  auto real = realize(id, ell, opt_a(a), opt);
  auto rep = analyze_realization(real);
  if (!out.requested || (!out.path.empty() && out.path != "-")) print_checks(rep);
  json params = {{"type", id}, {"ell", ell}, {"a", a > 0 ? json(a) : json(nullptr)}, {"variant", variant}, {"seed", seed}};
  json result = to_json(rep);
  result["tuple"] = tuple_to_json(real.tuple);
  result["classes"] = to_json(real)["classes"];
  emit(out, run_report("realize", params, result, rep.pass()));
  return rep.pass() ? 0 : 1;
}

int cmd_verify_table(int table, const std::string& range, unsigned workers, const std::string& variants,
                     std::size_t draws, const Output& out) {
  std::vector<json> cells;
  json params = {{"table", table}};
  bool human = !out.requested || (!out.path.empty() && out.path != "-");
  if (table == 1) {
    auto [lo, hi] = parse_range(range.empty() ? "9:16" : range);
    if (variants != "default" && variants != "all") throw InvalidInput("--variants must be default or all");
    struct Cell {
      std::string id;
      unsigned ell;
      std::optional<unsigned> a;
      Variant v;
    };
    std::vector<Cell> grid;
    for (unsigned ell = lo; ell <= hi; ++ell)
      for (const auto& row : table_data().table1)
        for (auto a : parameter_choices(row, ell)) {
          if (!row_valid(row, ell, a)) continue;
          grid.push_back({row.id, ell, a, Variant::Default});
          if (variants == "all" && row.has_variants()) grid.push_back({row.id, ell, a, Variant::Even});
        }
    cells = run_grid(grid.size(), workers, [&](std::size_t i) {
      RealizeOptions o;
      o.variant = grid[i].v;
      try {
        return to_json(verify_row(grid[i].id, grid[i].ell, grid[i].a, o));
      } catch (const std::exception& e) {
        return json{{"id", grid[i].id}, {"ell", grid[i].ell}, {"error", e.what()}, {"pass", false}};
      }
    });
    params["ell_range"] = std::to_string(lo) + ":" + std::to_string(hi);
    params["variants"] = variants;
  } else if (table == 2) {
    std::size_t n = table_data().table2.size();
    cells = run_grid(n, workers, [](std::size_t i) { return to_json(verify_table2(i)); });
  } else if (table == 3) {
    const auto& rows = table_data().table3;
    cells = run_grid(rows.size(), workers, [&](std::size_t i) {
      try {
        return to_json(verify_table3(rows[i].name, default_m(rows[i])));
      } catch (const std::exception& e) {
        return json{{"case", rows[i].name}, {"error", e.what()}, {"pass", false}};
      }
    });
  } else if (table == 4) {
    auto [lo, hi] = parse_range(range.empty() ? "9:11" : range);
    std::vector<unsigned> ells;
    for (unsigned l = lo; l <= hi; l += 2) ells.push_back(l);
    std::vector<std::function<json()>> jobs;
    for (const auto& row : table_data().table4)
      if (row.method == "witness") jobs.push_back([&, id = row.id] { return to_json(witness_sweep(id, ells, draws)); });
    jobs.push_back([] { return to_json(f4n3_evidence(5)); });
    for (const auto& row : table_data().primitive_searches)
      jobs.push_back([id = row.id] { return to_json(primitive_search_evidence(id)); });
    cells = run_grid(jobs.size(), workers, [&](std::size_t i) { return jobs[i](); });
    params["ells"] = ells;
    params["draws"] = draws;
  } else {
    throw InvalidInput("--table must be 1, 2, 3 or 4");
  }
  bool pass = std::all_of(cells.begin(), cells.end(), [](const json& c) { return c.value("pass", false); });
  if (human) {
    std::size_t ok = 0;
    for (const auto& c : cells) {
      bool p = c.value("pass", false);
      ok += p;
      std::string label = c.contains("id") ? c["id"].get<std::string>()
                          : c.contains("case") ? "case " + c["case"].get<std::string>()
                                               : "row " + std::to_string(c.value("row", 0));
      if (c.contains("ell")) label += " ell=" + c["ell"].dump();
      if (c.contains("a") && !c["a"].is_null()) label += " a=" + c["a"].dump();
      if (c.contains("variant")) label += " " + c["variant"].get<std::string>();
      if (c.contains("genus")) label += " g=" + c["genus"].dump();
      if (c.contains("verified")) label += " " + c["verified"].dump() + "/" + c["draws"].dump();
      if (c.contains("nodes")) label += " nodes=" + c["nodes"].dump();
      if (c.contains("annotation")) label += " (" + c["annotation"].get<std::string>() + ")";
      std::cout << (p ? "ok   " : "FAIL ") << label << "\n";
    }
    std::cout << ok << "/" << cells.size() << " passed\n";
  }
  emit(out, run_report("verify-table", params, cells, pass));
  return pass ? 0 : 1;
}

int cmd_genus(const std::string& file, const Output& out) {
  auto tuple = read_tuple_file(file);
  auto g = genus_from_tuple(tuple);
  if (!out.requested || (!out.path.empty() && out.path != "-"))
    std::cout << "degree " << g.degree << ", total ramification " << g.total_ramification << ", genus " << g.genus
              << "\n";
  emit(out, run_report("genus", {{"tuple", file}}, to_json(g), true));
  return 0;
}

int cmd_reduce(const std::string& file, const Output& out) {
  auto tuple = normalize_LGY(read_tuple_file(file));
  auto m = reduced_multiset(tuple);
  auto check = check_multiset(m, tuple);
  auto names = element_names(m, tuple);
  std::string cert = certificate_string(m, names);
  json result = to_json(m);
  result["names"] = names;
  result["certificate_string"] = cert;
  result["normalized_tuple"] = tuple_to_json(tuple);
  result["checks"] = {{"elements_match", check.elements_match},
                      {"each_orbit_once", check.each_orbit_once},
                      {"certificate_product", check.certificate_product},
                      {"transitive", check.transitive}};
  if (check.ok()) {
    auto g = hatf_genus(m);
    result["hatf"] = to_json(g);
    result["hatf"]["inequality_holds"] = g.total_ramification >= 2 * static_cast<long>(m.ell) - 2;
  }
  if (!out.requested || (!out.path.empty() && out.path != "-")) {
    std::cout << "certificate " << cert << " = 1\n";
    for (std::size_t i = 0; i < m.elements.size(); ++i)
      std::cout << "  " << names[i] << " = " << to_cycle_string(m.elements[i].y) << "\n";
    std::cout << "verified " << (check.ok() ? "yes" : "no") << ", transitive " << (check.transitive ? "yes" : "no")
              << "\n";
    if (result.contains("hatf")) std::cout << "hatf genus " << result["hatf"]["genus"] << "\n";
  }
  emit(out, run_report("reduce", {{"tuple", file}}, result, check.ok()));
  return check.ok() ? 0 : 1;
}

int cmd_search(unsigned degree, const std::string& classes, bool primitive, std::size_t limit, unsigned workers,
               const Output& out) {
  SearchQuery q;
  q.degree = degree;
  std::size_t start = 0;
  while (start <= classes.size()) {
    auto end = classes.find(';', start);
    std::string part = classes.substr(start, end == std::string::npos ? std::string::npos : end - start);
    if (!part.empty()) q.classes.push_back(CycleType::parse(part));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  q.require_primitive = primitive;
  q.limit = limit;
  q.dedupe = true;
  q.workers = std::max(1u, workers);
  auto res = find_tuples(q);
  json tuples = json::array();
  bool human = !out.requested || (!out.path.empty() && out.path != "-");
  for (const auto& t : res.tuples) {
    PermGroup g(degree, t);
    json perms = json::array();
    for (const auto& p : t) perms.push_back(perm_to_json(p));
    tuples.push_back({{"perms", perms}, {"order", g.order().str()}, {"primitive", is_primitive(g).primitive}});
    if (human) {
      for (const auto& p : t) std::cout << to_cycle_string(p) << " ";
      std::cout << " order " << g.order().str() << (is_primitive(g).primitive ? " primitive" : "") << "\n";
    }
  }
  if (human)
    std::cout << res.tuples.size() << " tuples up to conjugacy, " << res.nodes << " nodes"
              << (res.exhaustive() ? "" : " (limit hit)") << "\n";
  json result = {{"tuples", tuples}, {"nodes", res.nodes}, {"candidates", res.candidates}, {"exhaustive", res.exhaustive()}};
  emit(out, run_report("search", {{"degree", degree}, {"classes", classes}, {"primitive", primitive}}, result, true));
  return 0;
}

int cmd_classify(const std::string& file, const Output& out) {
  auto tuple = read_tuple_file(file);
  auto rep = is_product_type(tuple);
  json result = {{"product_one", check_product_one(tuple)},
                 {"transitive", rep.transitive_on_points},
                 {"primitive", rep.primitive},
                 {"K_contains_alternating", rep.K_contains_alternating},
                 {"order", rep.order.str()},
                 {"image_order", rep.image_order},
                 {"diagnostics", rep.diagnostics}};
  if (tuple.front().t() == 2) result["group"] = to_string(identify_group(tuple, rep).id);
  if (!out.requested || (!out.path.empty() && out.path != "-")) {
    std::cout << "product-1 " << result["product_one"] << ", transitive " << result["transitive"] << ", primitive "
              << result["primitive"] << ", order " << rep.order.str();
    if (result.contains("group")) std::cout << ", group " << result["group"].get<std::string>();
    std::cout << "\n";
  }
  bool ok = result["product_one"].get<bool>();
  emit(out, run_report("classify", {{"tuple", file}}, result, ok));
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Realize and verify ramification types of product-type covers"};
  app.set_version_flag("--version", library_version() + " (data " + data_version() + ")");
  app.require_subcommand(1);

  Output out;
  int code = 0;
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());

  std::string id, variant = "default", file, range, classes, variants = "default";
  unsigned ell = 0, degree = 0, parallel = hw;
  int a = 0, table = 0;
  std::uint64_t seed = 1;
  std::size_t draws = 200, limit = 0;
  bool primitive = false;

  auto* realize_cmd = app.add_subcommand("realize", "Build and check a product-1 tuple for a Table 1 row");
  realize_cmd->add_option("--type", id, "Row id, e.g. I1.1")->required();
  realize_cmd->add_option("--ell", ell, "Degree l")->required();
  realize_cmd->add_option("--a", a, "Parameter a for rows that use it");
  realize_cmd->add_option("--variant", variant, "default or even");
  realize_cmd->add_option("--seed", seed, "Solver seed");
  add_json_option(realize_cmd, out);

  auto* verify_cmd = app.add_subcommand("verify-table", "Verify every row of a table");
  verify_cmd->add_option("--table", table, "1, 2, 3 or 4")->required();
  verify_cmd->add_option("--ell-range", range, "A:B (table 1 default 9:16, table 4 default 9:11)");
  verify_cmd->add_option("--parallel", parallel, "Worker threads");
  verify_cmd->add_option("--variants", variants, "Table 1: default or all");
  verify_cmd->add_option("--draws", draws, "Table 4: random parameter draws per l");
  add_json_option(verify_cmd, out);

  auto* genus_cmd = app.add_subcommand("genus", "Riemann-Hurwitz genus of a tuple file");
  genus_cmd->add_option("--tuple", file, "Tuple JSON file")->required();
  add_json_option(genus_cmd, out);

  auto* reduce_cmd = app.add_subcommand("reduce", "Reduced product-1 multiset of a tuple file");
  reduce_cmd->add_option("--tuple", file, "Tuple JSON file")->required();
  add_json_option(reduce_cmd, out);

  auto* search_cmd = app.add_subcommand("search", "Product-1 tuples in S_n with given cycle types");
  search_cmd->add_option("--degree", degree, "Degree n")->required();
  search_cmd->add_option("--classes", classes, "Cycle types separated by ';', e.g. \"[4];[2,2];[2,1,1]\"")->required();
  search_cmd->add_flag("--primitive", primitive, "Keep primitive tuples only");
  search_cmd->add_option("--limit", limit, "Stop after this many tuples (0: no limit)");
  search_cmd->add_option("--parallel", parallel, "Worker threads");
  add_json_option(search_cmd, out);

  auto* classify_cmd = app.add_subcommand("classify", "Product-type analysis of a tuple file");
  classify_cmd->add_option("--tuple", file, "Tuple JSON file")->required();
  add_json_option(classify_cmd, out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*realize_cmd) code = cmd_realize(id, ell, a, variant, seed, out);
    else if (*verify_cmd) code = cmd_verify_table(table, range, parallel, variants, draws, out);
    else if (*genus_cmd) code = cmd_genus(file, out);
    else if (*reduce_cmd) code = cmd_reduce(file, out);
    else if (*search_cmd) code = cmd_search(degree, classes, primitive, limit, parallel, out);
    else if (*classify_cmd) code = cmd_classify(file, out);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return code;
}
