#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "wreathmono/monodromy.hpp"
#include "wreathmono/ramify.hpp"
#include "wreathmono/wreath.hpp"

namespace wm {

// Exact arithmetic with + - * / and parentheses over single-letter
// variables (l and a for Table 1, m for Galois types).
Rational eval_expr(std::string_view expr, const std::map<char, long>& vars);

enum class Variant { Default, Even };
std::string to_string(Variant v);
Variant parse_variant(const std::string& s);

struct TableRow {
  std::string id;
  std::vector<std::string> classes;  // symbolic descriptors
  bool uses_a = false;
  int expected_genus = 0;
  nlohmann::json group_rule;  // "SwrS2" | {"mod":k,"cases":{..}} | {"variants":{..}}
  std::string recipe;         // solver | explicit | swap_square | four_swap
  bool has_variants() const { return group_rule.is_object() && group_rule.contains("variants"); }
};

struct Table2Row {
  unsigned degree = 0;
  std::vector<CycleType> classes;
  std::string galois;  // ramification of the Galois closure, e.g. "[3^2],[2^3]^2"
  std::string mon;
  unsigned order = 0;
  unsigned center = 0;
  int genus = 0;
};

struct Table3Row {
  std::string name;  // "A".."I"
  std::vector<std::string> indices;  // expressions in m
  std::string group;
  int genus = 0;
  std::optional<long> fixed_m;
  long min_m = 2, divisor = 1;
};

struct Table4Row {
  std::string id;
  std::vector<std::string> classes;
  std::string method;  // witness | search
};

struct PrimitiveSearchRow {
  std::string id;
  unsigned degree = 0;
  std::vector<CycleType> classes;
};

struct TableData {
  std::string version;
  std::vector<TableRow> table1;
  std::vector<Table2Row> table2;
  std::vector<Table3Row> table3;
  std::vector<Table4Row> table4;
  std::vector<PrimitiveSearchRow> primitive_searches;
};

// Parsed from the data file compiled into the library.
const TableData& table_data();
TableData parse_table_data(const nlohmann::json& doc);
const TableRow& find_row(const std::string& id);
const Table4Row& find_table4_row(const std::string& id);

struct Instantiation {
  std::vector<ClassDescriptor> classes;
  std::vector<std::string> warnings;
};

// Evaluates the symbolic descriptors at (ell, a). Throws InvalidInput with
// the offending expression when an exponent is not a nonnegative integer,
// when a part is not a positive integer, when a partition does not sum to
// ell, or when a violates 0 < a < ell/2, gcd(a, ell) = 1.
std::vector<ClassDescriptor> instantiate_classes(const std::vector<std::string>& classes, unsigned ell,
                                                 std::optional<unsigned> a);
// Table 1 row: additionally needs ell >= 7 (ell < 9 adds a warning).
Instantiation instantiate_row(const std::string& id, unsigned ell, std::optional<unsigned> a = std::nullopt);
bool row_valid(const TableRow& row, unsigned ell, std::optional<unsigned> a);
// Admissible a for a row at ell (a single nullopt for rows without a).
std::vector<std::optional<unsigned>> parameter_choices(const TableRow& row, unsigned ell);

GroupId expected_group(const TableRow& row, unsigned ell, Variant v = Variant::Default);

struct Table2Report {
  std::size_t row = 0;
  std::size_t tuples = 0;  // up to simultaneous conjugacy
  std::uint64_t nodes = 0;
  bool exists = false;
  bool orders_match = false;
  bool centers_match = false;
  std::vector<std::string> observed;  // "order/center" per class of tuples
  std::string galois_observed;
  bool galois_match = false;
  long galois_genus_value = -1;
  bool genus_match = false;
  bool pass = false;
};
Table2Report verify_table2(std::size_t row);

struct Table3Report {
  std::string name;
  long m = 0;
  std::vector<long> indices;
  long genus = -1;
  bool pass = false;
  std::string error;
};
// m must satisfy the case's divisibility pattern; throws InvalidInput otherwise.
Table3Report verify_table3(const std::string& name, long m);
// Smallest admissible m for the case.
long default_m(const Table3Row& row);

}  // namespace wm
