#include <gtest/gtest.h>

#include "wreathmono/errors.hpp"
#include "wreathmono/realize.hpp"
#include "wreathmono/tables.hpp"

using namespace wm;

TEST(Tables, ExpressionEvaluation) {
  EXPECT_EQ(eval_expr("(l-1)/2", {{'l', 9}}), Rational(4));
  EXPECT_EQ(eval_expr("l-2*a", {{'l', 11}, {'a', 3}}), Rational(5));
  EXPECT_EQ(eval_expr("m/3", {{'m', 4}}), Rational(4, 3));
  EXPECT_THROW(eval_expr("l+", {{'l', 1}}), InvalidInput);
  EXPECT_THROW(eval_expr("q", {{'l', 1}}), InvalidInput);
}

TEST(Tables, DataShape) {
  const auto& d = table_data();
  EXPECT_FALSE(d.version.empty());
  EXPECT_EQ(d.table2.size(), 8u);
  EXPECT_EQ(d.table3.size(), 9u);
  EXPECT_EQ(d.table4.size(), 5u);
  EXPECT_EQ(d.primitive_searches.size(), 2u);
  EXPECT_FALSE(d.table1.empty());
  for (const auto& r : d.table1) EXPECT_EQ(&find_row(r.id), &r);
  EXPECT_THROW(find_row("no-such-row"), InvalidInput);
}

TEST(Tables, InstantiationRejectsBadParameters) {
  EXPECT_NO_THROW(instantiate_row("I1.1", 9, 2u));
  EXPECT_THROW(instantiate_row("I1.1", 9, 3u), InvalidInput);  // gcd(a, ell) != 1
  EXPECT_THROW(instantiate_row("I1.1", 9, 5u), InvalidInput);  // a > ell/2
  EXPECT_THROW(instantiate_row("I2.3", 10), InvalidInput);
  EXPECT_THROW(instantiate_row("I1.1", 5, 2u), InvalidInput);
  EXPECT_FALSE(instantiate_row("I1.1", 7, 2u).warnings.empty());
}

TEST(Tables, InstantiatedClassesSumToEll) {
  for (const auto& row : table_data().table1)
    for (unsigned ell = 9; ell <= 12; ++ell)
      for (auto a : parameter_choices(row, ell)) {
        if (!row_valid(row, ell, a)) continue;
        for (const auto& c : instantiate_row(row.id, ell, a).classes) {
          EXPECT_EQ(c.first.degree(), ell) << row.id;
          EXPECT_EQ(c.second.degree(), ell) << row.id;
        }
      }
}

TEST(Tables, Table3CasesSmallestM) {
  for (const auto& row : table_data().table3) {
    auto rep = verify_table3(row.name, default_m(row));
    EXPECT_TRUE(rep.pass) << row.name << " " << rep.error;
    EXPECT_EQ(rep.genus, row.genus);
  }
}

TEST(Tables, Table2FirstRow) {
  auto r = verify_table2(0);
  EXPECT_TRUE(r.exists);
  EXPECT_TRUE(r.pass);
}

TEST(Tables, RealizationsPassAtNine) {
  for (const char* id : {"I1.1", "I2.3", "F4.4"}) {
    const auto& row = find_row(id);
    for (unsigned ell : {9u, 11u}) {
      auto choices = parameter_choices(row, ell);
      if (choices.empty() || !row_valid(row, ell, choices.front())) continue;
      auto rep = verify_row(id, ell, choices.front());
      EXPECT_TRUE(rep.pass()) << id << " ell=" << ell;
      EXPECT_EQ(rep.genus, rep.expected_genus);
    }
  }
}
