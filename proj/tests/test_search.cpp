#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "wreathmono/errors.hpp"
#include "wreathmono/search.hpp"

using namespace wm;

namespace {
// Counts (c, x2, (c x2)^-1) over all of S_n with c canonical in the first class.
std::size_t brute_triples(unsigned n, const std::vector<CycleType>& cls, bool primitive) {
  Perm c = canonical_perm(cls[0]);
  std::vector<Point> v(n);
  for (unsigned i = 0; i < n; ++i) v[i] = i;
  std::size_t count = 0;
  do {
    Perm x2(v);
    if (cycle_type(x2) != cls[1]) continue;
    Perm x3 = (c * x2).inverse();
    if (cycle_type(x3) != cls[2]) continue;
    std::vector<Perm> t{c, x2, x3};
    if (oracle::num_orbits(n, t) != 1) continue;
    if (primitive && !is_primitive(n, t).primitive) continue;
    ++count;
  } while (std::next_permutation(v.begin(), v.end()));
  return count;
}
}  // namespace

TEST(Search, ClassMembersEnumerateTheClass) {
  auto m = class_members(CycleType::parse("[2,2,1]"));
  EXPECT_EQ(m.size(), 15u);
  EXPECT_TRUE(std::is_sorted(m.begin(), m.end()));
  for (const auto& p : m) EXPECT_EQ(cycle_type(p), CycleType::parse("[2,2,1]"));
  EXPECT_THROW(class_members(CycleType::parse("[3^4]"), 10), InvalidInput);
}

TEST(Search, CountsMatchBruteForce) {
  std::vector<std::vector<std::string>> cases{
      {"[4]", "[2,2]", "[2,1,1]"}, {"[3,1]", "[3,1]", "[3,1]"}, {"[5]", "[5]", "[5]"}, {"[5]", "[2,2,1]", "[3,1,1]"}};
  for (const auto& c : cases) {
    std::vector<CycleType> cls;
    for (const auto& s : c) cls.push_back(CycleType::parse(s));
    SearchQuery q;
    q.degree = cls[0].degree();
    q.classes = cls;
    auto r = find_tuples(q);
    EXPECT_EQ(r.tuples.size(), brute_triples(q.degree, cls, false)) << c[0] << c[1] << c[2];
    EXPECT_TRUE(r.exhaustive());
    for (const auto& t : r.tuples) EXPECT_TRUE((t[0] * t[1] * t[2]).is_identity());
    q.require_primitive = true;
    EXPECT_EQ(find_tuples(q).tuples.size(), brute_triples(q.degree, cls, true));
  }
}

TEST(Search, DedupeKeepsOnePerConjugacyClass) {
  SearchQuery q;
  q.degree = 4;
  q.classes = {CycleType::parse("[4]"), CycleType::parse("[2,2]"), CycleType::parse("[2,1,1]")};
  q.dedupe = true;
  auto r = find_tuples(q);
  ASSERT_EQ(r.tuples.size(), 1u);
  EXPECT_EQ(PermGroup(4, r.tuples[0]).order(), BigInt(8));
  // canonical form is invariant under simultaneous conjugation
  Perm y = Perm::from_cycles(4, {{0, 2, 1}});
  std::vector<Perm> c;
  for (const auto& p : r.tuples[0]) c.push_back(conjugate(p, y));
  EXPECT_EQ(canonical_tuple_form(c), canonical_tuple_form(r.tuples[0]));
}

TEST(Search, ParityAndLimits) {
  EXPECT_FALSE(parity_feasible({CycleType::parse("[2,1]"), CycleType::parse("[3]")}));
  SearchQuery q;
  q.degree = 3;
  q.classes = {CycleType::parse("[2,1]"), CycleType::parse("[3]")};
  EXPECT_THROW(find_tuples(q), InvalidInput);
  q.degree = 13;
  q.classes = {CycleType::parse("[13]"), CycleType::parse("[13]")};
  EXPECT_THROW(find_tuples(q), InvalidInput);

  SearchQuery lim;
  lim.degree = 5;
  lim.classes = {CycleType::parse("[5]"), CycleType::parse("[5]"), CycleType::parse("[5]")};
  lim.limit = 2;
  auto r = find_tuples(lim);
  EXPECT_EQ(r.tuples.size(), 2u);
  EXPECT_TRUE(r.limit_hit);
}

TEST(Search, ParallelAgreesWithSerial) {
  SearchQuery q;
  q.degree = 6;
  q.classes = {CycleType::parse("[6]"), CycleType::parse("[2^3]"), CycleType::parse("[3,3]")};
  q.require_transitive = false;
  auto a = find_tuples(q);
  q.workers = 3;
  auto b = find_tuples(q);
  std::set<std::vector<Perm>> sa(a.tuples.begin(), a.tuples.end()), sb(b.tuples.begin(), b.tuples.end());
  EXPECT_EQ(sa, sb);
}

TEST(Search, ExistsPrimitive) {
  SearchQuery q;
  q.degree = 5;
  q.classes = {CycleType::parse("[5]"), CycleType::parse("[2,1^3]"), CycleType::parse("[4,1]")};
  q.require_primitive = true;
  auto e = exists_primitive_tuple(q);
  EXPECT_TRUE(e.exists);
  ASSERT_TRUE(e.witness.has_value());
  EXPECT_TRUE(is_primitive(5, *e.witness).primitive);
}
