#include <vector>

#include "doctest.h"
#include "mumford/abelian.hpp"

using namespace mumford;
using V = std::vector<int64_t>;

TEST_CASE("finite abelian group arithmetic") {
  FinAbGroup g({2, 3});
  CHECK(g.order() == 6);
  CHECK(g.describe() == "Z/2 x Z/3");
  CHECK(g.add({1, 2}, {1, 2}) == V{0, 1});
  CHECK(g.neg({1, 1}) == V{1, 2});
  CHECK(g.sub({0, 0}, {1, 2}) == V{1, 1});
  CHECK(g.scale(4, {1, 2}) == V{0, 2});
  CHECK(g.reduce({-1, 7}) == V{1, 1});
  CHECK(g.element_order({1, 0}) == 2);
  CHECK(g.element_order({1, 1}) == 6);
  CHECK(g.element_order(g.zero()) == 1);
}

TEST_CASE("mixed-radix indexing puts the first coordinate most significant") {
  FinAbGroup g({2, 3});
  CHECK(g.element_at(0) == V{0, 0});
  CHECK(g.element_at(1) == V{0, 1});
  CHECK(g.element_at(3) == V{1, 0});
  for (int64_t i = 0; i < g.order(); ++i) CHECK(g.index_of(g.element_at(i)) == i);
}

TEST_CASE("trivial group") {
  FinAbGroup t = FinAbGroup::trivial();
  CHECK(t.order() == 1);
  CHECK(t.rank() == 0);
  CHECK(t.element_at(0) == V{});
}

TEST_CASE("product subgroup structure") {
  FinAbGroup amb({2, 4});
  ProductSubgroup s(amb, {{1, 2}});
  CHECK(s.order() == 2);
  CHECK(s.contains({1, 2}));
  CHECK(s.contains({0, 0}));
  CHECK_FALSE(s.contains({1, 0}));
  CHECK(s.combine(s.coordinates({1, 2})) == V{1, 2});

  ProductSubgroup full = ProductSubgroup::full(amb);
  CHECK(full.order() == 8);
  CHECK(full.elements().size() == 8);
  ProductSubgroup again(amb, {{1, 0}, {0, 1}});
  CHECK(full.same_subgroup_as(again));
  CHECK_FALSE(full.same_subgroup_as(s));
  CHECK(ProductSubgroup::zero(amb).order() == 1);
}

TEST_CASE("subgroup element enumeration respects the budget limit") {
  FinAbGroup amb({2, 2, 2, 2});
  ProductSubgroup full = ProductSubgroup::full(amb);
  CHECK_THROWS_AS(full.elements(3), BudgetError);
}

TEST_CASE("product quotient round trips") {
  FinAbGroup amb({2, 4});
  ProductSubgroup s(amb, {{0, 2}});
  ProductQuotient q(amb, s);
  CHECK(q.order() == 4);
  for (int64_t i = 0; i < q.group().order(); ++i) {
    V cls = q.group().element_at(i);
    CHECK(q.project(q.representative(cls)) == cls);
  }
  CHECK(q.project({0, 2}) == q.group().zero());
  CHECK(q.project({0, 1}) != q.group().zero());
}

TEST_CASE("homogeneous congruence systems") {
  // x1 + x2 = 0 over Z/4: four solutions
  LinearSystem sys{IntMatrix::from_rows({{1, 1}}), {4, 4}, {4}};
  sys.validate();
  ProductSubgroup sols = solve_homogeneous(sys);
  CHECK(sols.order() == 4);
  CHECK(sols.contains({1, 3}));
  CHECK_FALSE(sols.contains({1, 1}));
}

TEST_CASE("system validation rejects ill-posed rows") {
  // row reads mod 3 but the source is Z/2: 1*x mod 3 is not well defined on Z/2
  LinearSystem bad{IntMatrix::from_rows({{1}}), {2}, {3}};
  CHECK_THROWS_AS(bad.validate(), ValidationError);
}

TEST_CASE("affine solving") {
  LinearSystem sys{IntMatrix::from_rows({{1, 1}}), {4, 4}, {4}};
  AffineSolutionSet sols = solve_system(sys, {2});
  CHECK_FALSE(sols.empty);
  CHECK(sols.order() == 4);
  CHECK(sols.contains({1, 1}));
  CHECK(sols.contains({3, 3}));
  CHECK_FALSE(sols.contains({1, 2}));
  CHECK(sols.elements().size() == 4);

  // 2x = 1 over Z/4 has no solution
  LinearSystem odd{IntMatrix::from_rows({{2}}), {4}, {4}};
  AffineSolutionSet none = solve_system(odd, {1});
  CHECK(none.empty);
  CHECK(none.order() == 0);
  CHECK_FALSE(none.contains({1}));
}

TEST_CASE("block systems expand over coefficient coordinates") {
  FinAbGroup t({2, 4});
  IntMatrix m = IntMatrix::from_rows({{1, 1}});
  ProductSubgroup sols = hom_solutions(m, t);
  // pairs (a, b) in T^2 with a + b = 0: order |T|
  CHECK(sols.order() == 8);
  CHECK(sols.contains({1, 3, 1, 1}));
  CHECK_FALSE(sols.contains({1, 0, 0, 0}));
}

TEST_CASE("flatten and power group") {
  FinAbGroup t({2, 3});
  FinAbGroup p = power_group(t, 3);
  CHECK(p.orders() == V{2, 3, 2, 3, 2, 3});
  std::vector<V> parts = {{1, 0}, {0, 2}, {1, 1}};
  V flat = flatten(parts);
  CHECK(flat == V{1, 0, 0, 2, 1, 1});
  CHECK(unflatten(t, flat) == parts);
}
