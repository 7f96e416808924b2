#include <vector>

#include "doctest.h"
#include "mumford/group.hpp"

using namespace mumford;
using V = std::vector<int64_t>;

TEST_CASE("permutation cycles and composition") {
  Permutation p = Permutation::from_cycles(5, {{1, 2}, {3, 4, 5}});
  CHECK(p.apply(0) == 1);
  CHECK(p.apply(2) == 3);
  CHECK(p.apply(4) == 2);
  CHECK(p.cycle_string() == "(1 2)(3 4 5)");
  CHECK(Permutation::identity(4).cycle_string() == "()");
  CHECK(compose(p, p.inverse()).is_identity());

  Permutation a = Permutation::from_cycles(3, {{1, 2}});
  Permutation b = Permutation::from_cycles(3, {{2, 3}});
  // (a * b)(x) = a(b(x)): point 3 -> 2 -> 1
  CHECK(compose(a, b).apply(2) == 0);
}

TEST_CASE("symmetric group structure") {
  FiniteGroup s3 = FiniteGroup::symmetric(3);
  CHECK(s3.order() == 6);
  CHECK_FALSE(s3.is_abelian());
  CHECK(element_order_multiset(s3) == V{1, 2, 2, 2, 3, 3});
  CHECK(s3.conjugacy_classes().size() == 3);
  int a = s3.element_by_label("(1 2)");
  int b = s3.element_by_label("(2 3)");
  REQUIRE(a >= 0);
  REQUIRE(b >= 0);
  CHECK(s3.mul(a, a) == s3.identity());
  CHECK(s3.element_order(s3.mul(a, b)) == 3);
  CHECK(s3.inv(s3.mul(a, b)) == s3.mul(b, a));
}

TEST_CASE("dihedral and cyclic recognition") {
  FiniteGroup d5 = FiniteGroup::dihedral(5);
  CHECK(d5.order() == 10);
  CHECK(element_order_multiset(d5) == V{1, 2, 2, 2, 2, 2, 5, 5, 5, 5});
  CHECK(is_dihedral_group(d5));
  CHECK_FALSE(is_cyclic_group(d5));

  FiniteGroup c4 = FiniteGroup::cyclic(4);
  CHECK(is_cyclic_group(c4));
  CHECK_FALSE(is_dihedral_group(c4));
  CHECK(c4.element_by_label("3") == 3);
  CHECK(c4.mul(3, 2) == 1);
}

TEST_CASE("group generated by permutations") {
  // Klein four-group on 4 points
  std::vector<Permutation> gens = {Permutation::from_cycles(4, {{1, 2}}),
                                   Permutation::from_cycles(4, {{3, 4}})};
  FiniteGroup v4 = FiniteGroup::from_permutations(gens);
  CHECK(v4.order() == 4);
  CHECK(v4.is_abelian());
  CHECK(element_order_multiset(v4) == V{1, 2, 2, 2});
  CHECK(v4.has_permutations());

  CHECK(groups_isomorphic(v4, FiniteGroup::from_permutations(
                                  {Permutation::from_cycles(4, {{1, 2}, {3, 4}}),
                                   Permutation::from_cycles(4, {{1, 3}, {2, 4}})})));
  CHECK_FALSE(groups_isomorphic(v4, FiniteGroup::cyclic(4)));
  CHECK_FALSE(groups_isomorphic(FiniteGroup::symmetric(3), FiniteGroup::cyclic(6)));
  CHECK(groups_isomorphic(FiniteGroup::dihedral(3), FiniteGroup::symmetric(3)));
}

TEST_CASE("subgroup generation and generating sets") {
  FiniteGroup s4 = FiniteGroup::symmetric(4);
  CHECK(s4.order() == 24);
  int cyc = s4.element_by_label("(1 2 3 4)");
  REQUIRE(cyc >= 0);
  CHECK(s4.generated_subgroup({cyc}).size() == 4);
  std::vector<int> gens = s4.small_generating_set();
  CHECK(s4.generated_subgroup(gens).size() == 24);
}

TEST_CASE("multiplication tables are validated") {
  // 2x2 table with a non-associative pattern is impossible; break closure instead
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1, 2}}), ValidationError);
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {0, 1}}), ValidationError); // no inverse row
  FiniteGroup z2 = FiniteGroup::from_table({{0, 1}, {1, 0}}, {"e", "s"});
  CHECK(z2.label(1) == "s");
}

TEST_CASE("actions by additive automorphisms") {
  FiniteGroup w = FiniteGroup::cyclic(2);
  FinAbGroup t({5});
  GAction inv = GAction::inversion(w, t);
  CHECK(inv.apply(1, {2}) == V{3});
  CHECK(inv.apply(0, {2}) == V{2});
  CHECK_FALSE(inv.is_trivial());
  CHECK(GAction::trivial(w, t).is_trivial());

  GAction swap = GAction::coordinate_swap(w, FinAbGroup({2, 2}));
  CHECK(swap.apply(1, {1, 0}) == V{0, 1});

  // S3 permuting the coordinates of (Z/2)^3
  FiniteGroup s3 = FiniteGroup::symmetric(3);
  GAction perm = GAction::coordinate_permutation(s3, FinAbGroup({2, 2, 2}));
  int a = s3.element_by_label("(1 2)");
  CHECK(perm.apply(a, {1, 0, 1}) == V{0, 1, 1});

  // cocycle rule sigma(uv) = sigma(u) sigma(v) checked on construction
  std::vector<IntMatrix> bad(2, IntMatrix::identity(1));
  bad[1] = IntMatrix::from_rows({{2}});
  CHECK_THROWS_AS(GAction(w, t, bad), ValidationError);
}

TEST_CASE("action from generator matrices") {
  FiniteGroup s3 = FiniteGroup::symmetric(3);
  FinAbGroup t({2, 2, 2});
  int a = s3.element_by_label("(1 2)");
  int b = s3.element_by_label("(1 2 3)");
  GAction full = GAction::coordinate_permutation(s3, t);
  GAction rebuilt = GAction::from_generator_matrices(s3, t, {a, b}, {full.matrix(a), full.matrix(b)});
  CHECK(rebuilt.same_action_as(full));
}
