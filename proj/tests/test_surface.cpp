#include <vector>

#include "doctest.h"
#include "mumford/extension.hpp"
#include "mumford/surface.hpp"

using namespace mumford;

TEST_CASE("words and the commutator relator") {
  CHECK(relator_word(1) == Word{1, 2, -1, -2});
  CHECK(relator_word(2) == Word{1, 2, -1, -2, 3, 4, -3, -4});
  CHECK(word_inverse(Word{1, -2, 3}) == Word{-3, 2, -1});
  CHECK(word_concat(Word{1}, Word{-2}) == Word{1, -2});

  FiniteGroup s3 = FiniteGroup::symmetric(3);
  int a = s3.element_by_label("(1 2)");
  int b = s3.element_by_label("(2 3)");
  // [a, b] = a b a^-1 b^-1 is the 3-cycle a b a b
  CHECK(evaluate_word(s3, {a, b}, relator_word(1)) == s3.mul(s3.mul(a, b), s3.mul(a, b)));
  CHECK(evaluate_word(s3, {a, b}, Word{}) == s3.identity());
  CHECK(evaluate_word(s3, {a, b}, Word{1, -1}) == s3.identity());
}

TEST_CASE("relation and surjectivity predicates") {
  FiniteGroup s3 = FiniteGroup::symmetric(3);
  int a = s3.element_by_label("(1 2)");
  int b = s3.element_by_label("(2 3)");
  CHECK_FALSE(satisfies_relation(s3, {1, {a, b}}));
  CHECK(satisfies_relation(s3, {1, {a, a}}));
  CHECK(satisfies_relation(s3, {2, {a, b, b, a}}) ==
        (evaluate_word(s3, {a, b, b, a}, relator_word(2)) == s3.identity()));
  CHECK(is_surjective(s3, {1, {a, b}}));
  CHECK_FALSE(is_surjective(s3, {1, {a, a}}));
}

TEST_CASE("hom counts match the commutator convolution oracle") {
  struct Row {
    int genus;
    FiniteGroup g;
    int64_t count;
  };
  const Row rows[] = {
      {1, FiniteGroup::cyclic(2), 4},
      {1, FiniteGroup::cyclic(4), 16},
      {1, FiniteGroup::from_permutations({Permutation::from_cycles(4, {{1, 2}}),
                                          Permutation::from_cycles(4, {{3, 4}})}),
       16},
      {1, FiniteGroup::symmetric(3), 18},
      {1, FiniteGroup::dihedral(4), 40},
      {1, FiniteGroup::dihedral(5), 40},
      {1, weyl_b_extension(2).group(), 40},
      {1, FiniteGroup::symmetric(4), 120},
      {1, weyl_b_extension(3).group(), 480},
      {2, FiniteGroup::cyclic(2), 16},
      {2, FiniteGroup::cyclic(4), 256},
      {2, FiniteGroup::symmetric(3), 486},
  };
  for (const Row& row : rows) {
    CAPTURE(row.g.order());
    CAPTURE(row.genus);
    std::vector<SurfaceRep> homs = enumerate_homs(row.genus, row.g);
    CHECK(static_cast<int64_t>(homs.size()) == row.count);
    CHECK(commutator_convolution_count(row.g, row.genus) == row.count);
    for (const SurfaceRep& r : homs) CHECK(satisfies_relation(row.g, r));
    // lexicographic order, no duplicates
    for (size_t i = 1; i < homs.size(); ++i) CHECK(homs[i - 1] < homs[i]);
  }
}

TEST_CASE("surjective hom counts") {
  FiniteGroup z2 = FiniteGroup::cyclic(2);
  FiniteGroup z3 = FiniteGroup::cyclic(3);
  FiniteGroup z4 = FiniteGroup::cyclic(4);
  FiniteGroup v4 = FiniteGroup::from_permutations(
      {Permutation::from_cycles(4, {{1, 2}}), Permutation::from_cycles(4, {{3, 4}})});
  FiniteGroup s3 = FiniteGroup::symmetric(3);
  CHECK(surjective_homs(1, z2).size() == 3);
  CHECK(surjective_homs(2, z2).size() == 15);
  CHECK(surjective_homs(1, z4).size() == 12);
  CHECK(surjective_homs(2, z4).size() == 240);
  CHECK(surjective_homs(1, v4).size() == 6);
  CHECK(surjective_homs(2, v4).size() == 210);
  CHECK(surjective_homs(1, z3).size() == 8);
  CHECK(surjective_homs(2, z3).size() == 80);
  CHECK(surjective_homs(1, s3).empty()); // torus group is abelian
  CHECK(surjective_homs(2, s3).size() == 360);
}

TEST_CASE("worker sharding returns the identical ordered list") {
  FiniteGroup s3 = FiniteGroup::symmetric(3);
  CHECK(enumerate_homs(2, s3, {}, 3) == enumerate_homs(2, s3, {}, 1));
  CHECK(enumerate_homs(1, FiniteGroup::dihedral(4), {}, 4) == enumerate_homs(1, FiniteGroup::dihedral(4)));
  CHECK(surjective_homs(2, s3, {}, 2) == surjective_homs(2, s3));
}

TEST_CASE("tuple budgets interrupt large enumerations") {
  Budget tiny;
  tiny.max_tuples = 10;
  CHECK_THROWS_AS(enumerate_homs(2, FiniteGroup::symmetric(3), tiny), BudgetError);
}

TEST_CASE("conjugation orbits partition the torus representations") {
  FiniteGroup s3 = FiniteGroup::symmetric(3);
  std::vector<SurfaceRep> homs = enumerate_homs(1, s3);
  std::vector<std::vector<int>> orbits = conjugation_orbits(s3, homs);
  CHECK(orbits.size() == 8);
  size_t covered = 0;
  for (const auto& orb : orbits) {
    covered += orb.size();
    // closed under conjugation by every group element
    for (int idx : orb)
      for (int c = 0; c < s3.order(); ++c) {
        SurfaceRep moved = conjugate_rep(s3, c, homs[static_cast<size_t>(idx)]);
        bool found = false;
        for (int other : orb) found = found || homs[static_cast<size_t>(other)] == moved;
        CHECK(found);
      }
  }
  CHECK(covered == homs.size());
}
