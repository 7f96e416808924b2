#include <string>
#include <vector>

#include "doctest.h"
#include "mumford/scenario.hpp"

using namespace mumford;
using V = std::vector<int64_t>;

TEST_CASE("key/value lines with comments and defaults") {
  Scenario sc = Scenario::parse_string(
      "# double cover of the torus\n"
      "deck = cyclic 2\n"
      "coeff = cyclic 2   # trailing comment\n"
      "\n"
      "cover = elements 1 0\n");
  CHECK(sc.genus() == 1); // default
  CHECK(sc.has("deck"));
  CHECK_FALSE(sc.has("genus"));
  CHECK(sc.raw("coeff") == "cyclic 2");
  CHECK(sc.deck().order() == 2);
  CHECK(sc.coeff().orders() == V{2});
  CHECK(sc.action().is_trivial()); // default action
  SurfaceRep rep = sc.cover_rep(sc.deck(), sc.genus());
  CHECK(rep.images == std::vector<int>{1, 0});
}

TEST_CASE("deck group grammars") {
  CHECK(Scenario::parse_string("deck = symmetric 3\n").deck().order() == 6);
  CHECK(Scenario::parse_string("deck = dihedral 4\n").deck().order() == 8);
  CHECK(Scenario::parse_string("deck = weyl_b 2\n").deck().order() == 8);
  CHECK(Scenario::parse_string("deck = weyl_d 3\n").deck().order() == 24);
  FiniteGroup klein = Scenario::parse_string("deck = perm (1 2); (3 4)\n").deck();
  CHECK(klein.order() == 4);
  CHECK(klein.is_abelian());
  FiniteGroup z3 = Scenario::parse_string("deck = table 0 1 2; 1 2 0; 2 0 1\n").deck();
  CHECK(is_cyclic_group(z3));
  CHECK_THROWS_AS(Scenario::parse_string("deck = lattice 5\n").deck(), ParseError);
  CHECK_THROWS_AS(Scenario::parse_string("deck = table 0 1; 1 1\n").deck(), ParseError);
  CHECK_THROWS_AS(Scenario::parse_string("deck = perm (1 2\n").deck(), ParseError);
}

TEST_CASE("coefficients and actions") {
  Scenario sc = Scenario::parse_string(
      "deck = cyclic 2\n"
      "coeff = abelian 2 2\n"
      "action = swap\n");
  CHECK(sc.coeff().orders() == V{2, 2});
  CHECK(sc.action().apply(1, {1, 0}) == V{0, 1});

  Scenario inv = Scenario::parse_string("deck = cyclic 2\ncoeff = cyclic 3\naction = inversion\n");
  CHECK(inv.action().apply(1, {2}) == V{1});

  Scenario mat = Scenario::parse_string(
      "deck = cyclic 2\n"
      "coeff = cyclic 3\n"
      "action = matrices [1] [2]\n"); // 2 = -1 mod 3
  CHECK(mat.action().same_action_as(inv.action()));

  CHECK_THROWS_AS(
      Scenario::parse_string("deck = cyclic 3\ncoeff = cyclic 3\naction = inversion\n").action(),
      ParseError); // inversion needs |W| = 2
  CHECK_THROWS_AS(
      Scenario::parse_string("deck = cyclic 2\ncoeff = cyclic 3\naction = sideways\n").action(),
      ParseError);
  CHECK_THROWS_AS(Scenario::parse_string("deck = cyclic 2\ncoeff = weird 3\n").coeff(), ParseError);
}

TEST_CASE("extension selection against the cohomology") {
  Scenario sc = Scenario::parse_string(
      "deck = cyclic 2\n"
      "coeff = cyclic 2\n"
      "extension = class 1\n");
  H2 h2(sc.action());
  Extension n = sc.extension(h2);
  CHECK(is_cyclic_group(n.group()));
  CHECK(n.group().order() == 4);

  Scenario defaulted = Scenario::parse_string("deck = cyclic 2\ncoeff = cyclic 2\n");
  CHECK(defaulted.extension(h2).factor_set() == zero_cochain(sc.action(), 2));

  Scenario wrong = Scenario::parse_string(
      "deck = cyclic 2\ncoeff = cyclic 2\nextension = class 1 0\n");
  CHECK_THROWS_AS(wrong.extension(h2), ParseError); // rank-1 class group
}

TEST_CASE("cover selection grammars") {
  FiniteGroup z2 = FiniteGroup::cyclic(2);
  Scenario byindex = Scenario::parse_string("deck = cyclic 2\ncover = index 0\n");
  SurfaceRep first = byindex.cover_rep(z2, 1);
  CHECK(first.genus == 1);
  CHECK(is_surjective(z2, first));

  Scenario byelems = Scenario::parse_string("deck = cyclic 2\ncover = elements 0 1\n");
  CHECK(byelems.cover_rep(z2, 1).images == std::vector<int>{0, 1});

  FiniteGroup s3 = FiniteGroup::symmetric(3);
  Scenario byimages = Scenario::parse_string("deck = symmetric 3\ncover = images (1 2); (2 3)\n");
  SurfaceRep rep = byimages.cover_rep(s3, 1);
  CHECK(rep.images.size() == 2);
  CHECK(s3.label(rep.images[0]) == "(1 2)");
  CHECK(s3.label(rep.images[1]) == "(2 3)");

  CHECK_THROWS_AS(Scenario::parse_string("deck = cyclic 2\ncover = index 99\n").cover_rep(z2, 1),
                  ParseError);
  CHECK_THROWS_AS(Scenario::parse_string("deck = cyclic 2\ncover = elements 7 0\n").cover_rep(z2, 1),
                  ParseError);
}

TEST_CASE("family keys") {
  Scenario sc = Scenario::parse_string("family = C\nn = 3\ngenus = 2\n");
  CHECK(sc.family() == 'B');
  CHECK(sc.family_n() == 3);
  CHECK(sc.genus() == 2);
  CHECK_THROWS_AS(Scenario::parse_string("family = E\n").family(), ParseError);
  CHECK_THROWS_AS(Scenario::parse_string("n = 1\n").family_n(), ParseError);
  CHECK_THROWS_AS(Scenario::parse_string("n = 17\n").family_n(), ParseError);
}

TEST_CASE("auxiliary keys") {
  Scenario sc = Scenario::parse_string("letter_order = 3 2 1 0\nbudget = 500\n");
  CHECK(sc.letter_order() == std::vector<int>{3, 2, 1, 0});
  CHECK(sc.budget_tuples(7) == 500);
  CHECK(Scenario::parse_string("deck = cyclic 2\n").budget_tuples(7) == 7);
  CHECK(Scenario::parse_string("deck = cyclic 2\n").letter_order().empty());
  CHECK_THROWS_AS(Scenario::parse_string("budget = 0\n").budget_tuples(7), ParseError);
  CHECK_THROWS_AS(Scenario::parse_string("genus = 9\n").genus(), ParseError);
  CHECK_THROWS_AS(Scenario::parse_string("genus = -1\n").genus(), ParseError);
}

TEST_CASE("malformed scenarios carry line numbers") {
  try {
    Scenario::parse_string("deck = cyclic 2\nnonsense line\n");
    FAIL("expected a parse error");
  } catch (const ParseError& err) {
    CHECK(std::string(err.what()).find("line 2") != std::string::npos);
  }
  CHECK_THROWS_AS(Scenario::parse_string("deck =\n"), ParseError);
  CHECK_THROWS_AS(Scenario::parse_string("= cyclic 2\n"), ParseError);
  CHECK_THROWS_AS(Scenario::parse_string("deck = cyclic 2\ndeck = cyclic 3\n"), ParseError);
  CHECK_THROWS_AS(Scenario::parse_string("a = 1\n").raw("deck"), ParseError);
  CHECK_THROWS_AS(Scenario::parse_file("/nonexistent/path.scenario"), ParseError);
}
