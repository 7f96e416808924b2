#include <vector>

#include "doctest.h"
#include "mumford/acceptance.hpp"
#include "mumford/extension.hpp"

using namespace mumford;
using V = std::vector<int64_t>;

namespace {

GAction cell_action(const char* name) {
  for (const MatrixCell& c : matrix_cells())
    if (c.name == name) return c.sigma;
  throw Error("unknown cell");
}

} // namespace

TEST_CASE("extension multiplication follows the factor set") {
  GAction sigma = cell_action("Z2-Z4-inversion");
  H2 h2(sigma);
  for (int64_t i = 0; i < h2.order(); ++i) {
    Extension n = Extension::from_cocycle(sigma, h2.representative(h2.group().element_at(i)));
    const Cochain& f = n.factor_set();
    for (int w1 = 0; w1 < sigma.group().order(); ++w1)
      for (int w2 = 0; w2 < sigma.group().order(); ++w2)
        for (int64_t t1 = 0; t1 < 4; ++t1) {
          int lhs = n.group().mul(n.group().mul(n.embed({t1}), n.section(w1)), n.section(w2));
          V tsum = sigma.coeff().add({t1}, f.at(w1, w2));
          int rhs = n.group().mul(n.embed(tsum), n.section(sigma.group().mul(w1, w2)));
          CHECK(lhs == rhs);
        }
    // projection splits as embed + section coordinates
    for (int nu = 0; nu < n.group().order(); ++nu) {
      int w = n.project(nu);
      int rem = n.group().mul(nu, n.group().inv(n.section(w)));
      CHECK(n.in_kernel(rem));
      CHECK(n.group().mul(n.embed(n.embed_inverse(rem)), n.section(w)) == nu);
    }
  }
}

TEST_CASE("involution on the Klein group: split and twisted carriers") {
  GAction sigma = cell_action("Z2-Z2-trivial");
  H2 h2(sigma);
  REQUIRE(h2.order() == 2);

  Extension split = Extension::split(sigma);
  CHECK(element_order_multiset(split.group()) == V{1, 2, 2, 2});
  CHECK(split.factor_set() == zero_cochain(sigma, 2));

  Extension twisted = Extension::from_cocycle(sigma, h2.representative({1}));
  CHECK(is_cyclic_group(twisted.group()));
  CHECK(twisted.group().order() == 4);
  CHECK_FALSE(groups_isomorphic(split.group(), twisted.group()));

  CHECK(equivalent(split, split, h2));
  CHECK_FALSE(equivalent(split, twisted, h2));
  CHECK(equivalent_by_search(split, split));
  CHECK_FALSE(equivalent_by_search(split, twisted));
  CHECK(split.class_coords(h2) == V{0});
  CHECK(twisted.class_coords(h2) == V{1});
}

TEST_CASE("quaternion versus dihedral carriers over the inverted Z/4") {
  GAction sigma = cell_action("Z2-Z4-inversion");
  H2 h2(sigma);
  REQUIRE(h2.order() == 2);
  Extension split = Extension::split(sigma);
  Extension twisted = Extension::from_cocycle(sigma, h2.representative({1}));
  CHECK(groups_isomorphic(split.group(), FiniteGroup::dihedral(4)));
  CHECK(element_order_multiset(twisted.group()) == V{1, 2, 4, 4, 4, 4, 4, 4}); // quaternion
  CHECK_FALSE(groups_isomorphic(split.group(), twisted.group()));
  CHECK_FALSE(equivalent(split, twisted, h2));
}

TEST_CASE("the twisted class over Z/4 base is cyclic of order 8") {
  GAction sigma = cell_action("Z4-Z2-trivial");
  H2 h2(sigma);
  Extension twisted = Extension::from_cocycle(sigma, h2.representative({1}));
  CHECK(is_cyclic_group(twisted.group()));
  CHECK(twisted.group().order() == 8);
}

TEST_CASE("equivalence is finer than carrier isomorphism") {
  // V4 acting trivially on Z/2: 8 classes but few carrier types, so some
  // inequivalent pairs share an isomorphic carrier yet fail the search.
  GAction sigma = cell_action("V4-Z2-trivial");
  H2 h2(sigma);
  REQUIRE(h2.order() == 8);
  std::vector<Extension> exts;
  for (int64_t i = 0; i < h2.order(); ++i)
    exts.push_back(Extension::from_cocycle(sigma, h2.representative(h2.group().element_at(i))));
  int iso_pairs = 0;
  for (size_t i = 0; i < exts.size(); ++i)
    for (size_t j = i + 1; j < exts.size(); ++j) {
      CHECK_FALSE(equivalent(exts[i], exts[j], h2));
      CHECK_FALSE(equivalent_by_search(exts[i], exts[j]));
      if (groups_isomorphic(exts[i].group(), exts[j].group())) ++iso_pairs;
    }
  CHECK(iso_pairs > 0);
}

TEST_CASE("classical split extensions") {
  Extension d3 = dihedral_extension(3);
  CHECK(groups_isomorphic(d3.group(), FiniteGroup::symmetric(3)));
  CHECK(d3.coeff().orders() == V{3});
  CHECK(d3.base().order() == 2);

  Extension b2 = weyl_b_extension(2);
  CHECK(b2.group().order() == 8);
  CHECK(element_order_multiset(b2.group()) == V{1, 2, 2, 2, 2, 2, 4, 4});
  CHECK(groups_isomorphic(b2.group(), FiniteGroup::dihedral(4)));

  CHECK(weyl_b_extension(3).group().order() == 48);

  Extension d3w = weyl_d_extension(3);
  CHECK(d3w.group().order() == 24);
  CHECK(groups_isomorphic(d3w.group(), FiniteGroup::symmetric(4)));
  CHECK(d3w.coeff().orders() == V{2, 2});
}

TEST_CASE("wrapping an existing exact sequence") {
  // S3 over Z/2 with kernel Z/3: embed 0 -> id, 1 -> (1 2 3), 2 -> (1 3 2)
  FiniteGroup s3 = FiniteGroup::symmetric(3);
  int rot = s3.element_by_label("(1 2 3)");
  REQUIRE(rot >= 0);
  std::vector<int> embed = {s3.identity(), rot, s3.mul(rot, rot)};
  std::vector<int> proj(static_cast<size_t>(s3.order()));
  for (int nu = 0; nu < s3.order(); ++nu)
    proj[static_cast<size_t>(nu)] = s3.element_order(nu) == 2 ? 1 : 0;
  Extension wrapped = Extension::from_group(s3, FiniteGroup::cyclic(2), FinAbGroup({3}), embed, proj);
  // conjugation by a reflection inverts the rotation subgroup
  CHECK(wrapped.action().same_action_as(GAction::inversion(FiniteGroup::cyclic(2), FinAbGroup({3}))));
  CHECK(wrapped.in_kernel(rot));
  CHECK(wrapped.embed_inverse(rot) == V{1});
  CHECK_THROWS_AS(wrapped.embed_inverse(s3.element_by_label("(1 2)")), Error);
}

TEST_CASE("factor sets must be normalized") {
  GAction sigma = cell_action("Z2-Z2-trivial");
  Cochain f = zero_cochain(sigma, 2);
  for (auto& v : f.values) v = {1}; // constant, violates f(e, w) = 0
  CHECK_THROWS_AS(Extension::from_cocycle(sigma, f), ValidationError);
}

TEST_CASE("factor set of a shifted section lands in the same class") {
  GAction sigma = cell_action("Z2-Z3-inversion");
  H2 h2(sigma);
  Extension n = Extension::split(sigma);
  // alternative section: multiply the nontrivial slot by a kernel element
  std::vector<int> sec = {n.section(0), n.group().mul(n.embed({1}), n.section(1))};
  Cochain g = n.factor_set_of_section(sec);
  CHECK(is_cocycle2(sigma, g));
  CHECK(h2.project(g) == h2.project(n.factor_set()));
}
