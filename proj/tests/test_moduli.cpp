#include <set>
#include <vector>

#include "doctest.h"
#include "mumford/acceptance.hpp"
#include "mumford/moduli.hpp"

using namespace mumford;
using V = std::vector<int64_t>;

namespace {

GAction cell_action(const char* name) {
  for (const MatrixCell& c : matrix_cells())
    if (c.name == name) return c.sigma;
  throw Error("unknown cell");
}

CoverPresentation anchor_cover() {
  return build_cover(FiniteGroup::cyclic(2), SurfaceRep{1, {1, 0}});
}

} // namespace

TEST_CASE("transgression over the anchor double cover") {
  GAction sigma = cell_action("Z2-Z2-trivial");
  H2 h2(sigma);
  CoverPresentation c = anchor_cover();

  IntMatrix tm = transgression_matrix(c);
  CHECK(tm.rows() == 4);
  CHECK(tm.cols() == 3);
  // only the (s, s) slot carries a section word: t(s) t(s) t(e)^-1 = x^2 = s_2
  for (int w1 = 0; w1 < 2; ++w1)
    for (int w2 = 0; w2 < 2; ++w2)
      for (int j = 0; j < 3; ++j)
        CHECK(tm.at(w1 * 2 + w2, j) == (w1 == 1 && w2 == 1 && j == 1 ? 1 : 0));

  // phi = (a, b, a) on the Schreier generators transgresses to f(s,s) = b
  Cochain f = transgression(c, sigma, {1, 1, 1});
  CHECK(f.at(1, 1) == V{1});
  CHECK(f.at(0, 1) == V{0});
  CHECK(is_cocycle2(sigma, f));
  CHECK(mumford_class(c, h2, {1, 1, 1}) == h2.project(f));
  CHECK(mumford_class(c, h2, {0, 0, 0}) == V{0});
  CHECK(mumford_class(c, h2, {1, 0, 1}) == V{0});

  // the class map is a homomorphism on the invariant subgroup
  ProductSubgroup inv = invariants_subgroup(c, sigma);
  for (const V& a : inv.elements())
    for (const V& b : inv.elements()) {
      V sum = inv.ambient().add(a, b);
      CHECK(h2.group().add(mumford_class(c, h2, a), mumford_class(c, h2, b)) ==
            mumford_class(c, h2, sum));
    }

  ProductSubgroup ker = transgression_kernel(c, h2);
  CHECK(ker.order() == 2);
  CHECK(ker.contains({1, 0, 1}));
  CHECK_FALSE(ker.contains({1, 1, 1}));
  CHECK(ker.same_subgroup_as(restriction_image(c, sigma)));

  // invariants not in H^1 are rejected
  CHECK_THROWS_AS(mumford_class(c, h2, {1, 0, 0}), ValidationError);
}

TEST_CASE("fiber sets partition the invariants by transgression class") {
  GAction sigma = cell_action("Z2-Z2-trivial");
  H2 h2(sigma);
  CoverPresentation c = anchor_cover();
  int64_t total = 0;
  for (int64_t i = 0; i < h2.order(); ++i) {
    AffineSolutionSet s = h1_eta_set(c, h2, h2.representative(h2.group().element_at(i)));
    CHECK(s.order() == 2);
    total += s.order();
    for (const V& phi : s.elements()) CHECK(mumford_class(c, h2, phi) == h2.group().element_at(i));
  }
  CHECK(total == invariants_subgroup(c, sigma).order());
}

TEST_CASE("assembling lifts through an extension") {
  GAction sigma = cell_action("Z2-Z2-trivial");
  H2 h2(sigma);
  CoverPresentation c = anchor_cover();
  Extension n = Extension::from_cocycle(sigma, h2.representative({1})); // Z/4 carrier

  // reachable phi: the two h1_eta solutions for eta = [1]
  AffineSolutionSet fiber = h1_eta_set(c, h2, n.factor_set());
  REQUIRE_FALSE(fiber.empty);
  for (const V& phi : fiber.elements()) {
    AffineSolutionSet lifts = assemble_lift(c, n, phi);
    REQUIRE_FALSE(lifts.empty);
    CHECK(lifts.order() == 2); // |Z^1(W, T)| lifts per class
    for (const V& u : lifts.elements()) {
      SurfaceRep rho = decorated_rep(c, n, u);
      CHECK(satisfies_relation(n.group(), rho));
      CHECK(restrict_to_bundle(c, n, rho) == fiber.homogeneous.ambient().reduce(phi));
    }
  }

  // phi outside the fiber admits no lift
  AffineSolutionSet wrong = h1_eta_set(c, h2, h2.representative({0}));
  for (const V& phi : wrong.elements()) CHECK(assemble_lift(c, n, phi).empty);
}

TEST_CASE("fiber theorem verification on the anchor cell") {
  GAction sigma = cell_action("Z2-Z2-trivial");
  H2 h2(sigma);
  CoverPresentation c = anchor_cover();
  for (int64_t i = 0; i < h2.order(); ++i) {
    Extension n = Extension::from_cocycle(sigma, h2.representative(h2.group().element_at(i)));
    FiberReport r = verify_fiber_theorem(c, n, h2);
    CHECK(r.verdict);
    CHECK(r.genus == 1);
    CHECK(r.total_order == 4);
    CHECK(r.eta == h2.group().element_at(i));
    CHECK(r.h1_order == 4);
    CHECK(r.invariants_order == 4);
    CHECK(r.kernel_order == 2);
    CHECK(r.fiber_order == 2);
    CHECK(r.lift_count == 4);
    CHECK(r.reached_count == 2);
    CHECK(r.bucket_size == 2);
    CHECK(r.z1_group_order == 2);
    CHECK(r.principal_order == 1);
    CHECK(r.orbits_per_bucket == 2);
    CHECK(r.group_h1_order == 2);
    CHECK(r.exactness);
    CHECK(r.multiplicity);
    CHECK(r.coset_structure);
    CHECK(r.refinement);
    CHECK(r.solver_agrees);
    CHECK(r.round_trip);
  }
}

TEST_CASE("fiber orders across classes always sum to the invariants") {
  // Klein deck group on a genus-1 base, trivial Z/2 coefficients
  FiniteGroup v4 = FiniteGroup::from_permutations(
      {Permutation::from_cycles(4, {{1, 2}}), Permutation::from_cycles(4, {{3, 4}})});
  GAction sigma = cell_action("V4-Z2-trivial");
  H2 h2(sigma);
  std::vector<SurfaceRep> reps = surjective_homs(1, v4);
  REQUIRE_FALSE(reps.empty());
  CoverPresentation c(v4, reps.front());
  int64_t total = 0;
  for (int64_t i = 0; i < h2.order(); ++i) {
    total += h1_eta_set(c, h2, h2.representative(h2.group().element_at(i))).order();
  }
  CHECK(total == invariants_subgroup(c, sigma).order());
}

TEST_CASE("budget failures surface instead of truncating") {
  GAction sigma = cell_action("Z2-Z2-trivial");
  H2 h2(sigma);
  CoverPresentation c = anchor_cover();
  Extension n = Extension::split(sigma);
  Budget tiny;
  tiny.max_enumeration = 1;
  CHECK_THROWS_AS(verify_fiber_theorem(c, n, h2, tiny), BudgetError);
}

TEST_CASE("torus orbit comparison for the dihedral and hyperoctahedral cases") {
  OrbitReport d3 = weyl_orbit_check(1, dihedral_extension(3));
  CHECK(d3.verdict);
  CHECK(d3.genus == 1);
  CHECK(d3.bundle_count == 9);
  CHECK(d3.orbit_count == 5);
  CHECK(d3.fibers_match_orbits);
  CHECK(d3.free_orbit_exists);

  OrbitReport b2 = weyl_orbit_check(1, weyl_b_extension(2));
  CHECK(b2.verdict);
  CHECK(b2.bundle_count == 16);
  CHECK(b2.orbit_count == 10);
  CHECK(b2.fibers_match_orbits);
  CHECK(b2.free_orbit_exists);
}

TEST_CASE("dihedral double-cover decomposition at small odd n") {
  DihedralCoverReport r = dihedral_cover_report(1, 3, {1, 0});
  CHECK(r.h1_order == 9);
  CHECK(r.fixed_order == 9);
  CHECK(r.anti_order == 1);
  CHECK(r.pullback_order == 9);
  CHECK(r.class_base == 1);
  CHECK(r.class_cyclic == 8);
  CHECK(r.class_dihedral == 0);
  CHECK(r.class_mixed == 0);
  CHECK(r.decomposition);
  CHECK(r.twisted_match);
  CHECK(r.pullback_match);
  CHECK(r.classification_ok);

  DihedralCoverReport r2 = dihedral_cover_report(2, 3, {1, 0, 0, 0});
  CHECK(r2.h1_order == 729);
  CHECK(r2.fixed_order == 81);
  CHECK(r2.anti_order == 9);
  CHECK(r2.class_base == 1);
  CHECK(r2.class_cyclic == 80);
  CHECK(r2.class_dihedral == 8);
  CHECK(r2.class_mixed == 640);
  CHECK(r2.decomposition);
  CHECK(r2.twisted_match);
  CHECK(r2.pullback_match);
  CHECK(r2.classification_ok);

  DihedralReport suite = dihedral_suite(1, 3);
  CHECK(suite.verdict);
  CHECK(suite.covers.size() == 3);

  CHECK_THROWS_AS(dihedral_suite(1, 4), ValidationError); // n must be odd
  CHECK_THROWS_AS(dihedral_suite(1, 1), ValidationError);
}

TEST_CASE("hyperoctahedral suites") {
  WeylReport b2 = weyl_suite('B', 2, 1);
  CHECK(b2.verdict);
  CHECK(b2.family == 'B');
  CHECK_FALSE(b2.no_covers);
  CHECK_FALSE(b2.covers.empty());
  for (const WeylCoverReport& cr : b2.covers) {
    CHECK(cr.five_term);
    CHECK(cr.split_fiber_match);
    CHECK(cr.diagonal_checked);
    CHECK(cr.diagonal_ok);
    CHECK(cr.verbatim_diagonal);
  }

  // Sigma_3 is no quotient of a torus group: the suite reports vacuity
  WeylReport d3 = weyl_suite('D', 3, 1);
  CHECK(d3.verdict);
  CHECK(d3.no_covers);
  CHECK(d3.covers.empty());
}

TEST_CASE("anchoring the transgression sign") {
  CHECK(determine_transgression_sign() == 1);
}
