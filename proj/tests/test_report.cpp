#include <string>

#include "doctest.h"
#include "json.hpp"
#include "mumford/report.hpp"

using namespace mumford;
using nlohmann::json;

namespace {

CoverPresentation anchor_cover() {
  return build_cover(FiniteGroup::cyclic(2), SurfaceRep{1, {1, 0}});
}

GAction anchor_action() {
  return GAction::trivial(FiniteGroup::cyclic(2), FinAbGroup({2}));
}

} // namespace

TEST_CASE("metadata document") {
  Budget b;
  json m = json::parse(meta_json(4, b, 1));
  CHECK(m["workers"] == 4);
  CHECK(m["transgression_sign"] == 1);
  CHECK(m["budget"]["max_tuples"] == b.max_tuples);
  CHECK(m["budget"]["max_enumeration"] == b.max_enumeration);
  CHECK(m["budget"]["closure_bound"] == b.closure_bound);
  CHECK(m["budget"]["max_table_order"] == b.max_table_order);
  CHECK(m["budget"]["max_system_cells"] == b.max_system_cells);
}

TEST_CASE("cohomology report") {
  H2 h2(anchor_action());
  std::string text = h2_report(h2);
  CHECK(text == h2_report(h2)); // deterministic
  CHECK(text.back() == '\n');
  json d = json::parse(text);
  CHECK(d["order"] == 2);
  CHECK(d["z2_order"] == 2);
  CHECK(d["b2_order"] == 1);
  CHECK(d["base_order"] == 2);
  CHECK(d["coeff_orders"] == json::array({2}));
  REQUIRE(d["basis"].is_array());
  for (const auto& entry : d["basis"]) {
    CHECK(entry["degree"] == 2);
    CHECK(entry["group_order"] == 2);
    CHECK(entry["values"].is_array());
  }
}

TEST_CASE("extension report lists one entry per class") {
  H2 h2(anchor_action());
  json d = json::parse(extensions_report(h2, {}));
  CHECK(d["h2"]["order"] == 2);
  REQUIRE(d["classes"].size() == 2);
  bool saw_split = false, saw_twisted = false;
  for (const auto& e : d["classes"]) {
    if (e["split"] == true) {
      saw_split = true;
      CHECK(e["carrier"]["abelian"] == true);
    } else {
      saw_twisted = true;
    }
    CHECK(e["carrier"]["order"] == 4);
    CHECK(e["coords"].is_array());
    CHECK(e["factor_set"]["degree"] == 2);
  }
  CHECK(saw_split);
  CHECK(saw_twisted);
}

TEST_CASE("hom count reports in json and csv") {
  FiniteGroup s3 = FiniteGroup::symmetric(3);
  json d = json::parse(homs_report(s3, 1, 18, 0, 18));
  CHECK(d["genus"] == 1);
  CHECK(d["group"]["order"] == 6);
  CHECK(d["group"]["abelian"] == false);
  CHECK(d["enumerated"] == 18);
  CHECK(d["surjective"] == 0);
  CHECK(d["convolution"] == 18);
  CHECK(d["agree"] == true);

  CHECK(homs_csv(s3, 1, 18, 0, 18) ==
        "genus,group_order,enumerated,surjective,convolution,agree\n1,6,18,0,18,true\n");
}

TEST_CASE("cover report carries the presentation") {
  CoverPresentation c = anchor_cover();
  json d = json::parse(cover_report(c, FinAbGroup({2})));
  CHECK(d["genus_base"] == 1);
  CHECK(d["genus_cover"] == 1);
  CHECK(d["deck_order"] == 2);
  CHECK(d["schreier_count"] == 3);
  CHECK(d["h1_order"] == 4);
  REQUIRE(d["generators"].size() == 3);
  CHECK(d["generators"][0]["coset"] == 0);
  CHECK(d["generators"][0]["letter"] == 1);
  REQUIRE(d["relator_matrix"].size() == 2);
  CHECK(d["relator_matrix"][0] == json::array({-1, 0, 1}));
  CHECK(d["relator_matrix"][1] == json::array({1, 0, -1}));
  CHECK(d["transversal"].is_array());
}

TEST_CASE("invariants report splits the fiber orders by class") {
  CoverPresentation c = anchor_cover();
  H2 h2(anchor_action());
  json d = json::parse(invariants_report(c, h2, 1));
  CHECK(d["h1_order"] == 4);
  CHECK(d["invariants_order"] == 4);
  CHECK(d["kernel_order"] == 2);
  CHECK(d["h2_order"] == 2);
  REQUIRE(d["classes"].size() == 2);
  int64_t total = 0;
  for (const auto& f : d["classes"]) total += f["fiber_order"].get<int64_t>();
  CHECK(total == 4);
}

TEST_CASE("verification payloads serialize every field") {
  CoverPresentation c = anchor_cover();
  H2 h2(anchor_action());
  Extension n = Extension::split(anchor_action());
  FiberReport r = verify_fiber_theorem(c, n, h2);
  json d = json::parse(fiber_json(r));
  CHECK(d["verdict"] == true);
  CHECK(d["class"] == json::array({0}));
  CHECK(d["fiber_order"] == 2);
  CHECK(d["lift_count"] == 4);
  CHECK(d["bucket_size"] == 2);
  CHECK(d["exactness"] == true);
  CHECK(d["solver_agrees"] == true);

  json o = json::parse(orbit_json(weyl_orbit_check(1, dihedral_extension(3))));
  CHECK(o["verdict"] == true);
  CHECK(o["bundle_count"] == 9);
  CHECK(o["orbit_count"] == 5);

  json dd = json::parse(dihedral_json(dihedral_suite(1, 3)));
  CHECK(dd["verdict"] == true);
  CHECK(dd["n"] == 3);
  CHECK(dd["covers"].size() == 3);
  CHECK(dd["covers"][0]["h1_order"] == 9);

  json wd = json::parse(weyl_json(weyl_suite('B', 2, 1)));
  CHECK(wd["verdict"] == true);
  CHECK(wd["family"] == "B");
  CHECK(wd["covers"].is_array());
}

TEST_CASE("table rendering flattens nested documents") {
  std::string table = render_table("{\"a\": {\"b\": 1}, \"list\": [2, 3], \"flag\": true}");
  CHECK(table.find("a.b: 1\n") != std::string::npos);
  CHECK(table.find("list[0]: 2\n") != std::string::npos);
  CHECK(table.find("list[1]: 3\n") != std::string::npos);
  CHECK(table.find("flag: true\n") != std::string::npos);

  CoverPresentation c = anchor_cover();
  std::string cover_table = render_table(cover_report(c, FinAbGroup({2})));
  CHECK(cover_table.find("genus_cover: 1\n") != std::string::npos);
}
