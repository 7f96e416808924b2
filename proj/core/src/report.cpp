#include "mumford/report.hpp"

#include <sstream>

#include "report_internal.hpp"

namespace mumford {

namespace detail {

json cochain_json(const Cochain& f) {
  json out = json::array();
  for (const auto& v : f.values) out.push_back(v);
  return json{{"degree", f.degree}, {"group_order", f.group_order}, {"values", out}};
}

json subgroup_json(const ProductSubgroup& s) {
  return json{{"order", s.order()},
              {"generator_orders", s.generator_orders()},
              {"generators", s.generators()}};
}

json group_fingerprint(const FiniteGroup& g) {
  return json{{"order", g.order()},
              {"abelian", g.is_abelian()},
              {"element_orders", element_order_multiset(g)},
              {"conjugacy_classes", static_cast<int64_t>(g.conjugacy_classes().size())}};
}

json h2_json(const H2& h2) {
  return json{{"order", h2.order()},
              {"z2_order", h2.z2_order()},
              {"b2_order", h2.b2_order()},
              {"group_orders", h2.group().orders()},
              {"coeff_orders", h2.action().coeff().orders()},
              {"base_order", h2.action().group().order()}};
}

json fiber_json(const FiberReport& r) {
  return json{{"genus", r.genus},
              {"total_order", r.total_order},
              {"class", r.eta},
              {"h1_order", r.h1_order},
              {"invariants_order", r.invariants_order},
              {"kernel_order", r.kernel_order},
              {"fiber_order", r.fiber_order},
              {"lift_count", r.lift_count},
              {"reached_count", r.reached_count},
              {"bucket_size", r.bucket_size},
              {"z1_group_order", r.z1_group_order},
              {"principal_order", r.principal_order},
              {"orbits_per_bucket", r.orbits_per_bucket},
              {"group_h1_order", r.group_h1_order},
              {"stab_orbit_count", r.stab_orbit_count},
              {"exactness", r.exactness},
              {"multiplicity", r.multiplicity},
              {"coset_structure", r.coset_structure},
              {"refinement", r.refinement},
              {"solver_agrees", r.solver_agrees},
              {"round_trip", r.round_trip},
              {"verdict", r.verdict}};
}

json orbit_json(const OrbitReport& r) {
  return json{{"genus", r.genus},
              {"bundle_count", r.bundle_count},
              {"orbit_count", r.orbit_count},
              {"fibers_match_orbits", r.fibers_match_orbits},
              {"free_orbit_exists", r.free_orbit_exists},
              {"verdict", r.verdict}};
}

json dihedral_json(const DihedralReport& r) {
  json covers = json::array();
  for (const auto& c : r.covers)
    covers.push_back(json{{"rho2", c.rho2},
                          {"h1_order", c.h1_order},
                          {"fixed_order", c.fixed_order},
                          {"anti_order", c.anti_order},
                          {"pullback_order", c.pullback_order},
                          {"class_base", c.class_base},
                          {"class_cyclic", c.class_cyclic},
                          {"class_dihedral", c.class_dihedral},
                          {"class_mixed", c.class_mixed},
                          {"decomposition", c.decomposition},
                          {"twisted_match", c.twisted_match},
                          {"pullback_match", c.pullback_match},
                          {"classification_ok", c.classification_ok}});
  return json{{"genus", r.genus}, {"n", r.n}, {"covers", covers}, {"verdict", r.verdict}};
}

json weyl_json(const WeylReport& r) {
  json covers = json::array();
  for (const auto& c : r.covers)
    covers.push_back(json{{"rho", c.rho},
                          {"invariants_order", c.invariants_order},
                          {"kernel_order", c.kernel_order},
                          {"fiber_order", c.fiber_order},
                          {"restriction_order", c.restriction_order},
                          {"five_term", c.five_term},
                          {"split_fiber_match", c.split_fiber_match},
                          {"diagonal_checked", c.diagonal_checked},
                          {"diagonal_ok", c.diagonal_ok},
                          {"verbatim_diagonal", c.verbatim_diagonal},
                          {"fiber_singleton", c.fiber_singleton}});
  return json{{"family", std::string(1, r.family)},
              {"n", r.n},
              {"genus", r.genus},
              {"no_covers", r.no_covers},
              {"covers", covers},
              {"verdict", r.verdict}};
}

} // namespace detail

using detail::json;

std::string meta_json(int workers, const Budget& budget, int transgression_sign) {
  json b{{"max_tuples", budget.max_tuples},
         {"max_enumeration", budget.max_enumeration},
         {"closure_bound", budget.closure_bound},
         {"max_table_order", budget.max_table_order},
         {"max_system_cells", budget.max_system_cells}};
  return detail::dump(json{{"workers", workers},
                           {"transgression_sign", transgression_sign},
                           {"budget", b}});
}

std::string h2_report(const H2& h2) {
  json out = detail::h2_json(h2);
  json basis = json::array();
  for (int k = 0; k < h2.group().rank(); ++k) {
    std::vector<int64_t> coords = h2.group().zero();
    coords[static_cast<size_t>(k)] = 1;
    basis.push_back(detail::cochain_json(h2.representative(coords)));
  }
  out["basis"] = basis;
  return detail::dump(out);
}

std::string extensions_report(const H2& h2, const Budget& budget) {
  json classes = json::array();
  for (int64_t idx = 0; idx < h2.order(); ++idx) {
    std::vector<int64_t> coords = h2.group().element_at(idx);
    Extension e = Extension::from_cocycle(h2.action(), h2.representative(coords), budget);
    bool split = h2.group().is_zero(coords);
    classes.push_back(json{{"coords", coords},
                           {"split", split},
                           {"factor_set", detail::cochain_json(e.factor_set())},
                           {"carrier", detail::group_fingerprint(e.group())}});
  }
  return detail::dump(json{{"h2", detail::h2_json(h2)}, {"classes", classes}});
}

std::string homs_report(const FiniteGroup& g, int genus, int64_t enumerated, int64_t surjective,
                        int64_t convolution) {
  return detail::dump(json{{"group", detail::group_fingerprint(g)},
                           {"genus", genus},
                           {"enumerated", enumerated},
                           {"surjective", surjective},
                           {"convolution", convolution},
                           {"agree", enumerated == convolution}});
}

std::string homs_csv(const FiniteGroup& g, int genus, int64_t enumerated, int64_t surjective,
                     int64_t convolution) {
  std::ostringstream out;
  out << "genus,group_order,enumerated,surjective,convolution,agree\n";
  out << genus << ',' << g.order() << ',' << enumerated << ',' << surjective << ','
      << convolution << ',' << (enumerated == convolution ? "true" : "false") << '\n';
  return out.str();
}

std::string cover_report(const CoverPresentation& c, const FinAbGroup& t) {
  json transversal = json::array();
  for (int w = 0; w < c.deck().order(); ++w) transversal.push_back(c.transversal_word(w));
  json gens = json::array();
  for (int i = 0; i < c.num_generators(); ++i)
    gens.push_back(json{{"coset", c.generators()[static_cast<size_t>(i)].coset},
                        {"letter", c.generators()[static_cast<size_t>(i)].letter},
                        {"word", c.generator_word(i)}});
  json rel = json::array();
  for (int i = 0; i < c.relator_matrix().rows(); ++i) {
    std::vector<int64_t> row;
    for (int j = 0; j < c.relator_matrix().cols(); ++j) row.push_back(c.relator_matrix().at(i, j));
    rel.push_back(row);
  }
  ProductSubgroup h1 = h1_cover(c, t);
  return detail::dump(json{{"genus_base", c.genus_base()},
                           {"genus_cover", c.genus_cover()},
                           {"deck_order", c.deck().order()},
                           {"schreier_count", c.num_generators()},
                           {"transversal", transversal},
                           {"generators", gens},
                           {"relator_matrix", rel},
                           {"h1_order", h1.order()},
                           {"h1_generator_orders", h1.generator_orders()}});
}

std::string invariants_report(const CoverPresentation& c, const H2& h2, int sign) {
  const GAction& sigma = h2.action();
  ProductSubgroup inv = invariants_subgroup(c, sigma);
  ProductSubgroup ker = transgression_kernel(c, h2, sign);
  json classes = json::array();
  for (int64_t idx = 0; idx < h2.order(); ++idx) {
    std::vector<int64_t> coords = h2.group().element_at(idx);
    AffineSolutionSet fiber = h1_eta_set(c, h2, h2.representative(coords), sign);
    classes.push_back(json{{"coords", coords}, {"fiber_order", fiber.order()}});
  }
  return detail::dump(json{{"h1_order", h1_cover(c, sigma.coeff()).order()},
                           {"invariants_order", inv.order()},
                           {"kernel_order", ker.order()},
                           {"h2_order", h2.order()},
                           {"classes", classes}});
}

std::string fiber_json(const FiberReport& r) { return detail::dump(detail::fiber_json(r)); }
std::string orbit_json(const OrbitReport& r) { return detail::dump(detail::orbit_json(r)); }
std::string dihedral_json(const DihedralReport& r) { return detail::dump(detail::dihedral_json(r)); }
std::string weyl_json(const WeylReport& r) { return detail::dump(detail::weyl_json(r)); }

namespace {

void flatten_json(const json& j, const std::string& path, std::ostringstream& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten_json(it.value(), path.empty() ? it.key() : path + "." + it.key(), out);
  } else if (j.is_array()) {
    if (j.empty()) out << path << ": []\n";
    for (size_t i = 0; i < j.size(); ++i)
      flatten_json(j[i], path + "[" + std::to_string(i) + "]", out);
  } else {
    out << path << ": " << j.dump() << '\n';
  }
}

} // namespace

std::string render_table(const std::string& json_text) {
  json j = json::parse(json_text);
  std::ostringstream out;
  flatten_json(j, "", out);
  return out.str();
}

} // namespace mumford
