#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "mumford/acceptance.hpp"
#include "mumford/report.hpp"
#include "mumford/scenario.hpp"

namespace {

struct Options {
  std::string scenario;
  int workers = 1;
  int64_t budget_tuples = 0; // 0 keeps the default
  std::string format = "json";
  std::string out;
};

void add_common(CLI::App* cmd, Options& opt, bool scenario_required) {
  auto* s = cmd->add_option("--scenario", opt.scenario, "scenario file (key = value lines)");
  if (scenario_required) s->required();
  cmd->add_option("--workers", opt.workers, "worker threads for partitioned enumeration")
      ->check(CLI::Range(1, 64));
  cmd->add_option("--budget", opt.budget_tuples, "enumeration budget in tuples")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  cmd->add_option("--out", opt.out, "directory for report.json and meta.json");
}

struct Run {
  std::string payload;   // JSON document
  std::string csv;       // only for count tables
  bool verdict = true;
  int sign = 1;
};

int emit(const Options& opt, const Run& run, const mumford::Budget& budget) {
  if (opt.format == "csv" && run.csv.empty())
    throw mumford::ParseError("csv format is only available for homs");
  if (!opt.out.empty()) {
    std::filesystem::create_directories(opt.out);
    std::filesystem::path dir(opt.out);
    {
      std::ofstream f(dir / "report.json", std::ios::binary);
      f << run.payload;
    }
    if (opt.format == "csv") {
      std::ofstream f(dir / "report.csv", std::ios::binary);
      f << run.csv;
    }
    {
      std::ofstream f(dir / "meta.json", std::ios::binary);
      f << mumford::meta_json(opt.workers, budget, run.sign);
    }
  } else if (opt.format == "csv") {
    std::cout << run.csv;
  } else if (opt.format == "table") {
    std::cout << mumford::render_table(run.payload);
  } else {
    std::cout << run.payload;
  }
  return run.verdict ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite Mumford-group computations on surface covers"};
  app.require_subcommand(1);
  Options opt;

  CLI::App* cmd_h2 = app.add_subcommand("h2", "H^2(W,T) with a basis of factor sets");
  CLI::App* cmd_ext = app.add_subcommand("extensions", "all extension classes and carriers");
  CLI::App* cmd_homs = app.add_subcommand("homs", "surface homomorphism counts, both oracles");
  CLI::App* cmd_cover = app.add_subcommand("cover", "Schreier presentation of a cover");
  CLI::App* cmd_inv = app.add_subcommand("invariants", "invariant classes and coset sizes");
  CLI::App* cmd_fiber = app.add_subcommand("fiber", "fiber verification report");
  CLI::App* cmd_orbit = app.add_subcommand("orbit", "orbit/fiber comparison report");
  CLI::App* cmd_dih = app.add_subcommand("dihedral", "dihedral cover suite");
  CLI::App* cmd_weyl = app.add_subcommand("weyl", "Weyl family suite");
  CLI::App* cmd_all = app.add_subcommand("verify-all", "full verification matrix");
  for (CLI::App* c : {cmd_h2, cmd_ext, cmd_homs, cmd_cover, cmd_inv, cmd_fiber, cmd_orbit,
                      cmd_dih, cmd_weyl})
    add_common(c, opt, true);
  add_common(cmd_all, opt, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    mumford::Budget budget;
    if (opt.budget_tuples > 0) budget.max_tuples = opt.budget_tuples;
    Run run;

    if (app.got_subcommand(cmd_all)) {
      mumford::AcceptanceOutcome outcome = mumford::run_acceptance(opt.workers, budget);
      run.payload = outcome.payload;
      run.verdict = outcome.all_pass;
      run.sign = outcome.transgression_sign;
      return emit(opt, run, budget);
    }

    mumford::Scenario sc = mumford::Scenario::parse_file(opt.scenario);

    if (app.got_subcommand(cmd_h2) || app.got_subcommand(cmd_ext)) {
      mumford::GAction sigma = sc.action(budget);
      mumford::H2 h2(sigma, budget);
      run.payload = app.got_subcommand(cmd_h2) ? mumford::h2_report(h2)
                                               : mumford::extensions_report(h2, budget);
    } else if (app.got_subcommand(cmd_homs)) {
      mumford::FiniteGroup g = sc.deck(budget);
      int genus = sc.genus();
      auto homs = mumford::enumerate_homs(genus, g, budget, opt.workers);
      int64_t surj = 0;
      for (const auto& r : homs)
        if (mumford::is_surjective(g, r)) ++surj;
      int64_t conv = mumford::commutator_convolution_count(g, genus);
      int64_t total = static_cast<int64_t>(homs.size());
      run.payload = mumford::homs_report(g, genus, total, surj, conv);
      run.csv = mumford::homs_csv(g, genus, total, surj, conv);
      run.verdict = total == conv;
    } else if (app.got_subcommand(cmd_cover)) {
      mumford::FiniteGroup w = sc.deck(budget);
      mumford::SurfaceRep rho = sc.cover_rep(w, sc.genus(), budget);
      mumford::CoverPresentation c = mumford::build_cover(w, rho, sc.letter_order());
      run.payload = mumford::cover_report(c, sc.coeff());
    } else if (app.got_subcommand(cmd_inv)) {
      mumford::GAction sigma = sc.action(budget);
      mumford::H2 h2(sigma, budget);
      mumford::SurfaceRep rho = sc.cover_rep(sigma.group(), sc.genus(), budget);
      mumford::CoverPresentation c = mumford::build_cover(sigma.group(), rho, sc.letter_order());
      run.payload = mumford::invariants_report(c, h2, run.sign);
    } else if (app.got_subcommand(cmd_fiber)) {
      mumford::GAction sigma = sc.action(budget);
      mumford::H2 h2(sigma, budget);
      mumford::SurfaceRep rho = sc.cover_rep(sigma.group(), sc.genus(), budget);
      mumford::CoverPresentation c = mumford::build_cover(sigma.group(), rho, sc.letter_order());
      mumford::Extension e = sc.extension(h2, budget);
      mumford::FiberReport fr =
          mumford::verify_fiber_theorem(c, e, h2, budget, opt.workers, run.sign);
      run.payload = mumford::fiber_json(fr);
      run.verdict = fr.verdict;
    } else if (app.got_subcommand(cmd_orbit)) {
      mumford::GAction sigma = sc.action(budget);
      mumford::H2 h2(sigma, budget);
      mumford::Extension e = sc.extension(h2, budget);
      mumford::OrbitReport r = mumford::weyl_orbit_check(sc.genus(), e, budget);
      run.payload = mumford::orbit_json(r);
      run.verdict = r.verdict;
    } else if (app.got_subcommand(cmd_dih)) {
      mumford::DihedralReport r = mumford::dihedral_suite(sc.genus(), sc.family_n(), budget);
      run.payload = mumford::dihedral_json(r);
      run.verdict = r.verdict;
    } else if (app.got_subcommand(cmd_weyl)) {
      mumford::WeylReport r =
          mumford::weyl_suite(sc.family(), sc.family_n(), sc.genus(), budget, run.sign);
      run.payload = mumford::weyl_json(r);
      run.verdict = r.verdict;
    }
    return emit(opt, run, budget);
  } catch (const mumford::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const mumford::BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const mumford::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
