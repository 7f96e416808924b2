// Acceptance gate: runs the verification matrix and prints one line per
// criterion.  The final criterion spawns the command-line tool three times
// (twice with one worker, once with four) and byte-compares the reports.
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "mumford/acceptance.hpp"

namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void print_line(int number, const std::string& name, bool pass, const std::string& detail) {
  std::cout << (pass ? "PASS" : "FAIL") << " criterion " << number << " [" << name << "]: "
            << detail << "\n";
}

} // namespace

int main(int argc, char** argv) {
  bool all = true;

  mumford::AcceptanceOutcome outcome;
  try {
    outcome = mumford::run_acceptance(1, {});
  } catch (const std::exception& e) {
    std::cout << "FAIL criterion 1-10 [verification-matrix]: threw " << e.what() << "\n";
    return 1;
  }
  for (const auto& r : outcome.results) {
    print_line(r.number, r.name, r.pass, r.detail);
    all = all && r.pass;
  }

  bool det = false;
  std::string det_detail;
  if (argc > 1) {
    const std::string cli = argv[1];
    const fs::path base = fs::current_path() / "acceptance_runs";
    std::error_code ec;
    fs::remove_all(base, ec);
    const fs::path runs[3] = {base / "w1a", base / "w1b", base / "w4"};
    const int workers[3] = {1, 1, 4};
    bool spawned = true;
    for (int i = 0; i < 3; ++i) {
      std::ostringstream cmd;
      cmd << '"' << cli << '"' << " verify-all --workers " << workers[i] << " --out "
          << runs[i];
      int rc = std::system(cmd.str().c_str());
      spawned = spawned && rc == 0;
    }
    if (spawned) {
      std::string a = read_file(runs[0] / "report.json");
      std::string b = read_file(runs[1] / "report.json");
      std::string c = read_file(runs[2] / "report.json");
      bool identical = !a.empty() && a == b && a == c;
      bool matches_direct = a == outcome.payload;
      det = identical && matches_direct;
      std::ostringstream d;
      d << "three spawned runs byte-identical: " << (identical ? "yes" : "NO")
        << "; equal to the in-process payload: " << (matches_direct ? "yes" : "NO");
      det_detail = d.str();
    } else {
      det_detail = "a spawned verify-all run exited nonzero";
    }
  } else {
    det_detail = "command-line tool path not supplied as argv[1]";
  }
  print_line(11, "determinism", det, det_detail);
  all = all && det;

  std::cout << (all ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED") << " (transgression sign "
            << outcome.transgression_sign << ")\n";
  return all ? 0 : 1;
}
