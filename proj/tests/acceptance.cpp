// Runs every acceptance criterion with the default configuration and prints
// one PASS/FAIL line each. Exit status is nonzero when any criterion fails.

#include <cstdio>

#include "littlewood/suite.hpp"

int main() {
  using namespace littlewood;
  const SuiteConfig config;
  SuiteState state;
  bool all = true;
  for (int id = 1; id <= criterion_count(); ++id) {
    CriterionResult r;
    try {
      r = run_criterion(id, config, state);
    } catch (const std::exception& e) {
      r.id = id;
      r.name = criterion_name(id);
      r.summary = std::string("error: ") + e.what();
    }
    all = all && r.pass;
    std::printf("%s criterion %d (%s): %s [%.2f s]\n", r.pass ? "PASS" : "FAIL", id, r.name.c_str(),
                r.summary.c_str(), r.seconds);
    std::fflush(stdout);
  }
  std::printf("%s\n", all ? "ALL PASS" : "SOME CRITERIA FAILED");
  return all ? 0 : 1;
}
