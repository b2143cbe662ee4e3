// Runs a small near-collinear ensemble and prints the per-check summary.
#include <cstdio>
#include <cstdlib>

#include "circdiff/circdiff.hpp"

int main(int argc, char** argv) {
  using namespace circdiff;
  EnsembleConfig cfg;
  cfg.family = Family::near_collinear;
  cfg.epsilon = argc > 1 ? std::atof(argv[1]) : 1e-3;
  cfg.degree_min = 3;
  cfg.degree_max = 12;
  cfg.count = 200;
  cfg.seed = 2024;

  const EnsembleSummary s = run_suite(cfg, {"schoenberg", "quartic_general", "normality_equivalence", "weyl"});
  std::printf("%-24s %6s %6s %6s %14s\n", "check", "pass", "fail", "equal", "min_slack");
  for (const auto& c : s.checks)
    std::printf("%-24s %6zu %6zu %6zu %14.6e\n", c.check.c_str(), c.pass, c.fail, c.equality_count, c.min_slack);
  return s.all_passed() ? 0 : 1;
}
