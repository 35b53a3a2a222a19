#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "aseopt/optimizer.hpp"
#include "aseopt/run_config.hpp"
#include "aseopt/table.hpp"

namespace aseopt {

// process exit discipline shared by the CLI and its tests
enum ExitCode {
  exit_ok = 0,
  exit_invalid_input = 1,
  exit_numerical_failure = 2,
  exit_validation_breach = 3,
};

struct CommandOptions {
  RunConfig config;
  std::string out_path;        // overrides config.output_path; empty = stdout only
  int grid = 0;                // figure grid override, 0 = command default
  double tol = 1e-8;
  int threads = 0;             // 0 = hardware concurrency
  bool joint = false;          // optimize: run the alternating iteration too
  std::string mc_route = "indicator";  // validate: sir estimator route
  std::string dump_path;       // validate: optional realization dump
  long dump_count = 10;
};

int cmd_eval(const CommandOptions& opt, std::ostream& out);
int cmd_sweep(const CommandOptions& opt, std::ostream& out);
int cmd_optimize(const CommandOptions& opt, std::ostream& out);
int cmd_validate(const CommandOptions& opt, std::ostream& out);
int cmd_fig1(const CommandOptions& opt, std::ostream& out);
int cmd_fig2(const CommandOptions& opt, std::ostream& out);
int cmd_fig3(const CommandOptions& opt, std::ostream& out);

// maps exceptions to the exit-code discipline; used by main and by tests
int run_guarded(const std::function<int()>& body, std::ostream& err);

// Fig.3 anchors: delay reduction of the adaptive curve against the p = 0.6
// baseline at A_e = 0.02, and its ASE gain at D = 1.8, both by linear
// interpolation between adjacent rows. NaN when an anchor is off the grid.
struct Fig3Gains {
  double delay_gain_at_ase = 0.0;  // (D_fixed - D_adaptive) / D_fixed
  double ase_gain_at_delay = 0.0;  // (A_adaptive - A_fixed) / A_fixed
};
Fig3Gains fig3_gains(const std::vector<FrontierRow>& rows, double ase_anchor = 0.02,
                     double delay_anchor = 1.8);

}  // namespace aseopt
