#include <cmath>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "aseopt/commands.hpp"

using namespace aseopt;

namespace {

struct CliState {
  std::string config_path;
  std::vector<std::string> overrides;
  CommandOptions opt;
  double tau_db = std::numeric_limits<double>::quiet_NaN();
  long mc_n = 0;
  std::uint64_t mc_seed = 0;
  bool seed_set = false;
};

void add_common(CLI::App* cmd, CliState& st) {
  cmd->add_option("--config", st.config_path, "config file (key = value text)");
  cmd->add_option("--out", st.opt.out_path, "CSV output path");
  cmd->add_option("--tau-db", st.tau_db, "SIR threshold in dB (converted to linear)");
  cmd->add_option("--grid", st.opt.grid, "row count for figure/sweep grids");
  cmd->add_option("--tol", st.opt.tol, "optimizer residual tolerance");
  cmd->add_option("--threads", st.opt.threads, "worker threads (0 = auto)");
  cmd->add_option("--n", st.mc_n, "Monte Carlo realization count");
  cmd->add_option("--seed", st.mc_seed, "Monte Carlo master seed")
      ->each([&st](const std::string&) { st.seed_set = true; });
  cmd->add_option("params", st.overrides, "key=value parameter overrides");
}

void finalize(CliState& st) {
  if (!st.config_path.empty()) st.opt.config = load_run_config(st.config_path);
  for (const std::string& kv : st.overrides) apply_override(st.opt.config, kv);
  if (!std::isnan(st.tau_db))
    st.opt.config.tau = std::pow(10.0, st.tau_db / 10.0);
  if (st.mc_n > 0 || st.seed_set) {
    if (!st.opt.config.mc) st.opt.config.mc.emplace();
    if (st.mc_n > 0) st.opt.config.mc->n = st.mc_n;
    if (st.seed_set) st.opt.config.mc->seed = st.mc_seed;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"area spectral efficiency / mean local delay calculator for PPP ad-hoc networks"};
  app.require_subcommand(1);

  CliState st;
  int (*runner)(const CommandOptions&, std::ostream&) = nullptr;

  auto* eval = app.add_subcommand("eval", "evaluate all metrics at one parameter point");
  add_common(eval, st);
  eval->callback([&] { runner = &cmd_eval; });

  auto* sweep = app.add_subcommand("sweep", "sweep one variable and emit a CSV table");
  add_common(sweep, st);
  sweep->callback([&] { runner = &cmd_sweep; });

  auto* optimize = app.add_subcommand("optimize", "optimal tau (closed form) and p (root solve)");
  add_common(optimize, st);
  optimize->add_flag("--joint", st.opt.joint, "also run the alternating tau/p iteration");
  optimize->callback([&] { runner = &cmd_optimize; });

  auto* validate = app.add_subcommand("validate", "Monte Carlo vs closed forms with z-scores");
  add_common(validate, st);
  validate->add_option("--route", st.opt.mc_route, "sir estimator: indicator|conditional")
      ->check(CLI::IsMember({"indicator", "conditional"}));
  validate->add_option("--dump-realizations", st.opt.dump_path,
                       "write sampled fields to this path");
  validate->add_option("--dump-count", st.opt.dump_count, "fields to dump");
  validate->callback([&] { runner = &cmd_validate; });

  auto* fig1 = app.add_subcommand("fig1", "utility vs density for p = 0.1..0.9");
  add_common(fig1, st);
  fig1->callback([&] { runner = &cmd_fig1; });

  auto* fig2 = app.add_subcommand("fig2", "mean local delay vs p for several densities");
  add_common(fig2, st);
  fig2->callback([&] { runner = &cmd_fig2; });

  auto* fig3 = app.add_subcommand("fig3", "ASE vs delay frontier, adaptive p* and fixed-p baselines");
  add_common(fig3, st);
  fig3->callback([&] { runner = &cmd_fig3; });

  CLI11_PARSE(app, argc, argv);

  return run_guarded(
      [&] {
        finalize(st);
        return runner(st.opt, std::cout);
      },
      std::cerr);
}
