#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "aseopt/params.hpp"

namespace aseopt {

struct SweepSpec {
  std::string variable;  // one of lambda, p, tau, d_sd
  double start = 0.0;
  double stop = 0.0;
  int count = 0;         // >= 2
  std::string spacing = "linear";  // or "log"
};

struct McSpec {
  long n = 100000;
  std::uint64_t seed = 1;
  double radius = 0.0;  // 0 = automatic policy
};

// Flat `key = value` text with optional [sweep] and [mc] sections. Unknown
// keys are hard errors: a typo in a parameter name must not silently fall
// back to a default.
struct RunConfig {
  double lambda = 0.1;
  double alpha = 4.0;
  double d_sd = 1.0;
  double p = 0.5;
  double tau = 1.0;
  double p_s = 0.01;
  std::optional<SweepSpec> sweep;
  std::optional<McSpec> mc;
  std::string output_path;

  NetworkParams make_params() const;
};

RunConfig parse_run_config(std::istream& is);
RunConfig load_run_config(const std::string& path);

// `key=value` override in the same namespace as the config file's top
// section (used for positional CLI overrides)
void apply_override(RunConfig& cfg, const std::string& assignment);

// grid of sweep values honoring spacing; validates bounds and count
std::vector<double> sweep_values(const SweepSpec& spec);

}  // namespace aseopt
