#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "aseopt/params.hpp"
#include "aseopt/rng.hpp"

namespace aseopt {

// One sampled interferer field in a disk around the destination (origin).
// The source never appears in `points`; its fading is drawn by the
// estimators from the extras channel.
struct PppRealization {
  std::vector<Point> points;
  std::vector<double> fading;        // unit-mean exponential, per point
  std::vector<std::uint8_t> aloha_marks;  // one slot of ALOHA decisions
  std::uint64_t seed = 0;            // derived stream identity
};

// Simulation window. The analytic model integrates over the whole plane;
// the sampled disk must be large enough that the ignored outside-disk
// interference stays below the Monte Carlo noise (checked by the 2R
// doubling test).
struct RadiusPolicy {
  double d_sd_factor = 20.0;      // R >= d_sd_factor * d_sd
  double intensity_factor = 10.0; // R >= intensity_factor / sqrt(lambda)
  double fixed_radius = 0.0;      // > 0 overrides the automatic rule

  // Effective radius for the given params; throws std::invalid_argument
  // when a fixed radius is too small (< 4 d_sd) to contain the link.
  double radius_for(const NetworkParams& params) const;
};

struct McEstimate {
  double value = 0.0;
  double std_error = 0.0;
  long n_realizations = 0;
  std::uint64_t seed = 0;
};

struct DelayEstimate {
  McEstimate estimate;
  double max_share = 0.0;     // largest single realization's share of the sum
  long underflow_count = 0;   // realizations with P(C_Phi) < 1e-300
  bool lower_bound = false;   // true when underflows forced a lower bound
};

enum class SirEstimator {
  indicator,    // draw source fading and compare against tau * I'
  conditional,  // Rao-Blackwellized: average Eq.(2)'s product / p
};

// N ~ Poisson(lambda pi R^2) points uniform on the disk plus unit-mean
// exponential fading, deterministic given (seed, realization index).
// The origin is rejected and resampled (floating-point degeneracy guard).
PppRealization sample_ppp(double lambda, double radius, std::uint64_t master_seed,
                          std::uint64_t realization_index = 0);

// Fills aloha_marks for one slot from the marks channel.
void apply_aloha_marks(PppRealization& field, double p, std::uint64_t master_seed,
                       std::uint64_t realization_index = 0);

// sum of fading * ||x||^-alpha over marked points (interference / P_t)
double aggregate_interference(const PppRealization& field, double alpha);

McEstimate estimate_sir_ccdf(const NetworkParams& params, long n,
                             const RadiusPolicy& radius, std::uint64_t seed,
                             SirEstimator route = SirEstimator::indicator,
                             int threads = 0);

// Rao-Blackwellized route: averages 1/P(C_Phi) with the conditional success
// probability evaluated exactly per field.
DelayEstimate estimate_mean_delay(const NetworkParams& params, long n,
                                  const RadiusPolicy& radius, std::uint64_t seed,
                                  int threads = 0);

// Slot-by-slot cross-check: plays ALOHA/fading slots until success and
// averages the slot counts.
McEstimate estimate_mean_delay_slots(const NetworkParams& params, long n,
                                     const RadiusPolicy& radius, std::uint64_t seed,
                                     long max_slots_per_realization = 10000000,
                                     int threads = 0);

McEstimate estimate_capacity(const NetworkParams& params, long n,
                             const RadiusPolicy& radius, std::uint64_t seed,
                             int threads = 0);

// debug dump, one line per point: realization_id,x,y,fading,mark
void dump_realizations(std::ostream& os, const NetworkParams& params,
                       const RadiusPolicy& radius, long count, std::uint64_t seed);

}  // namespace aseopt
