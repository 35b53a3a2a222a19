#pragma once

#include <span>
#include <string>
#include <vector>

#include "aseopt/metrics.hpp"
#include "aseopt/params.hpp"

namespace aseopt {

// tau* = q (1-p)^{(1-delta)/delta}, q = (A'p)^{-1/delta}; the stationary
// point of U in tau for the given p. Requires 0 < p < 1.
double optimal_tau(const NetworkParams& params);

enum class OptimStatus {
  converged,           // interior root of dU/dp found
  boundary_supremum,   // dU/dp kept one sign on [eps, 1-eps]; supremum endpoint reported
};

struct OptimResult {
  double tau_star;     // the tau the solve was run at
  double p_star;
  double u_star;
  int iterations;      // root-refinement iterations
  double residual;     // |bracket(p*) - psi_1/psi_0| recomputed independently
  double bracket_lo;   // sign-change bracket the root was refined from
  double bracket_hi;
  OptimStatus status;
  int sign_changes;    // descending sign changes of dU/dp found on the scan grid
};

// Solves [3/(A'p) - tau^delta (1-p delta)/(1-p)^{2-delta}] = psi_1(p)/psi_0(p)
// for the given tau by bracketed root finding on the sign of dU/dp (its
// positive prefactor dropped). With several descending sign changes the root
// with the largest U wins and sign_changes reports the multiplicity.
OptimResult optimal_p(const NetworkParams& params, const QuadratureConfig& cfg,
                      double tol = 1e-8);

// argmin of D(p) over (0,1); minimizes -ln p + A' p tau^delta (1-p)^{delta-1}
// via its derivative sign change. The minimizer decreases with lambda.
double delay_optimal_p(const NetworkParams& params, double tol = 1e-12);

// Alternating coordinate iteration: tau-step (closed form), p-step (root
// solve), capped at 50 rounds. A fixed point is reported without any claim
// of joint global optimality.
struct JointOptimum {
  double tau_star;
  double p_star;
  double u_star;
  int rounds;
  bool converged;
};
JointOptimum alternating_optimum(const NetworkParams& params,
                                 const QuadratureConfig& cfg, double tol = 1e-8);

struct FrontierRow {
  double lambda;
  double p_star;
  double ase_opt, delay_opt;
  double ase_p04, delay_p04;
  double ase_p06, delay_p06;
  OptimStatus status;
  bool ok;             // false when the row's solve failed
  std::string error;
};

// Per-lambda adaptive optimum (p* at the template's tau) with fixed p = 0.4
// and p = 0.6 baselines. Failed rows are marked, not fatal. Rows evaluate
// in parallel; results keep grid order.
std::vector<FrontierRow> adaptive_frontier(std::span<const double> lambda_grid,
                                           const NetworkParams& tmpl,
                                           const QuadratureConfig& cfg,
                                           double tol = 1e-8, int threads = 0);

}  // namespace aseopt
