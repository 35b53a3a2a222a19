#include "aseopt/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "aseopt/special.hpp"
#include "parallel.hpp"

namespace aseopt {

namespace {

constexpr double kEdgeEps = 1e-6;  // p search window [eps, 1-eps]

// classic Brent root refinement; requires fa*fb <= 0
template <class F>
double brent_root(F&& f, double a, double b, double fa, double fb, double xtol,
                  int& iterations) {
  const double eps = std::numeric_limits<double>::epsilon();
  double c = a, fc = fa;
  double d = b - a, e = d;
  int it = 0;
  for (; it < 200; ++it) {
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      d = b - a;
      e = d;
    }
    if (std::fabs(fc) < std::fabs(fb)) {
      a = b; b = c; c = a;
      fa = fb; fb = fc; fc = fa;
    }
    const double tol1 = 2.0 * eps * std::fabs(b) + 0.5 * xtol;
    const double xm = 0.5 * (c - b);
    if (std::fabs(xm) <= tol1 || fb == 0.0) break;
    if (std::fabs(e) >= tol1 && std::fabs(fa) > std::fabs(fb)) {
      double pp, qq;
      const double s = fb / fa;
      if (a == c) {
        pp = 2.0 * xm * s;
        qq = 1.0 - s;
      } else {
        const double q = fa / fc;
        const double r = fb / fc;
        pp = s * (2.0 * xm * q * (q - r) - (b - a) * (r - 1.0));
        qq = (q - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (pp > 0.0) qq = -qq;
      pp = std::fabs(pp);
      if (2.0 * pp < std::min(3.0 * xm * qq - std::fabs(tol1 * qq), std::fabs(e * qq))) {
        e = d;
        d = pp / qq;
      } else {
        d = xm;
        e = d;
      }
    } else {
      d = xm;
      e = d;
    }
    a = b;
    fa = fb;
    b += (std::fabs(d) > tol1) ? d : (xm > 0.0 ? tol1 : -tol1);
    fb = f(b);
  }
  iterations = it;
  return b;
}

// Eq.(17) balance at p: [3/(A'p) - tau^d (1-p d)/(1-p)^{2-d}] - psi_1/psi_0.
// dU/dp has the sign of this (its prefactor is positive on (0,1)).
double balance(const NetworkParams& tmpl, double p, const QuadratureConfig& cfg) {
  const NetworkParams at = tmpl.with_p(p);
  const DerivedConstants d = at.derived();
  const double lhs = 3.0 / (d.a_prime * p) -
                     std::pow(at.tau, d.delta) * (1.0 - p * d.delta) /
                         std::pow(1.0 - p, 2.0 - d.delta);
  return lhs - psi_n_quadrature(1, at, cfg) / psi_n_quadrature(0, at, cfg);
}

// scan grid over (0,1): uniform on the left, geometric refinement toward 1
// so roots like 1 - 1e-4 at small densities are still bracketed
std::vector<double> scan_grid() {
  std::vector<double> g;
  for (int i = 0; i <= 44; ++i)
    g.push_back(kEdgeEps + (0.90 - kEdgeEps) * i / 44.0);
  const double lo = std::log(kEdgeEps), hi = std::log(0.1);
  for (int i = 0; i <= 40; ++i)
    g.push_back(1.0 - std::exp(hi + (lo - hi) * i / 40.0));
  std::sort(g.begin(), g.end());
  return g;
}

}  // namespace

double optimal_tau(const NetworkParams& params) {
  if (params.p <= 0.0 || params.p >= 1.0)
    throw std::domain_error("optimal_tau: requires 0 < p < 1");
  const DerivedConstants d = params.derived();
  const double ln_q = -std::log(d.a_prime * params.p) / d.delta;
  return std::exp(ln_q + (1.0 - d.delta) / d.delta * std::log1p(-params.p));
}

OptimResult optimal_p(const NetworkParams& params, const QuadratureConfig& cfg,
                      double tol) {
  if (params.tau <= 0.0)
    throw std::domain_error("optimal_p: requires a positive fixed tau");
  if (tol <= 0.0) throw std::invalid_argument("optimal_p: tol must be > 0");

  OptimResult res;
  res.tau_star = params.tau;
  res.sign_changes = 0;
  res.iterations = 0;

  // The balance terms scale like 1/(A'p), so meeting an absolute residual
  // tolerance at low density needs the psi ratio far tighter than the
  // sweep-level config: refine with near-machine tolerances and recheck on an
  // independent integration domain (different tail cutoff).
  QuadratureConfig solve_cfg = cfg;
  solve_cfg.rel_tol = std::min(cfg.rel_tol, 1e-13);
  solve_cfg.abs_tol = std::min(cfg.abs_tol, 1e-15);
  QuadratureConfig check_cfg = solve_cfg;
  check_cfg.rel_tol = 1e-12;
  check_cfg.tail.exponent_threshold = cfg.tail.exponent_threshold + 10.0;

  const std::vector<double> grid = scan_grid();
  std::vector<double> gval(grid.size());
  for (size_t i = 0; i < grid.size(); ++i) gval[i] = balance(params, grid[i], cfg);

  // root-find in z = ln(1-p); conditioning stays uniform as roots crowd
  // toward p = 1 at low density
  auto fz = [&](double z) { return balance(params, 1.0 - std::exp(z), solve_cfg); };

  double best_u = -1.0;
  for (size_t i = 0; i + 1 < grid.size(); ++i) {
    if (!(gval[i] > 0.0 && gval[i + 1] <= 0.0)) continue;  // descending = local max
    ++res.sign_changes;
    const double za = std::log1p(-grid[i]);
    const double zb = std::log1p(-grid[i + 1]);
    const double fa = fz(za), fb = fz(zb);
    if (!(fa > 0.0 && fb <= 0.0)) continue;  // sign flip was scan-level noise
    int iters = 0;
    const double z = brent_root(fz, za, zb, fa, fb, 1e-15, iters);
    const double p_root = 1.0 - std::exp(z);
    const double u = utility(params.with_p(p_root), cfg);
    if (u > best_u) {
      best_u = u;
      res.p_star = p_root;
      res.u_star = u;
      res.iterations = iters;
      res.bracket_lo = grid[i];
      res.bracket_hi = grid[i + 1];
    }
  }

  if (res.sign_changes == 0) {
    // no interior maximum in the window; report the better endpoint
    const double u_lo = utility(params.with_p(kEdgeEps), cfg);
    const double u_hi = utility(params.with_p(1.0 - kEdgeEps), cfg);
    res.status = OptimStatus::boundary_supremum;
    res.p_star = (u_hi >= u_lo) ? 1.0 - kEdgeEps : kEdgeEps;
    res.u_star = std::max(u_lo, u_hi);
    res.bracket_lo = kEdgeEps;
    res.bracket_hi = 1.0 - kEdgeEps;
    res.residual = std::fabs(balance(params, res.p_star, check_cfg));
    return res;
  }

  res.status = OptimStatus::converged;
  res.residual = std::fabs(balance(params, res.p_star, check_cfg));
  if (res.residual > tol)
    throw QuadratureError("optimal_p: residual above tolerance at the refined root",
                          res.p_star, res.residual);
  return res;
}

double delay_optimal_p(const NetworkParams& params, double tol) {
  if (params.tau <= 0.0)
    throw std::domain_error("delay_optimal_p: requires tau > 0");
  const DerivedConstants d = params.derived();
  const double b = d.a_prime * std::pow(params.tau, d.delta);
  // d/dp ln D = -1/p + b (1-p delta)/(1-p)^{2-delta}, strictly increasing
  auto fd = [&](double p) {
    return -1.0 / p + b * (1.0 - p * d.delta) * std::pow(1.0 - p, d.delta - 2.0);
  };
  const double lo = kEdgeEps, hi = 1.0 - kEdgeEps;
  const double flo = fd(lo), fhi = fd(hi);
  if (flo >= 0.0) return lo;  // window clamps; true minimizer below eps
  if (fhi <= 0.0) return hi;
  auto fz = [&](double z) { return fd(1.0 - std::exp(z)); };
  int iters = 0;
  const double z = brent_root(fz, std::log1p(-lo), std::log1p(-hi), flo, fhi,
                              tol, iters);
  return 1.0 - std::exp(z);
}

JointOptimum alternating_optimum(const NetworkParams& params,
                                 const QuadratureConfig& cfg, double tol) {
  NetworkParams cur = params;
  if (cur.p <= 0.0 || cur.p >= 1.0) cur = cur.with_p(0.5);
  JointOptimum out{cur.tau, cur.p, 0.0, 0, false};
  for (int round = 1; round <= 50; ++round) {
    const double tau_next = optimal_tau(cur);
    cur = cur.with_tau(tau_next);
    const OptimResult pr = optimal_p(cur, cfg, 1e-6);
    const double p_next = pr.p_star;
    const double dp = std::fabs(p_next - out.p_star);
    const double dt = std::fabs(tau_next - out.tau_star) / std::max(tau_next, 1e-300);
    cur = cur.with_p(p_next);
    out = {tau_next, p_next, pr.u_star, round, dp <= tol && dt <= tol};
    if (out.converged) break;
  }
  return out;
}

std::vector<FrontierRow> adaptive_frontier(std::span<const double> lambda_grid,
                                           const NetworkParams& tmpl,
                                           const QuadratureConfig& cfg,
                                           double tol, int threads) {
  for (size_t i = 0; i + 1 < lambda_grid.size(); ++i)
    if (!(lambda_grid[i] < lambda_grid[i + 1]))
      throw std::invalid_argument("adaptive_frontier: lambda grid must be strictly increasing");

  std::vector<FrontierRow> rows(lambda_grid.size());
  detail::parallel_for(static_cast<long>(lambda_grid.size()), threads, [&](long i) {
    FrontierRow& row = rows[i];
    row.lambda = lambda_grid[i];
    try {
      const NetworkParams at = tmpl.with_lambda(row.lambda);
      const OptimResult opt = optimal_p(at, cfg, tol);
      row.p_star = opt.p_star;
      row.status = opt.status;
      const NetworkParams at_opt = at.with_p(opt.p_star);
      row.ase_opt = ase(at_opt, cfg);
      row.delay_opt = mean_local_delay(at_opt);
      const NetworkParams at04 = at.with_p(0.4);
      row.ase_p04 = ase(at04, cfg);
      row.delay_p04 = mean_local_delay(at04);
      const NetworkParams at06 = at.with_p(0.6);
      row.ase_p06 = ase(at06, cfg);
      row.delay_p06 = mean_local_delay(at06);
      row.ok = true;
    } catch (const std::exception& e) {
      row.ok = false;
      row.error = e.what();
    }
  });
  return rows;
}

}  // namespace aseopt
