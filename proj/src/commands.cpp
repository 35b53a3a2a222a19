#include "aseopt/commands.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <ostream>
#include <sstream>

#include "aseopt/analytic.hpp"
#include "aseopt/mc.hpp"
#include "aseopt/metrics.hpp"
#include "aseopt/special.hpp"
#include "parallel.hpp"

namespace aseopt {

namespace {

std::string fmt12(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

void emit_table(const SweepTable& table, const CommandOptions& opt, std::ostream& out) {
  const std::string path =
      !opt.out_path.empty() ? opt.out_path : opt.config.output_path;
  if (path.empty()) {
    table.write_csv(out);
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open output file '" + path + "'");
  table.write_csv(f);
}

std::vector<double> linear_grid(double a, double b, int count) {
  std::vector<double> g(count);
  for (int i = 0; i < count; ++i) g[i] = a + (b - a) * i / (count - 1.0);
  return g;
}

std::vector<double> log_grid(double a, double b, int count) {
  std::vector<double> g(count);
  const double la = std::log(a), lb = std::log(b);
  for (int i = 0; i < count; ++i) g[i] = std::exp(la + (lb - la) * i / (count - 1.0));
  return g;
}

// linear interpolation of y at x = x0 along the first bracketing segment
double interp_crossing(const std::vector<double>& x, const std::vector<double>& y,
                       double x0) {
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    if ((x[i] - x0) * (x[i + 1] - x0) <= 0.0 && x[i] != x[i + 1]) {
      const double w = (x0 - x[i]) / (x[i + 1] - x[i]);
      return y[i] + w * (y[i + 1] - y[i]);
    }
  }
  return std::numeric_limits<double>::quiet_NaN();
}

}  // namespace

int cmd_eval(const CommandOptions& opt, std::ostream& out) {
  if (opt.config.sweep)
    throw std::invalid_argument("eval takes no [sweep] section; use the sweep command");
  const NetworkParams params = opt.config.make_params();
  const MetricReport r = evaluate(params);
  out << "capacity = " << fmt12(r.capacity) << "\n"
      << "max_range_d0 = " << fmt12(r.max_range) << "\n"
      << "affected_area = " << fmt12(r.affected_area) << "\n"
      << "ase = " << fmt12(r.ase) << "\n"
      << "delay = " << fmt12(r.delay) << "\n"
      << "utility = " << fmt12(r.utility) << "\n";

  const std::string path =
      !opt.out_path.empty() ? opt.out_path : opt.config.output_path;
  if (!path.empty()) {
    SweepTable t;
    t.header = {"capacity", "max_range_d0", "affected_area", "ase", "delay", "utility"};
    t.rows = {{r.capacity, r.max_range, r.affected_area, r.ase, r.delay, r.utility}};
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output file '" + path + "'");
    t.write_csv(f);
  }
  return exit_ok;
}

int cmd_sweep(const CommandOptions& opt, std::ostream& out) {
  if (!opt.config.sweep)
    throw std::invalid_argument("sweep requires a [sweep] section in the config");
  const SweepSpec& spec = *opt.config.sweep;
  const std::vector<double> values = sweep_values(spec);

  SweepTable t;
  t.header = {spec.variable, "capacity", "affected_area", "ase", "delay", "utility"};
  const bool with_mc = opt.config.mc.has_value();
  if (with_mc) {
    t.header.push_back("mc_sir_ccdf");
    t.header.push_back("mc_sir_se");
  }
  t.rows.resize(values.size());

  detail::parallel_for(static_cast<long>(values.size()), opt.threads, [&](long i) {
    RunConfig row_cfg = opt.config;
    apply_override(row_cfg, spec.variable + "=" + fmt17(values[i]));
    const NetworkParams params = row_cfg.make_params();
    const MetricReport r = evaluate(params);
    std::vector<double> row = {values[i], r.capacity, r.affected_area,
                               r.ase,     r.delay,    r.utility};
    if (with_mc) {
      RadiusPolicy policy;
      if (opt.config.mc->radius > 0.0) policy.fixed_radius = opt.config.mc->radius;
      const McEstimate est = estimate_sir_ccdf(params, opt.config.mc->n, policy,
                                               opt.config.mc->seed,
                                               SirEstimator::indicator, 1);
      row.push_back(est.value);
      row.push_back(est.std_error);
    }
    t.rows[i] = std::move(row);
  });

  emit_table(t, opt, out);
  return exit_ok;
}

int cmd_optimize(const CommandOptions& opt, std::ostream& out) {
  const NetworkParams params = opt.config.make_params();
  const QuadratureConfig qcfg;

  const double tau_star = optimal_tau(params);
  out << "tau_star = " << fmt12(tau_star) << "  (at p = " << fmt12(params.p) << ")\n";

  const OptimResult pr = optimal_p(params, qcfg, opt.tol);
  out << "p_star = " << fmt12(pr.p_star) << "  (at tau = " << fmt12(params.tau)
      << ")\n"
      << "u_star = " << fmt12(pr.u_star) << "\n"
      << "residual = " << fmt12(pr.residual) << "\n"
      << "iterations = " << pr.iterations << "\n"
      << "sign_changes = " << pr.sign_changes << "\n"
      << "status = "
      << (pr.status == OptimStatus::converged ? "converged" : "boundary_supremum")
      << "\n";

  const double p_delay = delay_optimal_p(params);
  out << "delay_optimal_p = " << fmt12(p_delay) << "\n";

  std::vector<double> row = {tau_star, pr.p_star, pr.u_star, pr.residual, p_delay};
  std::vector<std::string> header = {"tau_star", "p_star", "u_star", "residual",
                                     "delay_optimal_p"};
  if (opt.joint) {
    const JointOptimum j = alternating_optimum(params, qcfg, opt.tol);
    out << "alternating_optimum: tau = " << fmt12(j.tau_star)
        << ", p = " << fmt12(j.p_star) << ", u = " << fmt12(j.u_star)
        << ", rounds = " << j.rounds << ", converged = " << (j.converged ? "yes" : "no")
        << "\n";
    header.insert(header.end(), {"joint_tau", "joint_p", "joint_u"});
    row.insert(row.end(), {j.tau_star, j.p_star, j.u_star});
  }

  const std::string path =
      !opt.out_path.empty() ? opt.out_path : opt.config.output_path;
  if (!path.empty()) {
    SweepTable t;
    t.header = std::move(header);
    t.rows = {std::move(row)};
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output file '" + path + "'");
    t.write_csv(f);
  }
  return exit_ok;
}

int cmd_validate(const CommandOptions& opt, std::ostream& out) {
  if (!opt.config.mc)
    throw std::invalid_argument("validate requires an [mc] section (or --n/--seed)");
  const NetworkParams params = opt.config.make_params();
  const McSpec& mc = *opt.config.mc;
  RadiusPolicy policy;
  if (mc.radius > 0.0) policy.fixed_radius = mc.radius;
  const SirEstimator route = opt.mc_route == "conditional"
                                 ? SirEstimator::conditional
                                 : SirEstimator::indicator;

  if (!opt.dump_path.empty()) {
    std::ofstream f(opt.dump_path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open dump file '" + opt.dump_path + "'");
    dump_realizations(f, params, policy, opt.dump_count, mc.seed);
  }

  SweepTable t;
  t.header = {"analytic", "mc", "std_error", "z"};
  std::vector<std::string> names;
  bool breach = false;
  bool lower_bound = false;

  auto add_row = [&](const std::string& name, double analytic, const McEstimate& est) {
    const double diff = est.value - analytic;
    const double z = (est.std_error > 0.0)
                         ? diff / est.std_error
                         : (diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity());
    if (!(std::fabs(z) <= 3.0)) breach = true;
    names.push_back(name);
    t.rows.push_back({analytic, est.value, est.std_error, z});
  };

  add_row("sir_ccdf", sir_ccdf(params),
          estimate_sir_ccdf(params, mc.n, policy, mc.seed, route, opt.threads));
  if (params.p > 0.0)
    add_row("capacity", capacity(params),
            estimate_capacity(params, mc.n, policy, mc.seed, opt.threads));
  if (params.p > 0.0 && params.p < 1.0) {
    const DelayEstimate d = estimate_mean_delay(params, mc.n, policy, mc.seed, opt.threads);
    add_row("mean_delay", mean_local_delay(params), d.estimate);
    if (d.lower_bound) {
      lower_bound = true;
      out << "mean_delay: " << d.underflow_count
          << " realizations underflowed; the MC value is a lower bound\n";
    }
  }

  for (std::size_t i = 0; i < names.size(); ++i) {
    const auto& r = t.rows[i];
    char line[200];
    std::snprintf(line, sizeof(line),
                  "%-10s analytic=%-14.8g mc=%-14.8g se=%-12.6g z=%+.3f\n",
                  names[i].c_str(), r[0], r[1], r[2], r[3]);
    out << line;
  }

  const std::string path =
      !opt.out_path.empty() ? opt.out_path : opt.config.output_path;
  if (!path.empty()) {
    SweepTable named = t;
    named.header.insert(named.header.begin(), "quantity_id");
    for (std::size_t i = 0; i < named.rows.size(); ++i)
      named.rows[i].insert(named.rows[i].begin(), static_cast<double>(i));
    named.row_status = names;
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output file '" + path + "'");
    named.write_csv(f);
  }

  if (lower_bound) return exit_numerical_failure;
  return breach ? exit_validation_breach : exit_ok;
}

int cmd_fig1(const CommandOptions& opt, std::ostream& out) {
  const int count = opt.grid > 0 ? opt.grid : 200;
  // 0.005 spacing keeps lambda = 0.35 exactly on the default grid
  const std::vector<double> lambdas = linear_grid(0.005, 1.0, count);
  const std::vector<double> ps = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};

  SweepTable t;
  t.header = {"lambda"};
  for (double p : ps) {
    char name[24];
    std::snprintf(name, sizeof(name), "U_p%.1f", p);
    t.header.push_back(name);
  }
  t.rows.resize(lambdas.size());

  const RunConfig& c = opt.config;
  detail::parallel_for(static_cast<long>(lambdas.size()), opt.threads, [&](long i) {
    std::vector<double> row = {lambdas[i]};
    for (double p : ps) {
      const NetworkParams params(lambdas[i], c.alpha, c.d_sd, p, c.tau, c.p_s);
      row.push_back(utility(params));
    }
    t.rows[i] = std::move(row);
  });

  emit_table(t, opt, out);
  return exit_ok;
}

int cmd_fig2(const CommandOptions& opt, std::ostream& out) {
  const int count = opt.grid > 0 ? opt.grid : 200;
  const std::vector<double> ps = linear_grid(0.005, 0.995, count);
  const std::vector<double> lambdas = {0.05, 0.1, 0.2, 0.35, 0.5};

  SweepTable t;
  t.header = {"p"};
  for (double lam : lambdas) {
    char name[24];
    std::snprintf(name, sizeof(name), "D_lam%.2f", lam);
    t.header.push_back(name);
  }
  const RunConfig& c = opt.config;
  for (double p : ps) {
    std::vector<double> row = {p};
    for (double lam : lambdas)
      row.push_back(mean_local_delay(NetworkParams(lam, c.alpha, c.d_sd, p, c.tau, c.p_s)));
    t.rows.push_back(std::move(row));
  }

  emit_table(t, opt, out);
  return exit_ok;
}

Fig3Gains fig3_gains(const std::vector<FrontierRow>& rows, double ase_anchor,
                     double delay_anchor) {
  std::vector<double> a_ad, d_ad, a_06, d_06;
  for (const FrontierRow& r : rows) {
    if (!r.ok) continue;
    a_ad.push_back(r.ase_opt);
    d_ad.push_back(r.delay_opt);
    a_06.push_back(r.ase_p06);
    d_06.push_back(r.delay_p06);
  }
  Fig3Gains g;
  const double d_adaptive = interp_crossing(a_ad, d_ad, ase_anchor);
  const double d_fixed = interp_crossing(a_06, d_06, ase_anchor);
  g.delay_gain_at_ase = (d_fixed - d_adaptive) / d_fixed;
  const double a_adaptive = interp_crossing(d_ad, a_ad, delay_anchor);
  const double a_fixed = interp_crossing(d_06, a_06, delay_anchor);
  g.ase_gain_at_delay = (a_adaptive - a_fixed) / a_fixed;
  return g;
}

int cmd_fig3(const CommandOptions& opt, std::ostream& out) {
  const int count = opt.grid > 0 ? opt.grid : 60;
  const std::vector<double> lambdas = log_grid(1e-5, 1e-1, count);
  const NetworkParams tmpl = opt.config.make_params();
  const QuadratureConfig qcfg;
  const std::vector<FrontierRow> rows =
      adaptive_frontier(lambdas, tmpl, qcfg, opt.tol, opt.threads);

  SweepTable t;
  t.header = {"lambda",   "p_star",     "ase_opt",  "delay_opt", "ase_p0.4",
              "delay_p0.4", "ase_p0.6", "delay_p0.6"};
  for (const FrontierRow& r : rows) {
    t.rows.push_back({r.lambda, r.p_star, r.ase_opt, r.delay_opt, r.ase_p04,
                      r.delay_p04, r.ase_p06, r.delay_p06});
    t.row_status.push_back(!r.ok ? "error:" + r.error
                           : r.status == OptimStatus::boundary_supremum
                               ? "boundary"
                               : "ok");
  }
  emit_table(t, opt, out);

  const Fig3Gains g = fig3_gains(rows);
  out << "delay_gain_at_ase_0.02 = " << fmt12(g.delay_gain_at_ase)
      << "  (adaptive vs p=0.6)\n"
      << "ase_gain_at_delay_1.8 = " << fmt12(g.ase_gain_at_delay)
      << "  (adaptive vs p=0.6)\n";
  return exit_ok;
}

int run_guarded(const std::function<int()>& body, std::ostream& err) {
  try {
    return body();
  } catch (const QuadratureError& e) {
    err << "numerical failure: " << e.what() << "\n";
    return exit_numerical_failure;
  } catch (const SeriesDivergenceError& e) {
    err << "numerical failure: " << e.what() << "\n";
    return exit_numerical_failure;
  } catch (const SingularTermError& e) {
    err << "numerical failure: " << e.what() << "\n";
    return exit_numerical_failure;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << "\n";
    return exit_invalid_input;
  } catch (const std::domain_error& e) {
    err << "invalid input: " << e.what() << "\n";
    return exit_invalid_input;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << "\n";
    return exit_numerical_failure;
  }
}

}  // namespace aseopt
