#include "aseopt/metrics.hpp"

#include <cmath>
#include <limits>

#include "aseopt/analytic.hpp"
#include "aseopt/special.hpp"

namespace aseopt {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

double delay_exponent(const NetworkParams& params) {
  // A' p tau^delta / (1-p)^{1-delta}
  const DerivedConstants d = params.derived();
  return d.a_prime * params.p * std::pow(params.tau, d.delta) /
         std::pow(1.0 - params.p, 1.0 - d.delta);
}
}  // namespace

bool MetricReport::delay_finite() const { return std::isfinite(delay); }

double capacity(const NetworkParams& params, const QuadratureConfig& cfg) {
  if (params.p == 0.0) return 0.0;
  return params.p * psi_n_quadrature(0, params, cfg);
}

double ase(const NetworkParams& params, const QuadratureConfig& cfg) {
  if (params.p <= 0.0 || params.tau <= 0.0)
    throw std::domain_error("ase: requires p > 0 and tau > 0");
  const DerivedConstants d = params.derived();
  return params.lambda * d.c_delta * params.p * params.p *
         std::pow(params.tau, d.delta) / std::fabs(std::log(params.p_s)) *
         psi_n_quadrature(0, params, cfg);
}

double mean_local_delay(const NetworkParams& params) {
  if (params.p == 0.0 || params.p == 1.0) return kInf;
  return std::exp(delay_exponent(params)) / params.p;
}

double utility(const NetworkParams& params, const QuadratureConfig& cfg) {
  if (params.p == 0.0 || params.p == 1.0) return 0.0;
  if (params.tau == 0.0) return 0.0;  // affected area is unbounded
  const DerivedConstants d = params.derived();
  return params.lambda * d.c_delta * params.p * params.p * params.p *
         std::pow(params.tau, d.delta) / std::fabs(std::log(params.p_s)) *
         std::exp(-delay_exponent(params)) * psi_n_quadrature(0, params, cfg);
}

MetricReport evaluate(const NetworkParams& params, const QuadratureConfig& cfg) {
  MetricReport r;
  r.capacity = capacity(params, cfg);
  if (params.p > 0.0 && params.tau > 0.0) {
    r.max_range = max_range_d0(params);
    r.affected_area = affected_area(params);
    r.ase = ase(params, cfg);
  } else {
    r.max_range = kInf;
    r.affected_area = kInf;
    r.ase = 0.0;
  }
  r.delay = mean_local_delay(params);
  r.utility = std::isfinite(r.delay) ? utility(params, cfg) : 0.0;
  return r;
}

}  // namespace aseopt
