#include "aseopt/analytic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace aseopt {

namespace {
// ln[ p/(1+s) + 1-p ] for one interferer, s = tau d^alpha r^-alpha
double log_factor(const Point& pt, double tau_d_alpha, double alpha, double p) {
  const double r2 = pt.x * pt.x + pt.y * pt.y;
  if (r2 == 0.0)
    throw std::domain_error("interferer at the origin (degenerate sample)");
  const double s = tau_d_alpha * std::pow(r2, -0.5 * alpha);
  // p/(1+s) + 1-p = 1 - p*s/(1+s)
  return std::log1p(-p * s / (1.0 + s));
}
}  // namespace

double log_conditional_success_probability(std::span<const Point> interferers,
                                           const NetworkParams& params) {
  const double tau_d_alpha = params.tau * std::pow(params.d_sd, params.alpha);
  double sum = 0.0;
  for (const Point& pt : interferers)
    sum += log_factor(pt, tau_d_alpha, params.alpha, params.p);
  return std::log(params.p) + sum;
}

double conditional_success_probability(std::span<const Point> interferers,
                                       const NetworkParams& params) {
  if (params.p == 0.0) {
    // still reject degenerate samples
    for (const Point& pt : interferers)
      if (pt.x == 0.0 && pt.y == 0.0)
        throw std::domain_error("interferer at the origin (degenerate sample)");
    return 0.0;
  }
  return std::exp(log_conditional_success_probability(interferers, params));
}

double sir_ccdf(const NetworkParams& params) {
  const DerivedConstants d = params.derived();
  return std::exp(-d.a_prime * params.p * std::pow(params.tau, d.delta));
}

double max_range_d0(const NetworkParams& params) {
  if (params.p <= 0.0 || params.tau <= 0.0)
    throw std::domain_error("max_range_d0: p and tau must be positive (range is unbounded)");
  const double delta = 2.0 / params.alpha;
  const double denom = params.lambda * std::numbers::pi * c_of_delta(delta) *
                       params.p * std::pow(params.tau, delta);
  return std::sqrt(std::fabs(std::log(params.p_s)) / denom);
}

double affected_area(const NetworkParams& params) {
  const double d0 = max_range_d0(params);
  return std::numbers::pi * d0 * d0;
}

}  // namespace aseopt
