#include "aseopt/params.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace aseopt {

namespace {
constexpr double kAlphaGuard = 2.0 + 1e-9;

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}
}  // namespace

double c_of_delta(double delta) {
  if (!(delta > 0.0 && delta < 1.0))
    throw std::domain_error("c_of_delta: delta must lie in (0,1)");
  return std::numbers::pi * delta / std::sin(std::numbers::pi * delta);
}

NetworkParams::NetworkParams(double lambda_, double alpha_, double d_sd_,
                             double p_, double tau_, double p_s_)
    : lambda(lambda_), alpha(alpha_), d_sd(d_sd_), p(p_), tau(tau_), p_s(p_s_) {
  require(std::isfinite(lambda) && lambda > 0.0, "lambda must be finite and > 0");
  require(std::isfinite(alpha) && alpha >= kAlphaGuard,
          "path loss exponent alpha must be > 2");
  require(std::isfinite(d_sd) && d_sd > 0.0, "d_sd must be finite and > 0");
  require(std::isfinite(p) && p >= 0.0 && p <= 1.0, "p must lie in [0,1]");
  require(std::isfinite(tau) && tau >= 0.0, "tau must be finite and >= 0");
  require(std::isfinite(p_s) && p_s > 0.0 && p_s < 1.0, "p_s must lie in (0,1)");
}

DerivedConstants NetworkParams::derived() const {
  DerivedConstants d;
  d.delta = 2.0 / alpha;
  d.c_delta = c_of_delta(d.delta);
  d.a_prime = lambda * std::numbers::pi * d_sd * d_sd * d.c_delta;
  return d;
}

NetworkParams NetworkParams::with_lambda(double v) const {
  return NetworkParams(v, alpha, d_sd, p, tau, p_s);
}
NetworkParams NetworkParams::with_p(double v) const {
  return NetworkParams(lambda, alpha, d_sd, v, tau, p_s);
}
NetworkParams NetworkParams::with_tau(double v) const {
  return NetworkParams(lambda, alpha, d_sd, p, v, p_s);
}
NetworkParams NetworkParams::with_d_sd(double v) const {
  return NetworkParams(lambda, alpha, v, p, tau, p_s);
}
NetworkParams NetworkParams::with_alpha(double v) const {
  return NetworkParams(lambda, v, d_sd, p, tau, p_s);
}

}  // namespace aseopt
