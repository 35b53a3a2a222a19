#include "aseopt/special.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace aseopt {

namespace {
constexpr double kPoleGuard = 1e-9;
constexpr double kEulerGamma = 0.57721566490153286061;

// upper incomplete gamma for integer n >= 0 at x > 0; n = 0 returns the
// E1(x) bound e^-x/x (enough for a tail estimate)
double gamma_upper_int(int n, double x) {
  if (n == 0) return std::exp(-x) / x;
  double term = std::exp(-x);
  double sum = term;  // k = 0
  double xk = 1.0;
  double fact = 1.0;
  for (int k = 1; k < n; ++k) {
    xk *= x;
    fact *= k;
    sum += term * xk / fact;
  }
  double nfact = 1.0;
  for (int k = 2; k < n; ++k) nfact *= k;
  return nfact * sum;
}
}  // namespace

double sinpi(double x) {
  const double k = std::nearbyint(x);
  const double r = x - k;
  const double s = std::sin(std::numbers::pi * r);
  return (static_cast<long long>(k) % 2 == 0) ? s : -s;
}

double c_function(double x) {
  if (x == 0.0) return 1.0;
  return std::numbers::pi * x / sinpi(x);
}

double psi_n_quadrature(int n, const NetworkParams& params,
                        const QuadratureConfig& cfg) {
  if (n < 0) throw std::domain_error("psi_n: n must be a non-negative integer");
  if (params.p <= 0.0)
    throw std::domain_error("psi_n: requires p > 0 (integral diverges at p = 0)");

  const DerivedConstants d = params.derived();
  const double delta = d.delta;
  const double ap = d.a_prime * params.p;
  const double thr = cfg.tail.exponent_threshold;

  // T with A'p (e^T-1)^delta >= thr, in log space to survive extreme ratios;
  // one refinement pass absorbs the (e^t-1)^{n delta} growth for n > 0
  auto cutoff = [&](double target) {
    const double lg = (std::log(target) - std::log(ap)) / delta;
    return (lg > 34.0) ? lg : std::log1p(std::exp(lg));
  };
  double big_t = cutoff(thr);
  if (n > 0) big_t = cutoff(thr + n * delta * big_t);

  const double ndelta = n * delta;
  auto integrand = [=](double t) {
    if (t <= 0.0) return (n == 0) ? 1.0 : 0.0;
    // ln(e^t - 1) = t + ln(1 - e^-t), stable for both tails
    const double ln_u = t + std::log1p(-std::exp(-t));
    const double w = ap * std::exp(delta * ln_u);
    if (w > 745.0) return 0.0;
    return std::exp(ndelta * ln_u - w);
  };

  QuadResult r = integrate_adaptive(integrand, 0.0, big_t, cfg);

  // tail <= Gamma_upper(n, w_T) / (delta (A'p beta)^n), beta = (1-e^-T)^delta
  const double w_t = ap * std::exp(delta * (big_t + std::log1p(-std::exp(-big_t))));
  const double beta = std::pow(-std::expm1(-big_t), delta);
  const double tail = gamma_upper_int(n, w_t) / (delta * std::pow(ap * beta, n));
  const double err = r.error + tail;
  if (err > std::max(cfg.rel_tol * std::fabs(r.value), cfg.abs_tol) &&
      err > 16.0 * std::numeric_limits<double>::epsilon() * std::fabs(r.value))
    throw QuadratureError("psi_n tail bound exceeds tolerance", r.value, err);
  return r.value;
}

SeriesResult psi_n_series(int n, const NetworkParams& params, int terms) {
  if (n < 0) throw std::domain_error("psi_n: n must be a non-negative integer");
  if (params.p <= 0.0) throw std::domain_error("psi_n: requires p > 0");
  if (terms < 2) throw std::invalid_argument("psi_n_series: terms must be >= 2");

  const DerivedConstants d = params.derived();
  const double delta = d.delta;
  const double ap = d.a_prime * params.p;
  const double log_ap = std::log(ap);

  double value = 0.0;
  double abs_accum = 0.0;
  int used = 0;

  int k_start = 0, j_start = 1;
  if (n == 0) {
    value = -(log_ap + kEulerGamma) / delta;
    abs_accum = std::fabs(value);
    k_start = 1;
    j_start = 2;
    used = 1;
  }

  // k-sum: (-1)^k (A'p)^k / k! * pi / sin(pi s_k), s_k = delta(n+k)+1
  auto k_term = [&](int k) {
    const double s_k = delta * (n + k) + 1.0;
    const double sp = sinpi(s_k);
    if (std::fabs(s_k - std::nearbyint(s_k)) < kPoleGuard)
      throw SingularTermError("psi_n_series: sinc argument within 1e-9 of an integer at k=" +
                              std::to_string(k));
    return std::exp(k * log_ap - std::lgamma(k + 1.0)) *
           ((k % 2 == 0) ? 1.0 : -1.0) * std::numbers::pi / sp;
  };

  int grow_streak = 0;
  double prev_mag = -1.0;
  for (int k = k_start; k < terms; ++k) {
    const double t = k_term(k);
    const double mag = std::fabs(t);
    if (prev_mag >= 0.0) {
      grow_streak = (mag > prev_mag) ? grow_streak + 1 : 0;
      if (grow_streak >= 10)
        throw SeriesDivergenceError(
            "psi_n_series: term magnitudes grew for 10 consecutive terms (A'p = " +
            std::to_string(ap) + ")");
    }
    prev_mag = mag;
    value += t;
    abs_accum += mag;
    ++used;
  }
  double bound;  // first omitted k-term; a pole there means the remainder is unbounded
  try {
    bound = std::fabs(k_term(terms));
  } catch (const SingularTermError&) {
    bound = std::numeric_limits<double>::infinity();
  }

  // j-sum, evaluated in logs so a huge power and a tiny Gamma never meet as
  // inf * 0; Gamma shrinks superfactorially so the loop self-truncates
  const double log_delta = std::log(delta);
  for (int j = j_start; j <= 400; ++j) {
    const double arg = n + (1.0 - j) / delta;
    if (arg < 0.5 && std::fabs(arg - std::nearbyint(arg)) < kPoleGuard)
      throw SingularTermError("psi_n_series: Gamma argument within 1e-9 of a pole at j=" +
                              std::to_string(j));
    const double ln_mag =
        std::lgamma(arg) + ((j - 1.0) / delta - n) * log_ap - log_delta;
    if (ln_mag > 300.0)
      throw SeriesDivergenceError("psi_n_series: Gamma-term family grew out of range");
    // Gamma(x) alternates sign on the negative axis: (-1)^ceil(-x) for x < 0
    const double gamma_sign =
        (arg > 0.0) ? 1.0
                    : ((static_cast<long long>(std::ceil(-arg)) % 2 == 0) ? 1.0 : -1.0);
    const double mag = std::exp(ln_mag);
    const double t = ((j % 2 == 1) ? 1.0 : -1.0) * gamma_sign * mag;
    value += t;
    abs_accum += mag;
    ++used;
    if (mag < 1e-300 ||
        mag < 1e-3 * std::numeric_limits<double>::epsilon() * abs_accum) {
      bound += mag;
      break;
    }
    if (j == 400)
      throw SeriesDivergenceError("psi_n_series: Gamma-term family failed to decay");
  }

  bound += std::numeric_limits<double>::epsilon() * abs_accum;
  return {value, bound, used};
}

}  // namespace aseopt
