#include "aseopt/mc.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "aseopt/analytic.hpp"
#include "parallel.hpp"

namespace aseopt {

namespace {

constexpr std::uint64_t kFieldChannel = 0;
constexpr std::uint64_t kMarkChannel = 1;
constexpr std::uint64_t kExtraChannel = 2;

// order-independent reduction: fixed binary tree over the slot vector, so the
// result is bit-identical however the slots were filled
double pairwise_sum(const double* v, long n) {
  if (n <= 8) {
    double s = 0.0;
    for (long i = 0; i < n; ++i) s += v[i];
    return s;
  }
  const long half = n / 2;
  return pairwise_sum(v, half) + pairwise_sum(v + half, n - half);
}

McEstimate summarize(const std::vector<double>& vals, std::uint64_t seed) {
  const long n = static_cast<long>(vals.size());
  McEstimate e;
  e.n_realizations = n;
  e.seed = seed;
  e.value = pairwise_sum(vals.data(), n) / n;
  std::vector<double> sq(vals.size());
  for (long i = 0; i < n; ++i) {
    const double d = vals[i] - e.value;
    sq[i] = d * d;
  }
  if (n > 1)
    e.std_error = std::sqrt(pairwise_sum(sq.data(), n) / (n - 1.0) / n);
  return e;
}

void check_n(long n) {
  if (n < 1000)
    throw std::invalid_argument("mc estimators need n >= 1000 realizations");
}

double pow_neg_alpha(double r2, double alpha) {
  // ||x||^-alpha from the squared radius; alpha = 4 is the common fast case
  if (alpha == 4.0) return 1.0 / (r2 * r2);
  return std::pow(r2, -0.5 * alpha);
}

// ln P(Gamma > tau | Phi) = sum ln[1 - p s/(1+s)], s = tau d^a r^-a
double log_conditional_given_phi(const PppRealization& field,
                                 const NetworkParams& params) {
  const double tda = params.tau * std::pow(params.d_sd, params.alpha);
  double sum = 0.0;
  for (const Point& pt : field.points) {
    const double r2 = pt.x * pt.x + pt.y * pt.y;
    const double s = tda * pow_neg_alpha(r2, params.alpha);
    sum += std::log1p(-params.p * s / (1.0 + s));
  }
  return sum;
}

}  // namespace

double RadiusPolicy::radius_for(const NetworkParams& params) const {
  double r;
  if (fixed_radius > 0.0) {
    r = fixed_radius;
  } else {
    r = std::max(d_sd_factor * params.d_sd,
                 intensity_factor / std::sqrt(params.lambda));
  }
  if (!(r >= 4.0 * params.d_sd))
    throw std::invalid_argument(
        "radius_policy: simulation window smaller than 4*d_sd");
  return r;
}

PppRealization sample_ppp(double lambda, double radius, std::uint64_t master_seed,
                          std::uint64_t realization_index) {
  if (lambda < 0.0 || radius <= 0.0)
    throw std::invalid_argument("sample_ppp: lambda >= 0 and radius > 0 required");
  SplitMix64 rng = derive_stream(master_seed, realization_index, kFieldChannel);
  PppRealization field;
  field.seed = master_seed;
  const double mean = lambda * std::numbers::pi * radius * radius;
  const long n = poisson_sample(rng, mean);
  field.points.reserve(n);
  field.fading.reserve(n);
  for (long i = 0; i < n; ++i) {
    Point pt = disk_point(rng, radius);
    while (pt.x == 0.0 && pt.y == 0.0) pt = disk_point(rng, radius);
    field.points.push_back(pt);
    field.fading.push_back(rng.next_exp());
  }
  return field;
}

void apply_aloha_marks(PppRealization& field, double p, std::uint64_t master_seed,
                       std::uint64_t realization_index) {
  SplitMix64 rng = derive_stream(master_seed, realization_index, kMarkChannel);
  field.aloha_marks.resize(field.points.size());
  for (std::size_t i = 0; i < field.points.size(); ++i)
    field.aloha_marks[i] = rng.next_bernoulli(p) ? 1 : 0;
}

double aggregate_interference(const PppRealization& field, double alpha) {
  if (field.aloha_marks.size() != field.points.size())
    throw std::invalid_argument("aggregate_interference: marks not drawn");
  double sum = 0.0;
  for (std::size_t i = 0; i < field.points.size(); ++i) {
    if (!field.aloha_marks[i]) continue;
    const Point& pt = field.points[i];
    const double r2 = pt.x * pt.x + pt.y * pt.y;
    if (r2 == 0.0)
      throw std::domain_error("aggregate_interference: point at the origin");
    sum += field.fading[i] * pow_neg_alpha(r2, alpha);
  }
  return sum;
}

McEstimate estimate_sir_ccdf(const NetworkParams& params, long n,
                             const RadiusPolicy& radius, std::uint64_t seed,
                             SirEstimator route, int threads) {
  check_n(n);
  const double r = radius.radius_for(params);
  std::vector<double> vals(n);
  const double d_gain = std::pow(params.d_sd, -params.alpha);

  detail::parallel_for(n, threads, [&](long i) {
    PppRealization field = sample_ppp(params.lambda, r, seed, i);
    if (route == SirEstimator::conditional) {
      vals[i] = std::exp(log_conditional_given_phi(field, params));
    } else {
      apply_aloha_marks(field, params.p, seed, i);
      SplitMix64 extras = derive_stream(seed, i, kExtraChannel);
      const double h_s = extras.next_exp();
      const double interference = aggregate_interference(field, params.alpha);
      vals[i] = (h_s * d_gain > params.tau * interference) ? 1.0 : 0.0;
    }
  });
  return summarize(vals, seed);
}

DelayEstimate estimate_mean_delay(const NetworkParams& params, long n,
                                  const RadiusPolicy& radius, std::uint64_t seed,
                                  int threads) {
  check_n(n);
  if (!(params.p > 0.0 && params.p < 1.0))
    throw std::domain_error("estimate_mean_delay: requires 0 < p < 1");
  const double r = radius.radius_for(params);
  constexpr double kLogFloor = -690.77552789821368;  // ln(1e-300)

  std::vector<double> vals(n);
  std::vector<std::uint8_t> flagged(n, 0);
  detail::parallel_for(n, threads, [&](long i) {
    PppRealization field = sample_ppp(params.lambda, r, seed, i);
    const double log_p_succ = std::log(params.p) + log_conditional_given_phi(field, params);
    if (log_p_succ < kLogFloor) {
      flagged[i] = 1;
      vals[i] = 1e300;  // contributes a floor; the run becomes a lower bound
    } else {
      vals[i] = std::exp(-log_p_succ);
    }
  });

  DelayEstimate out;
  out.estimate = summarize(vals, seed);
  double max_val = 0.0;
  for (long i = 0; i < n; ++i) {
    max_val = std::max(max_val, vals[i]);
    out.underflow_count += flagged[i];
  }
  out.max_share = max_val / (out.estimate.value * n);
  out.lower_bound = out.underflow_count > 0;
  return out;
}

McEstimate estimate_mean_delay_slots(const NetworkParams& params, long n,
                                     const RadiusPolicy& radius, std::uint64_t seed,
                                     long max_slots_per_realization, int threads) {
  check_n(n);
  if (!(params.p > 0.0 && params.p < 1.0))
    throw std::domain_error("estimate_mean_delay_slots: requires 0 < p < 1");
  const double r = radius.radius_for(params);
  const double d_gain = std::pow(params.d_sd, -params.alpha);

  std::vector<double> vals(n);
  detail::parallel_for(n, threads, [&](long i) {
    PppRealization field = sample_ppp(params.lambda, r, seed, i);
    SplitMix64 slot_rng = derive_stream(seed, i, kExtraChannel);
    const std::size_t m = field.points.size();
    std::vector<double> inv_ralpha(m);
    for (std::size_t k = 0; k < m; ++k) {
      const Point& pt = field.points[k];
      inv_ralpha[k] = pow_neg_alpha(pt.x * pt.x + pt.y * pt.y, params.alpha);
    }
    long slots = 0;
    for (;;) {
      ++slots;
      if (slots > max_slots_per_realization)
        throw std::runtime_error("estimate_mean_delay_slots: realization exceeded slot budget");
      if (!slot_rng.next_bernoulli(params.p)) continue;  // source stayed silent
      double interference = 0.0;
      for (std::size_t k = 0; k < m; ++k)
        if (slot_rng.next_bernoulli(params.p))
          interference += slot_rng.next_exp() * inv_ralpha[k];
        else
          slot_rng.next_exp();  // keep the per-slot draw layout fixed
      const double h_s = slot_rng.next_exp();
      if (h_s * d_gain > params.tau * interference) break;
    }
    vals[i] = static_cast<double>(slots);
  });
  return summarize(vals, seed);
}

McEstimate estimate_capacity(const NetworkParams& params, long n,
                             const RadiusPolicy& radius, std::uint64_t seed,
                             int threads) {
  check_n(n);
  if (params.p == 0.0) {
    McEstimate e;
    e.n_realizations = n;
    e.seed = seed;
    return e;  // no transmissions, capacity 0 with zero spread
  }
  const double r = radius.radius_for(params);
  const double d_gain = std::pow(params.d_sd, -params.alpha);

  std::vector<double> vals(n);
  detail::parallel_for(n, threads, [&](long i) {
    PppRealization field = sample_ppp(params.lambda, r, seed, i);
    apply_aloha_marks(field, params.p, seed, i);
    SplitMix64 extras = derive_stream(seed, i, kExtraChannel);
    const double h_s = extras.next_exp();
    const double interference = aggregate_interference(field, params.alpha);
    vals[i] = params.p * std::log1p(h_s * d_gain / interference);
  });
  return summarize(vals, seed);
}

void dump_realizations(std::ostream& os, const NetworkParams& params,
                       const RadiusPolicy& radius, long count, std::uint64_t seed) {
  const double r = radius.radius_for(params);
  os << "realization_id,x,y,fading,mark\n";
  char buf[160];
  for (long i = 0; i < count; ++i) {
    PppRealization field = sample_ppp(params.lambda, r, seed, i);
    apply_aloha_marks(field, params.p, seed, i);
    for (std::size_t k = 0; k < field.points.size(); ++k) {
      std::snprintf(buf, sizeof(buf), "%ld,%.17g,%.17g,%.17g,%d\n", i,
                    field.points[k].x, field.points[k].y, field.fading[k],
                    field.aloha_marks[k] ? 1 : 0);
      os << buf;
    }
  }
}

}  // namespace aseopt
