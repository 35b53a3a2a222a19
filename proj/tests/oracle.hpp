// Test-only reference machinery, deliberately independent of the library's
// numerical paths: a tanh-sinh integrator for oracle values, golden-section
// search, finite differences, and a KS statistic.
#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

namespace oracle {

// tanh-sinh quadrature on [a,b]; handles endpoint singularities. Level
// doubling until successive estimates agree to ~1e-13 relative.
inline double tanh_sinh(const std::function<double(double)>& f, double a, double b,
                        int max_level = 9) {
  const double half = 0.5 * (b - a);
  const double pi_half = 1.5707963267948966;
  const double t_span = 6.0;  // u = pi/2 sinh(6) ~ 317, offsets below 1e-270

  auto eval_at = [&](double t) {
    const double u = pi_half * std::sinh(t);
    const double m = std::exp(-2.0 * std::fabs(u));
    const double sech2 = 4.0 * m / ((1.0 + m) * (1.0 + m));
    const double off = (b - a) * m / (1.0 + m);  // distance to the near endpoint
    if (off == 0.0) return 0.0;
    const double x = (u >= 0.0) ? b - off : a + off;
    const double w = pi_half * std::cosh(t) * sech2;
    const double fx = f(x);
    return std::isfinite(fx) ? half * w * fx : 0.0;
  };

  // level L uses step h = 2^-L; halving only adds the odd multiples
  double h = 1.0;
  double s = eval_at(0.0);
  for (int k = 1; k <= static_cast<int>(t_span); ++k)
    s += eval_at(k * h) + eval_at(-k * h);
  double prev = s * h;

  for (int level = 1; level <= max_level; ++level) {
    h *= 0.5;
    const int kmax = static_cast<int>(t_span / h);
    for (int k = 1; k <= kmax; k += 2) s += eval_at(k * h) + eval_at(-k * h);
    const double cur = s * h;
    if (level >= 4 && std::fabs(cur - prev) <= 1e-13 * std::fabs(cur)) return cur;
    prev = cur;
  }
  return prev;
}

inline double golden_max(const std::function<double(double)>& f, double lo,
                         double hi, int iters = 120) {
  const double phi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int i = 0; i < iters; ++i) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + phi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - phi * (b - a);
      f1 = f(x1);
    }
  }
  return 0.5 * (a + b);
}

inline double central_diff(const std::function<double(double)>& f, double x,
                           double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

inline double second_diff(const std::function<double(double)>& f, double x,
                          double h) {
  return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
}

// two-sided KS statistic of samples against a CDF
inline double ks_statistic(std::vector<double> samples,
                           const std::function<double(double)>& cdf) {
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double c = cdf(samples[i]);
    d = std::max(d, std::fabs(c - i / n));
    d = std::max(d, std::fabs((i + 1) / n - c));
  }
  return d;
}

// asymptotic KS critical value at significance 0.01
inline double ks_critical_001(std::size_t n) {
  return 1.6276 / std::sqrt(static_cast<double>(n));
}

}  // namespace oracle
