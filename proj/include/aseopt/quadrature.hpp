#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace aseopt {

// Truncation rule for the semi-infinite psi_n integrals: integrate on [0,T]
// where T makes the integrand's exponent A'p(e^T-1)^delta reach
// exponent_threshold, then bound the remaining tail analytically.
struct TailCutoffPolicy {
  double exponent_threshold = 50.0;
};

struct QuadratureConfig {
  double rel_tol = 1e-9;
  double abs_tol = 1e-12;
  int max_subdivisions = 10000;
  TailCutoffPolicy tail;
};

// Raised when adaptive refinement exhausts max_subdivisions before meeting
// the tolerance; carries the partial estimate and its error bound.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& msg, double partial, double bound)
      : std::runtime_error(msg), partial_estimate(partial), error_bound(bound) {}
  double partial_estimate;
  double error_bound;
};

struct QuadResult {
  double value;
  double error;  // estimated absolute error
  int subdivisions;
};

// Adaptive Gauss-Kronrod 15(7) on [a,b], refining the worst interval until
// the summed error estimate meets max(rel_tol*|value|, abs_tol).
QuadResult integrate_adaptive(const std::function<double(double)>& f, double a,
                              double b, const QuadratureConfig& cfg);

}  // namespace aseopt
