#pragma once

#include <stdexcept>
#include <string>

#include "aseopt/params.hpp"
#include "aseopt/quadrature.hpp"

namespace aseopt {

// sin(pi x) with exact argument reduction, and the analytic continuation of
// C(x) = pi x / sin(pi x) to all non-integer x (c_of_delta restricts to (0,1)).
double sinpi(double x);
double c_function(double x);

// psi_n(p) = int_0^inf (e^t-1)^{n delta} exp(-A' p (e^t-1)^delta) dt,
// evaluated by adaptive quadrature on [0,T] per cfg.tail plus an analytic
// tail bound folded into the error estimate. Requires p > 0.
double psi_n_quadrature(int n, const NetworkParams& params,
                        const QuadratureConfig& cfg = {});

class SeriesDivergenceError : public std::runtime_error {
 public:
  explicit SeriesDivergenceError(const std::string& msg)
      : std::runtime_error(msg) {}
};

class SingularTermError : public std::runtime_error {
 public:
  explicit SingularTermError(const std::string& msg)
      : std::runtime_error(msg) {}
};

struct SeriesResult {
  double value;
  double error_bound;  // first omitted terms plus a rounding floor; reported, not certified
  int terms_used;
};

// Series route for psi_n: the large-q expansion of
//   psi_n = q^{n delta + 1}/delta * G(n + 1/delta, 1/delta, q),
//   q = (A' p)^{-1/delta},
// where G(mu,nu,q) = int_0^inf t^{mu-1} e^-t / (1 + q t^nu) dt. Collecting the
// residues of the Mellin-Barnes representation of G gives, in powers of A'p,
//   psi_n = sum_k (-1)^k (A'p)^k / k! * pi / sin(pi(delta(n+k)+1))
//         + sum_j (-1)^{j+1}/delta * Gamma(n+(1-j)/delta) * (A'p)^{(j-1)/delta - n}
// with k >= 0, j >= 1 for n >= 1; for n = 0 the k=0 and j=1 poles merge into
// the leading term -(ln(A'p) + euler_gamma)/delta and both sums start one
// index later. `terms` bounds the k-sum; the j-sum self-truncates.
// Throws SingularTermError when a sin or Gamma argument sits within 1e-9 of a
// pole, SeriesDivergenceError when term magnitudes grow for 10 consecutive k.
SeriesResult psi_n_series(int n, const NetworkParams& params, int terms = 60);

}  // namespace aseopt
