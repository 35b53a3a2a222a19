#pragma once

#include "aseopt/params.hpp"
#include "aseopt/quadrature.hpp"

namespace aseopt {

// One evaluation point. Divergent delay is carried as +inf (with utility 0)
// rather than as an error so sweeps over the whole p range stay total.
struct MetricReport {
  double capacity;       // nats per unit bandwidth, p * psi_0(p)
  double max_range;      // d_0; +inf when p = 0 or tau = 0
  double affected_area;  // pi d_0^2; +inf when p = 0 or tau = 0
  double ase;            // capacity / affected_area
  double delay;          // mean local delay in slots, >= 1 or +inf
  double utility;        // ase / delay, 0 when delay is infinite

  bool delay_finite() const;
};

// C = p * int_0^inf exp(-A' p (e^t-1)^delta) dt; 0 at p = 0.
double capacity(const NetworkParams& params, const QuadratureConfig& cfg = {});

// A_e = lambda C(delta) p^2 tau^delta / |ln p_s| * psi_0(p). Requires p, tau > 0.
double ase(const NetworkParams& params, const QuadratureConfig& cfg = {});

// D(p) = (1/p) exp(A' p tau^delta / (1-p)^{1-delta}); +inf at p = 0 and p = 1.
double mean_local_delay(const NetworkParams& params);

// U = A_e / D(p) in closed form; 0 at p = 0 and p = 1.
double utility(const NetworkParams& params, const QuadratureConfig& cfg = {});

MetricReport evaluate(const NetworkParams& params, const QuadratureConfig& cfg = {});

}  // namespace aseopt
