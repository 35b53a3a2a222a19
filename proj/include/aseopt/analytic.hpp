#pragma once

#include <span>

#include "aseopt/params.hpp"

namespace aseopt {

// Success probability of one slot conditioned on the interferer set:
//   p * prod over x of [ p/(1 + tau d_sd^alpha ||x||^-alpha) + 1 - p ].
// `interferers` holds coordinates relative to the destination at the origin;
// the source is not part of the set. A point at the origin is a domain error.
double conditional_success_probability(std::span<const Point> interferers,
                                       const NetworkParams& params);

// Natural log of the same quantity; stays usable where the product underflows.
// Returns -inf for p = 0.
double log_conditional_success_probability(std::span<const Point> interferers,
                                           const NetworkParams& params);

// P(SIR > tau) = exp(-lambda pi d_sd^2 C(delta) p tau^delta).
double sir_ccdf(const NetworkParams& params);

// Largest d_sd keeping the link success probability at p_s:
//   d_0 = sqrt(|ln p_s| / (lambda pi C(delta) p tau^delta)).
// Requires p > 0 and tau > 0 (otherwise the range is unbounded).
double max_range_d0(const NetworkParams& params);

// pi d_0^2 = |ln p_s| / (lambda C(delta) p tau^delta). Independent of d_sd.
double affected_area(const NetworkParams& params);

}  // namespace aseopt
