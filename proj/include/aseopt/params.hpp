#pragma once

namespace aseopt {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

// C(delta) = 1/sinc(delta) = pi*delta / sin(pi*delta), defined on (0,1).
// Throws std::domain_error outside that interval.
double c_of_delta(double delta);

struct DerivedConstants {
  double delta;    // 2/alpha, in (0,1)
  double c_delta;  // C(delta), > 1
  double a_prime;  // lambda * pi * d_sd^2 * C(delta)
};

// Network parameter set for the interference-limited link model.
// Invariants are enforced at construction; an invalid combination throws
// std::invalid_argument naming the violated constraint.
struct NetworkParams {
  double lambda;  // interferer density, > 0
  double alpha;   // path loss exponent, > 2 (guard band 2 + 1e-9)
  double d_sd;    // source-destination distance, > 0, model units
  double p;       // ALOHA transmit probability, in [0,1]
  double tau;     // SIR threshold, linear scale, >= 0
  double p_s;     // link success floor for the affected area, in (0,1)

  NetworkParams(double lambda, double alpha, double d_sd, double p,
                double tau, double p_s);

  DerivedConstants derived() const;

  // validated copies with one field replaced; handy for sweeps
  NetworkParams with_lambda(double v) const;
  NetworkParams with_p(double v) const;
  NetworkParams with_tau(double v) const;
  NetworkParams with_d_sd(double v) const;
  NetworkParams with_alpha(double v) const;
};

}  // namespace aseopt
