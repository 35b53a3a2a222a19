#include "aseopt/analytic.hpp"

#include <cmath>
#include <vector>

#include "aseopt/rng.hpp"
#include "doctest.h"

using namespace aseopt;

namespace {
NetworkParams base() { return {0.1, 4.0, 1.0, 0.5, 1.0, 0.01}; }

NetworkParams random_params(SplitMix64& rng, double p_lo = 0.02, double p_hi = 0.98) {
  const double lambda = std::exp(std::log(1e-3) + rng.next_unit() * std::log(0.5 / 1e-3));
  const double alpha = 2.3 + rng.next_unit() * 3.5;
  const double d_sd = 0.3 + rng.next_unit() * 2.0;
  const double p = p_lo + rng.next_unit() * (p_hi - p_lo);
  const double tau = std::exp(std::log(0.05) + rng.next_unit() * std::log(20.0 / 0.05));
  const double p_s = 0.005 + rng.next_unit() * 0.6;
  return {lambda, alpha, d_sd, p, tau, p_s};
}
}  // namespace

TEST_CASE("conditional success probability, empty field") {
  for (double p : {0.0, 0.3, 1.0}) {
    const NetworkParams params(0.1, 4.0, 1.0, p, 1.0, 0.01);
    CHECK(conditional_success_probability({}, params) == doctest::Approx(p).epsilon(1e-15));
  }
}

TEST_CASE("conditional success probability, single interferer at d_sd") {
  // tau = 1, p = 1, ||x|| = d_sd: the factor collapses to 1/(1+1)
  for (double alpha : {2.5, 3.0, 4.0, 5.5}) {
    const NetworkParams params(0.1, alpha, 1.7, 1.0, 1.0, 0.01);
    const std::vector<Point> pts = {{1.7, 0.0}};
    CHECK(conditional_success_probability(pts, params) ==
          doctest::Approx(0.5).epsilon(1e-14));
  }
}

TEST_CASE("conditional success probability bounds and origin guard") {
  SplitMix64 rng(42);
  for (int i = 0; i < 200; ++i) {
    const NetworkParams params = random_params(rng);
    std::vector<Point> pts;
    for (int k = 0; k < 20; ++k) pts.push_back(disk_point(rng, 10.0));
    const double v = conditional_success_probability(pts, params);
    CHECK(v >= 0.0);
    CHECK(v <= params.p);
  }
  const std::vector<Point> degenerate = {{0.0, 0.0}};
  CHECK_THROWS_AS(conditional_success_probability(degenerate, base()),
                  std::domain_error);
  CHECK_THROWS_AS(log_conditional_success_probability(degenerate, base()),
                  std::domain_error);
}

TEST_CASE("sir ccdf trivial and spot values") {
  CHECK(sir_ccdf(base().with_tau(0.0)) == 1.0);
  CHECK(sir_ccdf(base().with_p(0.0)) == 1.0);
  // lambda=0.1, alpha=4, d=1, p=1, tau=1 -> exp(-pi^2/20)
  CHECK(sir_ccdf(base().with_p(1.0)) ==
        doctest::Approx(0.61049802526579716495).epsilon(1e-14));
}

TEST_CASE("sir ccdf monotone non-increasing in lambda, p, tau, d_sd") {
  SplitMix64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    const NetworkParams params = random_params(rng);
    const double v = sir_ccdf(params);
    CHECK(sir_ccdf(params.with_lambda(params.lambda * 1.3)) <= v);
    CHECK(sir_ccdf(params.with_p(std::min(1.0, params.p * 1.3))) <= v);
    CHECK(sir_ccdf(params.with_tau(params.tau * 1.3)) <= v);
    CHECK(sir_ccdf(params.with_d_sd(params.d_sd * 1.3)) <= v);
  }
}

TEST_CASE("max range d0") {
  // lambda=0.1, alpha=4, p=0.5, tau=1, p_s=0.01
  CHECK(max_range_d0(base()) == doctest::Approx(4.320191172245590188).epsilon(1e-13));
  // p_s -> 1 shrinks the range to zero
  CHECK(max_range_d0(base().with_p(0.5).with_tau(1.0)) > 0.0);
  const NetworkParams tight(0.1, 4.0, 1.0, 0.5, 1.0, 1.0 - 1e-12);
  CHECK(max_range_d0(tight) < 1e-5);
  // d0 scales as lambda^-1/2
  CHECK(max_range_d0(base().with_lambda(0.2)) ==
        doctest::Approx(max_range_d0(base()) / std::sqrt(2.0)).epsilon(1e-12));

  CHECK_THROWS_AS(max_range_d0(base().with_p(0.0)), std::domain_error);
  CHECK_THROWS_AS(max_range_d0(base().with_tau(0.0)), std::domain_error);
}

TEST_CASE("round trip: substituting d0 into sir_ccdf reproduces p_s") {
  SplitMix64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    const NetworkParams params = random_params(rng, 0.02, 1.0);
    const double d0 = max_range_d0(params);
    CHECK(sir_ccdf(params.with_d_sd(d0)) ==
          doctest::Approx(params.p_s).epsilon(1e-12));
  }
}

TEST_CASE("affected area") {
  CHECK(affected_area(base()) == doctest::Approx(58.63484791035421575).epsilon(1e-13));
  // invariant with respect to d_sd
  CHECK(affected_area(base().with_d_sd(3.7)) ==
        doctest::Approx(affected_area(base())).epsilon(1e-15));
  const NetworkParams tight(0.1, 4.0, 1.0, 0.5, 1.0, 1.0 - 1e-12);
  CHECK(affected_area(tight) < 1e-9);
  CHECK_THROWS_AS(affected_area(base().with_p(0.0)), std::domain_error);
}
