#include "aseopt/special.hpp"

#include <cmath>
#include <numbers>

#include "aseopt/rng.hpp"
#include "doctest.h"
#include "oracle.hpp"

using namespace aseopt;

namespace {
const double kAlphaIrr = std::numbers::pi + 1.0;  // delta = 2/(pi+1), resonance-free

NetworkParams base() { return {0.1, 4.0, 1.0, 0.5, 1.0, 0.01}; }

// reference psi_n by tanh-sinh on the substituted integrand
// psi_n = int_0^inf u^{n delta} e^{-A'p u^delta} / (1+u) du
double psi_ref(int n, const NetworkParams& params) {
  const DerivedConstants d = params.derived();
  const double ap = d.a_prime * params.p;
  const double big_u = std::pow(800.0 / ap, 1.0 / d.delta);
  auto f = [&](double u) {
    const double w = ap * std::pow(u, d.delta);
    if (w > 745.0) return 0.0;
    return std::pow(u, n * d.delta) * std::exp(-w) / (1.0 + u);
  };
  return oracle::tanh_sinh(f, 0.0, big_u, 10);
}

// resonance guard for randomized series tests: delta*k must stay away from
// integers for all orders the series touches
bool resonance_free(double delta, int orders = 130, double margin = 1e-4) {
  for (int k = 1; k <= orders; ++k) {
    const double x = delta * k;
    if (std::fabs(x - std::nearbyint(x)) < margin) return false;
  }
  return true;
}
}  // namespace

TEST_CASE("sinpi and continued C") {
  CHECK(sinpi(0.5) == 1.0);
  CHECK(sinpi(1.0) == 0.0);
  CHECK(sinpi(2.5) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(sinpi(-0.5) == -1.0);
  CHECK(sinpi(41.25) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
  for (double x : {0.1, 0.37, 0.5, 0.93})
    CHECK(c_function(x) == doctest::Approx(c_of_delta(x)).epsilon(1e-15));
  CHECK(c_function(0.0) == 1.0);
  CHECK(c_function(1.5) == doctest::Approx(-1.5 * std::numbers::pi).epsilon(1e-14));
}

TEST_CASE("psi_n quadrature frozen values") {
  // lambda=0.1, alpha=4, d=1, p=0.5, from arbitrary-precision evaluation
  CHECK(psi_n_quadrature(0, base()) ==
        doctest::Approx(2.2712415376083892412).epsilon(1e-9));
  CHECK(psi_n_quadrature(1, base()) ==
        doctest::Approx(5.9452209974552152983).epsilon(1e-9));
  CHECK(psi_n_quadrature(2, base()) ==
        doctest::Approx(30.579901677381479717).epsilon(1e-9));
}

TEST_CASE("psi_n quadrature vs independent tanh-sinh route") {
  SplitMix64 rng(3);
  for (int i = 0; i < 40; ++i) {
    const double lambda = std::exp(std::log(1e-3) + rng.next_unit() * std::log(0.5 / 1e-3));
    const double alpha = 2.4 + rng.next_unit() * 3.2;
    const double p = 0.05 + rng.next_unit() * 0.93;
    const NetworkParams params(lambda, alpha, 1.0, p, 1.0, 0.01);
    for (int n : {0, 1, 2}) {
      const double q = psi_n_quadrature(n, params);
      const double r = psi_ref(n, params);
      CHECK(q == doctest::Approx(r).epsilon(1e-8));
    }
  }
}

TEST_CASE("psi_0 collapses for strong interference") {
  // A'p = 1000
  const double lambda = 1000.0 / (std::numbers::pi * c_of_delta(0.5)) / 0.5;
  const NetworkParams params(lambda, 4.0, 1.0, 0.5, 1.0, 0.01);
  CHECK(psi_n_quadrature(0, params) < 1e-2);
}

TEST_CASE("psi_n domain and failure paths") {
  CHECK_THROWS_AS(psi_n_quadrature(0, base().with_p(0.0)), std::domain_error);
  CHECK_THROWS_AS(psi_n_quadrature(-1, base()), std::domain_error);

  QuadratureConfig starved;
  starved.rel_tol = 1e-14;
  starved.abs_tol = 1e-300;
  starved.max_subdivisions = 3;
  try {
    psi_n_quadrature(0, base(), starved);
    FAIL("expected QuadratureError");
  } catch (const QuadratureError& e) {
    CHECK(e.partial_estimate > 0.0);
  }
}

TEST_CASE("psi_n series frozen values at alpha = pi+1") {
  const NetworkParams params(0.1, kAlphaIrr, 1.0, 0.5, 1.0, 0.01);
  CHECK(psi_n_series(0, params).value ==
        doctest::Approx(2.39154570934737521).epsilon(1e-10));
  CHECK(psi_n_series(1, params).value ==
        doctest::Approx(6.44304940890836974).epsilon(1e-10));
  CHECK(psi_n_series(2, params).value ==
        doctest::Approx(34.061769632155367).epsilon(1e-10));
}

TEST_CASE("series agrees with quadrature on a resonance-free random grid") {
  SplitMix64 rng(19);
  QuadratureConfig tight;
  tight.rel_tol = 1e-11;
  int tested = 0;
  while (tested < 40) {
    const double lambda = std::exp(std::log(3e-3) + rng.next_unit() * std::log(0.3 / 3e-3));
    const double alpha = 2.4 + rng.next_unit() * 3.2;
    const double p = 0.1 + rng.next_unit() * 0.85;
    if (!resonance_free(2.0 / alpha)) continue;
    const NetworkParams params(lambda, alpha, 1.0, p, 1.0, 0.01);
    for (int n : {0, 1, 2}) {
      const SeriesResult s = psi_n_series(n, params);
      const double q = psi_n_quadrature(n, params, tight);
      CHECK(std::fabs(s.value - q) <=
            1e-6 * std::fabs(q));  // the two-route contract
      // reported bound plus the quadrature's own tolerance covers the gap
      CHECK(std::fabs(s.value - q) <=
            s.error_bound + 2e-11 * std::fabs(q) + 1e-12);
    }
    ++tested;
  }
}

TEST_CASE("series rejects sinc resonance (alpha = 4, delta = 1/2)") {
  CHECK_THROWS_AS(psi_n_series(0, base()), SingularTermError);
  CHECK_THROWS_AS(psi_n_series(1, base()), SingularTermError);
}

TEST_CASE("series reports empirical divergence for strong interference") {
  // A'p ~ 40: term ratio A'p/k grows well past ten consecutive terms
  const NetworkParams params(2.0, kAlphaIrr, 2.0, 0.9, 1.0, 0.01);
  CHECK_THROWS_AS(psi_n_series(0, params), SeriesDivergenceError);
}

TEST_CASE("derivative identity dpsi_n/dp = -A' psi_{n+1}") {
  SplitMix64 rng(23);
  for (int i = 0; i < 12; ++i) {
    const double lambda = std::exp(std::log(0.01) + rng.next_unit() * std::log(0.4 / 0.01));
    const double alpha = 2.6 + rng.next_unit() * 2.8;
    const double p = 0.15 + rng.next_unit() * 0.7;
    const NetworkParams params(lambda, alpha, 1.0, p, 1.0, 0.01);
    const double a_prime = params.derived().a_prime;
    const double h = 1e-5;
    QuadratureConfig tight;
    tight.rel_tol = 1e-12;
    for (int n : {0, 1}) {
      const double fd = (psi_n_quadrature(n, params.with_p(p + h), tight) -
                         psi_n_quadrature(n, params.with_p(p - h), tight)) /
                        (2.0 * h);
      const double rhs = -a_prime * psi_n_quadrature(n + 1, params, tight);
      CHECK(fd == doctest::Approx(rhs).epsilon(1e-4));
    }
  }
}
