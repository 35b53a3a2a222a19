#include "aseopt/quadrature.hpp"

#include <cmath>

#include "doctest.h"
#include "oracle.hpp"

using namespace aseopt;

TEST_CASE("adaptive quadrature on known integrals") {
  QuadratureConfig cfg;
  CHECK(integrate_adaptive([](double x) { return x * x; }, 0, 1, cfg).value ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-13));
  CHECK(integrate_adaptive([](double x) { return std::sin(x); }, 0, 3.14159265358979324, cfg)
            .value == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(integrate_adaptive([](double x) { return std::exp(-x); }, 0, 40, cfg).value ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(integrate_adaptive([](double) { return 1.0; }, 2.0, 2.0, cfg).value == 0.0);
}

TEST_CASE("error estimate covers the actual error") {
  QuadratureConfig cfg;
  cfg.rel_tol = 1e-10;
  auto f = [](double x) { return std::sqrt(x) * std::exp(-x); };  // endpoint corner
  const QuadResult r = integrate_adaptive(f, 0, 30, cfg);
  const double ref = oracle::tanh_sinh(f, 0, 30);
  CHECK(std::fabs(r.value - ref) <= std::max(r.error, 1e-12 * std::fabs(ref)) * 4.0);
  CHECK(r.value == doctest::Approx(ref).epsilon(1e-9));
}

TEST_CASE("subdivision exhaustion raises with the partial estimate") {
  QuadratureConfig cfg;
  cfg.rel_tol = 1e-14;
  cfg.abs_tol = 1e-300;
  cfg.max_subdivisions = 2;
  auto nasty = [](double x) { return std::sqrt(std::fabs(x - 0.3141)); };
  try {
    integrate_adaptive(nasty, 0, 1, cfg);
    FAIL("expected QuadratureError");
  } catch (const QuadratureError& e) {
    CHECK(e.partial_estimate > 0.0);
    CHECK(e.error_bound > 0.0);
  }
}
