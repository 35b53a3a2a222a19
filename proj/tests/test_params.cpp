#include "aseopt/params.hpp"

#include <numbers>
#include <stdexcept>

#include "doctest.h"

using namespace aseopt;

TEST_CASE("c_of_delta known values") {
  // sin(pi/2) = 1
  CHECK(c_of_delta(0.5) == doctest::Approx(std::numbers::pi / 2).epsilon(1e-15));
  // alpha = 3: independent arbitrary-precision evaluation of pi(2/3)/sin(2pi/3)
  CHECK(c_of_delta(2.0 / 3.0) ==
        doctest::Approx(2.4183991523122904675).epsilon(1e-15));
  // sinc(0) limit
  CHECK(c_of_delta(1e-8) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(c_of_delta(0.999999) > 1e5);
}

TEST_CASE("c_of_delta exceeds 1 on the open interval") {
  for (int i = 1; i < 100; ++i) CHECK(c_of_delta(i / 100.0) > 1.0);
}

TEST_CASE("c_of_delta domain") {
  CHECK_THROWS_AS(c_of_delta(0.0), std::domain_error);
  CHECK_THROWS_AS(c_of_delta(1.0), std::domain_error);
  CHECK_THROWS_AS(c_of_delta(-0.2), std::domain_error);
  CHECK_THROWS_AS(c_of_delta(1.7), std::domain_error);
}

TEST_CASE("NetworkParams validation") {
  CHECK_NOTHROW(NetworkParams(0.1, 4.0, 1.0, 0.5, 1.0, 0.01));
  CHECK_NOTHROW(NetworkParams(0.1, 4.0, 1.0, 0.0, 0.0, 0.01));  // p=0, tau=0 legal
  CHECK_NOTHROW(NetworkParams(0.1, 4.0, 1.0, 1.0, 1.0, 0.01));  // p=1 legal here
  CHECK_NOTHROW(NetworkParams(0.1, 2.0 + 2e-9, 1.0, 0.5, 1.0, 0.01));

  CHECK_THROWS_AS(NetworkParams(0.0, 4, 1, 0.5, 1, 0.01), std::invalid_argument);
  CHECK_THROWS_AS(NetworkParams(-1, 4, 1, 0.5, 1, 0.01), std::invalid_argument);
  CHECK_THROWS_AS(NetworkParams(0.1, 2.0, 1, 0.5, 1, 0.01), std::invalid_argument);
  CHECK_THROWS_AS(NetworkParams(0.1, 1.5, 1, 0.5, 1, 0.01), std::invalid_argument);
  CHECK_THROWS_AS(NetworkParams(0.1, 4, 0.0, 0.5, 1, 0.01), std::invalid_argument);
  CHECK_THROWS_AS(NetworkParams(0.1, 4, 1, -0.1, 1, 0.01), std::invalid_argument);
  CHECK_THROWS_AS(NetworkParams(0.1, 4, 1, 1.1, 1, 0.01), std::invalid_argument);
  CHECK_THROWS_AS(NetworkParams(0.1, 4, 1, 0.5, -1, 0.01), std::invalid_argument);
  CHECK_THROWS_AS(NetworkParams(0.1, 4, 1, 0.5, 1, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(NetworkParams(0.1, 4, 1, 0.5, 1, 1.0), std::invalid_argument);
}

TEST_CASE("alpha rejection names the path loss domain") {
  try {
    NetworkParams(0.1, 2.0, 1, 0.5, 1, 0.01);
    FAIL("expected throw");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("path loss") != std::string::npos);
  }
}

TEST_CASE("derived constants") {
  const NetworkParams base(0.1, 4.0, 1.0, 0.5, 1.0, 0.01);
  const DerivedConstants d = base.derived();
  CHECK(d.delta == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(d.c_delta == doctest::Approx(std::numbers::pi / 2).epsilon(1e-15));
  // A' = pi^2/20 here
  CHECK(d.a_prime == doctest::Approx(0.49348022005446793094).epsilon(1e-14));
  CHECK(d.c_delta > 1.0);

  // a_prime strictly increasing in lambda and d_sd
  CHECK(base.with_lambda(0.2).derived().a_prime > d.a_prime);
  CHECK(base.with_d_sd(1.5).derived().a_prime > d.a_prime);
}
