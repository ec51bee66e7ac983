#include <doctest.h>

#include <cmath>

#include "torus/constants.hpp"

using namespace torus;

TEST_CASE("codata values and identities") {
  const auto k = codata_constants();
  CHECK(k.c == 2.99792458e8);
  CHECK(std::abs(k.mu0 * k.eps0 * k.c * k.c - 1.0) < 1e-12);
  CHECK(std::abs(alpha_from_constants(k) / k.alpha - 1.0) < 1e-9);
}

TEST_CASE("derived scales") {
  const auto k = codata_constants();
  const auto ds = derived_scales(k);

  CHECK(ds.r_c == doctest::Approx(3.8616e-13).epsilon(1e-4));
  CHECK(ds.E_S == doctest::Approx(1.3233e18).epsilon(1e-4));
  CHECK(std::abs(ds.omega_D * ds.r_c / (2.0 * k.c) - 1.0) < 1e-12);
  CHECK(ds.mu_B == doctest::Approx(9.2740100783e-24).epsilon(1e-9));

  CHECK(ds.r_c > 0);
  CHECK(ds.E_S > 0);
  CHECK(ds.mu_B > 0);
  CHECK(ds.omega_D > 0);
  CHECK(ds.rest_energy > 0);

  // Published amplitude against the Schwinger field computed here.
  const double ratio = 3.783e17 / ds.E_S;
  CHECK(ratio >= 0.285);
  CHECK(ratio <= 0.287);
}

TEST_CASE("rest energy in MeV") {
  const auto ds = derived_scales(codata_constants());
  CHECK(ds.rest_energy / kJoulePerMeV == doctest::Approx(0.51099895).epsilon(1e-8));
}
