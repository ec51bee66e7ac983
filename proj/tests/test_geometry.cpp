#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "torus/geometry.hpp"

using namespace torus;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("torus geometry validation") {
  CHECK_NOTHROW(TorusGeometry(2.0, 0.5));
  CHECK_THROWS_AS(TorusGeometry(2.0, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(TorusGeometry(2.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(TorusGeometry(1.0, 3.0), std::invalid_argument);
}

TEST_CASE("toroidal to cylindrical") {
  const TorusGeometry g(2.0, 0.5);
  auto p = toroidal_to_cylindrical({0.0, 1.234, 1.0}, g);
  CHECK(p.R == 2.0);
  CHECK(p.phi == 1.0);
  CHECK(p.z == 0.0);

  p = toroidal_to_cylindrical({0.5, 0.0, 0.0}, g);
  CHECK(p.R == 2.5);
  CHECK(p.z == 0.0);

  p = toroidal_to_cylindrical({0.5, kPi / 2, 0.0}, g);
  CHECK(p.R == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(p.z == 0.5);
  CHECK(p.phi == 0.0);
}

TEST_CASE("inside_torus mask") {
  const TorusGeometry g(2.0, 0.5);
  CHECK(inside_torus(2.0, 0.0, g));
  CHECK_FALSE(inside_torus(3.0, 0.0, g));
  CHECK_FALSE(inside_torus(2.5, 0.0, g));  // surface counts as outside
}

TEST_CASE("mask agrees with minor radius after the coordinate map") {
  const TorusGeometry g(2.0, 0.5);
  std::mt19937_64 gen(2024);
  std::uniform_real_distribution<double> r_dist(0.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  int mismatches = 0;
  for (int i = 0; i < 10000; ++i) {
    const double r = r_dist(gen);
    // Keep clear of the surface where rounding in the map decides the side.
    if (std::abs(r - g.r0()) < 1e-12) continue;
    const auto p = toroidal_to_cylindrical({r, angle(gen), angle(gen)}, g);
    if (inside_torus(p, g) != (r < g.r0())) ++mismatches;
  }
  CHECK(mismatches == 0);
}

TEST_CASE("jacobian") {
  const TorusGeometry g(2.0, 0.5);
  CHECK(jacobian({0.0, 0.3, 0.0}, g) == 0.0);
  CHECK(jacobian({0.5, kPi / 2, 0.0}, g) == doctest::Approx(0.5 * 2.0).epsilon(1e-15));
}

TEST_CASE("gauss-legendre rule integrates polynomials exactly") {
  for (std::size_t n : {1u, 2u, 5u, 8u, 17u, 32u}) {
    const auto rule = gauss_legendre(n);
    for (std::size_t degree = 0; degree < 2 * n; ++degree) {
      double sum = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        sum += rule.weights[i] * std::pow(rule.abscissae[i], static_cast<double>(degree));
      }
      const double exact = degree % 2 == 0 ? 2.0 / static_cast<double>(degree + 1) : 0.0;
      CHECK(std::abs(sum - exact) < 1e-14);
    }
  }
  CHECK_THROWS(gauss_legendre(0));
}

TEST_CASE("grid weights sum to the torus volume") {
  const TorusGeometry g(2.0, 0.5);
  const double volume = 2.0 * kPi * kPi * 2.0 * 0.25;

  const QuadratureGrid coarse(g, {8, 16, 16});
  CHECK(std::abs(coarse.weight_sum() / volume - 1.0) < 1e-8);

  const QuadratureGrid fine(g, {32, 64, 64});
  CHECK(std::abs(fine.weight_sum() / volume - 1.0) < 1e-12);
  CHECK(fine.nodes().size() == 32u * 64u * 64u);

  CHECK_THROWS_AS(QuadratureGrid(g, {3, 16, 16}), std::invalid_argument);
  CHECK_THROWS_AS(QuadratureGrid(g, {8, 2, 16}), std::invalid_argument);
}

TEST_CASE("grid nodes avoid the axis and the surface") {
  const TorusGeometry g(2.0, 0.5);
  const QuadratureGrid grid(g, {8, 16, 16});
  for (const auto& n : grid.nodes()) {
    REQUIRE(n.point.r > 0.0);
    REQUIRE(n.point.r < g.r0());
    REQUIRE(inside_torus(n.position, g));
  }
}

// Brute-force midpoint rule in (r, theta, phi), independent of the
// Gauss-Legendre grid.
double dense_moment_R(const TorusGeometry& g, int n) {
  double sum = 0.0;
  const double dr = g.r0() / n;
  const double dt = 2.0 * kPi / n;
  for (int i = 0; i < n; ++i) {
    const double r = (i + 0.5) * dr;
    for (int j = 0; j < n; ++j) {
      const double th = (j + 0.5) * dt;
      const double R = g.R0() + r * std::cos(th);
      sum += R * r * R * dr * dt;
    }
  }
  return sum * 2.0 * kPi;
}

TEST_CASE("first R moment over the torus") {
  const TorusGeometry g(2.0, 0.5);
  const double R0 = 2.0, r0 = 0.5;
  const double analytic = 2.0 * kPi * kPi * R0 * R0 * r0 * r0 * (1.0 + r0 * r0 / (4.0 * R0 * R0));
  // The analytic moment checked against dense brute force first.
  CHECK(std::abs(dense_moment_R(g, 2000) / analytic - 1.0) < 1e-6);

  const QuadratureGrid grid(g, {32, 64, 64});
  const double q = integrate([](const QuadratureNode& n) { return n.position.R; }, grid);
  CHECK(std::abs(q / analytic - 1.0) < 1e-10);
}

TEST_CASE("integrate: constants, zero, periodic, linearity, non-finite") {
  const TorusGeometry g(2.0, 0.5);
  const QuadratureGrid grid(g, {32, 64, 64});
  const double volume = g.volume();

  CHECK(integrate([](const QuadratureNode&) { return 0.0; }, grid) == 0.0);
  CHECK(integrate([](const QuadratureNode&) { return 1.0; }, grid) ==
        doctest::Approx(volume).epsilon(1e-12));

  const double periodic = integrate(
      [](const QuadratureNode& n) { return std::sin(n.point.phi - 0.3); }, grid);
  CHECK(std::abs(periodic) < 1e-12 * volume);

  auto f = [](const QuadratureNode& n) { return n.position.R * n.position.R; };
  auto h = [](const QuadratureNode& n) { return std::cos(n.point.theta) + n.position.z; };
  const double a = 3.5, b = -1.25;
  const double combined =
      integrate([&](const QuadratureNode& n) { return a * f(n) + b * h(n); }, grid);
  const double separate = a * integrate(f, grid) + b * integrate(h, grid);
  CHECK(std::abs(combined - separate) <= 1e-12 * std::abs(separate));

  CHECK_THROWS_AS(integrate([](const QuadratureNode&) { return std::nan(""); }, grid),
                  NonFiniteError);
}

TEST_CASE("volume error decays quickly with resolution") {
  // An integrand that is not trivially exact for the periodic rule.
  const TorusGeometry g(2.0, 0.5);
  auto f = [](const QuadratureNode& n) { return std::exp(std::cos(n.point.theta) + std::sin(n.point.phi)); };
  // Exact: theta and phi factor; int exp(cos) dtheta weighted by jacobian is
  // not separable, so use self-convergence.
  const double coarse = integrate(f, QuadratureGrid(g, {4, 8, 8}));
  const double mid = integrate(f, QuadratureGrid(g, {8, 16, 16}));
  const double fine = integrate(f, QuadratureGrid(g, {16, 32, 32}));
  const double e1 = std::abs(coarse - fine);
  const double e2 = std::abs(mid - fine);
  CHECK(e2 < 0.25 * e1);
}
