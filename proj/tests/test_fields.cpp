#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "torus/fields.hpp"
#include "torus/maxwell.hpp"

using namespace torus;

namespace {

constexpr double kPi = std::numbers::pi;

AnsatzParams electron_like() {
  return AnsatzParams::faraday_consistent(3.783e17, 6.073e-13, 5.854e-14, codata_constants());
}

// Point on the tube axis circle at azimuth phi.
CylindricalPoint axis(const AnsatzParams& a, double phi) { return {a.R0, phi, 0.0}; }

// Time t at which psi = phi - omega t equals the requested phase.
double time_for_phase(const AnsatzParams& a, double phi, double psi) {
  return (phi - psi) / a.omega;
}

CylindricalPoint random_inside(const AnsatzParams& a, std::mt19937_64& gen, double shrink = 1.0) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double r = shrink * a.r0 * std::sqrt(u(gen));
  const double th = 2.0 * kPi * u(gen);
  return {a.R0 + r * std::cos(th), 2.0 * kPi * u(gen), r * std::sin(th)};
}

CylindricalPoint random_outside(const AnsatzParams& a, std::mt19937_64& gen) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double r = a.r0 * (1.0 + 3.0 * u(gen));
  const double th = 2.0 * kPi * u(gen);
  return {a.R0 + r * std::cos(th), 2.0 * kPi * u(gen), r * std::sin(th)};
}

}  // namespace

TEST_CASE("parameters") {
  const auto a = electron_like();
  CHECK(std::abs(a.B0 * a.k.c / a.E0 - 1.0) < 1e-12);
  CHECK(a.omega == doctest::Approx(2.0 * a.k.c / a.R0).epsilon(1e-15));
  CHECK_THROWS_AS(AnsatzParams::faraday_consistent(1.0, 1.0, 2.0, codata_constants()),
                  std::invalid_argument);
}

TEST_CASE("electric phasor") {
  const auto a = electron_like();
  auto E = e_phasor(axis(a, 0.0), 0.0, a);
  CHECK(E.R.real() == doctest::Approx(0.0));
  CHECK(E.R.imag() == doctest::Approx(a.E0));
  CHECK(E.phi.real() == doctest::Approx(-2.0 * a.E0));
  CHECK(E.phi.imag() == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(E.z == std::complex<double>(0.0, 0.0));

  // phi = pi/2: E_R = i E0 e^{i pi/2} = -E0, E_phi = -2 E0 i.
  E = e_phasor(axis(a, kPi / 2), 0.0, a);
  CHECK(E.R.real() == doctest::Approx(-a.E0));
  CHECK(std::abs(E.R.imag()) < 1e-15 * a.E0);
  CHECK(std::abs(E.phi.real()) < 1e-15 * a.E0);
  CHECK(E.phi.imag() == doctest::Approx(-2.0 * a.E0));

  const CylindricalPoint outside{a.R0 + 2.0 * a.r0, 0.3, 0.0};
  E = e_phasor(outside, 0.0, a);
  CHECK(E.R == std::complex<double>(0.0, 0.0));
  CHECK(E.phi == std::complex<double>(0.0, 0.0));
}

TEST_CASE("magnetic phasor") {
  const auto a = electron_like();
  auto B = b_phasor(axis(a, 0.0), 0.0, a);
  CHECK(B.z.imag() == doctest::Approx(a.E0 / a.k.c));
  CHECK(B.R == std::complex<double>(0.0, 0.0));
  CHECK(B.phi == std::complex<double>(0.0, 0.0));

  // Co-rotating point: phase cancels.
  const double t = 3.7e-22;
  B = b_phasor(axis(a, a.omega * t), t, a);
  CHECK(B.z.imag() == doctest::Approx(a.E0 / a.k.c));
  CHECK(std::abs(B.z.real()) < 1e-12 * a.B0);

  B = b_phasor({a.R0, 0.0, 1.5 * a.r0}, 0.0, a);
  CHECK(B.z == std::complex<double>(0.0, 0.0));
}

TEST_CASE("real fields at fixed phases") {
  const auto a = electron_like();
  const double phi = 0.8;
  auto f = real_fields(axis(a, phi), time_for_phase(a, phi, 0.0), a);
  CHECK(std::abs(f.E.R) < 1e-12 * a.E0);
  CHECK(f.E.phi == doctest::Approx(-2.0 * a.E0));
  CHECK(std::abs(f.B.z) < 1e-12 * a.B0);

  f = real_fields(axis(a, phi), time_for_phase(a, phi, kPi / 2), a);
  CHECK(f.E.R == doctest::Approx(-a.E0));
  CHECK(std::abs(f.E.phi) < 1e-12 * a.E0);
  CHECK(f.B.z == doctest::Approx(-a.E0 / a.k.c));
}

TEST_CASE("period average of E_R squared") {
  const auto a = electron_like();
  const auto p = axis(a, 0.4);
  constexpr int n = 256;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const double t = a.period() * i / n;
    const double er = real_e(p, t, a).R;
    sum += er * er;
  }
  CHECK(sum / n == doctest::Approx(0.5 * a.E0 * a.E0).epsilon(1e-12));
}

TEST_CASE("charge density") {
  const auto a = electron_like();
  const double phi = 1.1;
  CHECK(std::abs(charge_density(axis(a, phi), time_for_phase(a, phi, 0.0), a)) <
        1e-12 * a.k.eps0 * a.E0 / a.R0);
  CHECK(charge_density(axis(a, phi), time_for_phase(a, phi, kPi / 2), a) ==
        doctest::Approx(a.k.eps0 * a.E0 / a.R0));

  const QuadratureGrid grid(a.geometry(), {32, 64, 64});
  const double rho0 = a.k.eps0 * a.E0 / a.R0;
  for (double t : {0.0, 1e-22, 2.5e-21}) {
    const double total =
        integrate([&](const QuadratureNode& n) { return charge_density(n.position, t, a); }, grid);
    CHECK(std::abs(total) < 1e-12 * rho0 * grid.geometry().volume());
  }
}

TEST_CASE("current density closed form") {
  const auto a = electron_like();
  const double phi = 0.2;
  const CylindricalPoint p{a.R0 + 0.3 * a.r0, phi, 0.1 * a.r0};
  CHECK(std::abs(current_density(p, time_for_phase(a, phi, kPi / 2), a).R) <
        1e-12 * a.k.eps0 * a.E0 * a.omega);

  // Against an independent finite-difference evaluation of the defining
  // expression curl B/mu0 - eps0 dE/dt.
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double h = 1e-5;
  const double J_scale = a.k.eps0 * a.E0 * (a.k.c / a.R0 + a.omega);
  double worst = 0.0;
  double worst_div = 0.0;
  for (int i = 0; i < 100; ++i) {
    const auto q = random_inside(a, gen, 0.8);
    const double t = a.period() * u(gen);
    const VectorField b = [&](const CylindricalPoint& x) { return real_b(x, t, a); };
    const auto curl_b = fd_curl_cylindrical(b, q, a.geometry(), h);
    const double dt = 1e-6 / a.omega;
    const auto dE = (1.0 / (2.0 * dt)) * (real_e(q, t + dt, a) - real_e(q, t - dt, a));
    const auto expected = (1.0 / a.k.mu0) * curl_b - a.k.eps0 * dE;
    worst = std::max(worst, (current_density(q, t, a) - expected).norm() / J_scale);

    const VectorField j = [&](const CylindricalPoint& x) { return current_density(x, t, a); };
    const double div = fd_div_cylindrical(j, q, a.geometry(), h);
    const double psi = q.phi - a.omega * t;
    const double scale = a.k.eps0 * a.omega * a.E0 / a.R0;
    worst_div = std::max(worst_div, std::abs(div - scale * std::cos(psi)) / scale);
  }
  CHECK(worst < 1e-6);
  CHECK(worst_div < 1e-6);
}

TEST_CASE("poynting vector") {
  const auto a = electron_like();
  const double phi = 2.0;
  const auto p = axis(a, phi);
  const auto S0 = poynting_instantaneous(p, time_for_phase(a, phi, 0.0), a);
  const double s_scale = a.k.eps0 * a.k.c * a.E0 * a.E0;
  CHECK(S0.norm() < 1e-12 * s_scale);

  const CylindricalPoint q{a.R0 - 0.4 * a.r0, 0.7, 0.2 * a.r0};
  constexpr int n = 64;
  CylVector avg;
  for (int i = 0; i < n; ++i) {
    avg = avg + (1.0 / n) * poynting_instantaneous(q, a.period() * i / n, a);
  }
  CHECK(std::abs(avg.phi / (-0.5 * s_scale) - 1.0) < 1e-10);
  CHECK(std::abs(avg.R) < 1e-10 * s_scale);
  CHECK(avg.z == 0.0);

  const auto closed = poynting_average(q, a);
  CHECK(closed.phi == doctest::Approx(-0.5 * s_scale).epsilon(1e-15));

  CHECK(poynting_instantaneous({a.R0, 0.0, 2.0 * a.r0}, 0.0, a).norm() == 0.0);
}

TEST_CASE("momentum density") {
  const auto a = electron_like();
  const CylindricalPoint q{a.R0 + 0.5 * a.r0, 0.0, 0.0};
  const auto p = momentum_density_avg(q, a);
  CHECK(p.phi == doctest::Approx(-0.5 * a.k.eps0 * a.E0 * a.E0 / a.k.c).epsilon(1e-14));
  CHECK(p.norm() * a.k.c * a.k.c == doctest::Approx(poynting_average(q, a).norm()).epsilon(1e-14));
  CHECK(momentum_density_avg({a.R0 + 2 * a.r0, 0.0, 0.0}, a).norm() == 0.0);
}

TEST_CASE("energy densities") {
  const auto a = electron_like();
  const double u0 = a.k.eps0 * a.E0 * a.E0;
  CHECK(energy_density_model(axis(a, 0.0), a) == doctest::Approx(1.25 * u0));
  const double inner = energy_density_model({a.R0 - 0.999 * a.r0, 0.0, 0.0}, a);
  const double outer = energy_density_model({a.R0 + 0.999 * a.r0, 0.0, 0.0}, a);
  CHECK(outer - inner == doctest::Approx(u0 * 0.999 * a.r0 / (2.0 * a.R0)).epsilon(1e-9));
  CHECK(energy_density_model({a.R0 + 1.001 * a.r0, 0.0, 0.0}, a) == 0.0);

  const double phi = 0.3;
  CHECK(energy_density_convention(axis(a, phi), time_for_phase(a, phi, 0.0), a) ==
        doctest::Approx(2.0 * u0).epsilon(1e-12));
  CHECK(energy_density_convention({a.R0, 0.0, 2 * a.r0}, 0.0, a) == 0.0);

  constexpr int n = 64;
  double avg = 0.0;
  for (int i = 0; i < n; ++i) {
    avg += energy_density_convention(axis(a, phi), a.period() * i / n, a) / n;
  }
  CHECK(avg == doctest::Approx(1.5 * u0).epsilon(1e-12));
}

TEST_CASE("every quantity vanishes outside the tube") {
  const auto a = electron_like();
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int nonzero = 0;
  for (int i = 0; i < 10000; ++i) {
    const auto p = random_outside(a, gen);
    const double t = a.period() * u(gen);
    const auto s = sample_fields(p, t, a);
    const auto E = e_phasor(p, t, a);
    const auto B = b_phasor(p, t, a);
    const bool zero = s.E.norm() == 0.0 && s.B.norm() == 0.0 && s.rho == 0.0 &&
                      s.J.norm() == 0.0 && s.S.norm() == 0.0 && s.u == 0.0 &&
                      std::abs(E.R) == 0.0 && std::abs(E.phi) == 0.0 && std::abs(B.z) == 0.0 &&
                      momentum_density_avg(p, a).norm() == 0.0 &&
                      energy_density_convention(p, t, a) == 0.0;
    if (!zero) ++nonzero;
  }
  CHECK(nonzero == 0);
}

TEST_CASE("real fields are the real part of the phasors") {
  const auto a = electron_like();
  std::mt19937_64 gen(9);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const auto p = random_inside(a, gen);
    const double t = 10.0 * a.period() * u(gen);
    const auto re = real_fields(p, t, a);
    const auto E = e_phasor(p, t, a).real();
    const auto B = b_phasor(p, t, a).real();
    worst = std::max(worst, (re.E - E).norm() / a.E0);
    worst = std::max(worst, (re.B - B).norm() / a.B0);
    REQUIRE(re.E.z == 0.0);
    REQUIRE(re.B.R == 0.0);
    REQUIRE(re.B.phi == 0.0);
  }
  CHECK(worst < 1e-14);
}
