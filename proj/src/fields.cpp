#include "torus/fields.hpp"

#include <limits>
#include <numbers>

namespace torus {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

std::complex<double> carrier(const CylindricalPoint& p, double t, const AnsatzParams& a) {
  return std::polar(1.0, a.phase(p, t));
}

}  // namespace

CylVector cross(const CylVector& a, const CylVector& b) {
  return {a.phi * b.z - a.z * b.phi, a.z * b.R - a.R * b.z, a.R * b.phi - a.phi * b.R};
}

double dot(const CylVector& a, const CylVector& b) { return a.R * b.R + a.phi * b.phi + a.z * b.z; }

double faraday_omega(double R0, double c) {
  if (!(R0 > 0.0)) {
    throw std::invalid_argument("faraday_omega requires R0 > 0");
  }
  return 2.0 * c / R0;
}

AnsatzParams AnsatzParams::faraday_consistent(double E0, double R0, double r0,
                                              const PhysicalConstants& k) {
  return with_omega(E0, R0, r0, faraday_omega(R0, k.c), k);
}

AnsatzParams AnsatzParams::with_omega(double E0, double R0, double r0, double omega,
                                      const PhysicalConstants& k) {
  TorusGeometry check(R0, r0);
  (void)check;
  return AnsatzParams{E0, R0, r0, omega, E0 / k.c, k};
}

bool AnsatzParams::inside(const CylindricalPoint& p) const {
  const double dR = p.R - R0;
  return dR * dR + p.z * p.z < r0 * r0;
}

double AnsatzParams::period() const {
  if (omega == 0.0) {
    return std::numeric_limits<double>::infinity();
  }
  return 2.0 * std::numbers::pi / std::abs(omega);
}

ComplexCylVector e_phasor(const CylindricalPoint& p, double t, const AnsatzParams& a) {
  if (!a.inside(p)) {
    return {};
  }
  const auto amp = kI * a.E0 * carrier(p, t, a);
  return {amp, amp * kI * (1.0 + p.R / a.R0), 0.0};
}

ComplexCylVector b_phasor(const CylindricalPoint& p, double t, const AnsatzParams& a) {
  if (!a.inside(p)) {
    return {};
  }
  return {0.0, 0.0, kI * a.B0 * carrier(p, t, a)};
}

CylVector real_e(const CylindricalPoint& p, double t, const AnsatzParams& a) {
  if (!a.inside(p)) {
    return {};
  }
  const double psi = a.phase(p, t);
  return {-a.E0 * std::sin(psi), -a.E0 * (1.0 + p.R / a.R0) * std::cos(psi), 0.0};
}

CylVector real_b(const CylindricalPoint& p, double t, const AnsatzParams& a) {
  if (!a.inside(p)) {
    return {};
  }
  return {0.0, 0.0, -a.B0 * std::sin(a.phase(p, t))};
}

RealFields real_fields(const CylindricalPoint& p, double t, const AnsatzParams& a) {
  return {real_e(p, t, a), real_b(p, t, a)};
}

double charge_density(const CylindricalPoint& p, double t, const AnsatzParams& a) {
  if (!a.inside(p)) {
    return 0.0;
  }
  return a.k.eps0 * a.E0 / a.R0 * std::sin(a.phase(p, t));
}

CylVector current_density(const CylindricalPoint& p, double t, const AnsatzParams& a) {
  if (!a.inside(p)) {
    return {};
  }
  const double psi = a.phase(p, t);
  const double scale = a.k.eps0 * a.E0;
  return {-scale * std::cos(psi) * (a.k.c / p.R + a.omega),
          scale * a.omega * (1.0 + p.R / a.R0) * std::sin(psi), 0.0};
}

CylVector poynting_instantaneous(const CylindricalPoint& p, double t, const AnsatzParams& a) {
  const auto [E, B] = real_fields(p, t, a);
  return (1.0 / a.k.mu0) * cross(E, B);
}

CylVector poynting_average(const CylindricalPoint& p, const AnsatzParams& a) {
  if (!a.inside(p)) {
    return {};
  }
  return {0.0, -0.5 * a.k.eps0 * a.k.c * a.E0 * a.E0, 0.0};
}

CylVector momentum_density_avg(const CylindricalPoint& p, const AnsatzParams& a) {
  return (1.0 / (a.k.c * a.k.c)) * poynting_average(p, a);
}

double energy_density_model(const CylindricalPoint& p, const AnsatzParams& a) {
  if (!a.inside(p)) {
    return 0.0;
  }
  return a.k.eps0 * a.E0 * a.E0 * (1.0 + p.R / (4.0 * a.R0));
}

double energy_density_convention(const CylindricalPoint& p, double t, const AnsatzParams& a) {
  const auto [E, B] = real_fields(p, t, a);
  return 0.5 * a.k.eps0 * dot(E, E) + dot(B, B) / (2.0 * a.k.mu0);
}

RealFieldSample sample_fields(const CylindricalPoint& p, double t, const AnsatzParams& a) {
  RealFieldSample s;
  s.point = p;
  s.t = t;
  s.E = real_e(p, t, a);
  s.B = real_b(p, t, a);
  s.rho = charge_density(p, t, a);
  s.J = current_density(p, t, a);
  s.S = (1.0 / a.k.mu0) * cross(s.E, s.B);
  s.u = energy_density_model(p, a);
  return s;
}

}  // namespace torus
