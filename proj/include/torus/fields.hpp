#pragma once

#include <complex>

#include "torus/constants.hpp"
#include "torus/geometry.hpp"

/// The toroidal field ansatz and its pointwise derived quantities.
///
/// Inside the tube the complex phasors are
///   E = i E0 e^{i psi} [ a_R + i (1 + R/R0) a_phi ],
///   B = i (E0/c) e^{i psi} a_z,             psi = phi - omega t,
/// and every field vanishes outside (tube surface included). Physical fields
/// are the componentwise real parts:
///   E_R = -E0 sin psi,  E_phi = -E0 (1 + R/R0) cos psi,  B_z = -(E0/c) sin psi.
/// All vectors are expressed in the local cylindrical basis (a_R, a_phi, a_z).

namespace torus {

struct CylVector {
  double R = 0.0;
  double phi = 0.0;
  double z = 0.0;

  friend CylVector operator+(CylVector a, const CylVector& b) {
    return {a.R + b.R, a.phi + b.phi, a.z + b.z};
  }
  friend CylVector operator-(CylVector a, const CylVector& b) {
    return {a.R - b.R, a.phi - b.phi, a.z - b.z};
  }
  friend CylVector operator*(double s, const CylVector& a) { return {s * a.R, s * a.phi, s * a.z}; }
  double norm() const { return std::sqrt(R * R + phi * phi + z * z); }
};

/// Cross product in an orthonormal right-handed basis (a_R, a_phi, a_z).
CylVector cross(const CylVector& a, const CylVector& b);
double dot(const CylVector& a, const CylVector& b);

struct ComplexCylVector {
  std::complex<double> R{};
  std::complex<double> phi{};
  std::complex<double> z{};

  CylVector real() const { return {R.real(), phi.real(), z.real()}; }
};

/// omega = 2c/R0, the only frequency for which curl E = -dB/dt holds.
double faraday_omega(double R0, double c);

/// The four free parameters plus B0 = E0/c.
struct AnsatzParams {
  double E0;
  double R0;
  double r0;
  double omega;
  double B0;
  PhysicalConstants k;

  /// omega fixed to 2c/R0.
  static AnsatzParams faraday_consistent(double E0, double R0, double r0,
                                         const PhysicalConstants& k);
  /// Arbitrary omega, for residual experiments.
  static AnsatzParams with_omega(double E0, double R0, double r0, double omega,
                                 const PhysicalConstants& k);

  TorusGeometry geometry() const { return TorusGeometry(R0, r0); }
  bool inside(const CylindricalPoint& p) const;
  double phase(const CylindricalPoint& p, double t) const { return p.phi - omega * t; }
  /// 2 pi / omega; infinite for a static field.
  double period() const;
};

ComplexCylVector e_phasor(const CylindricalPoint& p, double t, const AnsatzParams& a);
ComplexCylVector b_phasor(const CylindricalPoint& p, double t, const AnsatzParams& a);

struct RealFields {
  CylVector E;
  CylVector B;
};

RealFields real_fields(const CylindricalPoint& p, double t, const AnsatzParams& a);
CylVector real_e(const CylindricalPoint& p, double t, const AnsatzParams& a);
CylVector real_b(const CylindricalPoint& p, double t, const AnsatzParams& a);

/// rho = (eps0 E0/R0) sin psi inside, the real part of eps0 div E.
double charge_density(const CylindricalPoint& p, double t, const AnsatzParams& a);

/// J = curl B/mu0 - eps0 dE/dt in closed form:
///   J_R = -eps0 E0 cos psi (c/R + omega),  J_phi = eps0 E0 omega (1 + R/R0) sin psi.
CylVector current_density(const CylindricalPoint& p, double t, const AnsatzParams& a);

/// Instantaneous S = E x B / mu0.
CylVector poynting_instantaneous(const CylindricalPoint& p, double t, const AnsatzParams& a);

/// Period average of S: -(1/2) eps0 c E0^2 a_phi inside.
CylVector poynting_average(const CylindricalPoint& p, const AnsatzParams& a);

/// Period-averaged momentum density S_avg/c^2.
CylVector momentum_density_avg(const CylindricalPoint& p, const AnsatzParams& a);

/// Normative energy density eps0 E0^2 (1 + R/(4 R0)) inside, time independent.
double energy_density_model(const CylindricalPoint& p, const AnsatzParams& a);

/// Diagnostic: (1/2) eps0 |E|^2 + |B|^2/(2 mu0) on the real fields. Its period
/// average is (1/4) eps0 E0^2 [2 + (1 + R/R0)^2], which differs from
/// energy_density_model.
double energy_density_convention(const CylindricalPoint& p, double t, const AnsatzParams& a);

/// Everything at one (point, t).
struct RealFieldSample {
  CylindricalPoint point;
  double t = 0.0;
  CylVector E;
  CylVector B;
  double rho = 0.0;
  CylVector J;
  CylVector S;
  double u = 0.0;
};

RealFieldSample sample_fields(const CylindricalPoint& p, double t, const AnsatzParams& a);

}  // namespace torus
