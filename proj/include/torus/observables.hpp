#pragma once

#include "torus/fields.hpp"
#include "torus/geometry.hpp"

namespace torus {

/// An observable evaluated two ways: printed closed form and volume quadrature.
struct DualValue {
  double closed_form = 0.0;
  double quadrature = 0.0;

  double rel_difference() const;
};

/// Volume integral of the pointwise time-RMS charge density vs
/// sqrt(2) pi^2 eps0 E0 r0^2.
DualValue q_rms(const AnsatzParams& a, const QuadratureGrid& grid);

/// sqrt(2) eps0 pi c E0 R0 r0^2 (1 + r0^2/(2 R0^2)).
double magnetic_moment_closed(const AnsatzParams& a);

/// Thin-torus limit of magnetic_moment_closed (correction factor dropped).
double magnetic_moment_thin(const AnsatzParams& a);

struct MomentDiagnostic {
  double quadrature = 0.0;  ///< (1/2) int R J_phi,rms dV
  double closed_form = 0.0;
  double ratio = 0.0;  ///< quadrature / closed_form
};

/// (1/2) int (R x J)_z dV using the time-RMS azimuthal current. Diagnostic
/// only: it is not expected to reproduce the closed form's coefficient.
MomentDiagnostic magnetic_moment_quadrature_diagnostic(const AnsatzParams& a,
                                                       const QuadratureGrid& grid);

/// |int R p_phi,avg dV| vs (1/c) eps0 E0^2 pi^2 R0^2 r0^2 (1 + r0^2/(4 R0^2)).
/// Magnitudes; the averaged momentum flows along -a_phi, so L_z itself is
/// negative in the (R, phi, z) basis.
DualValue angular_momentum(const AnsatzParams& a, const QuadratureGrid& grid);

/// int eps0 E0^2 (1 + R/(4 R0)) dV vs eps0 pi^2 R0 r0^2 E0^2 (5/2 + r0^2/(8 R0^2)).
DualValue total_energy(const AnsatzParams& a, const QuadratureGrid& grid);

struct PhaseVelocity {
  double value = 0.0;  ///< omega R0
  bool faraday_consistent = false;
};

/// Speed of constant-phase surfaces along the axis circle. Flags omega that
/// is not 2c/R0 (relative tolerance 1e-12).
PhaseVelocity phase_velocity(const AnsatzParams& a);

/// Volume integral of the instantaneous charge density at time t; cancels
/// over the full azimuthal wavelength.
double instantaneous_charge(const AnsatzParams& a, const QuadratureGrid& grid, double t);

struct ObservableSet {
  DualValue q_rms;
  double mu_closed = 0.0;
  MomentDiagnostic mu_diagnostic;
  DualValue L_z;
  DualValue U;
  PhaseVelocity v_phase;
  double Q_instantaneous = 0.0;  ///< at t = 0
  Resolution resolution;
};

ObservableSet compute_observables(const AnsatzParams& a, const QuadratureGrid& grid);

}  // namespace torus
