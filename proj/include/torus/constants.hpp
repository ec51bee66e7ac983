#pragma once

/// CODATA 2018 physical constants and the electron reference scales derived
/// from them. All values are SI.

namespace torus {

struct PhysicalConstants {
  double c;         ///< speed of light [m/s]
  double eps0;      ///< vacuum permittivity [F/m]
  double mu0;       ///< vacuum permeability [H/m]
  double hbar;      ///< reduced Planck constant [J s]
  double e_charge;  ///< elementary charge magnitude [C]
  double m_e;       ///< electron mass [kg]
  double alpha;     ///< fine-structure constant, stored value
};

struct DerivedScales {
  double r_c;          ///< reduced Compton wavelength hbar/(m_e c) [m]
  double E_S;          ///< Schwinger field m_e^2 c^3/(e hbar) [V/m]
  double mu_B;         ///< Bohr magneton e hbar/(2 m_e) [A m^2]
  double omega_D;      ///< Dirac (zitterbewegung) frequency 2 m_e c^2/hbar [rad/s]
  double rest_energy;  ///< m_e c^2 [J]
};

/// Joules per MeV (exact, from the SI value of e).
inline constexpr double kJoulePerMeV = 1.602176634e-13;

/// Fixed CODATA 2018 values.
PhysicalConstants codata_constants();

DerivedScales derived_scales(const PhysicalConstants& k);

/// e^2/(4 pi eps0 hbar c), recomputed from the other stored constants.
double alpha_from_constants(const PhysicalConstants& k);

/// First-order anomalous moment factor 1 + alpha/(2 pi).
double schwinger_factor(const PhysicalConstants& k);

}  // namespace torus
