#include "torus/constants.hpp"

#include <numbers>

namespace torus {

PhysicalConstants codata_constants() {
  constexpr double planck = 6.62607015e-34;
  return PhysicalConstants{
      .c = 299792458.0,
      .eps0 = 8.8541878128e-12,
      .mu0 = 1.25663706212e-6,
      .hbar = planck / (2.0 * std::numbers::pi),
      .e_charge = 1.602176634e-19,
      .m_e = 9.1093837015e-31,
      .alpha = 7.2973525693e-3,
  };
}

DerivedScales derived_scales(const PhysicalConstants& k) {
  const double mc = k.m_e * k.c;
  return DerivedScales{
      .r_c = k.hbar / mc,
      .E_S = mc * mc * k.c / (k.e_charge * k.hbar),
      .mu_B = k.e_charge * k.hbar / (2.0 * k.m_e),
      .omega_D = 2.0 * mc * k.c / k.hbar,
      .rest_energy = mc * k.c,
  };
}

double alpha_from_constants(const PhysicalConstants& k) {
  return k.e_charge * k.e_charge / (4.0 * std::numbers::pi * k.eps0 * k.hbar * k.c);
}

double schwinger_factor(const PhysicalConstants& k) {
  return 1.0 + k.alpha / (2.0 * std::numbers::pi);
}

}  // namespace torus
