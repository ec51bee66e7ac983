#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "torus/constants.hpp"
#include "torus/fields.hpp"

/// Fit of (E0, R0, r0) to the electron's spin, RMS charge and magnetic moment.

namespace torus {

enum class SolveMode { thin_torus, full_corrections };
std::string to_string(SolveMode mode);
SolveMode parse_solve_mode(const std::string& text);

struct ConstraintSystem {
  double spin_target;    ///< hbar/2 [J s]
  double charge_target;  ///< e [C]
  double moment_target;  ///< mu_B (1 + alpha/2pi), or mu_B alone [A m^2]
  SolveMode mode;
  bool include_schwinger;
};

/// Electron targets. With include_schwinger the moment target carries the
/// first-order anomalous factor 1 + alpha/(2 pi).
ConstraintSystem electron_constraints(const PhysicalConstants& k, SolveMode mode,
                                      bool include_schwinger = true);

/// Unknowns of the fit.
struct TorusParameters {
  double E0;
  double R0;
  double r0;
};

using Residuals = std::array<double, 3>;  ///< spin, charge, moment

/// lhs_i / target_i - 1 for the spin, charge and moment constraints. The
/// full mode adds the (1 + r0^2/4R0^2) and (1 + r0^2/2R0^2) factors.
/// Throws std::invalid_argument for non-positive inputs.
Residuals constraint_residuals(const TorusParameters& x, const ConstraintSystem& sys,
                               const PhysicalConstants& k);

double max_abs(const Residuals& r);

struct SolveResult {
  double E0 = 0.0;
  double R0 = 0.0;
  double r0 = 0.0;
  double omega = 0.0;
  double U = 0.0;  ///< printed energy closed form for the mode [J]
  int iterations = 0;
  Residuals residuals{};
  SolveMode mode = SolveMode::thin_torus;
  bool include_schwinger = true;
  bool converged = false;
  bool precision_floor = false;  ///< stopped on stagnation above tol
  std::vector<TorusParameters> trail;  ///< iterates, seed first

  TorusParameters parameters() const { return {E0, R0, r0}; }
  AnsatzParams ansatz(const PhysicalConstants& k) const;
};

class SolveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Closed-form solution of the thin-torus system:
///   R0 = (pi/2) s r_c, E0 = hbar c/(sqrt2 e R0^2), r0 = 2 R0 sqrt(alpha/pi),
///   U = (5/4) hbar c / R0,
/// with s = 1 + alpha/2pi when include_schwinger, else 1. Throws SolveError
/// if the substituted residuals exceed 1e-12.
SolveResult solve_thin_torus(const PhysicalConstants& k, bool include_schwinger = true);

struct SolveOptions {
  double tol = 1e-12;
  int max_iter = 50;
  double jacobian_step = 1e-7;  ///< log-space step, i.e. relative in each parameter
};

/// Damped Newton in log-parameter space with a central-difference Jacobian.
/// Seeds from the thin-torus closed form unless a seed is given. Returns with
/// converged == false (and the iterate trail) when tol is not reached.
SolveResult solve_full(const PhysicalConstants& k, const ConstraintSystem& sys,
                       std::optional<TorusParameters> seed = std::nullopt,
                       const SolveOptions& options = {});

struct RatioReport {
  double E0_over_ES;
  double R0_over_rc;
  double r0_over_rc;
  double U_over_mec2;
  double omega_over_omegaD;
  double E0;
  double R0;
  double r0;
  double U_J;
  double U_MeV;
  double omega;
};

RatioReport ratio_report(const SolveResult& sr, const DerivedScales& ds);

}  // namespace torus
