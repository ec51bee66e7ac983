#include "torus/solver.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>

namespace torus {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;

Eigen::Vector3d to_eigen(const Residuals& r) { return {r[0], r[1], r[2]}; }

TorusParameters from_log(const Eigen::Vector3d& y) {
  return {std::exp(y[0]), std::exp(y[1]), std::exp(y[2])};
}

Eigen::Vector3d to_log(const TorusParameters& x) {
  return {std::log(x.E0), std::log(x.R0), std::log(x.r0)};
}

double energy_for_mode(const TorusParameters& x, SolveMode mode, const PhysicalConstants& k) {
  const double base = k.eps0 * kPi * kPi * x.R0 * x.r0 * x.r0 * x.E0 * x.E0;
  const double correction =
      mode == SolveMode::full_corrections ? 0.125 * x.r0 * x.r0 / (x.R0 * x.R0) : 0.0;
  return base * (2.5 + correction);
}

void fill_derived(SolveResult& sr, const PhysicalConstants& k) {
  sr.omega = faraday_omega(sr.R0, k.c);
  sr.U = energy_for_mode(sr.parameters(), sr.mode, k);
}

}  // namespace

std::string to_string(SolveMode mode) {
  return mode == SolveMode::thin_torus ? "thin" : "full";
}

SolveMode parse_solve_mode(const std::string& text) {
  if (text == "thin" || text == "thin_torus") {
    return SolveMode::thin_torus;
  }
  if (text == "full" || text == "full_corrections") {
    return SolveMode::full_corrections;
  }
  throw std::invalid_argument("unknown solve mode '" + text + "' (expected thin or full)");
}

ConstraintSystem electron_constraints(const PhysicalConstants& k, SolveMode mode,
                                      bool include_schwinger) {
  const auto ds = derived_scales(k);
  return ConstraintSystem{
      .spin_target = 0.5 * k.hbar,
      .charge_target = k.e_charge,
      .moment_target = ds.mu_B * (include_schwinger ? schwinger_factor(k) : 1.0),
      .mode = mode,
      .include_schwinger = include_schwinger,
  };
}

Residuals constraint_residuals(const TorusParameters& x, const ConstraintSystem& sys,
                               const PhysicalConstants& k) {
  if (!(x.E0 > 0.0) || !(x.R0 > 0.0) || !(x.r0 > 0.0)) {
    throw std::invalid_argument("constraint_residuals requires positive E0, R0, r0");
  }
  const bool full = sys.mode == SolveMode::full_corrections;
  const double aspect2 = x.r0 * x.r0 / (x.R0 * x.R0);
  const double r0_sq = x.r0 * x.r0;

  const double spin = k.eps0 * x.E0 * x.E0 * kPi * kPi * x.R0 * x.R0 * r0_sq / k.c *
                      (full ? 1.0 + 0.25 * aspect2 : 1.0);
  const double charge = kSqrt2 * kPi * kPi * k.eps0 * x.E0 * r0_sq;
  const double moment =
      kSqrt2 * k.eps0 * kPi * k.c * x.E0 * x.R0 * r0_sq * (full ? 1.0 + 0.5 * aspect2 : 1.0);

  return {spin / sys.spin_target - 1.0, charge / sys.charge_target - 1.0,
          moment / sys.moment_target - 1.0};
}

double max_abs(const Residuals& r) {
  return std::max({std::abs(r[0]), std::abs(r[1]), std::abs(r[2])});
}

AnsatzParams SolveResult::ansatz(const PhysicalConstants& k) const {
  return AnsatzParams::faraday_consistent(E0, R0, r0, k);
}

SolveResult solve_thin_torus(const PhysicalConstants& k, bool include_schwinger) {
  const auto ds = derived_scales(k);
  const double s = include_schwinger ? schwinger_factor(k) : 1.0;

  SolveResult sr;
  sr.mode = SolveMode::thin_torus;
  sr.include_schwinger = include_schwinger;
  sr.R0 = 0.5 * kPi * s * ds.r_c;
  sr.E0 = k.hbar * k.c / (kSqrt2 * k.e_charge * sr.R0 * sr.R0);
  // alpha as the combination e^2/(4 pi eps0 hbar c) that the constraints
  // actually contain; the stored CODATA value differs at the 1e-12 level.
  sr.r0 = 2.0 * sr.R0 * std::sqrt(alpha_from_constants(k) / kPi);
  fill_derived(sr, k);
  // Closed form (5/4) hbar c / R0 holds only on the solution; keep it as the
  // reported energy.
  sr.U = 1.25 * k.hbar * k.c / sr.R0;
  sr.residuals = constraint_residuals(sr.parameters(),
                                      electron_constraints(k, sr.mode, include_schwinger), k);
  sr.trail = {sr.parameters()};
  sr.converged = true;
  if (max_abs(sr.residuals) > 1e-12) {
    throw SolveError("thin-torus closed form failed its residual check: max residual " +
                     std::to_string(max_abs(sr.residuals)));
  }
  return sr;
}

SolveResult solve_full(const PhysicalConstants& k, const ConstraintSystem& sys,
                       std::optional<TorusParameters> seed, const SolveOptions& options) {
  if (!(options.tol > 0.0)) {
    throw std::invalid_argument("solver tolerance must be positive");
  }
  const bool schwinger = sys.include_schwinger;
  const TorusParameters start = seed.value_or(solve_thin_torus(k, schwinger).parameters());

  auto residual_at = [&](const Eigen::Vector3d& y) {
    return to_eigen(constraint_residuals(from_log(y), sys, k));
  };

  SolveResult sr;
  sr.mode = sys.mode;
  sr.include_schwinger = schwinger;
  sr.trail.push_back(start);

  Eigen::Vector3d y = to_log(start);
  Eigen::Vector3d f = residual_at(y);
  double err = f.cwiseAbs().maxCoeff();

  while (err >= options.tol && sr.iterations < options.max_iter) {
    Eigen::Matrix3d jac;
    for (int j = 0; j < 3; ++j) {
      const double step = options.jacobian_step;
      Eigen::Vector3d yp = y;
      Eigen::Vector3d ym = y;
      yp[j] += step;
      ym[j] -= step;
      jac.col(j) = (residual_at(yp) - residual_at(ym)) / (2.0 * step);
    }
    const Eigen::Vector3d dy = jac.partialPivLu().solve(-f);
    if (!dy.allFinite()) {
      break;
    }

    // Backtracking: accept the first damped step that lowers the max residual.
    double lambda = 1.0;
    bool improved = false;
    for (int halvings = 0; halvings < 30; ++halvings, lambda *= 0.5) {
      const Eigen::Vector3d trial = y + lambda * dy;
      const Eigen::Vector3d ft = residual_at(trial);
      const double et = ft.cwiseAbs().maxCoeff();
      if (std::isfinite(et) && et < err) {
        y = trial;
        f = ft;
        err = et;
        improved = true;
        break;
      }
    }
    ++sr.iterations;
    sr.trail.push_back(from_log(y));
    if (!improved) {
      sr.precision_floor = true;
      break;
    }
  }

  const auto x = from_log(y);
  sr.E0 = x.E0;
  sr.R0 = x.R0;
  sr.r0 = x.r0;
  sr.residuals = {f[0], f[1], f[2]};
  sr.converged = err < options.tol;
  fill_derived(sr, k);
  return sr;
}

RatioReport ratio_report(const SolveResult& sr, const DerivedScales& ds) {
  return RatioReport{
      .E0_over_ES = sr.E0 / ds.E_S,
      .R0_over_rc = sr.R0 / ds.r_c,
      .r0_over_rc = sr.r0 / ds.r_c,
      .U_over_mec2 = sr.U / ds.rest_energy,
      .omega_over_omegaD = sr.omega / ds.omega_D,
      .E0 = sr.E0,
      .R0 = sr.R0,
      .r0 = sr.r0,
      .U_J = sr.U,
      .U_MeV = sr.U / kJoulePerMeV,
      .omega = sr.omega,
  };
}

}  // namespace torus
