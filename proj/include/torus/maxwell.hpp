#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "torus/fields.hpp"

/// Interior verification of the four Maxwell equations for the ansatz, by
/// closed-form derivatives and by central finite differences in cylindrical
/// coordinates.

namespace torus {

using VectorField = std::function<CylVector(const CylindricalPoint&)>;
using ScalarFieldT = std::function<double(const CylindricalPoint&, double)>;
using VectorFieldT = std::function<CylVector(const CylindricalPoint&, double)>;

/// Raised when a finite-difference stencil would cross the tube surface.
class BoundaryProximityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Step sizes for a relative step h: h*R0 in R and z, h radians in phi.
struct FdStencil {
  double h = 1e-5;
  double length_scale = 1.0;  ///< R0

  double dR() const { return h * length_scale; }
  double dz() const { return h * length_scale; }
  double dphi() const { return h; }
};

/// Rejects `p` unless it lies at least 10 h R0 inside the tube.
void require_fd_clearance(const CylindricalPoint& p, const TorusGeometry& g, double h);

/// (1/R) d(R F_R)/dR + (1/R) dF_phi/dphi + dF_z/dz by central differences.
double fd_div_cylindrical(const VectorField& field, const CylindricalPoint& p,
                          const TorusGeometry& g, double h);

/// Cylindrical curl by central differences.
CylVector fd_curl_cylindrical(const VectorField& field, const CylindricalPoint& p,
                              const TorusGeometry& g, double h);

/// Central difference in time with step h/|omega| (h/ (c/R0) for static fields).
CylVector fd_time_derivative(const VectorFieldT& field, const CylindricalPoint& p, double t,
                             double dt);
double fd_time_derivative(const ScalarFieldT& field, const CylindricalPoint& p, double t,
                          double dt);

/// Time step used for FD time derivatives at relative step h.
double fd_time_step(const AnsatzParams& a, double h);

// Closed-form derivatives of the real ansatz fields (interior points).
double div_e_analytic(const CylindricalPoint& p, double t, const AnsatzParams& a);
CylVector curl_e_analytic(const CylindricalPoint& p, double t, const AnsatzParams& a);
CylVector curl_b_analytic(const CylindricalPoint& p, double t, const AnsatzParams& a);
CylVector db_dt_analytic(const CylindricalPoint& p, double t, const AnsatzParams& a);
CylVector de_dt_analytic(const CylindricalPoint& p, double t, const AnsatzParams& a);
double drho_dt_analytic(const CylindricalPoint& p, double t, const AnsatzParams& a);
double div_j_analytic(const CylindricalPoint& p, double t, const AnsatzParams& a);

enum class Equation { gauss_B, gauss_E, faraday, ampere_continuity };
std::string to_string(Equation eq);

struct SamplingConfig {
  std::size_t n_points = 1000;
  std::uint64_t seed = 42;
  double h = 1e-5;
  double tolerance = 1e-6;
};

struct ResidualReport {
  Equation equation = Equation::gauss_B;
  std::size_t n_points = 0;
  double max_rel_residual = 0.0;
  double mean_rel_residual = 0.0;
  double normalization = 0.0;
  std::string normalization_label;
  bool zero_normalization = false;  ///< scale vanished; raw residuals reported
  double analytic_max = 0.0;  ///< same residual via closed-form derivatives; NaN if unavailable
  double tolerance = 0.0;
  std::uint64_t seed = 0;
  double h = 0.0;
  bool passed = false;
};

/// A sampled interior (point, t) pair.
struct Sample {
  CylindricalPoint point;
  double t;
};

/// Seeded samples at least 10 h R0 inside the tube, t within one period.
std::vector<Sample> interior_samples(const AnsatzParams& a, const SamplingConfig& cfg);

// Per-point normalized residuals (FD path). Time derivatives take the max
// over the analytic and FD evaluations.
double gauss_b_residual(const AnsatzParams& a, const Sample& s, double h);
double gauss_e_residual(const AnsatzParams& a, const Sample& s, double h,
                        const ScalarFieldT& rho);
double faraday_residual(const AnsatzParams& a, const Sample& s, double h);
double continuity_residual(const AnsatzParams& a, const Sample& s, double h,
                           const VectorFieldT& current);
/// |J - (curl B/mu0 - eps0 dE/dt)_FD| / (eps0 E0 (c + |omega| R0)/R0).
double ampere_residual(const AnsatzParams& a, const Sample& s, double h,
                       const VectorFieldT& current);

double gauss_b_scale(const AnsatzParams& a);
double gauss_e_scale(const AnsatzParams& a);
double faraday_scale(const AnsatzParams& a);
double continuity_scale(const AnsatzParams& a);

ResidualReport check_gauss_B(const AnsatzParams& a, const SamplingConfig& cfg = {});
ResidualReport check_gauss_E(const AnsatzParams& a, const SamplingConfig& cfg = {});
/// Variant with a substitute charge density, e.g. to show the geometric charge.
ResidualReport check_gauss_E(const AnsatzParams& a, const SamplingConfig& cfg,
                             const ScalarFieldT& rho);
ResidualReport check_faraday(const AnsatzParams& a, const SamplingConfig& cfg = {});
/// Ampere-Maxwell (closed-form J vs FD curl B/mu0 - eps0 dE/dt) and charge
/// continuity; max_rel_residual is the larger of the two.
ResidualReport check_continuity(const AnsatzParams& a, const SamplingConfig& cfg = {});
ResidualReport check_continuity(const AnsatzParams& a, const SamplingConfig& cfg,
                                const VectorFieldT& current);

struct VerificationResult {
  std::vector<ResidualReport> reports;
  bool all_passed = false;
};

VerificationResult full_verification(const AnsatzParams& a, const SamplingConfig& cfg = {});

}  // namespace torus
