#include "torus/maxwell.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace torus {

namespace {

constexpr double kClearanceSteps = 10.0;

double uniform01(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

CylindricalPoint shifted(CylindricalPoint p, double dR, double dphi, double dz) {
  p.R += dR;
  p.phi += dphi;
  p.z += dz;
  return p;
}

// Running max/mean over per-sample residuals.
struct Accumulator {
  double max = 0.0;
  double sum = 0.0;
  double analytic_max = 0.0;
  std::size_t count = 0;

  void add(double residual, double analytic) {
    max = std::max(max, residual);
    analytic_max = std::max(analytic_max, analytic);
    sum += residual;
    ++count;
  }
};

ResidualReport finish(Equation eq, const Accumulator& acc, double scale, std::string label,
                      const SamplingConfig& cfg, bool with_analytic = true) {
  ResidualReport r;
  r.equation = eq;
  r.n_points = acc.count;
  r.max_rel_residual = acc.max;
  r.mean_rel_residual = acc.count > 0 ? acc.sum / static_cast<double>(acc.count) : 0.0;
  r.normalization = scale;
  r.normalization_label = std::move(label);
  r.zero_normalization = !(scale > 0.0);
  r.analytic_max = with_analytic ? acc.analytic_max : std::nan("");
  r.tolerance = cfg.tolerance;
  r.seed = cfg.seed;
  r.h = cfg.h;
  r.passed = acc.max < cfg.tolerance && (!with_analytic || acc.analytic_max < cfg.tolerance);
  return r;
}

// Divides by scale, or reports the raw magnitude when the scale vanishes.
double normalized(double magnitude, double scale) {
  return scale > 0.0 ? magnitude / scale : magnitude;
}

}  // namespace

void require_fd_clearance(const CylindricalPoint& p, const TorusGeometry& g, double h) {
  const double needed = kClearanceSteps * h * g.R0();
  if (depth_inside(p, g) < needed) {
    throw BoundaryProximityError("finite-difference point lies within 10 steps of the tube "
                                 "surface (depth " +
                                 std::to_string(depth_inside(p, g)) + " m, need " +
                                 std::to_string(needed) + " m)");
  }
}

double fd_div_cylindrical(const VectorField& field, const CylindricalPoint& p,
                          const TorusGeometry& g, double h) {
  require_fd_clearance(p, g, h);
  const FdStencil st{h, g.R0()};
  const auto rp = shifted(p, st.dR(), 0, 0);
  const auto rm = shifted(p, -st.dR(), 0, 0);
  const double d_rfr = (rp.R * field(rp).R - rm.R * field(rm).R) / (2.0 * st.dR());
  const double d_fphi =
      (field(shifted(p, 0, st.dphi(), 0)).phi - field(shifted(p, 0, -st.dphi(), 0)).phi) /
      (2.0 * st.dphi());
  const double d_fz =
      (field(shifted(p, 0, 0, st.dz())).z - field(shifted(p, 0, 0, -st.dz())).z) /
      (2.0 * st.dz());
  return (d_rfr + d_fphi) / p.R + d_fz;
}

CylVector fd_curl_cylindrical(const VectorField& field, const CylindricalPoint& p,
                              const TorusGeometry& g, double h) {
  require_fd_clearance(p, g, h);
  const FdStencil st{h, g.R0()};
  const auto rp = shifted(p, st.dR(), 0, 0);
  const auto rm = shifted(p, -st.dR(), 0, 0);
  const auto fp_r = field(rp);
  const auto fm_r = field(rm);
  const auto fp_phi = field(shifted(p, 0, st.dphi(), 0));
  const auto fm_phi = field(shifted(p, 0, -st.dphi(), 0));
  const auto fp_z = field(shifted(p, 0, 0, st.dz()));
  const auto fm_z = field(shifted(p, 0, 0, -st.dz()));

  const double inv_2dR = 1.0 / (2.0 * st.dR());
  const double inv_2dphi = 1.0 / (2.0 * st.dphi());
  const double inv_2dz = 1.0 / (2.0 * st.dz());

  CylVector curl;
  curl.R = (fp_phi.z - fm_phi.z) * inv_2dphi / p.R - (fp_z.phi - fm_z.phi) * inv_2dz;
  curl.phi = (fp_z.R - fm_z.R) * inv_2dz - (fp_r.z - fm_r.z) * inv_2dR;
  curl.z = ((rp.R * fp_r.phi - rm.R * fm_r.phi) * inv_2dR - (fp_phi.R - fm_phi.R) * inv_2dphi) /
           p.R;
  return curl;
}

CylVector fd_time_derivative(const VectorFieldT& field, const CylindricalPoint& p, double t,
                             double dt) {
  return (1.0 / (2.0 * dt)) * (field(p, t + dt) - field(p, t - dt));
}

double fd_time_derivative(const ScalarFieldT& field, const CylindricalPoint& p, double t,
                          double dt) {
  return (field(p, t + dt) - field(p, t - dt)) / (2.0 * dt);
}

double fd_time_step(const AnsatzParams& a, double h) {
  const double rate = a.omega != 0.0 ? std::abs(a.omega) : a.k.c / a.R0;
  return h / rate;
}

double div_e_analytic(const CylindricalPoint& p, double t, const AnsatzParams& a) {
  return a.E0 / a.R0 * std::sin(a.phase(p, t));
}

CylVector curl_e_analytic(const CylindricalPoint& p, double t, const AnsatzParams& a) {
  return {0.0, 0.0, -2.0 * a.E0 / a.R0 * std::cos(a.phase(p, t))};
}

CylVector curl_b_analytic(const CylindricalPoint& p, double t, const AnsatzParams& a) {
  return {-a.B0 / p.R * std::cos(a.phase(p, t)), 0.0, 0.0};
}

CylVector db_dt_analytic(const CylindricalPoint& p, double t, const AnsatzParams& a) {
  return {0.0, 0.0, a.B0 * a.omega * std::cos(a.phase(p, t))};
}

CylVector de_dt_analytic(const CylindricalPoint& p, double t, const AnsatzParams& a) {
  const double psi = a.phase(p, t);
  return {a.E0 * a.omega * std::cos(psi), -a.E0 * (1.0 + p.R / a.R0) * a.omega * std::sin(psi),
          0.0};
}

double drho_dt_analytic(const CylindricalPoint& p, double t, const AnsatzParams& a) {
  return -a.omega * a.k.eps0 * a.E0 / a.R0 * std::cos(a.phase(p, t));
}

double div_j_analytic(const CylindricalPoint& p, double t, const AnsatzParams& a) {
  return a.k.eps0 * a.omega * a.E0 / a.R0 * std::cos(a.phase(p, t));
}

std::string to_string(Equation eq) {
  switch (eq) {
    case Equation::gauss_B:
      return "gauss_B";
    case Equation::gauss_E:
      return "gauss_E";
    case Equation::faraday:
      return "faraday";
    case Equation::ampere_continuity:
      return "ampere_continuity";
  }
  return "unknown";
}

std::vector<Sample> interior_samples(const AnsatzParams& a, const SamplingConfig& cfg) {
  const double margin = kClearanceSteps * cfg.h * a.R0;
  if (!(margin < a.r0)) {
    throw std::invalid_argument("finite-difference step too large for the tube: 10 h R0 >= r0");
  }
  // Slightly more than the margin so rounding in the coordinate map cannot
  // push a sample across the clearance limit.
  const double r_max = a.r0 - margin * (1.0 + 1e-6);
  const double t_span = std::isfinite(a.period()) ? a.period() : a.R0 / a.k.c;

  std::mt19937_64 gen(cfg.seed);
  std::vector<Sample> samples;
  samples.reserve(cfg.n_points);
  const double two_pi = 2.0 * std::numbers::pi;
  for (std::size_t i = 0; i < cfg.n_points; ++i) {
    const double r = r_max * std::sqrt(uniform01(gen));
    const double theta = two_pi * uniform01(gen);
    const double phi = two_pi * uniform01(gen);
    const double t = t_span * uniform01(gen);
    const CylindricalPoint p{a.R0 + r * std::cos(theta), phi, r * std::sin(theta)};
    samples.push_back({p, t});
  }
  return samples;
}

double gauss_b_scale(const AnsatzParams& a) { return std::abs(a.E0) / (a.k.c * a.R0); }
double gauss_e_scale(const AnsatzParams& a) { return std::abs(a.E0) / a.R0; }
double faraday_scale(const AnsatzParams& a) { return std::abs(a.E0) / a.R0; }
double continuity_scale(const AnsatzParams& a) {
  return a.k.eps0 * std::abs(a.omega) * std::abs(a.E0) / a.R0;
}

namespace {

double ampere_scale(const AnsatzParams& a) {
  return a.k.eps0 * std::abs(a.E0) * (a.k.c + std::abs(a.omega) * a.R0) / a.R0;
}

}  // namespace

double gauss_b_residual(const AnsatzParams& a, const Sample& s, double h) {
  const VectorField b = [&](const CylindricalPoint& q) { return real_b(q, s.t, a); };
  return normalized(std::abs(fd_div_cylindrical(b, s.point, a.geometry(), h)), gauss_b_scale(a));
}

double gauss_e_residual(const AnsatzParams& a, const Sample& s, double h,
                        const ScalarFieldT& rho) {
  const VectorField e = [&](const CylindricalPoint& q) { return real_e(q, s.t, a); };
  const double div = fd_div_cylindrical(e, s.point, a.geometry(), h);
  return normalized(std::abs(div - rho(s.point, s.t) / a.k.eps0), gauss_e_scale(a));
}

double faraday_residual(const AnsatzParams& a, const Sample& s, double h) {
  const VectorField e = [&](const CylindricalPoint& q) { return real_e(q, s.t, a); };
  const auto curl = fd_curl_cylindrical(e, s.point, a.geometry(), h);
  const VectorFieldT b = [&](const CylindricalPoint& q, double t) { return real_b(q, t, a); };
  const auto db_fd = fd_time_derivative(b, s.point, s.t, fd_time_step(a, h));
  const auto db_an = db_dt_analytic(s.point, s.t, a);
  const double worst = std::max((curl + db_fd).norm(), (curl + db_an).norm());
  return normalized(worst, faraday_scale(a));
}

double continuity_residual(const AnsatzParams& a, const Sample& s, double h,
                           const VectorFieldT& current) {
  const VectorField j = [&](const CylindricalPoint& q) { return current(q, s.t); };
  const double div = fd_div_cylindrical(j, s.point, a.geometry(), h);
  const ScalarFieldT rho = [&](const CylindricalPoint& q, double t) {
    return charge_density(q, t, a);
  };
  const double drho_fd = fd_time_derivative(rho, s.point, s.t, fd_time_step(a, h));
  const double drho_an = drho_dt_analytic(s.point, s.t, a);
  const double worst = std::max(std::abs(div + drho_fd), std::abs(div + drho_an));
  return normalized(worst, continuity_scale(a));
}

double ampere_residual(const AnsatzParams& a, const Sample& s, double h,
                       const VectorFieldT& current) {
  const VectorField b = [&](const CylindricalPoint& q) { return real_b(q, s.t, a); };
  const auto curl_b = fd_curl_cylindrical(b, s.point, a.geometry(), h);
  const VectorFieldT e = [&](const CylindricalPoint& q, double t) { return real_e(q, t, a); };
  const auto de_fd = fd_time_derivative(e, s.point, s.t, fd_time_step(a, h));
  const auto de_an = de_dt_analytic(s.point, s.t, a);
  const auto j = current(s.point, s.t);
  const double inv_mu0 = 1.0 / a.k.mu0;
  const double worst = std::max((j - (inv_mu0 * curl_b - a.k.eps0 * de_fd)).norm(),
                                (j - (inv_mu0 * curl_b - a.k.eps0 * de_an)).norm());
  return normalized(worst, ampere_scale(a));
}

ResidualReport check_gauss_B(const AnsatzParams& a, const SamplingConfig& cfg) {
  Accumulator acc;
  for (const auto& s : interior_samples(a, cfg)) {
    // B has only a z-component independent of z: the closed-form divergence is 0.
    acc.add(gauss_b_residual(a, s, cfg.h), 0.0);
  }
  return finish(Equation::gauss_B, acc, gauss_b_scale(a), "E0/(c R0)", cfg);
}

ResidualReport check_gauss_E(const AnsatzParams& a, const SamplingConfig& cfg) {
  return check_gauss_E(a, cfg, [&a](const CylindricalPoint& q, double t) {
    return charge_density(q, t, a);
  });
}

ResidualReport check_gauss_E(const AnsatzParams& a, const SamplingConfig& cfg,
                             const ScalarFieldT& rho) {
  Accumulator acc;
  const double scale = gauss_e_scale(a);
  for (const auto& s : interior_samples(a, cfg)) {
    const double analytic =
        normalized(std::abs(div_e_analytic(s.point, s.t, a) - rho(s.point, s.t) / a.k.eps0),
                   scale);
    acc.add(gauss_e_residual(a, s, cfg.h, rho), analytic);
  }
  return finish(Equation::gauss_E, acc, scale, "E0/R0", cfg);
}

ResidualReport check_faraday(const AnsatzParams& a, const SamplingConfig& cfg) {
  Accumulator acc;
  const double scale = faraday_scale(a);
  for (const auto& s : interior_samples(a, cfg)) {
    const auto analytic = curl_e_analytic(s.point, s.t, a) + db_dt_analytic(s.point, s.t, a);
    acc.add(faraday_residual(a, s, cfg.h), normalized(analytic.norm(), scale));
  }
  return finish(Equation::faraday, acc, scale, "E0/R0", cfg);
}

ResidualReport check_continuity(const AnsatzParams& a, const SamplingConfig& cfg) {
  Accumulator acc;
  const VectorFieldT current = [&a](const CylindricalPoint& q, double t) {
    return current_density(q, t, a);
  };
  const double scale = continuity_scale(a);
  for (const auto& s : interior_samples(a, cfg)) {
    const double fd = std::max(continuity_residual(a, s, cfg.h, current),
                               ampere_residual(a, s, cfg.h, current));
    const double analytic = normalized(
        std::abs(div_j_analytic(s.point, s.t, a) + drho_dt_analytic(s.point, s.t, a)), scale);
    acc.add(fd, analytic);
  }
  return finish(Equation::ampere_continuity, acc, scale, "eps0 omega E0/R0", cfg);
}

ResidualReport check_continuity(const AnsatzParams& a, const SamplingConfig& cfg,
                                const VectorFieldT& current) {
  Accumulator acc;
  for (const auto& s : interior_samples(a, cfg)) {
    acc.add(std::max(continuity_residual(a, s, cfg.h, current),
                     ampere_residual(a, s, cfg.h, current)),
            0.0);
  }
  return finish(Equation::ampere_continuity, acc, continuity_scale(a), "eps0 omega E0/R0", cfg,
                false);
}

VerificationResult full_verification(const AnsatzParams& a, const SamplingConfig& cfg) {
  VerificationResult out;
  out.reports = {check_gauss_B(a, cfg), check_gauss_E(a, cfg), check_faraday(a, cfg),
                 check_continuity(a, cfg)};
  out.all_passed = std::all_of(out.reports.begin(), out.reports.end(),
                               [](const ResidualReport& r) { return r.passed; });
  return out;
}

}  // namespace torus
