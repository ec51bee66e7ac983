#include "torus/report.hpp"

#include <cmath>
#include <iomanip>
#include <numbers>
#include <sstream>

namespace torus {

using nlohmann::json;

namespace {

std::string to_string(ToleranceKind kind) {
  return kind == ToleranceKind::absolute ? "absolute" : "relative";
}

std::vector<ClaimSpec> make_manifest() {
  const auto k = codata_constants();
  const auto ds = derived_scales(k);
  constexpr auto abs = ToleranceKind::absolute;
  constexpr auto rel = ToleranceKind::relative;
  return {
      {"ratio.E0_over_ES", "boxed E0/E_S", "1", 0.286, 5e-4, abs},
      {"ratio.R0_over_rc", "boxed R0/r_c", "1", 1.573, 5e-4, abs},
      {"ratio.r0_over_rc", "boxed r0/r_c", "1", 0.152, 5e-4, abs},
      {"ratio.U_over_mec2", "boxed U/(m_e c^2)", "1", 0.795, 5e-4, abs},
      {"ratio.omega_over_omegaD", "boxed omega/omega_D", "1", 0.636, 5e-4, abs},
      {"closed.E0_over_ES", "thin-torus E0/E_S", "1", 0.2859, 5e-4, abs},
      {"closed.R0_over_rc", "thin-torus R0/r_c", "1", 1.5726, 5e-4, abs},
      {"closed.r0_over_rc", "thin-torus r0/r_c", "1", 0.1516, 5e-4, abs},
      {"closed.U_over_mec2", "thin-torus U/(m_e c^2)", "1", 0.7949, 5e-4, abs},
      {"si.E0", "field amplitude", "V/m", 3.783e17, 1e-2, rel},
      {"si.R0", "major radius", "m", 6.073e-13, 1e-2, rel},
      {"si.r0", "minor radius", "m", 5.854e-14, 1e-2, rel},
      {"si.U_MeV", "total energy", "MeV", 0.406, 1e-2, rel},
      {"si.omega", "angular frequency", "rad/s", 9.86e20, 1e-2, rel},
      {"kinematics.v_phase", "phase velocity 2c", "m/s", 2.0 * k.c, 1e-12, rel},
      {"target.Q_rms", "RMS charge equals e", "C", k.e_charge, 1e-3, rel},
      {"target.mu", "magnetic moment equals mu_B (1 + alpha/2pi)", "A m^2",
       ds.mu_B * schwinger_factor(k), 1e-3, rel},
      {"target.L_z", "angular momentum magnitude equals hbar/2", "J s", 0.5 * k.hbar, 1e-3,
       rel},
      {"charge.instantaneous_total", "instantaneous charge integrates to zero (in Q_rms units)",
       "1", 0.0, 1e-12, abs},
  };
}

struct ThinValues {
  double E0_over_ES;
  double R0_over_rc;
  double r0_over_rc;
  double U_over_mec2;
  double omega_over_omegaD;
  double E0;
  double R0;
  double r0;
  double U_MeV;
  double omega;
};

ThinValues thin_values(const SolveResult& sr, const DerivedScales& ds) {
  const auto rr = ratio_report(sr, ds);
  return {rr.E0_over_ES, rr.R0_over_rc, rr.r0_over_rc, rr.U_over_mec2, rr.omega_over_omegaD,
          rr.E0,         rr.R0,         rr.r0,         rr.U_MeV,       rr.omega};
}

std::optional<double> pick(const std::string& id, const ThinValues& v) {
  if (id == "ratio.E0_over_ES" || id == "closed.E0_over_ES") return v.E0_over_ES;
  if (id == "ratio.R0_over_rc" || id == "closed.R0_over_rc") return v.R0_over_rc;
  if (id == "ratio.r0_over_rc" || id == "closed.r0_over_rc") return v.r0_over_rc;
  if (id == "ratio.U_over_mec2" || id == "closed.U_over_mec2") return v.U_over_mec2;
  if (id == "ratio.omega_over_omegaD") return v.omega_over_omegaD;
  if (id == "si.E0") return v.E0;
  if (id == "si.R0") return v.R0;
  if (id == "si.r0") return v.r0;
  if (id == "si.U_MeV") return v.U_MeV;
  if (id == "si.omega") return v.omega;
  return std::nullopt;
}

double deviation_for(const ClaimSpec& spec, double computed) {
  if (spec.kind == ToleranceKind::relative) {
    return (computed - spec.paper_value) / spec.paper_value;
  }
  return computed - spec.paper_value;
}

}  // namespace

const std::vector<ClaimSpec>& claims_manifest() {
  static const std::vector<ClaimSpec> manifest = make_manifest();
  return manifest;
}

std::vector<Claim> build_claims(const SolveResult& thin, const ObservableSet& obs,
                                     const DerivedScales& ds, const PhysicalConstants& k) {
  const auto with = thin_values(thin, ds);
  const auto without = thin_values(solve_thin_torus(k, false), ds);
  const std::string thin_label = std::string("thin-torus solve, anomalous factor ") +
                                 (thin.include_schwinger ? "on" : "off");

  std::vector<Claim> claims;
  for (const auto& spec : claims_manifest()) {
    Claim c;
    c.spec = spec;
    if (const auto v = pick(spec.id, with)) {
      c.computed_value = *v;
      c.source = thin_label;
      const double alt = *pick(spec.id, without);
      c.without_schwinger = alt;
      c.without_schwinger_passes = std::abs(deviation_for(spec, alt)) <= spec.tolerance;
    } else if (spec.id == "kinematics.v_phase") {
      c.computed_value = obs.v_phase.value;
      c.source = "omega R0 of the full-correction solution";
    } else if (spec.id == "target.Q_rms") {
      c.computed_value = obs.q_rms.quadrature;
      c.source = "quadrature, full-correction solution";
    } else if (spec.id == "target.mu") {
      c.computed_value = obs.mu_closed;
      c.source = "closed form, full-correction solution";
    } else if (spec.id == "target.L_z") {
      c.computed_value = obs.L_z.quadrature;
      c.source = "quadrature, full-correction solution";
    } else if (spec.id == "charge.instantaneous_total") {
      c.computed_value = obs.Q_instantaneous / obs.q_rms.quadrature;
      c.source = "quadrature at t = 0, full-correction solution";
    }
    c.deviation = deviation_for(spec, c.computed_value);
    c.passed = std::abs(c.deviation) <= spec.tolerance;
    claims.push_back(std::move(c));
  }
  return claims;
}

FullReport assemble_report(const ReportConfig& config) {
  FullReport r;
  r.config = config;
  r.constants = codata_constants();
  r.scales = derived_scales(r.constants);
  const auto& k = r.constants;

  r.thin = solve_thin_torus(k, config.include_schwinger);
  r.thin_without_schwinger = solve_thin_torus(k, false);
  r.full = solve_full(
      k, electron_constraints(k, SolveMode::full_corrections, config.include_schwinger),
      std::nullopt, config.solve_options);
  r.thin_ratios = ratio_report(r.thin, r.scales);
  r.full_ratios = ratio_report(r.full, r.scales);

  const auto params = r.full.ansatz(k);
  r.verification = full_verification(params, config.sampling);
  const QuadratureGrid grid(params.geometry(), config.resolution);
  r.observables = compute_observables(params, grid);
  r.claims = build_claims(r.thin, r.observables, r.scales, k);

  bool ok = r.verification.all_passed && r.full.converged;
  for (const auto& c : r.claims) {
    ok = ok && c.passed;
  }
  r.overall_pass = ok;
  return r;
}

Format parse_format(const std::string& text) {
  if (text == "json") return Format::json;
  if (text == "csv") return Format::csv;
  if (text == "text") return Format::text;
  throw std::invalid_argument("unknown format '" + text + "' (expected json, csv or text)");
}

namespace {

std::string csv_number(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

std::string render_csv(const FullReport& report) {
  std::ostringstream os;
  os << kClaimsCsvHeader << '\n';
  for (const auto& c : report.claims) {
    os << c.spec.id << ",\"" << c.spec.description << "\"," << c.spec.unit << ','
       << csv_number(c.spec.paper_value) << ',' << csv_number(c.computed_value) << ','
       << csv_number(c.deviation) << ',' << csv_number(c.spec.tolerance) << ','
       << to_string(c.spec.kind) << ',' << (c.passed ? "true" : "false") << '\n';
  }
  return os.str();
}

std::string render_text(const FullReport& report) {
  std::ostringstream os;
  os << std::setprecision(6);
  os << "Maxwell residuals (interior, " << report.config.sampling.n_points << " samples, seed "
     << report.config.sampling.seed << ")\n";
  for (const auto& rr : report.verification.reports) {
    os << "  " << (rr.passed ? "PASS" : "FAIL") << "  " << std::left << std::setw(18)
       << to_string(rr.equation) << std::right << " max " << rr.max_rel_residual << "  mean "
       << rr.mean_rel_residual << "  (" << rr.normalization_label << ")\n";
  }
  os << "Full-correction solve: " << (report.full.converged ? "converged" : "NOT converged")
     << " in " << report.full.iterations << " iterations\n";
  os << "Published numbers\n";
  for (const auto& c : report.claims) {
    os << "  " << (c.passed ? "PASS" : "FAIL") << "  " << std::left << std::setw(28) << c.spec.id
       << std::right << " published " << std::setw(12) << c.spec.paper_value << "  computed "
       << std::setw(12) << c.computed_value << "  deviation " << std::setw(12) << c.deviation
       << " (" << to_string(c.spec.kind) << " tol " << c.spec.tolerance << ")\n";
  }
  os << "Overall: " << (report.overall_pass ? "PASS" : "FAIL") << '\n';
  return os.str();
}

}  // namespace

std::string render(const FullReport& report, Format format) {
  switch (format) {
    case Format::json:
      return json(report).dump(2) + "\n";
    case Format::csv:
      return render_csv(report);
    case Format::text:
      return render_text(report);
  }
  throw std::invalid_argument("unknown render format");
}

void to_json(json& j, const PhysicalConstants& k) {
  j = json{{"c", k.c},       {"eps0", k.eps0}, {"mu0", k.mu0},    {"hbar", k.hbar},
           {"e", k.e_charge}, {"m_e", k.m_e},  {"alpha", k.alpha}};
}

void to_json(json& j, const DerivedScales& ds) {
  j = json{{"r_c", ds.r_c},
           {"E_S", ds.E_S},
           {"mu_B", ds.mu_B},
           {"omega_D", ds.omega_D},
           {"rest_energy", ds.rest_energy}};
}

void to_json(json& j, const ResidualReport& r) {
  j = json{{"equation", to_string(r.equation)},
           {"n_points", r.n_points},
           {"max_rel_residual", r.max_rel_residual},
           {"mean_rel_residual", r.mean_rel_residual},
           {"analytic_max_rel_residual", r.analytic_max},
           {"normalization", r.normalization},
           {"normalization_label", r.normalization_label},
           {"zero_normalization", r.zero_normalization},
           {"tolerance", r.tolerance},
           {"seed", r.seed},
           {"h", r.h},
           {"passed", r.passed}};
}

void to_json(json& j, const DualValue& v) {
  j = json{{"closed_form", v.closed_form},
           {"quadrature", v.quadrature},
           {"rel_difference", v.rel_difference()}};
}

void to_json(json& j, const ObservableSet& obs) {
  j = json{{"Q_rms", obs.q_rms},
           {"mu_z",
            {{"closed_form", obs.mu_closed},
             {"quadrature_diagnostic", obs.mu_diagnostic.quadrature},
             {"quadrature_over_closed", obs.mu_diagnostic.ratio}}},
           {"L_z", obs.L_z},
           {"L_z_orientation", "magnitude; period-averaged momentum flows along -a_phi"},
           {"U", obs.U},
           {"v_phase",
            {{"value", obs.v_phase.value},
             {"faraday_consistent", obs.v_phase.faraday_consistent}}},
           {"Q_instantaneous_t0", obs.Q_instantaneous},
           {"resolution", {obs.resolution.n_r, obs.resolution.n_theta, obs.resolution.n_phi}}};
}

void to_json(json& j, const SolveResult& sr) {
  json trail = json::array();
  for (const auto& x : sr.trail) {
    trail.push_back({x.E0, x.R0, x.r0});
  }
  j = json{{"mode", to_string(sr.mode)},
           {"include_schwinger", sr.include_schwinger},
           {"E0", sr.E0},
           {"R0", sr.R0},
           {"r0", sr.r0},
           {"omega", sr.omega},
           {"U", sr.U},
           {"iterations", sr.iterations},
           {"residuals", sr.residuals},
           {"converged", sr.converged},
           {"precision_floor", sr.precision_floor},
           {"trail", trail}};
}

void to_json(json& j, const RatioReport& rr) {
  j = json{{"E0_over_ES", rr.E0_over_ES},
           {"R0_over_rc", rr.R0_over_rc},
           {"r0_over_rc", rr.r0_over_rc},
           {"U_over_mec2", rr.U_over_mec2},
           {"omega_over_omegaD", rr.omega_over_omegaD},
           {"si",
            {{"E0", rr.E0},
             {"R0", rr.R0},
             {"r0", rr.r0},
             {"U_J", rr.U_J},
             {"U_MeV", rr.U_MeV},
             {"omega", rr.omega}}}};
}

void to_json(json& j, const Claim& c) {
  j = json{{"id", c.spec.id},
           {"description", c.spec.description},
           {"unit", c.spec.unit},
           {"paper_value", c.spec.paper_value},
           {"computed_value", c.computed_value},
           {"deviation", c.deviation},
           {"tolerance", c.spec.tolerance},
           {"tolerance_kind", to_string(c.spec.kind)},
           {"passed", c.passed},
           {"source", c.source}};
  if (c.without_schwinger) {
    j["without_schwinger"] = {{"value", *c.without_schwinger},
                              {"passes", c.without_schwinger_passes.value_or(false)}};
  }
}

void to_json(json& j, const FullReport& r) {
  const auto& res = r.config.resolution;
  j = json{{"schema_version", kReportSchemaVersion},
           {"config",
            {{"resolution", {res.n_r, res.n_theta, res.n_phi}},
             {"h", r.config.sampling.h},
             {"samples", r.config.sampling.n_points},
             {"seed", r.config.sampling.seed},
             {"tolerance", r.config.sampling.tolerance},
             {"solver_tol", r.config.solve_options.tol},
             {"solver_max_iter", r.config.solve_options.max_iter},
             {"include_schwinger", r.config.include_schwinger}}},
           {"constants", r.constants},
           {"scales", r.scales},
           {"solves",
            {{"thin", r.thin},
             {"thin_without_schwinger", r.thin_without_schwinger},
             {"full", r.full}}},
           {"ratios", {{"thin", r.thin_ratios}, {"full", r.full_ratios}}},
           {"verification",
            {{"reports", r.verification.reports}, {"all_passed", r.verification.all_passed}}},
           {"observables", r.observables},
           {"claims", r.claims},
           {"overall_pass", r.overall_pass}};
}

json constants_document(const PhysicalConstants& k, const DerivedScales& ds) {
  return json{{"c", k.c},         {"eps0", k.eps0},   {"mu0", k.mu0},   {"hbar", k.hbar},
              {"e", k.e_charge},  {"m_e", k.m_e},     {"alpha", k.alpha}, {"r_c", ds.r_c},
              {"E_S", ds.E_S},    {"mu_B", ds.mu_B},  {"omega_D", ds.omega_D}};
}

}  // namespace torus
