#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "torus/constants.hpp"
#include "torus/maxwell.hpp"
#include "torus/observables.hpp"
#include "torus/solver.hpp"

/// Assembly of verification, observables and solves into one comparison
/// against the published numbers, plus JSON/CSV/text rendering.

namespace torus {

inline constexpr const char* kReportSchemaVersion = "1";

enum class ToleranceKind { absolute, relative };

/// A published number with its comparison rule.
struct ClaimSpec {
  std::string id;
  std::string description;
  std::string unit;
  double paper_value;
  double tolerance;
  ToleranceKind kind;
};

/// Static list of every published number the report checks. Ids are stable.
const std::vector<ClaimSpec>& claims_manifest();

struct Claim {
  ClaimSpec spec;
  double computed_value = 0.0;
  /// (computed - reference)/reference for relative claims, computed - reference for absolute.
  double deviation = 0.0;
  bool passed = false;
  std::string source;  ///< which computation produced computed_value
  /// Same quantity with the anomalous-moment factor dropped, where meaningful.
  std::optional<double> without_schwinger;
  std::optional<bool> without_schwinger_passes;
};

/// thin: thin-torus solve with the anomalous factor; obs: observables of the
/// full-correction solution.
std::vector<Claim> build_claims(const SolveResult& thin, const ObservableSet& obs,
                                     const DerivedScales& ds, const PhysicalConstants& k);

struct ReportConfig {
  Resolution resolution{};
  SamplingConfig sampling{};
  SolveOptions solve_options{};
  bool include_schwinger = true;
};

struct FullReport {
  PhysicalConstants constants{};
  DerivedScales scales{};
  ReportConfig config{};
  SolveResult thin;
  SolveResult thin_without_schwinger;
  SolveResult full;
  RatioReport thin_ratios{};
  RatioReport full_ratios{};
  VerificationResult verification;
  ObservableSet observables;
  std::vector<Claim> claims;
  bool overall_pass = false;
};

/// Runs every solve, verification and quadrature and collects the claims.
FullReport assemble_report(const ReportConfig& config = {});

enum class Format { json, csv, text };
Format parse_format(const std::string& text);

/// Deterministic serialization. JSON is canonical; CSV is the claims table.
std::string render(const FullReport& report, Format format);

inline constexpr const char* kClaimsCsvHeader =
    "id,description,unit,paper_value,computed_value,deviation,tolerance,tolerance_kind,passed";

void to_json(nlohmann::json& j, const PhysicalConstants& k);
void to_json(nlohmann::json& j, const DerivedScales& ds);
void to_json(nlohmann::json& j, const ResidualReport& r);
void to_json(nlohmann::json& j, const DualValue& v);
void to_json(nlohmann::json& j, const ObservableSet& obs);
void to_json(nlohmann::json& j, const SolveResult& sr);
void to_json(nlohmann::json& j, const RatioReport& rr);
void to_json(nlohmann::json& j, const Claim& c);
void to_json(nlohmann::json& j, const FullReport& r);

/// Flat constants dump: c, eps0, mu0, hbar, e, m_e, alpha, r_c, E_S, mu_B, omega_D.
nlohmann::json constants_document(const PhysicalConstants& k, const DerivedScales& ds);

}  // namespace torus
