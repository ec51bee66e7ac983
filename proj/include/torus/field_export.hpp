#pragma once

#include <cstddef>
#include <json.hpp>
#include <ostream>
#include <vector>

#include "torus/fields.hpp"

namespace torus {

inline constexpr const char* kFieldCsvHeader =
    "R,phi,z,t,E_R,E_phi,E_z,B_z,rho,J_R,J_phi,S_R,S_phi,u";

/// Regular (R, phi, z) lattice covering the tube with a margin, sampled at
/// each listed time.
struct ExportGrid {
  std::size_t n_R = 33;
  std::size_t n_phi = 16;
  std::size_t n_z = 33;
  double extent = 1.5;  ///< half-width of the R and z window, in units of r0
  std::vector<double> times{0.0};
};

/// One CSV row per lattice point and time, header kFieldCsvHeader. Values
/// print with 17 significant digits.
void write_field_csv(std::ostream& out, const AnsatzParams& a, const ExportGrid& grid);

/// Units, conventions and lattice description accompanying the CSV.
nlohmann::json field_export_header(const AnsatzParams& a, const ExportGrid& grid);

}  // namespace torus
