#include "torus/field_export.hpp"

#include <algorithm>
#include <iomanip>
#include <numbers>
#include <stdexcept>

namespace torus {

namespace {

double lattice(double lo, double hi, std::size_t i, std::size_t n) {
  return n == 1 ? 0.5 * (lo + hi) : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
}

}  // namespace

void write_field_csv(std::ostream& out, const AnsatzParams& a, const ExportGrid& grid) {
  if (grid.n_R == 0 || grid.n_phi == 0 || grid.n_z == 0) {
    throw std::invalid_argument("field export lattice must be non-empty");
  }
  const double half = grid.extent * a.r0;
  const double R_lo = std::max(0.0, a.R0 - half);
  const double R_hi = a.R0 + half;
  const double dphi = 2.0 * std::numbers::pi / static_cast<double>(grid.n_phi);

  out << kFieldCsvHeader << '\n';
  out << std::setprecision(17);
  for (const double t : grid.times) {
    for (std::size_t k = 0; k < grid.n_phi; ++k) {
      for (std::size_t j = 0; j < grid.n_z; ++j) {
        for (std::size_t i = 0; i < grid.n_R; ++i) {
          const CylindricalPoint p{lattice(R_lo, R_hi, i, grid.n_R),
                                   dphi * static_cast<double>(k),
                                   lattice(-half, half, j, grid.n_z)};
          const auto s = sample_fields(p, t, a);
          out << p.R << ',' << p.phi << ',' << p.z << ',' << t << ',' << s.E.R << ',' << s.E.phi
              << ',' << s.E.z << ',' << s.B.z << ',' << s.rho << ',' << s.J.R << ',' << s.J.phi
              << ',' << s.S.R << ',' << s.S.phi << ',' << s.u << '\n';
        }
      }
    }
  }
}

nlohmann::json field_export_header(const AnsatzParams& a, const ExportGrid& grid) {
  using nlohmann::json;
  return json{
      {"columns",
       {{{"name", "R"}, {"unit", "m"}},
        {{"name", "phi"}, {"unit", "rad"}},
        {{"name", "z"}, {"unit", "m"}},
        {{"name", "t"}, {"unit", "s"}},
        {{"name", "E_R"}, {"unit", "V/m"}},
        {{"name", "E_phi"}, {"unit", "V/m"}},
        {{"name", "E_z"}, {"unit", "V/m"}},
        {{"name", "B_z"}, {"unit", "T"}},
        {{"name", "rho"}, {"unit", "C/m^3"}},
        {{"name", "J_R"}, {"unit", "A/m^2"}},
        {{"name", "J_phi"}, {"unit", "A/m^2"}},
        {{"name", "S_R"}, {"unit", "W/m^2"}},
        {{"name", "S_phi"}, {"unit", "W/m^2"}},
        {{"name", "u"}, {"unit", "J/m^3"}}}},
      {"conventions",
       {{"basis", "cylindrical (a_R, a_phi, a_z)"},
        {"real_fields", "componentwise real part of the complex phasors"},
        {"phase", "psi = phi - omega t"},
        {"mask", "fields vanish for (R-R0)^2 + z^2 >= r0^2"},
        {"u", "eps0 E0^2 (1 + R/(4 R0)), time independent"},
        {"S", "instantaneous E x B / mu0"}}},
      {"params", {{"E0", a.E0}, {"R0", a.R0}, {"r0", a.r0}, {"omega", a.omega}, {"B0", a.B0}}},
      {"lattice",
       {{"n_R", grid.n_R},
        {"n_phi", grid.n_phi},
        {"n_z", grid.n_z},
        {"extent_in_r0", grid.extent},
        {"times", grid.times}}}};
}

}  // namespace torus
