#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace torus {

/// Circular-section torus. Construction enforces 0 < r0 < R0.
class TorusGeometry {
 public:
  TorusGeometry(double major_radius, double minor_radius);

  double R0() const { return major_; }
  double r0() const { return minor_; }
  double volume() const;

 private:
  double major_;
  double minor_;
};

/// Point in cylindrical coordinates (R, phi, z).
struct CylindricalPoint {
  double R = 0.0;
  double phi = 0.0;
  double z = 0.0;
};

/// Point in torus-local coordinates: minor radius r, poloidal angle theta,
/// azimuth phi.
struct ToroidalPoint {
  double r = 0.0;
  double theta = 0.0;
  double phi = 0.0;
};

CylindricalPoint toroidal_to_cylindrical(const ToroidalPoint& p, const TorusGeometry& g);

/// Strict interior test (R - R0)^2 + z^2 < r0^2. The tube surface is outside.
bool inside_torus(double R, double z, const TorusGeometry& g);
inline bool inside_torus(const CylindricalPoint& p, const TorusGeometry& g) {
  return inside_torus(p.R, p.z, g);
}

/// Distance from the tube surface for an interior point (negative outside).
double depth_inside(const CylindricalPoint& p, const TorusGeometry& g);

/// Volume element factor r (R0 + r cos theta); dV = jacobian dr dtheta dphi.
double jacobian(const ToroidalPoint& p, const TorusGeometry& g);

/// Gauss-Legendre nodes and weights on [-1, 1], ascending abscissae.
struct GaussLegendreRule {
  std::vector<double> abscissae;
  std::vector<double> weights;
};
GaussLegendreRule gauss_legendre(std::size_t n);

struct Resolution {
  std::size_t n_r = 32;
  std::size_t n_theta = 64;
  std::size_t n_phi = 64;

  Resolution doubled() const { return {2 * n_r, 2 * n_theta, 2 * n_phi}; }
};

struct QuadratureNode {
  ToroidalPoint point;
  CylindricalPoint position;
  double weight;  ///< rule weight times Jacobian [m^3]
};

/// Tensor-product rule over the torus volume: Gauss-Legendre in r on
/// [0, r0], periodic trapezoid in theta and phi.
class QuadratureGrid {
 public:
  QuadratureGrid(const TorusGeometry& g, Resolution res);

  const std::vector<QuadratureNode>& nodes() const { return nodes_; }
  const Resolution& resolution() const { return resolution_; }
  const TorusGeometry& geometry() const { return geometry_; }
  double weight_sum() const;

 private:
  TorusGeometry geometry_;
  Resolution resolution_;
  std::vector<QuadratureNode> nodes_;
};

inline QuadratureGrid build_grid(const TorusGeometry& g, Resolution res) {
  return QuadratureGrid(g, res);
}

class NonFiniteError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Weighted (compensated) sum of f over the grid nodes. f is called as
/// f(const QuadratureNode&) and must return a double.
template <class F>
double integrate(F&& f, const QuadratureGrid& grid) {
  double sum = 0.0;
  double carry = 0.0;
  for (const auto& node : grid.nodes()) {
    const double value = f(node);
    if (!std::isfinite(value)) {
      throw NonFiniteError("integrand is not finite at r=" + std::to_string(node.point.r) +
                           " theta=" + std::to_string(node.point.theta) +
                           " phi=" + std::to_string(node.point.phi));
    }
    const double term = value * node.weight;
    const double t = sum + term;
    if (std::abs(sum) >= std::abs(term)) {
      carry += (sum - t) + term;
    } else {
      carry += (term - t) + sum;
    }
    sum = t;
  }
  return sum + carry;
}

}  // namespace torus
