#include "torus/geometry.hpp"

#include <numbers>

namespace torus {

TorusGeometry::TorusGeometry(double major_radius, double minor_radius)
    : major_(major_radius), minor_(minor_radius) {
  if (!(minor_radius > 0.0) || !(minor_radius < major_radius) || !std::isfinite(major_radius)) {
    throw std::invalid_argument("torus requires 0 < r0 < R0, got R0=" +
                                std::to_string(major_radius) +
                                " r0=" + std::to_string(minor_radius));
  }
}

double TorusGeometry::volume() const {
  return 2.0 * std::numbers::pi * std::numbers::pi * major_ * minor_ * minor_;
}

CylindricalPoint toroidal_to_cylindrical(const ToroidalPoint& p, const TorusGeometry& g) {
  return {g.R0() + p.r * std::cos(p.theta), p.phi, p.r * std::sin(p.theta)};
}

bool inside_torus(double R, double z, const TorusGeometry& g) {
  const double dR = R - g.R0();
  return dR * dR + z * z < g.r0() * g.r0();
}

double depth_inside(const CylindricalPoint& p, const TorusGeometry& g) {
  return g.r0() - std::hypot(p.R - g.R0(), p.z);
}

double jacobian(const ToroidalPoint& p, const TorusGeometry& g) {
  return p.r * (g.R0() + p.r * std::cos(p.theta));
}

namespace {

// Returns (P_n(x), P_n'(x)) by the three-term recurrence.
std::pair<double, double> legendre_with_derivative(std::size_t n, double x) {
  double p0 = 1.0;
  double p1 = x;
  for (std::size_t k = 2; k <= n; ++k) {
    const double kd = static_cast<double>(k);
    const double p2 = ((2.0 * kd - 1.0) * x * p1 - (kd - 1.0) * p0) / kd;
    p0 = p1;
    p1 = p2;
  }
  const double derivative = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
  return {p1, derivative};
}

}  // namespace

GaussLegendreRule gauss_legendre(std::size_t n) {
  if (n == 0) {
    throw std::invalid_argument("Gauss-Legendre rule needs at least one node");
  }
  GaussLegendreRule rule;
  rule.abscissae.resize(n);
  rule.weights.resize(n);
  const double nd = static_cast<double>(n);
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    // Tricomi initial guess, refined by Newton on P_n.
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (nd + 0.5));
    for (int iter = 0; iter < 100; ++iter) {
      const auto [value, slope] = legendre_with_derivative(n, x);
      const double dx = value / slope;
      x -= dx;
      if (std::abs(dx) < 1e-16) {
        break;
      }
    }
    const double slope = legendre_with_derivative(n, x).second;
    const double w = 2.0 / ((1.0 - x * x) * slope * slope);
    rule.abscissae[i] = -x;
    rule.abscissae[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

QuadratureGrid::QuadratureGrid(const TorusGeometry& g, Resolution res)
    : geometry_(g), resolution_(res) {
  if (res.n_r < 4 || res.n_theta < 4 || res.n_phi < 4) {
    throw std::invalid_argument("quadrature resolution counts must be >= 4");
  }
  const auto radial = gauss_legendre(res.n_r);
  const double half_r0 = 0.5 * g.r0();
  const double d_theta = 2.0 * std::numbers::pi / static_cast<double>(res.n_theta);
  const double d_phi = 2.0 * std::numbers::pi / static_cast<double>(res.n_phi);

  nodes_.reserve(res.n_r * res.n_theta * res.n_phi);
  for (std::size_t k = 0; k < res.n_phi; ++k) {
    const double phi = d_phi * static_cast<double>(k);
    for (std::size_t j = 0; j < res.n_theta; ++j) {
      const double theta = d_theta * static_cast<double>(j);
      for (std::size_t i = 0; i < res.n_r; ++i) {
        const ToroidalPoint p{half_r0 * (radial.abscissae[i] + 1.0), theta, phi};
        const double w = half_r0 * radial.weights[i] * d_theta * d_phi * jacobian(p, g);
        nodes_.push_back({p, toroidal_to_cylindrical(p, g), w});
      }
    }
  }
}

double QuadratureGrid::weight_sum() const {
  return integrate([](const QuadratureNode&) { return 1.0; }, *this);
}

}  // namespace torus
