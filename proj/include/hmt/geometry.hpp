#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace hmt {

// Point of the hyperboloid model of H^n: (n+1) coordinates (x0, xvec) with
// x0^2 - |xvec|^2 = 1, x0 > 0. Renormalized on construction.
struct HPoint {
  std::vector<double> c; // size n+1

  int dim() const { return static_cast<int>(c.size()) - 1; }
  static HPoint origin(int n);
  // point at distance r from the origin in the given unit direction
  static HPoint from_polar(int n, double r, const std::vector<double>& dir);
};

// Unit direction in the boundary sphere S^{n-1}.
struct BDir {
  std::vector<double> d; // size n, |d| = 1
  int dim() const { return static_cast<int>(d.size()); }
  static BDir axis(int n, int i = 0);
  static BDir from_angle(double phi); // n = 2
};

double minkowski(const HPoint& x, const HPoint& y);
HPoint normalize_point(HPoint x);
double distance(const HPoint& x, const HPoint& y);

// B_{xi,x}(y) = log(<y, (1,xi)> / <x, (1,xi)>)
double busemann(const BDir& xi, const HPoint& base, const HPoint& y);

// Gromov product (xi|eta)_x; +infinity when xi == eta.
double gromov_product(const BDir& xi, const BDir& eta, const HPoint& base);

// geodesic from x with initial tangent built from the frame directions
HPoint geodesic_from_origin(const BDir& xi, double t);

// orthonormal tangent frame at x (n Minkowski-unit spacelike vectors)
std::vector<std::vector<double>> tangent_frame(const HPoint& x);
// exp_x(r * (sum_k u_k e_k)) for a unit coefficient vector u
HPoint exp_map(const HPoint& x, const std::vector<std::vector<double>>& frame,
               const std::vector<double>& u, double r);

// Quadrature over the visibility measure lambda_x on the boundary sphere.
struct VisibilityQuadrature {
  std::vector<BDir> nodes;
  std::vector<double> weights; // positive, sum to 1 (for base o)
  // axial rules integrate functions of the polar angle only
  bool axial = false;
  std::vector<double> theta; // polar angles for axial rules

  double total_mass() const;
};

// Axial rule on [0, pi] with weight sin^{n-2}(theta), mass one. Axis is e1.
VisibilityQuadrature axial_visibility_quadrature(int n, int panels, int order);
// Full circle rule for n = 2 (uniform trapezoid, spectrally accurate).
VisibilityQuadrature circle_visibility_quadrature(int n_nodes);
// Reweights a base-o rule to the visibility measure at x (eq. of the
// Radon-Nikodym derivative e^{-h B_{xi,o}(x)}).
VisibilityQuadrature rebase_quadrature(const VisibilityQuadrature& q, const HPoint& x, double h);

// phi_lambda(r) as the boundary integral of e^{(i lambda - rho) B_{xi,o}} over
// the visibility measure (axial quadrature; panel count grows with |lambda| r).
std::complex<double> phi_via_boundary(int n, std::complex<double> lambda, double r, int order = 16);

// c(lambda) as the boundary integral of e^{-2(i lambda - rho)(xi|eta)_o} for
// Im lambda < 0; the theta = 0 endpoint singularity is removed by substitution.
std::complex<double> c_via_boundary(int n, std::complex<double> lambda, int order = 16);

// visibility mass of the Gromov ball B^{(o)}(xi, eps) = {eta : e^{-(xi|eta)_o} < eps}
double visibility_ball_mass(int n, double eps);

// Sphere average of f over S(x, r) (full average on H^2; radial f any n).
std::complex<double> radialize(int n, const std::function<std::complex<double>(const HPoint&)>& f,
                               const HPoint& x, double r, int n_nodes);

} // namespace hmt
