#include "hmt/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "hmt/quadrature.hpp"

namespace hmt {

namespace {

using C = std::complex<double>;

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// <z, (1, xi)>_M = z0 - zvec . xi
double pair_null(const HPoint& z, const BDir& xi) {
  double s = z.c[0];
  for (int i = 0; i < xi.dim(); ++i) s -= z.c[i + 1] * xi.d[i];
  return s;
}

// normalized integral weight of sin^{n-2} on [0, pi]
double sphere_weight_norm(int n) {
  if (n == 2) return M_PI; // interpreting the axial rule over [0, pi] with weight 1
  return integrate_gl([n](double t) { return std::pow(std::sin(t), n - 2); }, 0.0, M_PI, 8, 24);
}

} // namespace

HPoint HPoint::origin(int n) {
  HPoint p;
  p.c.assign(n + 1, 0.0);
  p.c[0] = 1.0;
  return p;
}

HPoint HPoint::from_polar(int n, double r, const std::vector<double>& dir) {
  if (static_cast<int>(dir.size()) != n) throw std::invalid_argument("from_polar: bad direction size");
  HPoint p;
  p.c.assign(n + 1, 0.0);
  p.c[0] = std::cosh(r);
  const double nr = std::sqrt(dot(dir, dir));
  for (int i = 0; i < n; ++i) p.c[i + 1] = std::sinh(r) * dir[i] / nr;
  return p;
}

BDir BDir::axis(int n, int i) {
  BDir b;
  b.d.assign(n, 0.0);
  b.d[i] = 1.0;
  return b;
}

BDir BDir::from_angle(double phi) {
  BDir b;
  b.d = {std::cos(phi), std::sin(phi)};
  return b;
}

double minkowski(const HPoint& x, const HPoint& y) {
  double s = x.c[0] * y.c[0];
  for (std::size_t i = 1; i < x.c.size(); ++i) s -= x.c[i] * y.c[i];
  return s;
}

HPoint normalize_point(HPoint x) {
  if (x.c[0] <= 0.0) throw std::invalid_argument("normalize_point: x0 must be positive");
  const double q = minkowski(x, x);
  if (q <= 0.0) throw std::invalid_argument("normalize_point: not timelike");
  const double s = 1.0 / std::sqrt(q);
  for (double& v : x.c) v *= s;
  return x;
}

double distance(const HPoint& x, const HPoint& y) {
  const double m = std::max(1.0, minkowski(x, y));
  return std::acosh(m);
}

double busemann(const BDir& xi, const HPoint& base, const HPoint& y) {
  return std::log(pair_null(y, xi) / pair_null(base, xi));
}

double gromov_product(const BDir& xi, const BDir& eta, const HPoint& base) {
  const double cosang = dot(xi.d, eta.d);
  if (cosang >= 1.0 - 1e-15) return std::numeric_limits<double>::infinity();
  // midpoint of the geodesic joining xi and eta: (N_xi + N_eta)/sqrt(2<N_xi,N_eta>)
  const double p = 1.0 - cosang; // <N_xi, N_eta>_M
  HPoint mid;
  mid.c.assign(base.c.size(), 0.0);
  const double s = 1.0 / std::sqrt(2.0 * p);
  mid.c[0] = 2.0 * s;
  for (int i = 0; i < xi.dim(); ++i) mid.c[i + 1] = s * (xi.d[i] + eta.d[i]);
  return 0.5 * (busemann(xi, mid, base) + busemann(eta, mid, base));
}

HPoint geodesic_from_origin(const BDir& xi, double t) {
  HPoint p;
  p.c.assign(xi.dim() + 1, 0.0);
  p.c[0] = std::cosh(t);
  for (int i = 0; i < xi.dim(); ++i) p.c[i + 1] = std::sinh(t) * xi.d[i];
  return p;
}

std::vector<std::vector<double>> tangent_frame(const HPoint& x) {
  const int n = x.dim();
  auto mdot = [n](const std::vector<double>& a, const std::vector<double>& b) {
    double s = a[0] * b[0];
    for (int k = 1; k <= n; ++k) s -= a[k] * b[k];
    return s;
  };
  std::vector<std::vector<double>> frame;
  frame.reserve(n);
  for (int i = 1; i <= n && static_cast<int>(frame.size()) < n; ++i) {
    // project the spatial basis vector e_i to the tangent space at x:
    // v = e_i - <e_i, x>_M x, with <e_i, x>_M = -x_i (signature + - ... -)
    std::vector<double> v(n + 1, 0.0);
    v[i] = 1.0;
    for (int k = 0; k <= n; ++k) v[k] += x.c[i] * x.c[k];
    // Minkowski Gram-Schmidt against the previous (spacelike, <f,f> = -1) vectors
    for (const auto& f : frame) {
      const double pr = mdot(v, f);
      for (int k = 0; k <= n; ++k) v[k] += pr * f[k];
    }
    const double nv = mdot(v, v);
    if (nv > -1e-12) continue;
    const double inv = 1.0 / std::sqrt(-nv);
    for (double& a : v) a *= inv;
    frame.push_back(std::move(v));
  }
  if (static_cast<int>(frame.size()) != n) throw std::runtime_error("tangent_frame: degenerate frame");
  return frame;
}

HPoint exp_map(const HPoint& x, const std::vector<std::vector<double>>& frame,
               const std::vector<double>& u, double r) {
  const int n = x.dim();
  HPoint p;
  p.c.assign(n + 1, 0.0);
  const double ch = std::cosh(r), sh = std::sinh(r);
  for (int k = 0; k <= n; ++k) {
    double tangent = 0.0;
    for (std::size_t j = 0; j < frame.size(); ++j) tangent += u[j] * frame[j][k];
    p.c[k] = ch * x.c[k] + sh * tangent;
  }
  return p;
}

double VisibilityQuadrature::total_mass() const {
  double s = 0.0;
  for (double w : weights) s += w;
  return s;
}

VisibilityQuadrature axial_visibility_quadrature(int n, int panels, int order) {
  if (n < 2) throw std::invalid_argument("axial quadrature: n >= 2");
  VisibilityQuadrature q;
  q.axial = true;
  const PanelRule rule = panel_rule(0.0, M_PI, panels, order);
  const double norm = sphere_weight_norm(n);
  q.theta = rule.x;
  q.nodes.reserve(rule.x.size());
  q.weights.reserve(rule.x.size());
  for (std::size_t i = 0; i < rule.x.size(); ++i) {
    const double th = rule.x[i];
    BDir b;
    b.d.assign(n, 0.0);
    b.d[0] = std::cos(th);
    b.d[1] = std::sin(th);
    q.nodes.push_back(std::move(b));
    const double w = n == 2 ? 1.0 : std::pow(std::sin(th), n - 2);
    q.weights.push_back(rule.w[i] * w / norm);
  }
  return q;
}

VisibilityQuadrature circle_visibility_quadrature(int n_nodes) {
  VisibilityQuadrature q;
  q.axial = false;
  q.nodes.reserve(n_nodes);
  q.weights.assign(n_nodes, 1.0 / n_nodes);
  for (int j = 0; j < n_nodes; ++j) {
    q.theta.push_back(2.0 * M_PI * j / n_nodes);
    q.nodes.push_back(BDir::from_angle(2.0 * M_PI * j / n_nodes));
  }
  return q;
}

VisibilityQuadrature rebase_quadrature(const VisibilityQuadrature& q, const HPoint& x, double h) {
  VisibilityQuadrature out = q;
  const HPoint o = HPoint::origin(x.dim());
  for (std::size_t i = 0; i < q.nodes.size(); ++i)
    out.weights[i] *= std::exp(-h * busemann(q.nodes[i], o, x));
  return out;
}

C phi_via_boundary(int n, C lambda, double r, int order) {
  if (r < 0.0) throw std::domain_error("phi_via_boundary: r >= 0 required");
  if (r == 0.0) return 1.0;
  const double rho = 0.5 * (n - 1);
  const C expo = C(0, 1) * lambda - rho;
  const int panels = std::max(8, static_cast<int>(std::ceil(std::abs(lambda) * r)));
  const double norm = sphere_weight_norm(n);
  const double ch = std::cosh(r), sh = std::sinh(r);
  const C val = integrate_gl(
      [&](double th) -> C {
        const double base = ch - sh * std::cos(th);
        const double w = n == 2 ? 1.0 : std::pow(std::sin(th), n - 2);
        return std::exp(expo * std::log(base)) * w;
      },
      0.0, M_PI, panels, order);
  return val / norm;
}

C c_via_boundary(int n, C lambda, int order) {
  if (!(lambda.imag() < 0.0)) throw std::invalid_argument("c_via_boundary: Im lambda < 0 required");
  const double rho = 0.5 * (n - 1);
  const C expo = 2.0 * (C(0, 1) * lambda - rho); // exponent of sin(theta/2)
  const double kappa = expo.real() + (n - 1);    // integrand ~ theta^{kappa - 1} at 0
  if (kappa <= 0.0) throw std::domain_error("c_via_boundary: non-integrable endpoint");
  // theta = pi s^m turns the endpoint into s^{m kappa - 1} with m kappa >= 8;
  // the truncated tail below s_min is of size s_min^{m kappa} ~ 1e-16
  const int m = std::max(1, static_cast<int>(std::ceil(8.0 / kappa)));
  const double s_min = std::pow(10.0, -16.0 / (m * kappa));
  const int octaves = std::max(1, static_cast<int>(std::ceil(std::log2(1.0 / s_min)))) + 1;
  // the phase 2 Re(lambda) m log(s) advances by a fixed amount per octave
  const int per_octave =
      std::max(4, static_cast<int>(std::ceil(0.25 * std::abs(lambda.real()) * m)) + 2);
  const PanelRule rule = geometric_rule(s_min, 1.0, octaves, per_octave, order);
  const double norm = sphere_weight_norm(n);
  C total = 0.0;
  for (std::size_t i = 0; i < rule.x.size(); ++i) {
    const double s = rule.x[i];
    const double th = M_PI * std::pow(s, m);
    const double jac = M_PI * m * std::pow(s, m - 1);
    const double w = n == 2 ? 1.0 : std::pow(std::sin(th), n - 2);
    total += rule.w[i] * std::exp(expo * std::log(std::sin(0.5 * th))) * w * jac;
  }
  return total / norm;
}

double visibility_ball_mass(int n, double eps) {
  if (eps <= 0.0) return 0.0;
  if (eps >= 1.0) return 1.0;
  const double th0 = 2.0 * std::asin(eps);
  if (n == 2) return th0 / M_PI;
  const double norm = sphere_weight_norm(n);
  return integrate_gl([n](double t) { return std::pow(std::sin(t), n - 2); }, 0.0, th0, 8, 24) / norm;
}

C radialize(int n, const std::function<C(const HPoint&)>& f, const HPoint& x, double r,
            int n_nodes) {
  if (r == 0.0) return f(x);
  if (n != 2)
    throw std::invalid_argument("radialize: full sphere average implemented for n = 2 only");
  const auto frame = tangent_frame(x);
  C s = 0.0;
  for (int j = 0; j < n_nodes; ++j) {
    const double phi = 2.0 * M_PI * j / n_nodes;
    s += f(exp_map(x, frame, {std::cos(phi), std::sin(phi)}, r));
  }
  return s / static_cast<double>(n_nodes);
}

} // namespace hmt
