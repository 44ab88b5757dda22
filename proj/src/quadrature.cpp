#include "hmt/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace hmt {

namespace {

struct GLTable {
  std::vector<double> x, w;
};

GLTable compute_gl(int n) {
  if (n < 1) throw std::invalid_argument("GaussLegendre: order must be >= 1");
  GLTable t;
  t.x.resize(n);
  t.w.resize(n);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    // Chebyshev-like initial guess, then Newton on P_n
    double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    t.x[i] = -z;
    t.x[n - 1 - i] = z;
    t.w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    t.w[n - 1 - i] = t.w[i];
  }
  return t;
}

const GLTable& gl_table(int n) {
  static std::map<int, GLTable> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_gl(n)).first;
  return it->second;
}

} // namespace

const std::vector<double>& GaussLegendre::nodes(int order) { return gl_table(order).x; }
const std::vector<double>& GaussLegendre::weights(int order) { return gl_table(order).w; }

PanelRule panel_rule(double a, double b, int panels, int order) {
  if (panels < 1) throw std::invalid_argument("panel_rule: panels must be >= 1");
  const auto& gx = GaussLegendre::nodes(order);
  const auto& gw = GaussLegendre::weights(order);
  PanelRule r;
  r.x.reserve(static_cast<std::size_t>(panels) * order);
  r.w.reserve(static_cast<std::size_t>(panels) * order);
  const double h = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * h;
    const double mid = lo + 0.5 * h;
    for (int j = 0; j < order; ++j) {
      r.x.push_back(mid + 0.5 * h * gx[j]);
      r.w.push_back(0.5 * h * gw[j]);
    }
  }
  return r;
}

PanelRule geometric_rule(double a, double b, int octaves, int panels_per_octave, int order) {
  PanelRule r;
  double hi = b;
  for (int k = 0; k < octaves; ++k) {
    const double lo = (k + 1 == octaves) ? a : a + (b - a) / std::pow(2.0, k + 1);
    PanelRule piece = panel_rule(lo, hi, panels_per_octave, order);
    r.x.insert(r.x.end(), piece.x.begin(), piece.x.end());
    r.w.insert(r.w.end(), piece.w.begin(), piece.w.end());
    hi = lo;
  }
  return r;
}

} // namespace hmt
