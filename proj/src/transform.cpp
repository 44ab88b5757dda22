#include "hmt/transform.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hmt/eigen.hpp"
#include "hmt/quadrature.hpp"

namespace hmt {

namespace {
using C = std::complex<double>;
}

PlancherelTable build_plancherel_table(const DensityModel& m, double lambda_max,
                                       int panels_per_unit, int order, double r_max, double tol) {
  if (lambda_max <= 0.0) throw std::invalid_argument("build_plancherel_table: lambda_max > 0");
  PlancherelTable pt;
  pt.lambda_max = lambda_max;
  pt.rho = m.rho();
  const int panels = std::max(4, static_cast<int>(std::ceil(lambda_max * panels_per_unit)));
  PanelRule rule = panel_rule(0.0, lambda_max, panels, order);
  pt.lambda = std::move(rule.x);
  pt.weight = std::move(rule.w);
  pt.c_inv_sq.resize(pt.lambda.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < static_cast<long>(pt.lambda.size()); ++i) {
    const C c = compute_c(m, pt.lambda[i], r_max, tol).value;
    pt.c_inv_sq[i] = 1.0 / std::norm(c);
  }
  return pt;
}

PhiMatrix build_phi_matrix(const DensityModel& m, const std::vector<double>& lambdas,
                           const std::vector<double>& rs, double tol) {
  PhiMatrix pm;
  pm.lambda = lambdas;
  pm.r = rs;
  pm.phi.resize(lambdas.size() * rs.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < static_cast<long>(lambdas.size()); ++i) {
    const auto vals = phi_values(m, lambdas[i], rs, tol);
    for (std::size_t j = 0; j < rs.size(); ++j) pm.phi[i * rs.size() + j] = vals[j].real();
  }
  return pm;
}

std::vector<double> transform_r_nodes(double support, double lambda_max, int order,
                                      std::vector<double>* weights) {
  // keep at most ~1.5 oscillations of phi_lambda_max per panel
  const int panels = std::max(8, static_cast<int>(std::ceil(support * lambda_max / 9.0)));
  PanelRule rule = panel_rule(0.0, support, panels, order);
  if (weights) *weights = std::move(rule.w);
  return rule.x;
}

SphericalTransform spherical_ft(const DensityModel& m, const RadialFunction& f,
                                const PlancherelTable& pt, double tol, const PhiMatrix* phi) {
  SphericalTransform out;
  out.lambda = pt.lambda;
  out.support_radius = f.support_radius;
  out.values.assign(pt.lambda.size(), 0.0);

  std::vector<double> rw;
  std::vector<double> rs = transform_r_nodes(f.support_radius, pt.lambda_max, 16, &rw);
  PhiMatrix local;
  if (!phi || phi->r != rs || phi->lambda != pt.lambda) {
    local = build_phi_matrix(m, pt.lambda, rs, tol);
    phi = &local;
  }
  std::vector<double> uA(rs.size());
  for (std::size_t j = 0; j < rs.size(); ++j) uA[j] = f(rs[j]) * m.eval_a(rs[j]) * rw[j];
  for (std::size_t i = 0; i < pt.lambda.size(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < rs.size(); ++j) s += uA[j] * phi->at(i, j);
    out.values[i] = s;
  }
  return out;
}

double calibrate_c0(const DensityModel& m, const std::vector<RadialFunction>& bumps,
                    PlancherelTable& pt, double* dispersion, double tol) {
  if (bumps.size() < 2) throw std::invalid_argument("calibrate_c0: need at least 2 bumps");
  std::vector<double> c0s;
  for (const auto& f : bumps) {
    const SphericalTransform ft = spherical_ft(m, f, pt, tol);
    double denom = 0.0;
    for (std::size_t i = 0; i < pt.lambda.size(); ++i)
      denom += pt.weight[i] * ft.values[i] * pt.c_inv_sq[i];
    c0s.push_back(f(0.0) / denom);
  }
  double mean = 0.0;
  for (double v : c0s) mean += v;
  mean /= c0s.size();
  double disp = 0.0;
  for (double v : c0s) disp = std::max(disp, std::abs(v - mean) / std::abs(mean));
  if (dispersion) *dispersion = disp;
  if (disp > 1e-6)
    throw std::runtime_error("calibrate_c0: cross-bump dispersion " + std::to_string(disp) +
                             " exceeds 1e-6 (inconsistent c or quadrature)");
  pt.c0 = mean;
  return mean;
}

std::vector<double> inverse_spherical_ft(const DensityModel& m, const SphericalTransform& ft,
                                         const PlancherelTable& pt,
                                         const std::vector<double>& r_out, double tol,
                                         const PhiMatrix* phi) {
  if (pt.c0 == 0.0) throw std::invalid_argument("inverse_spherical_ft: C0 not calibrated");
  if (ft.lambda != pt.lambda)
    throw std::invalid_argument("inverse_spherical_ft: transform grid mismatch");
  PhiMatrix local;
  if (!phi || phi->r != r_out || phi->lambda != pt.lambda) {
    local = build_phi_matrix(m, pt.lambda, r_out, tol);
    phi = &local;
  }
  std::vector<double> out(r_out.size(), 0.0);
  for (std::size_t j = 0; j < r_out.size(); ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < pt.lambda.size(); ++i)
      s += pt.weight[i] * ft.values[i] * pt.c_inv_sq[i] * phi->at(i, j);
    out[j] = pt.c0 * s;
  }
  return out;
}

PlancherelCheckResult plancherel_check(const DensityModel& m, const RadialFunction& f,
                                       const RadialFunction& g, const PlancherelTable& pt,
                                       double tol) {
  if (pt.c0 == 0.0) throw std::invalid_argument("plancherel_check: C0 not calibrated");
  const SphericalTransform ff = spherical_ft(m, f, pt, tol);
  const SphericalTransform fg = spherical_ft(m, g, pt, tol);
  PlancherelCheckResult res;
  const double hi = std::min(f.support_radius, g.support_radius);
  res.lhs = radial_integral(m, [&](double r) { return f(r) * g(r); }, hi);
  double s = 0.0;
  for (std::size_t i = 0; i < pt.lambda.size(); ++i)
    s += pt.weight[i] * ff.values[i] * fg.values[i] * pt.c_inv_sq[i];
  res.rhs = pt.c0 * s;
  const double scale = std::max(std::abs(res.lhs), std::abs(res.rhs));
  res.rel_err = scale > 0.0 ? std::abs(res.lhs - res.rhs) / scale : 0.0;
  return res;
}

double radial_integral(const DensityModel& m, const std::function<double(double)>& h, double r_hi,
                       int panels_per_unit, int order) {
  const int panels = std::max(8, static_cast<int>(std::ceil(r_hi * panels_per_unit)));
  return integrate_gl([&](double r) { return h(r) * m.eval_a(r); }, 0.0, r_hi, panels, order);
}

// ---- full transform on H^2 ----

FullTransform full_ft_h2(const PolarFunction& f, const DensityModel& m, const PlancherelTable& pt,
                         int n_angle, int r_panels, int r_order, double base_r, double base_phi) {
  if (m.dimension() != 2 || m.kind() != ModelKind::Hyperbolic)
    throw std::invalid_argument("full_ft_h2: hyperbolic n = 2 only");
  FullTransform ft;
  ft.lambda = pt.lambda;
  ft.n_angle = n_angle;
  ft.values.assign(pt.lambda.size() * n_angle, C(0.0));

  const PanelRule rrule = panel_rule(0.0, f.support_radius, r_panels, r_order);
  const double rho = pt.rho;

  // samples of f on the polar grid
  std::vector<double> fs(rrule.x.size() * n_angle);
  for (std::size_t ir = 0; ir < rrule.x.size(); ++ir)
    for (int mth = 0; mth < n_angle; ++mth)
      fs[ir * n_angle + mth] = f.value(rrule.x[ir], 2.0 * M_PI * mth / n_angle);

#pragma omp parallel for schedule(dynamic)
  for (long il = 0; il < static_cast<long>(pt.lambda.size()); ++il) {
    const C expo = C(0.0, -pt.lambda[il]) - rho;
    std::vector<C> kernel(n_angle);
    std::vector<C> acc(n_angle, C(0.0));
    for (std::size_t ir = 0; ir < rrule.x.size(); ++ir) {
      const double r = rrule.x[ir];
      const double ch = std::cosh(r), sh = std::sinh(r);
      const double wA = rrule.w[ir] * m.eval_a(r) / n_angle;
      for (int mth = 0; mth < n_angle; ++mth)
        kernel[mth] = std::exp(expo * std::log(ch - sh * std::cos(2.0 * M_PI * mth / n_angle)));
      const double* frow = &fs[ir * n_angle];
      for (int j = 0; j < n_angle; ++j) {
        C s(0.0);
        for (int mth = 0; mth < n_angle; ++mth) {
          int d = mth - j;
          if (d < 0) d += n_angle;
          s += frow[mth] * kernel[d];
        }
        acc[j] += wA * s;
      }
    }
    if (base_r != 0.0) {
      // change of basepoint: multiply by e^{(i lambda + rho) B_{xi, o}(x)}
      const C cov = C(0.0, pt.lambda[il]) + rho;
      for (int j = 0; j < n_angle; ++j) {
        const double pairing =
            std::cosh(base_r) - std::sinh(base_r) * std::cos(base_phi - 2.0 * M_PI * j / n_angle);
        acc[j] *= std::exp(cov * std::log(pairing));
      }
    }
    std::copy(acc.begin(), acc.end(), ft.values.begin() + il * n_angle);
  }
  return ft;
}

std::vector<C> full_inverse_h2(const FullTransform& ft, const PlancherelTable& pt,
                               const std::vector<std::pair<double, double>>& points) {
  if (pt.c0 == 0.0) throw std::invalid_argument("full_inverse_h2: C0 not calibrated");
  std::vector<C> out(points.size(), C(0.0));
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < static_cast<long>(points.size()); ++k) {
    const double r = points[k].first, phi = points[k].second;
    const double ch = std::cosh(r), sh = std::sinh(r);
    C total(0.0);
    for (std::size_t il = 0; il < pt.lambda.size(); ++il) {
      const C expo = C(0.0, pt.lambda[il]) - pt.rho;
      C inner(0.0);
      for (int j = 0; j < ft.n_angle; ++j) {
        const double pairing = ch - sh * std::cos(2.0 * M_PI * j / ft.n_angle - phi);
        inner += ft.at(il, j) * std::exp(expo * std::log(pairing));
      }
      total += pt.weight[il] * pt.c_inv_sq[il] * inner / static_cast<double>(ft.n_angle);
    }
    out[k] = pt.c0 * total;
  }
  return out;
}

double full_plancherel_rhs(const FullTransform& ft, const PlancherelTable& pt) {
  if (pt.c0 == 0.0) throw std::invalid_argument("full_plancherel_rhs: C0 not calibrated");
  double total = 0.0;
  for (std::size_t il = 0; il < pt.lambda.size(); ++il) {
    double inner = 0.0;
    for (int j = 0; j < ft.n_angle; ++j) inner += std::norm(ft.at(il, j));
    total += pt.weight[il] * pt.c_inv_sq[il] * inner / ft.n_angle;
  }
  return pt.c0 * total;
}

double h2_norm_sq(const DensityModel& m, const PolarFunction& f, int r_panels, int r_order,
                  int n_phi) {
  return integrate_gl(
      [&](double r) {
        double s = 0.0;
        for (int j = 0; j < n_phi; ++j) {
          const double v = f.value(r, 2.0 * M_PI * j / n_phi);
          s += v * v;
        }
        return s / n_phi * m.eval_a(r);
      },
      0.0, f.support_radius, r_panels, r_order);
}

} // namespace hmt
