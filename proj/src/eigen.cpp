#include "hmt/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "hmt/ode.hpp"

namespace hmt {

namespace {

using C = std::complex<double>;

// Frobenius coefficients of the even solution u = sum c_k r^k of
// u'' + (A'/A) u' + mu u = 0 normalized by u(0) = 1, with
// A'/A = (2 alpha + 1)/r + b1 r + b3 r^3 + b5 r^5 + b7 r^7.
std::vector<C> frobenius_coeffs(const DensityModel& m, C mu, int order) {
  const double two_alpha = 2.0 * m.alpha();
  const auto& b = m.frobenius_b();
  std::vector<C> c(order + 1, C(0.0));
  c[0] = 1.0;
  for (int k = 2; k <= order; k += 2) {
    C s = mu * c[k - 2];
    const int js[4] = {1, 3, 5, 7};
    for (int idx = 0; idx < 4; ++idx) {
      const int j = js[idx];
      if (j > k - 2) break;
      s += b[idx] * static_cast<double>(k - 1 - j) * c[k - 1 - j];
    }
    c[k] = -s / (static_cast<double>(k) * (static_cast<double>(k) + two_alpha));
  }
  return c;
}

void series_eval(const std::vector<C>& c, double r, C& u, C& up) {
  u = C(0.0);
  up = C(0.0);
  for (std::size_t k = c.size(); k-- > 1;) {
    u = u * r + c[k];
    up = up * r + static_cast<double>(k) * c[k];
  }
  u = u * r + c[0];
}

} // namespace

namespace eigen_detail {

void jost_reduced(const DensityModel& model, C lambda, const std::vector<double>& points_desc,
                  double r_max, double tol, std::vector<C>& w, std::vector<C>& wp) {
  const C il = C(0, 1) * lambda;
  OdeState<2> y{std::exp(il * r_max), il * std::exp(il * r_max)};
  auto rhs = [&](double r, const OdeState<2>& s, OdeState<2>& d) {
    d[0] = s[1];
    d[1] = (model.potential_g(r) - lambda * lambda) * s[0];
  };
  w.resize(points_desc.size());
  wp.resize(points_desc.size());
  double t = r_max;
  for (std::size_t i = 0; i < points_desc.size(); ++i) {
    const double target = points_desc[i];
    if (target > t + 1e-14)
      throw std::invalid_argument("jost_reduced: points must be descending from r_max");
    if (target < t) ode_integrate<2>(rhs, t, target, y, 0.05 * tol, 1e-14);
    t = target;
    w[i] = y[0];
    wp[i] = y[1];
  }
}

} // namespace eigen_detail

EigenTable solve_phi(const DensityModel& model, C lambda, std::vector<double> r_grid, double tol) {
  if (r_grid.empty() || r_grid.front() != 0.0)
    throw std::invalid_argument("solve_phi: r_grid must start at 0");
  for (std::size_t i = 1; i < r_grid.size(); ++i)
    if (!(r_grid[i] > r_grid[i - 1]))
      throw std::invalid_argument("solve_phi: r_grid must be strictly increasing");
  if (tol <= 0.0) throw std::invalid_argument("solve_phi: tol must be > 0");

  const double rho = model.rho();
  const C mu = lambda * lambda + rho * rho;

  EigenTable table;
  table.lambda = lambda;
  table.tolerance = tol;

  const double r0 = std::min(0.1, 0.35 / std::sqrt(std::max(1.0, std::abs(mu))));
  table.series_radius = r0;
  const auto coeffs = frobenius_coeffs(model, mu, 10);

  table.phi.resize(r_grid.size());
  table.phi_prime.resize(r_grid.size());
  table.phi[0] = 1.0;
  table.phi_prime[0] = 0.0;

  // series on [0, r0]
  std::size_t i = 1;
  for (; i < r_grid.size() && r_grid[i] <= r0; ++i)
    series_eval(coeffs, r_grid[i], table.phi[i], table.phi_prime[i]);

  if (i < r_grid.size()) {
    // hand off to the reduced equation w'' = (G - lambda^2) w, w = A^{1/2} u
    C u, up;
    series_eval(coeffs, r0, u, up);
    const double a0 = model.eval_a(r0);
    const double m0 = model.mean_curvature(r0);
    OdeState<2> y{std::sqrt(a0) * u, std::sqrt(a0) * (up + 0.5 * m0 * u)};
    auto rhs = [&](double r, const OdeState<2>& s, OdeState<2>& d) {
      d[0] = s[1];
      d[1] = (model.potential_g(r) - lambda * lambda) * s[0];
    };
    double t = r0;
    for (; i < r_grid.size(); ++i) {
      ode_integrate<2>(rhs, t, r_grid[i], y, 0.05 * tol, 1e-300);
      t = r_grid[i];
      const double a = model.eval_a(t);
      const double sa = std::sqrt(a);
      const double m = model.mean_curvature(t);
      table.phi[i] = y[0] / sa;
      table.phi_prime[i] = (y[1] - 0.5 * m * y[0]) / sa;
    }
  }
  table.r_grid = std::move(r_grid);
  return table;
}

std::vector<C> phi_values(const DensityModel& model, C lambda, const std::vector<double>& radii,
                          double tol) {
  std::vector<double> sorted;
  sorted.reserve(radii.size() + 1);
  sorted.push_back(0.0);
  for (double r : radii) {
    if (r < 0.0) throw std::domain_error("phi_values: negative radius");
    if (r > 0.0) sorted.push_back(r);
  }
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  const EigenTable t = solve_phi(model, lambda, sorted, tol);
  std::vector<C> out(radii.size());
  for (std::size_t i = 0; i < radii.size(); ++i) {
    const auto it = std::lower_bound(t.r_grid.begin(), t.r_grid.end(), radii[i]);
    out[i] = t.phi[static_cast<std::size_t>(it - t.r_grid.begin())];
  }
  return out;
}

JostTable solve_jost(const DensityModel& model, C lambda, std::vector<double> r_grid, double r_max,
                     double tol) {
  if (std::abs(lambda) < 1e-12)
    throw std::invalid_argument("solve_jost: lambda = 0 gives a degenerate Jost pair");
  if (r_grid.empty()) throw std::invalid_argument("solve_jost: empty grid");
  for (std::size_t i = 1; i < r_grid.size(); ++i)
    if (!(r_grid[i] > r_grid[i - 1]))
      throw std::invalid_argument("solve_jost: r_grid must be strictly increasing");
  if (r_grid.front() <= 0.0) throw std::invalid_argument("solve_jost: grid must be positive");
  if (r_grid.back() > r_max) throw std::invalid_argument("solve_jost: grid exceeds r_max");
  if (std::abs(model.potential_g(r_max)) >= std::max(tol, 1e-13))
    throw std::invalid_argument("solve_jost: r_max too small, |G(r_max)| >= tol");

  JostTable table;
  table.lambda = lambda;
  table.r_max = r_max;

  std::vector<double> desc(r_grid.rbegin(), r_grid.rend());
  std::vector<C> wp_plus, wpp, wm, wmp;
  eigen_detail::jost_reduced(model, lambda, desc, r_max, tol, wp_plus, wpp);
  const bool real_lambda = std::abs(lambda.imag()) < 1e-14;
  if (!real_lambda) {
    eigen_detail::jost_reduced(model, -lambda, desc, r_max, tol, wm, wmp);
  }

  const double sqrt_c = std::sqrt(model.leading_coefficient());
  const std::size_t n = r_grid.size();
  table.phi_plus.resize(n);
  table.phi_plus_prime.resize(n);
  table.phi_minus.resize(n);
  table.phi_minus_prime.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = n - 1 - i; // undo descending order
    const double r = r_grid[i];
    const double sa = std::sqrt(model.eval_a(r));
    const double m = model.mean_curvature(r);
    const C w = wp_plus[j], dw = wpp[j];
    table.phi_plus[i] = sqrt_c * w / sa;
    table.phi_plus_prime[i] = sqrt_c * (dw - 0.5 * m * w) / sa;
    const C w2 = real_lambda ? std::conj(w) : wm[j];
    const C dw2 = real_lambda ? std::conj(dw) : wmp[j];
    table.phi_minus[i] = sqrt_c * w2 / sa;
    table.phi_minus_prime[i] = sqrt_c * (dw2 - 0.5 * m * w2) / sa;
  }
  table.r_grid = std::move(r_grid);
  return table;
}

CFunctionResult compute_c(const DensityModel& model, C lambda, double r_max, double tol) {
  if (std::abs(lambda) < 1e-12) throw std::invalid_argument("compute_c: lambda = 0 excluded");
  if (lambda.imag() > 1e-14)
    throw std::invalid_argument("compute_c: requires real lambda or Im lambda < 0");

  // matching points in [r_max/2, r_max]
  const int nm = 5;
  std::vector<double> match(nm);
  for (int k = 0; k < nm; ++k) match[k] = 0.5 * r_max + 0.5 * r_max * k / (nm - 1);

  std::vector<double> grid = {0.0};
  grid.insert(grid.end(), match.begin(), match.end());
  const EigenTable phi = solve_phi(model, lambda, grid, tol);

  std::vector<double> desc(match.rbegin(), match.rend());
  std::vector<C> wplus, wplus_p, wminus, wminus_p;
  eigen_detail::jost_reduced(model, lambda, desc, r_max, tol, wplus, wplus_p);
  const bool real_lambda = std::abs(lambda.imag()) < 1e-14;
  if (!real_lambda) eigen_detail::jost_reduced(model, -lambda, desc, r_max, tol, wminus, wminus_p);

  const double sqrt_c = std::sqrt(model.leading_coefficient());
  std::vector<C> cs(nm);
  for (int k = 0; k < nm; ++k) {
    const int j = nm - 1 - k;
    const double r = match[k];
    const double sa = std::sqrt(model.eval_a(r));
    const double m = model.mean_curvature(r);
    const C u = phi.phi[k + 1], up = phi.phi_prime[k + 1];
    const C wphi = sa * u;
    const C wphi_p = sa * (up + 0.5 * m * u);
    const C vm = real_lambda ? std::conj(wplus[j]) : wminus[j];
    const C vm_p = real_lambda ? std::conj(wplus_p[j]) : wminus_p[j];
    const C vp = wplus[j], vp_p = wplus_p[j];
    const C wr_phi_minus = wphi * vm_p - wphi_p * vm;
    const C wr_plus_minus = vp * vm_p - vp_p * vm;
    cs[k] = wr_phi_minus / (sqrt_c * wr_plus_minus);
  }

  CFunctionResult res;
  res.value = cs[nm / 2];
  double spread = 0.0;
  for (const C& c : cs) spread = std::max(spread, std::abs(c - res.value));
  res.matching_spread = spread / std::max(std::abs(res.value), 1e-300);
  std::ostringstream warn;
  if (std::abs(lambda) < 0.05)
    warn << "|lambda| small: Jost basis ill-conditioned, error bound ~" << res.matching_spread << "; ";
  if (res.matching_spread > 1e4 * tol)
    warn << "matching-point spread " << res.matching_spread << " exceeds 1e4*tol; ";
  res.warning = warn.str();
  return res;
}

C c_by_limit(const DensityModel& model, C lambda, double r_max, double tol) {
  if (!(lambda.imag() < 0.0))
    throw std::invalid_argument("c_by_limit: requires Im lambda < 0 strictly");
  double dr = 1.5;
  C q = std::exp(-2.0 * C(0, 1) * lambda * dr);
  if (std::abs(1.0 - q) < 0.05) {
    dr = 2.3;
    q = std::exp(-2.0 * C(0, 1) * lambda * dr);
  }
  const double r1 = r_max - dr, r2 = r_max;
  const EigenTable t = solve_phi(model, lambda, {0.0, r1, r2}, tol);
  const double rho = model.rho();
  const C mu_exp = C(0, 1) * lambda - rho;
  const C f1 = t.phi[1] * std::exp(-mu_exp * r1);
  const C f2 = t.phi[2] * std::exp(-mu_exp * r2);
  return (f2 - q * f1) / (1.0 - q);
}

CFunctionTable build_c_table(const DensityModel& model, const std::vector<double>& lambdas,
                             double r_max, double tol) {
  CFunctionTable t;
  t.lambda_grid = lambdas;
  t.c_values.resize(lambdas.size());
  t.c_abs_inv_sq.resize(lambdas.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < static_cast<long>(lambdas.size()); ++i) {
    const C c = compute_c(model, lambdas[i], r_max, tol).value;
    t.c_values[i] = c;
    t.c_abs_inv_sq[i] = 1.0 / std::norm(c);
  }
  return t;
}

} // namespace hmt
