#include "hmt/convolution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "hmt/eigen.hpp"
#include "hmt/quadrature.hpp"

namespace hmt {

std::vector<double> convolve_direct_hn(int n, const RadialFunction& f, const RadialFunction& g,
                                       const std::vector<double>& r_out, int s_panels_per_unit,
                                       int order) {
  if (n < 2 || n > 4)
    throw std::invalid_argument("convolve_direct_hn: supported for n in {2, 3, 4} only");
  const DensityModel model = DensityModel::hyperbolic(n);

  const int s_panels =
      std::max(8, static_cast<int>(std::ceil(f.support_radius * s_panels_per_unit)));
  const PanelRule srule = panel_rule(0.0, f.support_radius, s_panels, order);
  const PanelRule trule = panel_rule(0.0, M_PI, 12, order);
  // normalization of the sphere weight sin^{n-2}
  double wnorm = 0.0;
  std::vector<double> tw(trule.x.size());
  for (std::size_t k = 0; k < trule.x.size(); ++k) {
    tw[k] = n == 2 ? trule.w[k] : trule.w[k] * std::pow(std::sin(trule.x[k]), n - 2);
    wnorm += tw[k];
  }
  for (double& w : tw) w /= wnorm;

  std::vector<double> fa(srule.x.size());
  for (std::size_t i = 0; i < srule.x.size(); ++i)
    fa[i] = f(srule.x[i]) * model.eval_a(srule.x[i]) * srule.w[i];

  std::vector<double> out(r_out.size(), 0.0);
#pragma omp parallel for schedule(dynamic)
  for (long j = 0; j < static_cast<long>(r_out.size()); ++j) {
    const double r = r_out[j];
    const double chr = std::cosh(r), shr = std::sinh(r);
    double total = 0.0;
    for (std::size_t i = 0; i < srule.x.size(); ++i) {
      if (fa[i] == 0.0) continue;
      const double s = srule.x[i];
      const double chs = std::cosh(s), shs = std::sinh(s);
      // skip spheres that cannot reach the support of g
      if (std::abs(r - s) >= g.support_radius) continue;
      double avg = 0.0;
      for (std::size_t k = 0; k < trule.x.size(); ++k) {
        const double cd = chr * chs - shr * shs * std::cos(trule.x[k]);
        const double d = std::acosh(std::max(1.0, cd));
        if (d < g.support_radius) avg += tw[k] * g(d);
      }
      total += fa[i] * avg;
    }
    out[j] = total;
  }
  return out;
}

std::vector<double> convolve_spectral(const DensityModel& m, const RadialFunction& f,
                                      const RadialFunction& g, const PlancherelTable& pt,
                                      const std::vector<double>& r_out, double tol) {
  const SphericalTransform ff = spherical_ft(m, f, pt, tol);
  const SphericalTransform fg = spherical_ft(m, g, pt, tol);
  SphericalTransform prod;
  prod.lambda = pt.lambda;
  prod.support_radius = f.support_radius + g.support_radius;
  prod.values.resize(pt.lambda.size());
  for (std::size_t i = 0; i < pt.lambda.size(); ++i) prod.values[i] = ff.values[i] * fg.values[i];
  return inverse_spherical_ft(m, prod, pt, r_out, tol);
}

PhiItNormResult phi_it_norm(const DensityModel& m, double t, double q, double r_max, double tol) {
  const double rho = m.rho();
  const bool q_infinite = std::isinf(q);
  if (!q_infinite && !(q > 2.0)) throw std::invalid_argument("phi_it_norm: q must be > 2");
  const double gamma_q = q_infinite ? 1.0 : 1.0 - 2.0 / q;
  if (!(std::abs(t) < gamma_q * rho))
    throw std::invalid_argument("phi_it_norm: |t| >= gamma_q rho, integral diverges");

  // phi_{it} is real and positive; sample it on quadrature nodes
  std::vector<double> rw;
  const int panels = std::max(16, static_cast<int>(std::ceil(r_max * 2)));
  PanelRule rule = panel_rule(0.0, r_max, panels, 12);
  const auto vals = phi_values(m, std::complex<double>(0.0, std::abs(t)), rule.x, tol);

  PhiItNormResult res;
  if (q_infinite) {
    res.value = 1.0; // phi_{it}(0) = 1 dominates
    res.tail_estimate = 0.0;
    return res;
  }
  double integral = 0.0;
  for (std::size_t i = 0; i < rule.x.size(); ++i)
    integral += rule.w[i] * std::pow(std::abs(vals[i].real()), q) * m.eval_a(rule.x[i]);
  // tail: |phi_it(r)| ~ K e^{(|t| - rho) r}, A(r) ~ C e^{2 rho r}
  const double k_fit = std::abs(vals.back().real()) * std::exp((rho - std::abs(t)) * r_max);
  const double expo = (std::abs(t) - rho) * q + 2.0 * rho;
  res.tail_estimate =
      std::pow(k_fit, q) * m.leading_coefficient() * std::exp(expo * r_max) / (-expo);
  res.value = std::pow(integral, 1.0 / q);
  return res;
}

MultiplierReport kunze_stein_check(const DensityModel& m, const PlancherelTable& pt, double p,
                                   int n_families, unsigned seed, double tol) {
  if (!(p >= 1.0 && p < 2.0)) throw std::invalid_argument("kunze_stein_check: p in [1, 2)");
  if (pt.c0 == 0.0) throw std::invalid_argument("kunze_stein_check: C0 not calibrated");
  MultiplierReport rep;
  rep.p = p;
  rep.q = p > 1.0 ? p / (p - 1.0) : std::numeric_limits<double>::infinity();
  rep.seed = seed;

  const double rho = m.rho();
  const double gamma_q = std::isinf(rep.q) ? 1.0 : 1.0 - 2.0 / rep.q;
  for (int k = 0; k <= 4; ++k) {
    const double t = 0.9 * gamma_q * rho * k / 4.0;
    rep.t_grid.push_back(t);
    rep.phi_it_norms.push_back(phi_it_norm(m, t, rep.q, 30.0, tol).value);
  }

  std::mt19937_64 rng(seed);
  for (int fam = 0; fam < n_families; ++fam) {
    const RadialFunction f = random_radial_bump(rng);
    const RadialFunction g = random_radial_bump(rng);

    const SphericalTransform ff = spherical_ft(m, f, pt, tol);
    const SphericalTransform fg = spherical_ft(m, g, pt, tol);

    // |hat g|_inf: grid max refined by a local quadratic fit
    double ghat_max = 0.0;
    std::size_t arg = 0;
    for (std::size_t i = 0; i < pt.lambda.size(); ++i)
      if (std::abs(fg.values[i]) > ghat_max) {
        ghat_max = std::abs(fg.values[i]);
        arg = i;
      }
    if (arg > 0 && arg + 1 < pt.lambda.size()) {
      const double y0 = std::abs(fg.values[arg - 1]), y1 = std::abs(fg.values[arg]),
                   y2 = std::abs(fg.values[arg + 1]);
      const double denom = y0 - 2.0 * y1 + y2;
      if (denom < 0.0) ghat_max = y1 - 0.125 * (y2 - y0) * (y2 - y0) / denom;
    }

    const double g_p = std::pow(
        radial_integral(m, [&](double r) { return std::pow(std::abs(g(r)), p); }, g.support_radius),
        1.0 / p);
    const double f_2 = std::sqrt(
        radial_integral(m, [&](double r) { return f(r) * f(r); }, f.support_radius));

    // |f*g|_2 via the spectral Plancherel identity
    double conv_2_sq = 0.0, fhat_2_sq = 0.0;
    for (std::size_t i = 0; i < pt.lambda.size(); ++i) {
      const double prod = ff.values[i] * fg.values[i];
      conv_2_sq += pt.weight[i] * prod * prod * pt.c_inv_sq[i];
      fhat_2_sq += pt.weight[i] * ff.values[i] * ff.values[i] * pt.c_inv_sq[i];
    }
    const double conv_2 = std::sqrt(pt.c0 * conv_2_sq);
    const double fhat_2 = std::sqrt(pt.c0 * fhat_2_sq);

    // term-by-term chain: |f*g|_2 = |hat f hat g|_2 <= |hat g|_inf |hat f|_2 = |hat g|_inf |f|_2
    const double chain_a = std::abs(fhat_2 - f_2) / f_2; // radial Plancherel
    const double chain_b = conv_2 <= ghat_max * fhat_2 * (1.0 + 1e-12)
                               ? 0.0
                               : (conv_2 - ghat_max * fhat_2) / (ghat_max * fhat_2);
    rep.max_chain_residual = std::max({rep.max_chain_residual, chain_a, chain_b});

    const double ratio = conv_2 / (g_p * f_2);
    const double bound = ghat_max / g_p;
    rep.max_ratio = std::max(rep.max_ratio, ratio);
    rep.sup_f_hat = std::max(rep.sup_f_hat, bound);
    if (ratio > bound * (1.0 + 1e-8)) rep.ratio_bounded = false;
  }
  return rep;
}

} // namespace hmt
