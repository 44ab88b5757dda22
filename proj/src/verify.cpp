#include "hmt/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

#include "hmt/convolution.hpp"
#include "hmt/eigen.hpp"
#include "hmt/geometry.hpp"
#include "hmt/quadrature.hpp"

namespace hmt {

namespace {

using C = std::complex<double>;

VerifyRow make_row(const std::string& name, double lhs, double rhs, double tol,
                   double tol_override, bool relative = true) {
  VerifyRow row;
  row.name = name;
  row.lhs = lhs;
  row.rhs = rhs;
  row.abs_err = std::abs(lhs - rhs);
  const double scale = std::max(std::abs(lhs), std::abs(rhs));
  row.rel_err = scale > 0.0 ? row.abs_err / scale : 0.0;
  row.tol = tol_override > 0.0 ? tol_override : tol;
  row.pass = (relative ? row.rel_err : row.abs_err) <= row.tol;
  return row;
}

// row asserting lhs <= rhs + tol
VerifyRow bound_row(const std::string& name, double lhs, double rhs, double tol,
                    double tol_override) {
  VerifyRow row;
  row.name = name;
  row.lhs = lhs;
  row.rhs = rhs;
  row.abs_err = std::max(0.0, lhs - rhs);
  row.rel_err = rhs != 0.0 ? row.abs_err / std::abs(rhs) : row.abs_err;
  row.tol = tol_override > 0.0 ? tol_override : tol;
  row.pass = lhs <= rhs + row.tol;
  return row;
}

std::string tag(const DensityModel& m) { return "[" + m.describe() + "] "; }

} // namespace

std::vector<RadialFunction> standard_bumps() {
  return {gaussian_bump(1.0, 4.0, 2.5), poly_gaussian_bump(0.8, 3.0, 0.7, 2.2),
          gaussian_bump(1.3, 6.0, 1.8)};
}

RadialFunction disjoint_inner_bump() { return gaussian_bump(1.0, 6.0, 1.2); }
RadialFunction disjoint_annulus_bump() { return annulus_bump(1.0, 2.0, 0.55); }

PlancherelTable make_suite_table(const DensityModel& m, double lambda_max) {
  PlancherelTable pt = build_plancherel_table(m, lambda_max);
  calibrate_c0(m, standard_bumps(), pt);
  return pt;
}

VerifySuite verify_roundtrip(const DensityModel& m, const PlancherelTable* pt_in,
                             double lambda_max, double tol_override) {
  VerifySuite suite;
  suite.name = "roundtrip";
  PlancherelTable local;
  const PlancherelTable* pt = pt_in;
  if (!pt) {
    local = build_plancherel_table(m, lambda_max);
    pt = &local;
  }

  const auto bumps = standard_bumps();
  double dispersion = 0.0;
  PlancherelTable calibrated = *pt;
  calibrate_c0(m, bumps, calibrated, &dispersion);
  suite.rows.push_back(
      make_row(tag(m) + "C0 cross-bump dispersion", dispersion, 0.0, 1e-6, tol_override, false));

  int idx = 0;
  for (const auto& f : bumps) {
    ++idx;
    const SphericalTransform ft = spherical_ft(m, f, calibrated);
    std::vector<double> r_out;
    for (int i = 0; i <= 80; ++i) r_out.push_back(f.support_radius * i / 80.0);
    const std::vector<double> beyond = {f.support_radius + 0.3, f.support_radius + 0.9};
    std::vector<double> all = r_out;
    all.insert(all.end(), beyond.begin(), beyond.end());
    const std::vector<double> inv = inverse_spherical_ft(m, ft, calibrated, all);

    double sup_f = 0.0, sup_err = 0.0;
    for (std::size_t i = 0; i < r_out.size(); ++i) {
      sup_f = std::max(sup_f, std::abs(f(r_out[i])));
      sup_err = std::max(sup_err, std::abs(f(r_out[i]) - inv[i]));
    }
    std::ostringstream name;
    name << tag(m) << "round trip sup error, bump " << idx;
    suite.rows.push_back(make_row(name.str(), sup_err / sup_f, 0.0, 1e-6, tol_override, false));

    const double tail = std::max(std::abs(inv[r_out.size()]), std::abs(inv[r_out.size() + 1]));
    std::ostringstream name2;
    name2 << tag(m) << "support recovery beyond R, bump " << idx;
    suite.rows.push_back(
        make_row(name2.str(), tail / sup_f, 0.0, 1e-6, tol_override, false));
  }
  return suite;
}

VerifySuite verify_plancherel(const DensityModel& m, const PlancherelTable* pt_in,
                              double lambda_max, double tol_override) {
  VerifySuite suite;
  suite.name = "plancherel";
  PlancherelTable local;
  const PlancherelTable* pt = pt_in;
  if (!pt) {
    local = make_suite_table(m, lambda_max);
    pt = &local;
  }

  const auto bumps = standard_bumps();
  const std::pair<int, int> pairs[4] = {{0, 0}, {0, 1}, {1, 2}, {2, 2}};
  for (const auto& pr : pairs) {
    const auto res = plancherel_check(m, bumps[pr.first], bumps[pr.second], *pt);
    std::ostringstream name;
    name << tag(m) << "Plancherel pair (" << pr.first + 1 << "," << pr.second + 1 << ")";
    suite.rows.push_back(make_row(name.str(), res.lhs, res.rhs, 1e-6, tol_override));
  }

  const RadialFunction fd = disjoint_inner_bump();
  const RadialFunction gd = disjoint_annulus_bump();
  const auto res = plancherel_check(m, fd, gd, *pt);
  const double f2 = std::sqrt(radial_integral(m, [&](double r) { return fd(r) * fd(r); },
                                              fd.support_radius));
  const double g2 = std::sqrt(radial_integral(m, [&](double r) { return gd(r) * gd(r); },
                                              gd.support_radius));
  suite.rows.push_back(make_row(tag(m) + "Plancherel disjoint pair |rhs|/(|f|2 |g|2)",
                                std::abs(res.rhs) / (f2 * g2), 0.0, 1e-8, tol_override, false));
  return suite;
}

VerifySuite verify_boundary(const DensityModel& m, double tol_override) {
  if (m.kind() != ModelKind::Hyperbolic)
    throw std::invalid_argument("verify_boundary: hyperbolic models only");
  VerifySuite suite;
  suite.name = "boundary";
  const int n = m.dimension();

  // eigenfunction identity: boundary integral vs radial ODE
  const std::vector<double> lambdas = {0.0, 1.0, 2.0, 3.0, 4.0, 5.0};
  const std::vector<double> radii = {1.0, 2.0, 3.0, 4.0, 5.0};
  for (double lam : lambdas) {
    const auto tbl = solve_phi(m, lam, [&] {
      std::vector<double> g = {0.0};
      g.insert(g.end(), radii.begin(), radii.end());
      return g;
    }());
    for (std::size_t i = 0; i < radii.size(); ++i) {
      const C ode = tbl.phi[i + 1];
      const C bnd = phi_via_boundary(n, lam, radii[i]);
      std::ostringstream name;
      name << tag(m) << "phi boundary integral, lambda=" << lam << " r=" << radii[i];
      VerifyRow row = make_row(name.str(), ode.real(), bnd.real(), 1e-6, tol_override);
      row.abs_err = std::abs(ode - bnd);
      row.rel_err = row.abs_err / std::max(std::abs(ode), 1e-300);
      row.pass = row.rel_err <= row.tol;
      suite.rows.push_back(row);
    }
  }

  // c-function boundary integral vs the phi limit
  const std::vector<double> re = {0.5, 1.3, 2.1, 2.9, 3.7};
  const std::vector<double> im = {-0.1, -0.45, -0.8, -1.15, -1.5};
  for (double a : re)
    for (double b : im) {
      const C lam(a, b);
      const C lim = c_by_limit(m, lam, 36.0);
      const C bnd = c_via_boundary(n, lam);
      std::ostringstream name;
      name << tag(m) << "c boundary integral, lambda=" << a << (b < 0 ? "-" : "+")
           << std::abs(b) << "i";
      VerifyRow row = make_row(name.str(), std::abs(lim), std::abs(bnd), 1e-5, tol_override);
      row.abs_err = std::abs(lim - bnd);
      row.rel_err = row.abs_err / std::max(std::abs(lim), 1e-300);
      row.pass = row.rel_err <= row.tol;
      suite.rows.push_back(row);
    }
  return suite;
}

VerifySuite verify_convolution(const DensityModel& m, const PlancherelTable* pt_in,
                               double lambda_max, double tol_override) {
  if (m.kind() != ModelKind::Hyperbolic || m.dimension() != 2)
    throw std::invalid_argument("verify_convolution: hyperbolic n = 2 only");
  VerifySuite suite;
  suite.name = "convolution";
  PlancherelTable local;
  const PlancherelTable* pt = pt_in;
  if (!pt) {
    local = make_suite_table(m, lambda_max);
    pt = &local;
  }

  const RadialFunction f = gaussian_bump(1.0, 4.0, 2.0);
  const RadialFunction g = poly_gaussian_bump(0.9, 5.0, 0.4, 1.6);
  const double r_total = f.support_radius + g.support_radius;

  std::vector<double> rw;
  PanelRule rule = panel_rule(0.0, r_total, std::max(16, static_cast<int>(r_total * 12)), 12);
  const std::vector<double>& r_nodes = rule.x;
  rw = rule.w;

  const std::vector<double> conv_fg = convolve_direct_hn(2, f, g, r_nodes);
  const std::vector<double> conv_gf = convolve_direct_hn(2, g, f, r_nodes);
  const std::vector<double> conv_sp = convolve_spectral(m, f, g, *pt, r_nodes);

  double sup_direct = 0.0, sup_diff = 0.0, sup_comm = 0.0;
  for (std::size_t i = 0; i < r_nodes.size(); ++i) {
    sup_direct = std::max(sup_direct, std::abs(conv_fg[i]));
    sup_diff = std::max(sup_diff, std::abs(conv_fg[i] - conv_sp[i]));
    sup_comm = std::max(sup_comm, std::abs(conv_fg[i] - conv_gf[i]));
  }
  suite.rows.push_back(make_row(tag(m) + "geometric vs spectral convolution (rel sup)",
                                sup_diff / sup_direct, 0.0, 1e-6, tol_override, false));

  const double f1 = radial_integral(m, [&](double r) { return std::abs(f(r)); }, f.support_radius);
  const double g1 = radial_integral(m, [&](double r) { return std::abs(g(r)); }, g.support_radius);
  double conv1 = 0.0;
  for (std::size_t i = 0; i < r_nodes.size(); ++i)
    conv1 += rw[i] * std::abs(conv_fg[i]) * m.eval_a(r_nodes[i]);
  suite.rows.push_back(
      bound_row(tag(m) + "Young bound |f*g|_1 <= |f|_1 |g|_1", conv1, f1 * g1, 1e-8, tol_override));

  double sup_g = 0.0;
  for (double r = 0.0; r <= g.support_radius; r += 1e-3) sup_g = std::max(sup_g, std::abs(g(r)));
  suite.rows.push_back(make_row(tag(m) + "commutativity |f*g - g*f| / (|f|_1 |g|_inf)",
                                sup_comm / (f1 * sup_g), 0.0, 1e-8, tol_override, false));

  // transform of the geometric convolution vs the product of transforms
  const SphericalTransform ff = spherical_ft(m, f, *pt);
  const SphericalTransform fg = spherical_ft(m, g, *pt);
  const PhiMatrix pm = build_phi_matrix(m, pt->lambda, r_nodes);
  double sup_prod = 0.0, sup_idres = 0.0;
  for (std::size_t il = 0; il < pt->lambda.size(); ++il) {
    double hat_conv = 0.0;
    for (std::size_t j = 0; j < r_nodes.size(); ++j)
      hat_conv += rw[j] * conv_fg[j] * m.eval_a(r_nodes[j]) * pm.at(il, j);
    const double prod = ff.values[il] * fg.values[il];
    sup_prod = std::max(sup_prod, std::abs(prod));
    sup_idres = std::max(sup_idres, std::abs(hat_conv - prod));
  }
  suite.rows.push_back(make_row(tag(m) + "convolution-transform identity (rel sup)",
                                sup_idres / sup_prod, 0.0, 1e-6, tol_override, false));
  return suite;
}

VerifySuite verify_kunze_stein(const DensityModel& m, const PlancherelTable* pt_in,
                               double lambda_max, unsigned seed, double tol_override) {
  if (m.kind() != ModelKind::Hyperbolic || m.dimension() != 2)
    throw std::invalid_argument("verify_kunze_stein: hyperbolic n = 2 only");
  VerifySuite suite;
  suite.name = "kunze-stein";
  PlancherelTable local;
  const PlancherelTable* pt = pt_in;
  if (!pt) {
    local = make_suite_table(m, lambda_max);
    pt = &local;
  }
  const double rho = m.rho();

  for (double p : {1.0, 1.5, 1.9}) {
    const double q = p > 1.0 ? p / (p - 1.0) : std::numeric_limits<double>::infinity();
    const double gamma_q = std::isinf(q) ? 1.0 : 1.0 - 2.0 / q;
    std::ostringstream ptag;
    ptag << tag(m) << "p=" << p << " ";

    // |phi_it|_q finite and r_max-stable at the edge |t| = 0.9 gamma_q rho
    const double t_edge = 0.9 * gamma_q * rho;
    if (std::isinf(q)) {
      const auto n1 = phi_it_norm(m, t_edge, q, 30.0);
      suite.rows.push_back(
          make_row(ptag.str() + "phi_it sup norm", n1.value, 1.0, 1e-12, tol_override));
    } else {
      const auto n1 = phi_it_norm(m, t_edge, q, 30.0);
      const auto n2 = phi_it_norm(m, t_edge, q, 36.0);
      const double jump = std::abs(std::pow(n2.value, q) - std::pow(n1.value, q));
      const double allowed = 3.0 * (n1.tail_estimate + n2.tail_estimate) + 1e-12;
      suite.rows.push_back(
          bound_row(ptag.str() + "phi_it norm r_max-stability", jump, allowed, 0.0, tol_override));
    }

    const MultiplierReport rep = kunze_stein_check(m, *pt, p, 20, seed);
    suite.rows.push_back(bound_row(ptag.str() + "ratio |f*g|_2/(|g|_p |f|_2) <= |hat g|_inf/|g|_p",
                                   rep.max_ratio, rep.sup_f_hat, 1e-12, tol_override));
    suite.rows.push_back(make_row(ptag.str() + "norm chain residual", rep.max_chain_residual, 0.0,
                                  1e-8, tol_override, false));
  }

  // one non-radial f on H^2 through the full transform
  {
    const RadialFunction base = gaussian_bump(1.0, 4.0, 2.0);
    PolarFunction fnr;
    fnr.support_radius = base.support_radius;
    fnr.value = [base](double r, double phi) {
      return base(r) * (1.0 + 0.5 * std::cos(phi) + 0.3 * std::sin(2.0 * phi));
    };
    std::mt19937_64 rng(seed + 1);
    const RadialFunction g = random_radial_bump(rng);
    const SphericalTransform gh = spherical_ft(m, g, *pt);
    double ghat_max = 0.0;
    for (double v : gh.values) ghat_max = std::max(ghat_max, std::abs(v));

    const FullTransform ft = full_ft_h2(fnr, m, *pt, 128, 20, 12);
    double conv_sq = 0.0;
    for (std::size_t il = 0; il < pt->lambda.size(); ++il) {
      double inner = 0.0;
      for (int j = 0; j < ft.n_angle; ++j) inner += std::norm(ft.at(il, j));
      conv_sq += pt->weight[il] * pt->c_inv_sq[il] * inner / ft.n_angle *
                 gh.values[il] * gh.values[il];
    }
    const double conv2 = std::sqrt(pt->c0 * conv_sq);
    const double f2 = std::sqrt(h2_norm_sq(m, fnr, 24, 12, 256));
    suite.rows.push_back(bound_row(tag(m) + "non-radial f: |f*g|_2 <= |hat g|_inf |f|_2",
                                   conv2, ghat_max * f2 * (1.0 + 1e-5), 0.0, tol_override));
  }
  return suite;
}

} // namespace hmt
