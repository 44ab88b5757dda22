#include "hmt/density.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "hmt/power_series.hpp"

namespace hmt {

namespace {

double eval_poly(const std::vector<double>& p, double r) {
  double s = 0.0;
  for (std::size_t k = p.size(); k-- > 0;) s = s * r + p[k];
  return s;
}

double eval_term(const ExpPolyTerm& t, double r) {
  double v = eval_poly(t.poly_cos, r) * std::cos(t.osc_rate * r);
  if (!t.poly_sin.empty()) v += eval_poly(t.poly_sin, r) * std::sin(t.osc_rate * r);
  return v * std::exp(t.exp_rate * r);
}

std::vector<double> poly_derivative(const std::vector<double>& p) {
  if (p.size() <= 1) return {};
  std::vector<double> d(p.size() - 1);
  for (std::size_t k = 1; k < p.size(); ++k) d[k - 1] = k * p[k];
  return d;
}

std::vector<double> poly_axpy(double a, const std::vector<double>& x, const std::vector<double>& y) {
  std::vector<double> out(std::max(x.size(), y.size()), 0.0);
  for (std::size_t k = 0; k < x.size(); ++k) out[k] += a * x[k];
  for (std::size_t k = 0; k < y.size(); ++k) out[k] += y[k];
  return out;
}

// Taylor series of one term to the given order
std::vector<double> term_series(const ExpPolyTerm& t, std::size_t order) {
  using namespace series;
  auto e = exp_series(t.exp_rate, order);
  auto part = mul(t.poly_cos, cos_series(t.osc_rate, order), order);
  if (!t.poly_sin.empty()) part = add(part, mul(t.poly_sin, sin_series(t.osc_rate, order), order));
  return mul(part, e, order);
}

} // namespace

ExpPolyTerm differentiate_term(const ExpPolyTerm& t) {
  ExpPolyTerm d;
  d.exp_rate = t.exp_rate;
  d.osc_rate = t.osc_rate;
  // (p cos + q sin)' + a (p cos + q sin)
  d.poly_cos = poly_axpy(t.exp_rate, t.poly_cos, poly_derivative(t.poly_cos));
  if (!t.poly_sin.empty() && t.osc_rate != 0.0)
    d.poly_cos = poly_axpy(t.osc_rate, t.poly_sin, d.poly_cos);
  d.poly_sin = poly_axpy(t.exp_rate, t.poly_sin, poly_derivative(t.poly_sin));
  if (t.osc_rate != 0.0) d.poly_sin = poly_axpy(-t.osc_rate, t.poly_cos, d.poly_sin);
  return d;
}

DensityModel DensityModel::hyperbolic(int n) {
  if (n < 2) throw std::invalid_argument("hyperbolic model requires n >= 2");
  DensityModel m;
  m.kind_ = ModelKind::Hyperbolic;
  m.n_ = n;
  m.rho_ = 0.5 * (n - 1);
  // sinh^{n-1} r = 2^{-(n-1)} e^{(n-1) r} (1 - e^{-2r})^{n-1}
  m.lead_coeff_ = std::pow(2.0, -(n - 1));
  m.next_degree_ = n - 3.0;
  // (n-1) coth r = (n-1)/r + (n-1)(r/3 - r^3/45 + 2 r^5/945 - r^7/4725 + ...)
  const double k = n - 1.0;
  m.frob_b_ = {k / 3.0, -k / 45.0, 2.0 * k / 945.0, -k / 4725.0};
  return m;
}

DensityModel DensityModel::damek_ricci(int p, int q) {
  if (p < 0 || q < 0 || (p == 0 && q == 0))
    throw std::invalid_argument("damek_ricci requires p, q >= 0, not both zero");
  DensityModel m;
  m.kind_ = ModelKind::DamekRicci;
  m.n_ = p + q + 1;
  m.p_ = p;
  m.q_ = q;
  m.rho_ = 0.25 * p + 0.5 * q;
  // 2^{p+q} sinh^{p+q}(r/2) cosh^q(r/2) -> 2^{-q} e^{2 rho r}
  m.lead_coeff_ = std::pow(2.0, -q);
  m.next_degree_ = 2.0 * m.rho_ - 1.0;
  const double s = p + q; // coefficient of coth(r/2)/2 is s/2, of tanh(r/2)/2 is q/2
  m.frob_b_ = {s / 12.0 + q / 4.0, -s / 720.0 - q / 48.0, s / 30240.0 + q / 480.0,
               -s / 1209600.0 - 17.0 * q / 80640.0};
  return m;
}

DensityModel DensityModel::exp_polynomial(std::vector<ExpPolyTerm> terms, int dimension) {
  if (terms.empty()) throw std::invalid_argument("exp_polynomial: no terms");
  if (dimension < 2) throw std::invalid_argument("exp_polynomial: dimension must be >= 2");
  for (std::size_t i = 1; i < terms.size(); ++i)
    if (!(terms[i - 1].exp_rate < terms[i].exp_rate))
      throw std::invalid_argument("exp_polynomial: terms must have strictly increasing exp rates");
  const ExpPolyTerm& top = terms.back();
  const bool top_constant = top.poly_cos.size() == 1 &&
                            (top.poly_sin.empty() || eval_poly(top.poly_sin, 1.0) == 0.0);
  if (top.osc_rate != 0.0 || !top_constant || top.poly_cos[0] <= 0.0)
    throw std::invalid_argument(
        "exp_polynomial: top term must be a positive constant times a pure exponential");
  if (top.exp_rate <= 0.0) throw std::invalid_argument("exp_polynomial: top exp rate must be positive");

  DensityModel m;
  m.kind_ = ModelKind::ExpPolynomial;
  m.n_ = dimension;
  m.rho_ = 0.5 * top.exp_rate;
  m.lead_coeff_ = top.poly_cos[0];
  m.next_degree_ = terms.size() >= 2 ? terms[terms.size() - 2].exp_rate : top.exp_rate - 2.0 * 20.0;
  m.terms_ = std::move(terms);

  // Frobenius data from the Taylor series of A: A = r^{2 alpha + 1} B(r) with
  // 2 alpha + 1 = n - 1, so the first n-1 Taylor coefficients must vanish and
  // B'/B is read off the shifted series.
  const int shift = dimension - 1;
  const std::size_t order = static_cast<std::size_t>(shift) + 9;
  std::vector<double> a_series(order + 1, 0.0);
  for (const auto& t : m.terms_) a_series = series::add(a_series, term_series(t, order));
  double scale = 0.0;
  for (int k = 0; k <= shift; ++k) scale = std::max(scale, std::abs(a_series[k]));
  for (int k = 0; k < shift; ++k)
    if (std::abs(a_series[k]) > 1e-9 * std::max(1.0, scale))
      throw std::invalid_argument(
          "exp_polynomial: density does not vanish to order n-1 at r = 0 (dimension inconsistent)");
  std::vector<double> b_series(a_series.begin() + shift, a_series.end());
  if (std::abs(b_series[0]) < 1e-300)
    throw std::invalid_argument("exp_polynomial: leading small-r coefficient vanishes");
  auto t_series = series::div(series::derivative(b_series), b_series, 7);
  m.frob_b_ = {t_series[1], t_series[3], t_series[5], t_series[7]};
  if (std::abs(t_series[0]) > 1e-9 || std::abs(t_series[2]) > 1e-7 ||
      std::abs(t_series[4]) > 1e-6 || std::abs(t_series[6]) > 1e-5)
    throw std::invalid_argument("exp_polynomial: B'/B is not odd; density is not an even extension");
  return m;
}

double DensityModel::eval_a(double r) const {
  if (r < 0.0) throw std::domain_error("eval_a: r must be >= 0");
  switch (kind_) {
    case ModelKind::Hyperbolic:
      return std::pow(std::sinh(r), n_ - 1);
    case ModelKind::DamekRicci:
      return std::pow(2.0, p_ + q_) * std::pow(std::sinh(0.5 * r), p_ + q_) *
             std::pow(std::cosh(0.5 * r), q_);
    case ModelKind::ExpPolynomial: {
      double s = 0.0;
      for (const auto& t : terms_) s += eval_term(t, r);
      return s;
    }
  }
  return 0.0;
}

double DensityModel::mean_curvature(double r) const {
  if (r <= 0.0) throw std::domain_error("mean_curvature: r must be > 0 (diverges like (2 alpha + 1)/r)");
  switch (kind_) {
    case ModelKind::Hyperbolic:
      return (n_ - 1) / std::tanh(r);
    case ModelKind::DamekRicci:
      return 0.5 * (p_ + q_) / std::tanh(0.5 * r) + 0.5 * q_ * std::tanh(0.5 * r);
    case ModelKind::ExpPolynomial: {
      double a = 0.0, ap = 0.0;
      for (const auto& t : terms_) {
        a += eval_term(t, r);
        ap += eval_term(differentiate_term(t), r);
      }
      return ap / a;
    }
  }
  return 0.0;
}

double DensityModel::mean_curvature_prime(double r) const {
  if (r <= 0.0) throw std::domain_error("mean_curvature_prime: r must be > 0");
  switch (kind_) {
    case ModelKind::Hyperbolic: {
      const double sh = std::sinh(r);
      return -(n_ - 1) / (sh * sh);
    }
    case ModelKind::DamekRicci: {
      const double sh = std::sinh(0.5 * r), ch = std::cosh(0.5 * r);
      return -0.25 * (p_ + q_) / (sh * sh) + 0.25 * q_ / (ch * ch);
    }
    case ModelKind::ExpPolynomial: {
      double a = 0.0, ap = 0.0, app = 0.0;
      for (const auto& t : terms_) {
        a += eval_term(t, r);
        const auto d = differentiate_term(t);
        ap += eval_term(d, r);
        app += eval_term(differentiate_term(d), r);
      }
      const double m = ap / a;
      return app / a - m * m;
    }
  }
  return 0.0;
}

double DensityModel::potential_g(double r) const {
  const double m = mean_curvature(r);
  // written as (m - 2rho)(m + 2rho)/4 + m'/2 to avoid the e^{2 rho r} cancellation
  return 0.25 * (m - 2.0 * rho_) * (m + 2.0 * rho_) + 0.5 * mean_curvature_prime(r);
}

std::string DensityModel::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case ModelKind::Hyperbolic:
      os << "hyperbolic n=" << n_;
      break;
    case ModelKind::DamekRicci:
      os << "damekricci p=" << p_ << " q=" << q_;
      break;
    case ModelKind::ExpPolynomial:
      os << "exppoly n=" << n_ << " terms=" << terms_.size();
      os.precision(17);
      for (const auto& t : terms_) {
        os << " [a=" << t.exp_rate << " b=" << t.osc_rate << " pc=";
        for (double c : t.poly_cos) os << c << ",";
        os << " ps=";
        for (double c : t.poly_sin) os << c << ",";
        os << "]";
      }
      break;
  }
  return os.str();
}

HypothesisReport check_hypotheses(const DensityModel& model, double r_max, double tol,
                                  double grid_step) {
  if (r_max < 10.0) throw std::invalid_argument("check_hypotheses: r_max must be >= 10");
  if (tol <= 0.0) throw std::invalid_argument("check_hypotheses: tol must be > 0");

  HypothesisReport rep;
  std::ostringstream det;
  const int npts = static_cast<int>(std::ceil(r_max / grid_step));

  // (H1) A positive and increasing
  rep.h1_ok = true;
  double prev_a = 0.0;
  for (int i = 1; i <= npts; ++i) {
    const double r = i * grid_step;
    const double a = model.eval_a(r);
    if (!(a > 0.0) || a < prev_a * (1.0 - 1e-14)) {
      rep.h1_ok = false;
      det << "H1 fails near r=" << r << "; ";
      break;
    }
    prev_a = a;
  }

  // (H2) A'/A non-increasing with positive limit
  rep.h2_ok = true;
  double prev_m = model.mean_curvature(grid_step);
  for (int i = 2; i <= npts; ++i) {
    const double r = i * grid_step;
    const double m = model.mean_curvature(r);
    if (m > prev_m + tol * std::max(1.0, std::abs(prev_m))) {
      rep.h2_ok = false;
      det << "H2 fails near r=" << r << "; ";
      break;
    }
    prev_m = m;
  }
  const double two_rho = 2.0 * model.rho();
  rep.rho_residual = std::abs(model.mean_curvature(r_max) - two_rho);
  if (!(two_rho > 0.0)) {
    rep.h2_ok = false;
    det << "H2: limit 2 rho not positive; ";
  }

  // (H3) A(r)/r^{2 alpha + 1} -> 1, tested by Richardson extrapolation in r^2
  {
    const double expo = 2.0 * model.alpha() + 1.0;
    auto s = [&](double r) { return model.eval_a(r) / std::pow(r, expo); };
    const double h = 1.0 / 64.0;
    const double s1 = s(h), s2 = s(0.5 * h), s3 = s(0.25 * h);
    const double e1 = (4.0 * s2 - s1) / 3.0;
    const double e2 = (4.0 * s3 - s2) / 3.0;
    const double b0 = (16.0 * e2 - e1) / 15.0;
    rep.h3_ok = std::abs(b0 - 1.0) <= std::max(100.0 * tol, 1e-8);
    if (!rep.h3_ok) det << "H3: extrapolated B(0)=" << b0 << "; ";
  }

  // (H4) integral r |G(r)| dr converges: Cauchy partial integrals, G bounded
  {
    const double r0 = 1.0;
    double partial = 0.0;
    double last_inc = 0.0;
    double max_g = 0.0;
    std::vector<double> incs;
    const int blocks = 8;
    const double block_w = (r_max - r0) / blocks;
    for (int b = 0; b < blocks; ++b) {
      double inc = 0.0;
      const int m = 64;
      for (int j = 0; j < m; ++j) {
        const double r = r0 + b * block_w + (j + 0.5) * block_w / m;
        const double g = std::abs(model.potential_g(r));
        max_g = std::max(max_g, g);
        inc += r * g * block_w / m;
      }
      partial += inc;
      last_inc = inc;
      incs.push_back(inc);
    }
    const bool cauchy = last_inc <= std::max(tol * std::max(1.0, partial), 1e-13) ||
                        (incs.size() >= 3 && incs[incs.size() - 1] < 0.5 * incs[incs.size() - 3]);
    rep.h4_ok = cauchy && std::isfinite(max_g);
    if (!rep.h4_ok) det << "H4: tail increment " << last_inc << " of " << partial << "; ";
  }

  // fitted decay of |G|. The nominal window is [r_max/2, r_max]; when G has
  // decayed below the double-precision floor there (cancellation in A'/A - 2rho),
  // the window shrinks to the largest range where |G| is numerically meaningful.
  {
    double r_hi = 0.0;
    for (double r = r_max; r >= 1.0; r -= 0.25)
      if (std::abs(model.potential_g(r)) > 1e-13) {
        r_hi = r;
        break;
      }
    if (r_hi < 2.0) {
      rep.g_identically_zero = true;
      rep.g_decay_slope = 0.0;
      rep.g_tail_constant = 0.0;
    } else {
      double sx = 0, sy = 0, sxx = 0, sxy = 0;
      int cnt = 0;
      for (double r = 0.5 * r_hi; r <= r_hi + 1e-12; r += r_hi / 64.0) {
        const double g = std::abs(model.potential_g(r));
        if (g < 1e-250) continue;
        const double y = std::log(g);
        sx += r;
        sy += y;
        sxx += r * r;
        sxy += r * y;
        ++cnt;
      }
      const double denom = cnt * sxx - sx * sx;
      rep.g_decay_slope = (cnt * sxy - sx * sy) / denom;
      rep.g_tail_constant = std::exp((sy - rep.g_decay_slope * sx) / cnt);
    }
  }

  // purely exponential growth constant on [1, r_max]
  {
    double lo = 1e300, hi = 0.0;
    for (double r = 1.0; r <= r_max + 1e-12; r += 0.25) {
      const double v = std::exp(-two_rho * r) * model.eval_a(r);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    rep.pure_exp_constant = std::max(hi, 1.0 / lo);
  }

  rep.alpha_half_excluded = std::abs(std::abs(model.alpha()) - 0.5) > 1e-12;
  if (!rep.alpha_half_excluded) det << "|alpha| = 1/2 (dimension 3 case excluded by the theory); ";
  rep.details = det.str();
  return rep;
}

} // namespace hmt
