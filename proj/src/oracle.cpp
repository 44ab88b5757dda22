#include "hmt/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace hmt {

namespace {

constexpr double kLanczosG = 7.0;
constexpr double kLanczosCoef[9] = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

Complex log_gamma_core(Complex z) {
  // valid for Re z >= 0.5
  z -= 1.0;
  Complex x = kLanczosCoef[0];
  for (int i = 1; i < 9; ++i) x += kLanczosCoef[i] / (z + static_cast<double>(i));
  const Complex t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * M_PI) + (z + 0.5) * std::log(t) - t + std::log(x);
}

} // namespace

Complex log_gamma(Complex z) {
  if (std::abs(z) < 1e-280) throw std::domain_error("log_gamma: pole at 0");
  // shift up out of the left half-plane; the subtracted logs keep ratios exact
  Complex shift = 0.0;
  while (z.real() < 0.5) {
    if (std::abs(z) < 1e-280) throw std::domain_error("log_gamma: pole at non-positive integer");
    shift -= std::log(z);
    z += 1.0;
  }
  return log_gamma_core(z) + shift;
}

Complex gamma_fn(Complex z) { return std::exp(log_gamma(z)); }

namespace {

// plain power series sum of 2F1, |z| < 1
Complex series_2f1(Complex a, Complex b, Complex c, Complex z) {
  Complex term = 1.0, sum = 1.0;
  for (int k = 0; k < 2000; ++k) {
    const double kd = k;
    term *= (a + kd) * (b + kd) / ((c + kd) * (kd + 1.0)) * z;
    sum += term;
    if (std::abs(term) < 1e-17 * (std::abs(sum) + 1e-300) && k > 2) return sum;
  }
  throw std::runtime_error("gauss_2f1: series did not converge");
}

bool near_nonpositive_integer(Complex z, double tol = 1e-10) {
  if (z.real() > 0.5) return false;
  const double r = std::round(z.real());
  return r <= 0.0 && std::abs(z.real() - r) < tol && std::abs(z.imag()) < tol;
}

} // namespace

Complex gauss_2f1(Complex a, Complex b, Complex c, double z) {
  if (near_nonpositive_integer(c)) throw std::domain_error("gauss_2f1: c is a non-positive integer");
  if (z > 0.0) throw std::domain_error("gauss_2f1: only z <= 0 supported");
  if (z == 0.0) return 1.0;
  if (z >= -0.5) return series_2f1(a, b, c, z);
  if (z > -2.0) {
    // Pfaff: 2F1(a,b;c;z) = (1-z)^{-a} 2F1(a, c-b; c; z/(z-1))
    const double w = z / (z - 1.0);
    return std::pow(1.0 - z, -a) * series_2f1(a, c - b, c, w);
  }
  // 1/z connection formula; requires a - b not an integer
  const Complex amb = a - b;
  const double re_round = std::round(amb.real());
  if (std::abs(amb.real() - re_round) < 1e-8 && std::abs(amb.imag()) < 1e-8)
    throw std::domain_error("gauss_2f1: a - b near an integer; connection formula degenerate");
  const double w = 1.0 / z;
  const Complex t1 = std::exp(log_gamma(c) + log_gamma(b - a) - log_gamma(b) - log_gamma(c - a) -
                              a * std::log(-z)) *
                     series_2f1(a, 1.0 - c + a, 1.0 - b + a, w);
  const Complex t2 = std::exp(log_gamma(c) + log_gamma(a - b) - log_gamma(a) - log_gamma(c - b) -
                              b * std::log(-z)) *
                     series_2f1(b, 1.0 - c + b, 1.0 - a + b, w);
  return t1 + t2;
}

JacobiParams JacobiParams::for_model(const DensityModel& m) {
  JacobiParams p{};
  switch (m.kind()) {
    case ModelKind::Hyperbolic:
      p.alpha_j = 0.5 * (m.dimension() - 2);
      p.beta_j = -0.5;
      p.variable_scale = 1.0;
      p.spectral_scale = 1.0;
      break;
    case ModelKind::DamekRicci:
      p.alpha_j = 0.5 * (m.dr_p() + m.dr_q() - 1);
      p.beta_j = 0.5 * (m.dr_q() - 1);
      p.variable_scale = 2.0;
      p.spectral_scale = 2.0;
      break;
    case ModelKind::ExpPolynomial:
      throw std::invalid_argument("JacobiParams: no closed-form oracle for exp-polynomial models");
  }
  p.rho_j = p.alpha_j + p.beta_j + 1.0;
  return p;
}

Complex jacobi_phi(const JacobiParams& p, Complex lambda, double r) {
  if (r < 0.0) throw std::domain_error("jacobi_phi: r must be >= 0");
  const double t = r / p.variable_scale;
  const Complex lj = p.spectral_scale * lambda;
  const Complex il = Complex(0, 1) * lj;
  const double sh = std::sinh(t);
  return gauss_2f1(0.5 * (p.rho_j + il), 0.5 * (p.rho_j - il), p.alpha_j + 1.0, -sh * sh);
}

Complex jacobi_c(const JacobiParams& p, Complex lambda) {
  if (std::abs(lambda) < 1e-14) throw std::domain_error("jacobi_c: lambda = 0 excluded");
  const Complex il = Complex(0, 1) * p.spectral_scale * lambda;
  // c(lam) = 2^{rho - i lam} Gamma(alpha+1) Gamma(i lam) /
  //          (Gamma((rho + i lam)/2) Gamma((alpha - beta + 1 + i lam)/2)),
  // invariant under the (t, lam) -> (r, lambda) rescaling since the Jost
  // normalizations match exactly.
  const Complex lg = (p.rho_j - il) * std::log(2.0) + log_gamma(p.alpha_j + 1.0) + log_gamma(il) -
                     log_gamma(0.5 * (p.rho_j + il)) -
                     log_gamma(0.5 * (p.alpha_j - p.beta_j + 1.0 + il));
  return std::exp(lg);
}

} // namespace hmt
