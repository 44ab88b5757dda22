#include "hmt/bumps.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hmt {

double smooth_cutoff(double x) {
  const double x2 = x * x;
  if (x2 >= 1.0) return 0.0;
  return std::exp(1.0 - 1.0 / (1.0 - x2));
}

double smooth_cutoff_d1(double x) {
  const double x2 = x * x;
  if (x2 >= 1.0) return 0.0;
  const double om = 1.0 - x2;
  return smooth_cutoff(x) * (-2.0 * x / (om * om));
}

double smooth_cutoff_d2(double x) {
  const double x2 = x * x;
  if (x2 >= 1.0) return 0.0;
  const double om = 1.0 - x2;
  const double gp = -2.0 * x / (om * om);
  const double gpp = -2.0 / (om * om) - 8.0 * x2 / (om * om * om);
  return smooth_cutoff(x) * (gp * gp + gpp);
}

RadialFunction gaussian_bump(double amplitude, double a, double support) {
  return poly_gaussian_bump(amplitude, a, 0.0, support);
}

RadialFunction poly_gaussian_bump(double amplitude, double a, double c2, double support) {
  if (support <= 0.0) throw std::invalid_argument("poly_gaussian_bump: support must be positive");
  RadialFunction f;
  f.support_radius = support;
  f.u = [=](double r) {
    if (r >= support) return 0.0;
    return amplitude * (1.0 + c2 * r * r) * std::exp(-a * r * r) * smooth_cutoff(r / support);
  };
  f.du = [=](double r) {
    if (r >= support) return 0.0;
    const double e = std::exp(-a * r * r);
    const double p = 1.0 + c2 * r * r;
    const double base = amplitude * e;
    const double chi = smooth_cutoff(r / support), chi1 = smooth_cutoff_d1(r / support) / support;
    const double pe_prime = base * (2.0 * c2 * r - 2.0 * a * r * p);
    return pe_prime * chi + base * p * chi1;
  };
  f.d2u = [=](double r) {
    if (r >= support) return 0.0;
    const double e = std::exp(-a * r * r);
    const double p = 1.0 + c2 * r * r;
    const double base = amplitude * e;
    const double chi = smooth_cutoff(r / support);
    const double chi1 = smooth_cutoff_d1(r / support) / support;
    const double chi2 = smooth_cutoff_d2(r / support) / (support * support);
    const double pe = base * p;
    const double pe1 = base * (2.0 * c2 * r - 2.0 * a * r * p);
    const double pe2 =
        base * (2.0 * c2 - 2.0 * a * p - 4.0 * a * c2 * r * r -
                2.0 * a * r * (2.0 * c2 * r - 2.0 * a * r * p));
    return pe2 * chi + 2.0 * pe1 * chi1 + pe * chi2;
  };
  return f;
}

RadialFunction annulus_bump(double amplitude, double center, double width) {
  if (!(center > width && width > 0.0))
    throw std::invalid_argument("annulus_bump: requires center > width > 0");
  RadialFunction f;
  f.support_radius = center + width;
  f.u = [=](double r) { return amplitude * smooth_cutoff((r - center) / width); };
  f.du = [=](double r) { return amplitude * smooth_cutoff_d1((r - center) / width) / width; };
  f.d2u = [=](double r) {
    return amplitude * smooth_cutoff_d2((r - center) / width) / (width * width);
  };
  return f;
}

RadialFunction twin_gaussian_bump(double amplitude, double a, double c) {
  const double reach = std::min(std::sqrt(36.0 / a), 2.0);
  const double support = c + reach;
  RadialFunction f;
  f.support_radius = support;
  auto pair = [=](double r) {
    const double dm = r - c, dp = r + c;
    return std::exp(-a * dm * dm) + std::exp(-a * dp * dp);
  };
  auto pair1 = [=](double r) {
    const double dm = r - c, dp = r + c;
    return -2.0 * a * (dm * std::exp(-a * dm * dm) + dp * std::exp(-a * dp * dp));
  };
  auto pair2 = [=](double r) {
    const double dm = r - c, dp = r + c;
    return (-2.0 * a + 4.0 * a * a * dm * dm) * std::exp(-a * dm * dm) +
           (-2.0 * a + 4.0 * a * a * dp * dp) * std::exp(-a * dp * dp);
  };
  f.u = [=](double r) {
    if (r >= support) return 0.0;
    return amplitude * pair(r) * smooth_cutoff(r / support);
  };
  f.du = [=](double r) {
    if (r >= support) return 0.0;
    return amplitude * (pair1(r) * smooth_cutoff(r / support) +
                        pair(r) * smooth_cutoff_d1(r / support) / support);
  };
  f.d2u = [=](double r) {
    if (r >= support) return 0.0;
    return amplitude *
           (pair2(r) * smooth_cutoff(r / support) +
            2.0 * pair1(r) * smooth_cutoff_d1(r / support) / support +
            pair(r) * smooth_cutoff_d2(r / support) / (support * support));
  };
  return f;
}

RadialFunction random_radial_bump(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> amp(0.5, 2.0);
  std::uniform_real_distribution<double> sharp(2.0, 8.0);
  std::uniform_real_distribution<double> center(0.0, 1.2);
  return twin_gaussian_bump(amp(rng), sharp(rng), center(rng));
}

} // namespace hmt
