#pragma once

#include <functional>
#include <random>

namespace hmt {

// Compactly supported radial profile u(r) with u == 0 for r >= support_radius.
// Profiles are even extensions of smooth functions (u'(0) = 0). Derivatives
// are optional; the named constructors below provide them in closed form.
struct RadialFunction {
  std::function<double(double)> u;
  double support_radius = 0.0;
  std::function<double(double)> du;
  std::function<double(double)> d2u;

  double operator()(double r) const { return r >= support_radius ? 0.0 : u(r); }
};

// chi(x) = exp(1 - 1/(1 - x^2)) for |x| < 1, 0 otherwise
double smooth_cutoff(double x);
double smooth_cutoff_d1(double x);
double smooth_cutoff_d2(double x);

// amplitude * exp(-a r^2) * chi(r / support)
RadialFunction gaussian_bump(double amplitude, double a, double support);
// amplitude * (1 + c2 r^2) * exp(-a r^2) * chi(r / support)
RadialFunction poly_gaussian_bump(double amplitude, double a, double c2, double support);
// window bump supported on [center - width, center + width], zero near 0
// (requires center > width > 0)
RadialFunction annulus_bump(double amplitude, double center, double width);
// even symmetric pair of Gaussians centered at +-c under a cutoff
RadialFunction twin_gaussian_bump(double amplitude, double a, double c);

RadialFunction random_radial_bump(std::mt19937_64& rng);

} // namespace hmt
