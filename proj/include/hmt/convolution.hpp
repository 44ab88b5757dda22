#pragma once

#include <string>
#include <vector>

#include "hmt/bumps.hpp"
#include "hmt/density.hpp"
#include "hmt/transform.hpp"

namespace hmt {

// (f * g)(x) at |x| = r via the geometric definition: the integral of
// u_f(s) A(s) times the sphere average of u_g(d(x, .)) over S(o, s), using
// the hyperbolic law of cosines. Supported for n in {2, 3, 4}.
std::vector<double> convolve_direct_hn(int n, const RadialFunction& f, const RadialFunction& g,
                                       const std::vector<double>& r_out, int s_panels_per_unit = 10,
                                       int order = 16);

// inverse spherical transform of hat f * hat g (any validated model)
std::vector<double> convolve_spectral(const DensityModel& m, const RadialFunction& f,
                                      const RadialFunction& g, const PlancherelTable& pt,
                                      const std::vector<double>& r_out, double tol = 1e-12);

struct PhiItNormResult {
  double value = 0.0;
  double tail_estimate = 0.0;
};
// L^q norm of phi_{it} against A(r) dr on [0, r_max]; requires |t| < gamma_q rho.
// q may be infinity (sup norm).
PhiItNormResult phi_it_norm(const DensityModel& m, double t, double q, double r_max,
                            double tol = 1e-12);

struct MultiplierReport {
  double p = 0.0;
  double q = 0.0; // conjugate exponent
  std::vector<double> t_grid;
  std::vector<double> phi_it_norms;
  double sup_f_hat = 0.0;        // max over families of |hat g|_inf / |g|_p
  double max_ratio = 0.0;        // max over families of |f*g|_2 / (|g|_p |f|_2)
  double max_chain_residual = 0.0; // worst term-by-term residual in the norm chain
  bool ratio_bounded = true;     // ratio <= |hat g|_inf/|g|_p per family
  unsigned seed = 0;
};

MultiplierReport kunze_stein_check(const DensityModel& m, const PlancherelTable& pt, double p,
                                   int n_families, unsigned seed, double tol = 1e-12);

} // namespace hmt
