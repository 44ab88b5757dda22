#pragma once

#include <complex>

#include "hmt/density.hpp"

namespace hmt {

using Complex = std::complex<double>;

// log Gamma(z), principal branch up to multiples of 2 pi i that cancel when
// exponentiating ratios (Lanczos approximation, relative error ~1e-13).
Complex log_gamma(Complex z);
Complex gamma_fn(Complex z);

// Gauss hypergeometric function for real z <= 0 (power series, Pfaff
// transformation, and the 1/z connection formula).
Complex gauss_2f1(Complex a, Complex b, Complex c, double z);

// Jacobi-analysis parameters matched to a density model. The correspondence
// maps the model radius r to the Jacobi variable t = r / variable_scale and
// the spectral parameter to lambda_j = spectral_scale * lambda.
struct JacobiParams {
  double alpha_j;
  double beta_j;
  double rho_j; // alpha_j + beta_j + 1
  double variable_scale;
  double spectral_scale;

  static JacobiParams for_model(const DensityModel& m);
};

// phi_lambda(t) = 2F1((rho_j + i lam_j)/2, (rho_j - i lam_j)/2; alpha_j + 1; -sinh^2 t)
// evaluated in model coordinates: jacobi_phi(params, lambda, r) with r the model radius.
Complex jacobi_phi(const JacobiParams& p, Complex lambda, double r);

// Gamma-quotient c-function in the normalization Phi_{+-lambda} ~ e^{(+-i lambda - rho) r}.
Complex jacobi_c(const JacobiParams& p, Complex lambda);

} // namespace hmt
