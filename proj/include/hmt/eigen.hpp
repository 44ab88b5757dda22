#pragma once

#include <complex>
#include <string>
#include <vector>

#include "hmt/density.hpp"

namespace hmt {

// Sampled spherical function phi_lambda and its derivative on an r grid.
struct EigenTable {
  std::complex<double> lambda;
  std::vector<double> r_grid; // increasing, r_grid[0] == 0
  std::vector<std::complex<double>> phi;
  std::vector<std::complex<double>> phi_prime;
  double series_radius = 0.0; // Frobenius/ODE switch point
  double tolerance = 0.0;
};

// Jost solutions Phi_{+-lambda} ~ e^{(+-i lambda - rho) r} sampled on a grid.
struct JostTable {
  std::complex<double> lambda;
  std::vector<double> r_grid; // increasing, positive
  std::vector<std::complex<double>> phi_plus, phi_plus_prime;
  std::vector<std::complex<double>> phi_minus, phi_minus_prime;
  double r_max = 0.0;
};

struct CFunctionResult {
  std::complex<double> value;
  double matching_spread = 0.0; // relative variation across matching points
  std::string warning;          // conditioning notes, empty if none
};

struct CFunctionTable {
  std::vector<double> lambda_grid;
  std::vector<std::complex<double>> c_values;
  std::vector<double> c_abs_inv_sq;
};

EigenTable solve_phi(const DensityModel& model, std::complex<double> lambda,
                     std::vector<double> r_grid, double tol = 1e-12);

// Convenience: phi_lambda at the given positive radii (grid need not start at 0).
std::vector<std::complex<double>> phi_values(const DensityModel& model,
                                             std::complex<double> lambda,
                                             const std::vector<double>& radii,
                                             double tol = 1e-12);

JostTable solve_jost(const DensityModel& model, std::complex<double> lambda,
                     std::vector<double> r_grid, double r_max, double tol = 1e-12);

// c(lambda) from the Wronskian of phi against the Jost pair at matching
// points in [r_max/2, r_max]. Real lambda != 0, or small negative Im lambda.
CFunctionResult compute_c(const DensityModel& model, std::complex<double> lambda,
                          double r_max = 36.0, double tol = 1e-12);

// c(lambda) = lim phi_lambda(r) e^{-(i lambda - rho) r} for Im lambda < 0,
// accelerated by eliminating the c(-lambda) e^{-2 i lambda r} term from two radii.
std::complex<double> c_by_limit(const DensityModel& model, std::complex<double> lambda,
                                double r_max = 36.0, double tol = 1e-12);

CFunctionTable build_c_table(const DensityModel& model, const std::vector<double>& lambdas,
                             double r_max = 36.0, double tol = 1e-12);

namespace eigen_detail {
// reduced solutions w = A^{1/2} u of w'' = (G - lambda^2) w; returns w, w' at
// the requested points for the e^{+i lambda r}-normalized seed at r_max
void jost_reduced(const DensityModel& model, std::complex<double> lambda,
                  const std::vector<double>& points_desc, double r_max, double tol,
                  std::vector<std::complex<double>>& w, std::vector<std::complex<double>>& wp);
} // namespace eigen_detail

} // namespace hmt
