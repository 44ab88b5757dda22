#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "hmt/bumps.hpp"
#include "hmt/density.hpp"

namespace hmt {

// Spectral-side data for one model: lambda quadrature nodes on (0, lambda_max]
// with the Plancherel density |c(lambda)|^{-2} sampled on them. The constant
// C0 is filled in by calibrate_c0.
struct PlancherelTable {
  std::vector<double> lambda;
  std::vector<double> weight;
  std::vector<double> c_inv_sq;
  double lambda_max = 0.0;
  double c0 = 0.0;
  double rho = 0.0;
};

PlancherelTable build_plancherel_table(const DensityModel& m, double lambda_max,
                                       int panels_per_unit = 2, int order = 12,
                                       double r_max = 36.0, double tol = 1e-12);

// phi_lambda(r) sampled on a lambda x r product grid (real lambda).
struct PhiMatrix {
  std::vector<double> lambda;
  std::vector<double> r;
  std::vector<double> phi; // [i_lambda * r.size() + i_r]

  double at(std::size_t il, std::size_t ir) const { return phi[il * r.size() + ir]; }
};
PhiMatrix build_phi_matrix(const DensityModel& m, const std::vector<double>& lambdas,
                           const std::vector<double>& rs, double tol = 1e-12);

struct SphericalTransform {
  std::vector<double> lambda; // = PlancherelTable::lambda
  std::vector<double> values; // hat f(lambda), real for real radial profiles
  double support_radius = 0.0;
};

// quadrature nodes in r used for transforms against profiles of this support
std::vector<double> transform_r_nodes(double support, double lambda_max, int order = 16,
                                      std::vector<double>* weights = nullptr);

SphericalTransform spherical_ft(const DensityModel& m, const RadialFunction& f,
                                const PlancherelTable& pt, double tol = 1e-12,
                                const PhiMatrix* phi = nullptr);

// C0 from hat-inversion at r = 0 over several bumps; the cross-bump dispersion
// (relative) is written to *dispersion. Stores the result in pt.c0.
double calibrate_c0(const DensityModel& m, const std::vector<RadialFunction>& bumps,
                    PlancherelTable& pt, double* dispersion = nullptr, double tol = 1e-12);

std::vector<double> inverse_spherical_ft(const DensityModel& m, const SphericalTransform& ft,
                                         const PlancherelTable& pt,
                                         const std::vector<double>& r_out, double tol = 1e-12,
                                         const PhiMatrix* phi = nullptr);

struct PlancherelCheckResult {
  double lhs = 0.0;
  double rhs = 0.0;
  double rel_err = 0.0;
};
PlancherelCheckResult plancherel_check(const DensityModel& m, const RadialFunction& f,
                                       const RadialFunction& g, const PlancherelTable& pt,
                                       double tol = 1e-12);

// integral of h against the Haar weight A(r) dr on [0, r_hi]
double radial_integral(const DensityModel& m, const std::function<double(double)>& h, double r_hi,
                       int panels_per_unit = 12, int order = 16);

// ---- full (non-radial) transform on H^2 ----

// function on H^2 in geodesic polar coordinates (r, phi) about the origin
struct PolarFunction {
  std::function<double(double, double)> value;
  double support_radius = 0.0;
};

struct FullTransform {
  std::vector<double> lambda;  // nodes (from the Plancherel table)
  int n_angle = 0;             // boundary angles psi_j = 2 pi j / n_angle
  std::vector<std::complex<double>> values; // [i_lambda * n_angle + j]

  std::complex<double> at(std::size_t il, int j) const { return values[il * n_angle + j]; }
};

// Fourier transform based at the polar point (base_r, base_phi); (0, *) is o.
FullTransform full_ft_h2(const PolarFunction& f, const DensityModel& m, const PlancherelTable& pt,
                         int n_angle = 256, int r_panels = 24, int r_order = 12,
                         double base_r = 0.0, double base_phi = 0.0);

std::vector<std::complex<double>> full_inverse_h2(
    const FullTransform& ft, const PlancherelTable& pt,
    const std::vector<std::pair<double, double>>& points);

// C0 * integral of |ft|^2 over the Plancherel measure and the visibility measure
double full_plancherel_rhs(const FullTransform& ft, const PlancherelTable& pt);

// integral of f^2 over H^2 (A(r) dr x normalized circle measure)
double h2_norm_sq(const DensityModel& m, const PolarFunction& f, int r_panels = 24,
                  int r_order = 12, int n_phi = 256);

} // namespace hmt
