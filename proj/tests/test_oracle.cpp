#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "hmt/oracle.hpp"

using namespace hmt;

TEST_CASE("complex gamma against known values") {
  CHECK(gamma_fn(Complex(5.0, 0.0)).real() == doctest::Approx(24.0).epsilon(1e-13));
  CHECK(gamma_fn(Complex(0.5, 0.0)).real() == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-13));
  // |Gamma(i y)|^2 = pi / (y sinh(pi y))
  const double y = 1.7;
  const double expect = M_PI / (y * std::sinh(M_PI * y));
  CHECK(std::norm(gamma_fn(Complex(0.0, y))) == doctest::Approx(expect).epsilon(1e-12));
  // reflection-free shift: Gamma(z+1) = z Gamma(z)
  const Complex z(0.3, -2.2);
  const Complex lhs = gamma_fn(z + 1.0);
  const Complex rhs = z * gamma_fn(z);
  CHECK(std::abs(lhs - rhs) / std::abs(lhs) < 1e-13);
}

TEST_CASE("2F1 basic identities") {
  CHECK(gauss_2f1(Complex(0.3, 0.1), Complex(1.2, 0.0), Complex(2.5, 0.0), 0.0).real() ==
        doctest::Approx(1.0));
  // 2F1(1,1;2;z) = -log(1-z)/z at z = -1
  const Complex v = gauss_2f1(1.0, 1.0, 2.0, -1.0);
  CHECK(v.real() == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(std::abs(v.imag()) < 1e-14);
  // same identity deep in the 1/z regime
  const double z = -1e6;
  const Complex w = gauss_2f1(1.0 + 1e-7, 1.0, 2.0, z); // tiny shift avoids a = b degeneracy
  CHECK(w.real() == doctest::Approx(-std::log(1.0 - z) / z).epsilon(1e-6));
  // Pfaff regime
  const Complex u = gauss_2f1(1.0, 1.0, 2.0, -1.5);
  CHECK(u.real() == doctest::Approx(-std::log(2.5) / -1.5).epsilon(1e-12));
}

TEST_CASE("jacobi phi closed form on hyperbolic 3-space") {
  const auto p = JacobiParams::for_model(DensityModel::hyperbolic(3));
  CHECK(p.rho_j == doctest::Approx(1.0));
  for (double lam : {0.5, 1.0, 3.0, 8.0}) {
    for (double r : {0.2, 1.0, 2.0, 6.0, 9.5}) {
      const Complex v = jacobi_phi(p, lam, r);
      const double expect = std::sin(lam * r) / (lam * std::sinh(r));
      CHECK(v.real() == doctest::Approx(expect).epsilon(5e-11));
      CHECK(std::abs(v.imag()) < 1e-11);
    }
  }
  CHECK(jacobi_phi(p, 1.0, 1.0).real() == doctest::Approx(0.71602291536043387).epsilon(1e-10));
  CHECK(jacobi_phi(p, 2.0, 0.0).real() == doctest::Approx(1.0));
}

TEST_CASE("jacobi c-function closed form on hyperbolic 3-space") {
  const auto p = JacobiParams::for_model(DensityModel::hyperbolic(3));
  for (double lam : {0.3, 1.0, 5.0, 17.0}) {
    const Complex c = jacobi_c(p, lam);
    const Complex expect = 1.0 / Complex(0.0, lam);
    CHECK(std::abs(c - expect) / std::abs(expect) < 1e-12);
    // |c|^{-2} = lambda^2
    CHECK(1.0 / std::norm(c) == doctest::Approx(lam * lam).epsilon(1e-12));
  }
}

TEST_CASE("jacobi c conjugate symmetry on the real axis") {
  for (const auto& m : {DensityModel::hyperbolic(2), DensityModel::hyperbolic(5),
                        DensityModel::damek_ricci(2, 1)}) {
    const auto p = JacobiParams::for_model(m);
    for (double lam : {0.4, 2.7, 11.0}) {
      const Complex cp = jacobi_c(p, lam);
      const Complex cm = jacobi_c(p, -lam);
      CHECK(std::abs(cm - std::conj(cp)) / std::abs(cp) < 1e-12);
    }
  }
}

TEST_CASE("jacobi phi satisfies the radial ODE") {
  // u'' + (A'/A) u' + (lambda^2 + rho^2) u = 0, derivatives by central differences
  for (const auto& m : {DensityModel::hyperbolic(2), DensityModel::hyperbolic(4),
                        DensityModel::damek_ricci(2, 1)}) {
    const auto p = JacobiParams::for_model(m);
    const double lam = 1.3, r = 1.7, h = 1e-3;
    auto f = [&](double x) { return jacobi_phi(p, lam, x).real(); };
    // 4th-order central stencils
    const double u = f(r);
    const double up = (f(r - 2 * h) - 8 * f(r - h) + 8 * f(r + h) - f(r + 2 * h)) / (12 * h);
    const double upp =
        (-f(r - 2 * h) + 16 * f(r - h) - 30 * u + 16 * f(r + h) - f(r + 2 * h)) / (12 * h * h);
    const double residual =
        upp + m.mean_curvature(r) * up + (lam * lam + m.rho() * m.rho()) * u;
    CHECK(std::abs(residual) < 1e-8);
  }
}

TEST_CASE("scale correspondence for Damek-Ricci") {
  // phi in model coordinates equals the Jacobi function at t = r/2, lambda_j = 2 lambda
  const auto m = DensityModel::damek_ricci(2, 1);
  const auto p = JacobiParams::for_model(m);
  CHECK(p.variable_scale == doctest::Approx(2.0));
  CHECK(p.spectral_scale == doctest::Approx(2.0));
  CHECK(p.rho_j == doctest::Approx(2.0 * m.rho()).epsilon(1e-15));
}
