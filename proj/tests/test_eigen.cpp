#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "hmt/eigen.hpp"
#include "hmt/oracle.hpp"

using namespace hmt;
using C = std::complex<double>;

namespace {

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = a + (b - a) * i / (n - 1);
  return v;
}

} // namespace

TEST_CASE("phi normalization and symmetry") {
  const auto m = DensityModel::hyperbolic(2);
  const auto t = solve_phi(m, 1.5, linspace(0.0, 8.0, 17));
  CHECK(t.phi[0] == C(1.0));
  CHECK(t.phi_prime[0] == C(0.0));
  const auto tneg = solve_phi(m, -1.5, linspace(0.0, 8.0, 17));
  for (std::size_t i = 0; i < t.phi.size(); ++i)
    CHECK(std::abs(t.phi[i] - tneg.phi[i]) < 1e-11);
}

TEST_CASE("hyperbolic 3-space closed form") {
  const auto m = DensityModel::hyperbolic(3);
  const auto t = solve_phi(m, 1.0, linspace(0.0, 10.0, 21));
  for (std::size_t i = 1; i < t.r_grid.size(); ++i) {
    const double r = t.r_grid[i];
    const double expect = std::sin(r) / std::sinh(r);
    CHECK(t.phi[i].real() == doctest::Approx(expect).epsilon(1e-10));
    CHECK(std::abs(t.phi[i].imag()) < 1e-12);
  }
  CHECK(t.phi[2].real() == doctest::Approx(0.71602291536043387).epsilon(1e-10));
}

TEST_CASE("oracle agreement across models") {
  for (const auto& m : {DensityModel::hyperbolic(2), DensityModel::hyperbolic(4),
                        DensityModel::damek_ricci(2, 1)}) {
    const auto p = JacobiParams::for_model(m);
    for (double lam : {0.7, 2.5}) {
      const auto t = solve_phi(m, lam, linspace(0.0, 10.0, 26));
      for (std::size_t i = 0; i < t.r_grid.size(); ++i) {
        const C expect = jacobi_phi(p, lam, t.r_grid[i]);
        CHECK(std::abs(t.phi[i] - expect) <=
              1e-10 + 1e-9 * std::abs(expect));
      }
    }
  }
}

TEST_CASE("jost solutions: seeding normalization and wronskian") {
  const auto m = DensityModel::hyperbolic(2);
  const double rmax = 34.0;
  const auto jt = solve_jost(m, 1.0, linspace(17.0, rmax, 9), rmax);
  // asymptotic normalization at the seed
  const C last = jt.phi_plus.back();
  const C expect = std::exp((C(0, 1) * 1.0 - 0.5) * rmax);
  CHECK(std::abs(last / expect - 1.0) < 1e-10);
  // reduced wronskian is constant along the grid
  const double sc = std::sqrt(m.leading_coefficient());
  for (std::size_t i = 0; i < jt.r_grid.size(); ++i) {
    const double r = jt.r_grid[i];
    const double a = m.eval_a(r), mc = m.mean_curvature(r);
    auto to_v = [&](C phi, C dphi) {
      const double sa = std::sqrt(a);
      return std::pair<C, C>(sa * phi / sc, sa * (dphi + 0.5 * mc * phi) / sc);
    };
    const auto [vp, vpp] = to_v(jt.phi_plus[i], jt.phi_plus_prime[i]);
    const auto [vm, vmp] = to_v(jt.phi_minus[i], jt.phi_minus_prime[i]);
    const C wr = vp * vmp - vpp * vm;
    CHECK(std::abs(wr - C(0.0, -2.0)) < 1e-10);
  }
}

TEST_CASE("jost exact solution on hyperbolic 3-space") {
  // G vanishes identically, so Phi_lambda(r) = e^{i lambda r} / (2 sinh r)
  const auto m = DensityModel::hyperbolic(3);
  const double rmax = 34.0;
  const auto jt = solve_jost(m, 1.0, linspace(2.0, 30.0, 15), rmax);
  for (std::size_t i = 0; i < jt.r_grid.size(); ++i) {
    const double r = jt.r_grid[i];
    const C expect = std::exp(C(0, 1) * r) / (2.0 * std::sinh(r));
    CHECK(std::abs(jt.phi_plus[i] - expect) / std::abs(expect) < 1e-11);
  }
}

TEST_CASE("jost preconditions") {
  const auto m = DensityModel::damek_ricci(2, 1);
  CHECK_THROWS_AS(solve_jost(m, 0.0, {10.0, 20.0}, 36.0), std::invalid_argument);
  // r_max too small for the G tail
  CHECK_THROWS_AS(solve_jost(m, 1.0, {5.0, 10.0}, 12.0), std::invalid_argument);
}

TEST_CASE("computeC matches closed form for hyperbolic 3") {
  const auto m = DensityModel::hyperbolic(3);
  for (double lam : {0.4, 1.0, 3.7, 12.0}) {
    const auto res = compute_c(m, lam);
    const C expect = 1.0 / C(0.0, lam);
    CHECK(std::abs(res.value - expect) / std::abs(expect) < 1e-11);
    CHECK(res.matching_spread < 1e-9);
    // |c|^{-2} = lambda^2
    CHECK(1.0 / std::norm(res.value) == doctest::Approx(lam * lam).epsilon(1e-10));
  }
}

TEST_CASE("computeC matches the gamma-quotient oracle") {
  for (const auto& m : {DensityModel::hyperbolic(2), DensityModel::hyperbolic(4),
                        DensityModel::damek_ricci(2, 1)}) {
    const auto p = JacobiParams::for_model(m);
    for (double lam : {0.3, 1.0, 4.0, 15.0}) {
      const C got = compute_c(m, lam).value;
      const C expect = jacobi_c(p, lam);
      CHECK(std::abs(got - expect) / std::abs(expect) < 1e-7);
    }
  }
}

TEST_CASE("c conjugate symmetry from the solver") {
  const auto m = DensityModel::damek_ricci(2, 1);
  for (double lam : {0.8, 2.2}) {
    const C cp = compute_c(m, lam).value;
    const C cm = compute_c(m, -lam).value;
    CHECK(std::abs(cm - std::conj(cp)) / std::abs(cp) < 1e-9);
  }
}

TEST_CASE("basis identity phi = c(l) Phi_l + c(-l) Phi_{-l}") {
  const auto m = DensityModel::hyperbolic(2);
  const double lam = 1.7, rmax = 34.0;
  const C c = compute_c(m, lam).value;
  const auto grid = linspace(17.0, 30.6, 8);
  const auto jt = solve_jost(m, lam, grid, rmax);
  std::vector<double> fullgrid = {0.0};
  fullgrid.insert(fullgrid.end(), grid.begin(), grid.end());
  const auto pt = solve_phi(m, lam, fullgrid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const C recon = c * jt.phi_plus[i] + std::conj(c) * jt.phi_minus[i];
    const double scale = std::abs(jt.phi_plus[i]) + std::abs(jt.phi_minus[i]);
    CHECK(std::abs(pt.phi[i + 1] - recon) <= 1e-10 * scale);
  }
}

TEST_CASE("c by limit agrees with computeC for Im lambda < 0") {
  const auto m2 = DensityModel::hyperbolic(2);
  const C lam(1.0, -0.3);
  const C via_limit = c_by_limit(m2, lam, 36.0);
  const C via_wronskian = compute_c(m2, lam).value;
  CHECK(std::abs(via_limit - via_wronskian) / std::abs(via_wronskian) < 1e-6);

  const auto m3 = DensityModel::hyperbolic(3);
  const C got = c_by_limit(m3, C(0.0, -1.0), 36.0);
  CHECK(std::abs(got - C(1.0, 0.0)) < 1e-9); // c(-i) = 1/(i (-i)) = 1

  CHECK_THROWS_AS(c_by_limit(m2, C(1.0, 0.0), 36.0), std::invalid_argument);
  CHECK_THROWS_AS(c_by_limit(m2, C(1.0, 0.5), 36.0), std::invalid_argument);
}

TEST_CASE("positivity for lambda on the lower imaginary axis") {
  // iota lambda - rho real positive means phi is real and positive
  const auto m = DensityModel::hyperbolic(2);
  const C lam(0.0, -1.3); // i lambda - rho = 1.3 - 0.5 = 0.8 > 0
  const auto t = solve_phi(m, lam, linspace(0.0, 6.0, 13));
  for (const auto& v : t.phi) {
    CHECK(v.real() > 0.0);
    CHECK(std::abs(v.imag()) < 1e-10 * std::abs(v.real()));
  }
}

TEST_CASE("analyticity surrogate: mean-value reconstruction on a lambda disc") {
  const auto m = DensityModel::damek_ricci(2, 1);
  const double r = 1.5;
  const C lam0(1.2, 0.0);
  const double radius = 0.25;
  const int nth = 24;
  C avg = 0.0;
  for (int k = 0; k < nth; ++k) {
    const double th = 2.0 * M_PI * k / nth;
    const C lam = lam0 + radius * std::exp(C(0, 1) * th);
    avg += phi_values(m, lam, {r})[0];
  }
  avg /= static_cast<double>(nth);
  const C center = phi_values(m, lam0, {r})[0];
  CHECK(std::abs(avg - center) / std::abs(center) < 1e-9);
}

TEST_CASE("solve_phi validates inputs") {
  const auto m = DensityModel::hyperbolic(2);
  CHECK_THROWS_AS(solve_phi(m, 1.0, {0.5, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(solve_phi(m, 1.0, {0.0, 1.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(compute_c(m, 0.0), std::invalid_argument);
}
