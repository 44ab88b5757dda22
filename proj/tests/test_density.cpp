#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hmt/density.hpp"
#include "hmt/power_series.hpp"

using namespace hmt;

namespace {

// the sinh^3 density of hyperbolic 4-space written out as exponentials
std::vector<ExpPolyTerm> sinh3_terms() {
  return {
      {-3.0, 0.0, {-1.0 / 8.0}, {}},
      {-1.0, 0.0, {3.0 / 8.0}, {}},
      {1.0, 0.0, {-3.0 / 8.0}, {}},
      {3.0, 0.0, {1.0 / 8.0}, {}},
  };
}

} // namespace

TEST_CASE("eval_a closed forms") {
  const auto h4 = DensityModel::hyperbolic(4);
  CHECK(h4.eval_a(1.0) == doctest::Approx(std::pow(std::sinh(1.0), 3)).epsilon(1e-14));
  CHECK(h4.eval_a(1.0) == doctest::Approx(1.6230678366196244).epsilon(1e-12));

  const auto dr = DensityModel::damek_ricci(2, 1);
  const double expected = 8.0 * std::pow(std::sinh(0.5), 3) * std::cosh(0.5);
  CHECK(dr.eval_a(1.0) == doctest::Approx(expected).epsilon(1e-14));
  CHECK(dr.eval_a(1.0) == doctest::Approx(1.27646).epsilon(1e-5));

  CHECK_THROWS_AS(h4.eval_a(-0.5), std::domain_error);
}

TEST_CASE("small-r normalization A(r)/r^{2 alpha + 1} -> 1") {
  for (const auto& m : {DensityModel::hyperbolic(2), DensityModel::hyperbolic(5),
                        DensityModel::damek_ricci(2, 1), DensityModel::damek_ricci(3, 2)}) {
    const double expo = 2.0 * m.alpha() + 1.0;
    const double ratio = m.eval_a(1e-4) / std::pow(1e-4, expo);
    CHECK(ratio == doctest::Approx(1.0).epsilon(1e-7));
  }
}

TEST_CASE("mean curvature closed forms and limits") {
  const auto h2 = DensityModel::hyperbolic(2);
  CHECK(h2.mean_curvature(1.0) == doctest::Approx(1.0 / std::tanh(1.0)).epsilon(1e-15));
  CHECK(h2.mean_curvature(1.0) == doctest::Approx(1.3130352854993312).epsilon(1e-12));

  const auto h5 = DensityModel::hyperbolic(5);
  CHECK(h5.mean_curvature(30.0) == doctest::Approx(2.0 * h5.rho()).epsilon(1e-14));

  const auto dr = DensityModel::damek_ricci(2, 1);
  CHECK(dr.rho() == doctest::Approx(2.0 / 4.0 + 1.0 / 2.0));
  CHECK(dr.mean_curvature(40.0) == doctest::Approx(2.0).epsilon(1e-13));

  CHECK_THROWS_AS(h2.mean_curvature(0.0), std::domain_error);
}

TEST_CASE("potential G closed form for n = 2 and vanishing for n = 3") {
  const auto h2 = DensityModel::hyperbolic(2);
  const double s1 = std::sinh(1.0), s2 = std::sinh(2.0);
  CHECK(h2.potential_g(1.0) == doctest::Approx(-0.25 / (s1 * s1)).epsilon(1e-12));
  CHECK(h2.potential_g(2.0) == doctest::Approx(-0.25 / (s2 * s2)).epsilon(1e-12));
  CHECK(h2.potential_g(1.0) == doctest::Approx(-0.18101541524157762).epsilon(1e-10));
  CHECK(h2.potential_g(2.0) == doctest::Approx(-0.019005457459517775).epsilon(1e-10));

  const auto h3 = DensityModel::hyperbolic(3);
  for (double r : {0.3, 1.0, 2.5, 7.0}) CHECK(std::abs(h3.potential_g(r)) < 1e-12);
}

TEST_CASE("exp polynomial reproduces hyperbolic(4) exactly") {
  const auto ep = DensityModel::exp_polynomial(sinh3_terms(), 4);
  const auto h4 = DensityModel::hyperbolic(4);
  CHECK(ep.rho() == doctest::Approx(h4.rho()).epsilon(1e-15));
  CHECK(ep.leading_coefficient() == doctest::Approx(h4.leading_coefficient()).epsilon(1e-15));
  for (double r : {0.5, 1.0, 2.0, 5.0, 10.0}) {
    CHECK(ep.eval_a(r) == doctest::Approx(h4.eval_a(r)).epsilon(1e-12));
    CHECK(ep.mean_curvature(r) == doctest::Approx(h4.mean_curvature(r)).epsilon(1e-11));
    CHECK(ep.potential_g(r) == doctest::Approx(h4.potential_g(r)).epsilon(2e-9));
  }
  // Frobenius coefficients from the series machinery match the coth expansion
  for (int k = 0; k < 4; ++k)
    CHECK(ep.frobenius_b()[k] == doctest::Approx(h4.frobenius_b()[k]).epsilon(1e-9));
}

TEST_CASE("exp polynomial validation") {
  // oscillatory top term
  std::vector<ExpPolyTerm> bad = {{1.0, 2.0, {1.0}, {0.5}}};
  CHECK_THROWS_AS(DensityModel::exp_polynomial(bad, 4), std::invalid_argument);
  // non-increasing rates
  std::vector<ExpPolyTerm> bad2 = {{1.0, 0.0, {1.0}, {}}, {1.0, 0.0, {2.0}, {}}};
  CHECK_THROWS_AS(DensityModel::exp_polynomial(bad2, 4), std::invalid_argument);
  // wrong dimension for the small-r exponent
  CHECK_THROWS_AS(DensityModel::exp_polynomial(sinh3_terms(), 5), std::invalid_argument);
}

TEST_CASE("hypothesis report for shipped models") {
  const auto rep4 = check_hypotheses(DensityModel::hyperbolic(4));
  CHECK(rep4.h1_ok);
  CHECK(rep4.h2_ok);
  CHECK(rep4.h3_ok);
  CHECK(rep4.h4_ok);
  CHECK(rep4.alpha_half_excluded);
  // G ~ e^{-2r} for hyperbolic, so the fitted slope is about -2
  CHECK(rep4.g_decay_slope == doctest::Approx(-2.0).epsilon(0.02));

  const auto rep3 = check_hypotheses(DensityModel::hyperbolic(3));
  CHECK(rep3.h1_ok);
  CHECK(rep3.h4_ok);
  CHECK_FALSE(rep3.alpha_half_excluded);
  CHECK(rep3.g_identically_zero);

  const auto repdr = check_hypotheses(DensityModel::damek_ricci(2, 1));
  CHECK(repdr.h1_ok);
  CHECK(repdr.h2_ok);
  CHECK(repdr.h3_ok);
  CHECK(repdr.h4_ok);
  CHECK(repdr.g_decay_slope == doctest::Approx(-1.0).epsilon(0.02));
}

TEST_CASE("purely exponential growth window") {
  for (const auto& m : {DensityModel::hyperbolic(2), DensityModel::damek_ricci(2, 1)}) {
    const auto rep = check_hypotheses(m);
    CHECK(rep.pure_exp_constant < 10.0);
    CHECK(rep.pure_exp_constant >= 1.0);
  }
}

TEST_CASE("monotonicity on a sampled grid") {
  const auto m = DensityModel::damek_ricci(3, 2);
  double prev_a = 0.0, prev_m = 1e9;
  for (double r = 0.1; r <= 25.0; r += 0.1) {
    const double a = m.eval_a(r);
    const double mc = m.mean_curvature(r);
    CHECK(a > prev_a);
    CHECK(mc <= prev_m + 1e-12);
    prev_a = a;
    prev_m = mc;
  }
}
