#pragma once

#include <string>
#include <vector>

#include "hmt/bumps.hpp"
#include "hmt/density.hpp"
#include "hmt/transform.hpp"

namespace hmt {

struct VerifyRow {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_err = 0.0;
  double rel_err = 0.0;
  double tol = 0.0;
  bool pass = false;
};

struct VerifySuite {
  std::string name;
  std::vector<VerifyRow> rows;

  bool all_pass() const {
    for (const auto& r : rows)
      if (!r.pass) return false;
    return true;
  }
};

// the reference profiles used by the round-trip / Plancherel / convolution suites
std::vector<RadialFunction> standard_bumps();
RadialFunction disjoint_inner_bump();
RadialFunction disjoint_annulus_bump();

// Builds (or reuses) the spectral table for a suite run. tol_override, when
// positive, replaces every row tolerance (used to demonstrate honest failure).
VerifySuite verify_roundtrip(const DensityModel& m, const PlancherelTable* pt = nullptr,
                             double lambda_max = 36.0, double tol_override = 0.0);
VerifySuite verify_plancherel(const DensityModel& m, const PlancherelTable* pt = nullptr,
                              double lambda_max = 36.0, double tol_override = 0.0);
VerifySuite verify_boundary(const DensityModel& m, double tol_override = 0.0);
VerifySuite verify_convolution(const DensityModel& m, const PlancherelTable* pt = nullptr,
                               double lambda_max = 36.0, double tol_override = 0.0);
VerifySuite verify_kunze_stein(const DensityModel& m, const PlancherelTable* pt = nullptr,
                               double lambda_max = 36.0, unsigned seed = 20250809,
                               double tol_override = 0.0);

// calibrated table shared across suites
PlancherelTable make_suite_table(const DensityModel& m, double lambda_max = 36.0);

} // namespace hmt
