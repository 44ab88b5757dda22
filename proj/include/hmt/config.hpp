#pragma once

#include <string>
#include <vector>

#include "hmt/density.hpp"

namespace hmt {

// Run configuration ingested from a line-based key=value file. '#' starts a
// comment. Unknown keys are rejected.
struct RunConfig {
  // model spec
  std::string model; // hyperbolic | damekricci | exppoly
  int n = 0;
  int p = -1;
  int q = -1;
  std::string terms_file;

  // numeric knobs
  double r_max = 40.0;
  double lambda_max = 40.0;
  double tol = 1e-10;
  double r_step = 1.0 / 64.0;
  double lambda_step = 0.1;
  int quad_order = 16;
  unsigned long long seed = 12345;

  std::string out_dir = "out";
  std::string cache = "off"; // read-write | read-only | off

  static RunConfig parse_file(const std::string& path);
  static RunConfig parse_string(const std::string& text, const std::string& origin = "<string>");

  DensityModel make_model() const;
  // canonical text of the full config closure (model + knobs), stable ordering
  std::string canonical() const;
};

std::vector<ExpPolyTerm> load_terms_csv(const std::string& path);

} // namespace hmt
