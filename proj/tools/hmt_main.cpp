// Command-line front door: model validation, table generation, verification
// suites and oracle dumps, with deterministic CSV output and on-disk caching.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hmt/config.hpp"
#include "hmt/csv.hpp"
#include "hmt/density.hpp"
#include "hmt/eigen.hpp"
#include "hmt/oracle.hpp"
#include "hmt/transform.hpp"
#include "hmt/verify.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fs = std::filesystem;
using namespace hmt;

namespace {

constexpr const char* kArtifactVersion = "1.0.0";

struct CacheContext {
  std::string mode; // off | read-write | read-only
  fs::path cache_dir;
  std::uint64_t key = 0;
};

std::string key_hex(std::uint64_t k) {
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(k));
  return buf;
}

// Produces `filename` under out_dir. On a cache hit the bytes are copied
// verbatim; on a miss `generate` writes the file, which is then stored
// (write-temp-then-rename) when the policy allows.
void produce_file(const CacheContext& cc, const fs::path& out_dir, const std::string& filename,
                  const std::function<void(const fs::path&)>& generate) {
  const fs::path dest = out_dir / filename;
  fs::create_directories(out_dir);
  if (cc.mode != "off") {
    const fs::path cached = cc.cache_dir / key_hex(cc.key) / filename;
    if (fs::exists(cached)) {
      fs::copy_file(cached, dest, fs::copy_options::overwrite_existing);
      return;
    }
    generate(dest);
    if (cc.mode == "read-write") {
      fs::create_directories(cached.parent_path());
      const fs::path tmp = cached.parent_path() / (filename + ".tmp");
      fs::copy_file(dest, tmp, fs::copy_options::overwrite_existing);
      fs::rename(tmp, cached);
    }
    return;
  }
  generate(dest);
}

void write_meta(CsvWriter& w, const RunConfig& cfg, const std::string& what) {
  w.meta("artifact", std::string("hmt ") + kArtifactVersion);
  w.meta("table", what);
  w.meta("config", cfg.canonical());
  w.meta("config-hash", key_hex(fnv1a64(cfg.canonical())));
}

int cmd_check_model(const RunConfig& cfg) {
  const DensityModel model = cfg.make_model();
  const HypothesisReport rep = check_hypotheses(model, cfg.r_max, std::min(cfg.tol, 1e-8));

  fs::create_directories(cfg.out_dir);
  CsvWriter w((fs::path(cfg.out_dir) / "hypothesis_report.csv").string());
  write_meta(w, cfg, "hypothesis-report");
  w.header({"check", "value", "ok", "details"});
  auto boolrow = [&](const std::string& name, bool ok, const std::string& det = "") {
    w.row_mixed({name, ok ? "1" : "0", ok ? "pass" : "fail", det});
  };
  boolrow("h1_increasing", rep.h1_ok);
  boolrow("h2_mean_curvature_decreasing", rep.h2_ok);
  boolrow("h3_small_r_normalization", rep.h3_ok);
  boolrow("h4_g_integrable", rep.h4_ok);
  boolrow("alpha_half_excluded", rep.alpha_half_excluded, rep.details);
  w.row_mixed({"rho", format_sig17(model.rho()), "", ""});
  w.row_mixed({"alpha", format_sig17(model.alpha()), "", ""});
  w.row_mixed({"g_tail_constant", format_sig17(rep.g_tail_constant), "", ""});
  w.row_mixed({"g_decay_slope", format_sig17(rep.g_decay_slope), "", ""});
  w.row_mixed({"pure_exp_constant", format_sig17(rep.pure_exp_constant), "", ""});
  w.row_mixed({"rho_residual", format_sig17(rep.rho_residual), "", ""});

  if (rep.all_ok() && rep.alpha_half_excluded) return 0;
  std::cerr << "check-model: hypothesis failure";
  if (!rep.alpha_half_excluded) std::cerr << " (|alpha| = 1/2 flagged)";
  std::cerr << "\n" << rep.details << "\n";
  return 1;
}

int cmd_tables(const RunConfig& cfg, const std::string& what) {
  const DensityModel model = cfg.make_model();
  const HypothesisReport rep = check_hypotheses(model, cfg.r_max, std::min(cfg.tol, 1e-8));
  if (!rep.all_ok()) {
    std::cerr << "tables: model fails hypothesis checks\n";
    return 1;
  }

  CacheContext cc;
  cc.mode = cfg.cache;
  cc.cache_dir = fs::path(cfg.out_dir) / "cache";
  cc.key = fnv1a64(cfg.canonical() + ";what=" + what + ";version=" + kArtifactVersion);

  const double tol = std::max(cfg.tol * 1e-2, 1e-13);

  if (what == "phi") {
    for (int j = 1; j <= 8; ++j) {
      const double lambda = cfg.lambda_max * j / 8.0;
      std::ostringstream fn;
      fn << "phi_" << j << ".csv";
      produce_file(cc, cfg.out_dir, fn.str(), [&](const fs::path& dest) {
        std::vector<double> grid;
        for (double r = 0.0; r <= cfg.r_max + 1e-12; r += std::max(cfg.r_step, 1.0 / 64.0))
          grid.push_back(r);
        const EigenTable t = solve_phi(model, lambda, grid, tol);
        CsvWriter w(dest.string());
        write_meta(w, cfg, "phi");
        w.meta("lambda", format_sig17(lambda));
        w.meta("tolerance", format_sig17(tol));
        w.meta("series-radius", format_sig17(t.series_radius));
        w.header({"r", "re", "im"});
        for (std::size_t i = 0; i < t.r_grid.size(); ++i)
          w.row({t.r_grid[i], t.phi[i].real(), t.phi[i].imag()});
      });
    }
    return 0;
  }
  if (what == "c" || what == "plancherel-density") {
    std::vector<double> lambdas;
    for (double l = cfg.lambda_step; l <= cfg.lambda_max + 1e-12; l += cfg.lambda_step)
      lambdas.push_back(l);
    const std::string fn = what == "c" ? "c_function.csv" : "plancherel_density.csv";
    produce_file(cc, cfg.out_dir, fn, [&](const fs::path& dest) {
      const CFunctionTable t = build_c_table(model, lambdas, std::min(cfg.r_max, 36.0), tol);
      CsvWriter w(dest.string());
      write_meta(w, cfg, what);
      if (what == "c") {
        w.header({"lambda", "re", "im"});
        for (std::size_t i = 0; i < lambdas.size(); ++i)
          w.row({lambdas[i], t.c_values[i].real(), t.c_values[i].imag()});
      } else {
        PlancherelTable pt = build_plancherel_table(model, cfg.lambda_max);
        calibrate_c0(model, standard_bumps(), pt);
        w.meta("c0", format_sig17(pt.c0));
        w.header({"lambda", "c_abs_inv_sq", "density"});
        for (std::size_t i = 0; i < lambdas.size(); ++i)
          w.row({lambdas[i], t.c_abs_inv_sq[i], pt.c0 * t.c_abs_inv_sq[i]});
      }
    });
    return 0;
  }
  std::cerr << "tables: unknown table '" << what << "'\n";
  return 1;
}

void write_suite_csv(const fs::path& path, const RunConfig& cfg, const VerifySuite& s) {
  CsvWriter w(path.string());
  write_meta(w, const_cast<RunConfig&>(cfg), "verify-" + s.name);
  w.header({"name", "lhs", "rhs", "abs_err", "rel_err", "tol", "pass"});
  for (const auto& r : s.rows)
    w.row_mixed({r.name, format_sig17(r.lhs), format_sig17(r.rhs), format_sig17(r.abs_err),
                 format_sig17(r.rel_err), format_sig17(r.tol), r.pass ? "1" : "0"});
}

int cmd_verify(const RunConfig& cfg, const std::string& suite, double tol_override) {
  const DensityModel model = cfg.make_model();
  const HypothesisReport rep = check_hypotheses(model, cfg.r_max, std::min(cfg.tol, 1e-8));
  if (!rep.all_ok()) {
    std::cerr << "verify: model fails hypothesis checks\n";
    return 1;
  }

  const bool h2 = model.kind() == ModelKind::Hyperbolic && model.dimension() == 2;
  std::vector<VerifySuite> suites;
  PlancherelTable pt;
  bool have_pt = false;
  auto table = [&]() -> const PlancherelTable* {
    if (!have_pt) {
      pt = make_suite_table(model, cfg.lambda_max);
      have_pt = true;
    }
    return &pt;
  };

  if (suite == "roundtrip" || suite == "all")
    suites.push_back(verify_roundtrip(model, table(), cfg.lambda_max, tol_override));
  if (suite == "plancherel" || suite == "all")
    suites.push_back(verify_plancherel(model, table(), cfg.lambda_max, tol_override));
  if (suite == "boundary" || suite == "all") {
    if (model.kind() == ModelKind::Hyperbolic)
      suites.push_back(verify_boundary(model, tol_override));
    else if (suite == "boundary") {
      std::cerr << "verify: boundary suite requires a hyperbolic model\n";
      return 1;
    }
  }
  if (suite == "convolution" || (suite == "all" && h2))
    suites.push_back(verify_convolution(model, table(), cfg.lambda_max, tol_override));
  if (suite == "kunze-stein" || (suite == "all" && h2))
    suites.push_back(verify_kunze_stein(model, table(), cfg.lambda_max,
                                        static_cast<unsigned>(cfg.seed), tol_override));
  if (suites.empty()) {
    std::cerr << "verify: unknown suite '" << suite << "'\n";
    return 1;
  }

  fs::create_directories(cfg.out_dir);
  bool all_pass = true;
  for (const auto& s : suites) {
    write_suite_csv(fs::path(cfg.out_dir) / ("verify_" + s.name + ".csv"), cfg, s);
    for (const auto& r : s.rows) {
      std::cout << (r.pass ? "[pass] " : "[FAIL] ") << r.name << "  rel_err=" << r.rel_err
                << " tol=" << r.tol << "\n";
      all_pass = all_pass && r.pass;
    }
  }
  return all_pass ? 0 : 1;
}

int cmd_oracle_dump(const RunConfig& cfg) {
  const DensityModel model = cfg.make_model();
  if (model.kind() == ModelKind::ExpPolynomial) {
    std::cerr << "oracle-dump: no closed-form oracle for exp-polynomial models\n";
    return 1;
  }
  const JacobiParams jp = JacobiParams::for_model(model);
  fs::create_directories(cfg.out_dir);
  for (int j = 1; j <= 8; ++j) {
    const double lambda = cfg.lambda_max * j / 8.0;
    std::ostringstream fn;
    fn << cfg.out_dir << "/oracle_phi_" << j << ".csv";
    CsvWriter w(fn.str());
    write_meta(w, cfg, "oracle-phi");
    w.meta("lambda", format_sig17(lambda));
    w.header({"r", "re", "im"});
    for (double r = 0.0; r <= cfg.r_max + 1e-12; r += std::max(cfg.r_step, 1.0 / 64.0)) {
      const Complex v = jacobi_phi(jp, lambda, r);
      w.row({r, v.real(), v.imag()});
    }
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"harmonic-manifold transforms: spherical functions, c-function, "
               "Fourier transforms and verification suites"};
  app.require_subcommand(1);

  std::string config_path, out_dir, suite = "all", what = "c", cache_mode;
  double tol_override = 0.0;
  int threads = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "config file (key=value lines)")->required();
    sub->add_option("--out", out_dir, "output directory (overrides config)");
    sub->add_option("--cache", cache_mode, "cache mode: off | read-write | read-only");
    sub->add_option("--threads", threads, "worker thread count (0 = default)");
  };

  CLI::App* check = app.add_subcommand("check-model", "validate the density hypotheses");
  add_common(check);
  CLI::App* tables = app.add_subcommand("tables", "emit phi / c / plancherel-density tables");
  add_common(tables);
  tables->add_option("--what", what, "phi | c | plancherel-density");
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  add_common(verify);
  verify->add_option("--suite", suite,
                     "roundtrip | plancherel | boundary | convolution | kunze-stein | all");
  verify->add_option("--tol", tol_override, "override all row tolerances");
  CLI::App* oracle = app.add_subcommand("oracle-dump", "emit oracle tables for diffing");
  add_common(oracle);

  CLI11_PARSE(app, argc, argv);

  try {
    RunConfig cfg = RunConfig::parse_file(config_path);
    if (!out_dir.empty()) cfg.out_dir = out_dir;
    if (!cache_mode.empty()) cfg.cache = cache_mode;
#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#endif
    if (check->parsed()) return cmd_check_model(cfg);
    if (tables->parsed()) return cmd_tables(cfg, what);
    if (verify->parsed()) return cmd_verify(cfg, suite, tol_override);
    if (oracle->parsed()) return cmd_oracle_dump(cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
