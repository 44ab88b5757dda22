#include "hmt/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "hmt/csv.hpp"

namespace hmt {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<double> parse_semicolon_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ';')) {
    tok = trim(tok);
    if (!tok.empty()) out.push_back(std::stod(tok));
  }
  return out;
}

} // namespace

RunConfig RunConfig::parse_string(const std::string& text, const std::string& origin) {
  RunConfig cfg;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument(origin + ":" + std::to_string(lineno) + ": expected key=value");
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    try {
      if (key == "model") cfg.model = val;
      else if (key == "n") cfg.n = std::stoi(val);
      else if (key == "p") cfg.p = std::stoi(val);
      else if (key == "q") cfg.q = std::stoi(val);
      else if (key == "terms-file") cfg.terms_file = val;
      else if (key == "rmax") cfg.r_max = std::stod(val);
      else if (key == "lambda-max") cfg.lambda_max = std::stod(val);
      else if (key == "tol") cfg.tol = std::stod(val);
      else if (key == "r-step") cfg.r_step = std::stod(val);
      else if (key == "lambda-step") cfg.lambda_step = std::stod(val);
      else if (key == "quad-order") cfg.quad_order = std::stoi(val);
      else if (key == "seed") cfg.seed = std::stoull(val);
      else if (key == "out-dir") cfg.out_dir = val;
      else if (key == "cache") cfg.cache = val;
      else
        throw std::invalid_argument(origin + ":" + std::to_string(lineno) + ": unknown key '" +
                                    key + "'");
    } catch (const std::invalid_argument&) {
      throw;
    } catch (const std::exception&) {
      throw std::invalid_argument(origin + ":" + std::to_string(lineno) + ": bad value for '" +
                                  key + "'");
    }
  }

  if (cfg.model.empty()) throw std::invalid_argument(origin + ": missing 'model'");
  if (cfg.model != "hyperbolic" && cfg.model != "damekricci" && cfg.model != "exppoly")
    throw std::invalid_argument(origin + ": model must be hyperbolic, damekricci or exppoly");
  if (!(cfg.tol >= 1e-14 && cfg.tol <= 1e-4))
    throw std::invalid_argument(origin + ": tol must lie in [1e-14, 1e-4]");
  if (cfg.r_max <= 0 || cfg.lambda_max <= 0 || cfg.r_step <= 0 || cfg.lambda_step <= 0 ||
      cfg.quad_order <= 0)
    throw std::invalid_argument(origin + ": numeric knobs must be positive");
  if (cfg.cache != "off" && cfg.cache != "read-write" && cfg.cache != "read-only")
    throw std::invalid_argument(origin + ": cache must be off, read-write or read-only");
  return cfg;
}

RunConfig RunConfig::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_string(ss.str(), path);
}

std::vector<ExpPolyTerm> load_terms_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("terms: cannot open " + path);
  std::vector<ExpPolyTerm> terms;
  std::string line;
  bool header_seen = false;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      header_seen = true; // exp_rate,osc_rate,poly_cos,poly_sin
      continue;
    }
    std::stringstream ss(line);
    std::string f0, f1, f2, f3;
    if (!std::getline(ss, f0, ',') || !std::getline(ss, f1, ',') || !std::getline(ss, f2, ','))
      throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": expected 4 columns");
    std::getline(ss, f3, ',');
    ExpPolyTerm t;
    t.exp_rate = std::stod(trim(f0));
    t.osc_rate = std::stod(trim(f1));
    t.poly_cos = parse_semicolon_list(f2);
    t.poly_sin = parse_semicolon_list(f3);
    terms.push_back(std::move(t));
  }
  if (terms.empty()) throw std::invalid_argument(path + ": no terms");
  return terms;
}

DensityModel RunConfig::make_model() const {
  if (model == "hyperbolic") {
    if (n < 2) throw std::invalid_argument("config: hyperbolic requires n >= 2");
    return DensityModel::hyperbolic(n);
  }
  if (model == "damekricci") {
    if (p < 0 || q < 0) throw std::invalid_argument("config: damekricci requires p and q");
    return DensityModel::damek_ricci(p, q);
  }
  if (terms_file.empty()) throw std::invalid_argument("config: exppoly requires terms-file");
  if (n < 2) throw std::invalid_argument("config: exppoly requires n >= 2");
  return DensityModel::exp_polynomial(load_terms_csv(terms_file), n);
}

std::string RunConfig::canonical() const {
  std::ostringstream os;
  os.precision(17);
  os << "model=" << make_model().describe() << ";rmax=" << r_max << ";lambda-max=" << lambda_max
     << ";tol=" << tol << ";r-step=" << r_step << ";lambda-step=" << lambda_step
     << ";quad-order=" << quad_order << ";seed=" << seed;
  return os.str();
}

} // namespace hmt
