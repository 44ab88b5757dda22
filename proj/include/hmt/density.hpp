#pragma once

#include <array>
#include <string>
#include <vector>

namespace hmt {

enum class ModelKind { Hyperbolic, DamekRicci, ExpPolynomial };

// One term p(r) cos(beta r) e^{a r} + q(r) sin(beta r) e^{a r} of an
// exponential polynomial. Polynomial coefficients are constant-first.
struct ExpPolyTerm {
  double exp_rate = 0.0;
  double osc_rate = 0.0;
  std::vector<double> poly_cos;
  std::vector<double> poly_sin;
};

struct HypothesisReport {
  bool h1_ok = false;
  bool h2_ok = false;
  bool h3_ok = false;
  bool h4_ok = false;
  bool alpha_half_excluded = false; // |alpha| != 1/2
  double g_tail_constant = 0.0;     // fitted C in |G(r)| <= C e^{slope r}
  double g_decay_slope = 0.0;       // fitted slope of log|G| (<= 0 expected)
  double pure_exp_constant = 0.0;   // C with e^{-2 rho r} A(r) in [1/C, C] on [1, rMax]
  double rho_residual = 0.0;        // |A'(rMax)/A(rMax) - 2 rho|
  bool g_identically_zero = false;
  std::string details;

  bool all_ok() const { return h1_ok && h2_ok && h3_ok && h4_ok; }
};

// Volume density A(r) of a harmonic model space together with its derived
// scalars. Instances are immutable; all evaluation methods are pure.
class DensityModel {
public:
  static DensityModel hyperbolic(int n);
  static DensityModel damek_ricci(int p, int q);
  // terms must be sorted by strictly increasing exp_rate; the top term must be
  // a positive constant with no oscillation. `dimension` is the user-supplied n.
  static DensityModel exp_polynomial(std::vector<ExpPolyTerm> terms, int dimension);

  ModelKind kind() const { return kind_; }
  int dimension() const { return n_; }
  int dr_p() const { return p_; }
  int dr_q() const { return q_; }
  double alpha() const { return 0.5 * (n_ - 2); }
  double rho() const { return rho_; }
  double mean_curvature_at_infinity() const { return 2.0 * rho_; }
  // C and delta in A = C e^{2 rho r} + (exponential degree delta part)
  double leading_coefficient() const { return lead_coeff_; }
  double next_exp_degree() const { return next_degree_; }
  double g_decay_rate() const { return 0.5 * (2.0 * rho_ - next_degree_); }

  double eval_a(double r) const;            // A(r), r >= 0
  double mean_curvature(double r) const;    // A'(r)/A(r), r > 0
  double mean_curvature_prime(double r) const; // (A'/A)'(r), r > 0
  double potential_g(double r) const;       // G(r), r > 0

  // odd Taylor coefficients b1, b3, b5, b7 of A'/A - (2 alpha + 1)/r at 0
  const std::array<double, 4>& frobenius_b() const { return frob_b_; }

  const std::vector<ExpPolyTerm>& terms() const { return terms_; }

  // canonical one-line description, stable across runs (used for CSV metadata
  // and cache keys)
  std::string describe() const;

private:
  DensityModel() = default;

  ModelKind kind_ = ModelKind::Hyperbolic;
  int n_ = 2;        // dimension
  int p_ = 0, q_ = 0; // Damek-Ricci parameters
  double rho_ = 0.5;
  double lead_coeff_ = 1.0;
  double next_degree_ = 0.0;
  std::array<double, 4> frob_b_{};
  std::vector<ExpPolyTerm> terms_; // ExpPolynomial only
};

HypothesisReport check_hypotheses(const DensityModel& model, double r_max = 40.0,
                                  double tol = 1e-10, double grid_step = 1.0 / 64.0);

// term-wise closed-form derivative of an exponential polynomial term
ExpPolyTerm differentiate_term(const ExpPolyTerm& t);

} // namespace hmt
