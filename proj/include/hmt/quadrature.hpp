#pragma once

#include <functional>
#include <utility>
#include <vector>

namespace hmt {

// Gauss-Legendre rule on [-1, 1]. Nodes/weights are computed once per order
// by Newton iteration on P_n and cached.
struct GaussLegendre {
  static const std::vector<double>& nodes(int order);
  static const std::vector<double>& weights(int order);
};

// Nodes and weights of a composite rule: `panels` equal panels on [a, b],
// Gauss-Legendre of the given order on each.
struct PanelRule {
  std::vector<double> x;
  std::vector<double> w;
};
PanelRule panel_rule(double a, double b, int panels, int order);

// Composite rule whose panel widths shrink geometrically toward `a`
// (for endpoint singularities integrable after substitution).
PanelRule geometric_rule(double a, double b, int octaves, int panels_per_octave, int order);

template <typename F>
auto integrate(const PanelRule& rule, F&& f) -> decltype(f(0.0)) {
  decltype(f(0.0)) s{};
  for (std::size_t i = 0; i < rule.x.size(); ++i) s += rule.w[i] * f(rule.x[i]);
  return s;
}

template <typename F>
auto integrate_gl(F&& f, double a, double b, int panels, int order) -> decltype(f(0.0)) {
  return integrate(panel_rule(a, b, panels, order), std::forward<F>(f));
}

} // namespace hmt
