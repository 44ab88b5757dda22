#include "hmt/power_series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hmt::series {

std::vector<double> add(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> out(std::max(a.size(), b.size()), 0.0);
  for (std::size_t k = 0; k < a.size(); ++k) out[k] += a[k];
  for (std::size_t k = 0; k < b.size(); ++k) out[k] += b[k];
  return out;
}

std::vector<double> mul(const std::vector<double>& a, const std::vector<double>& b, std::size_t order) {
  std::vector<double> out(order + 1, 0.0);
  for (std::size_t i = 0; i < a.size() && i <= order; ++i) {
    if (a[i] == 0.0) continue;
    const std::size_t jmax = std::min(b.size(), order + 1 - i);
    for (std::size_t j = 0; j < jmax; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

std::vector<double> div(const std::vector<double>& a, const std::vector<double>& b, std::size_t order) {
  if (b.empty() || b[0] == 0.0) throw std::invalid_argument("series::div: b(0) = 0");
  std::vector<double> out(order + 1, 0.0);
  for (std::size_t k = 0; k <= order; ++k) {
    double s = k < a.size() ? a[k] : 0.0;
    for (std::size_t j = 1; j <= k && j < b.size(); ++j) s -= b[j] * out[k - j];
    out[k] = s / b[0];
  }
  return out;
}

std::vector<double> derivative(const std::vector<double>& a) {
  if (a.size() <= 1) return {0.0};
  std::vector<double> out(a.size() - 1);
  for (std::size_t k = 1; k < a.size(); ++k) out[k - 1] = static_cast<double>(k) * a[k];
  return out;
}

std::vector<double> scale(std::vector<double> a, double s) {
  for (double& c : a) c *= s;
  return a;
}

std::vector<double> exp_series(double rate, std::size_t order) {
  std::vector<double> out(order + 1);
  out[0] = 1.0;
  for (std::size_t k = 1; k <= order; ++k) out[k] = out[k - 1] * rate / static_cast<double>(k);
  return out;
}

std::vector<double> cos_series(double rate, std::size_t order) {
  std::vector<double> out(order + 1, 0.0);
  double term = 1.0;
  for (std::size_t k = 0; k <= order; k += 2) {
    out[k] = term;
    term *= -rate * rate / static_cast<double>((k + 1) * (k + 2));
  }
  return out;
}

std::vector<double> sin_series(double rate, std::size_t order) {
  std::vector<double> out(order + 1, 0.0);
  if (order < 1) return out;
  double term = rate;
  for (std::size_t k = 1; k <= order; k += 2) {
    out[k] = term;
    term *= -rate * rate / static_cast<double>((k + 1) * (k + 2));
  }
  return out;
}

double eval(const std::vector<double>& a, double r) {
  double s = 0.0;
  for (std::size_t k = a.size(); k-- > 0;) s = s * r + a[k];
  return s;
}

} // namespace hmt::series
