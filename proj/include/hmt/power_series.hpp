#pragma once

#include <cstddef>
#include <vector>

namespace hmt {

// Truncated power series about r = 0, coefficients c[k] of r^k.
// All operations truncate to the shorter operand's order.
namespace series {

std::vector<double> add(const std::vector<double>& a, const std::vector<double>& b);
std::vector<double> mul(const std::vector<double>& a, const std::vector<double>& b, std::size_t order);
// a / b, requires b[0] != 0
std::vector<double> div(const std::vector<double>& a, const std::vector<double>& b, std::size_t order);
std::vector<double> derivative(const std::vector<double>& a);
std::vector<double> scale(std::vector<double> a, double s);

std::vector<double> exp_series(double rate, std::size_t order);
std::vector<double> cos_series(double rate, std::size_t order);
std::vector<double> sin_series(double rate, std::size_t order);

double eval(const std::vector<double>& a, double r);

} // namespace series
} // namespace hmt
