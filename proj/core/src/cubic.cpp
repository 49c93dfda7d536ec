#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "solvable/generator.hpp"

namespace solvable::gen {

namespace {

double eval_cubic(double a3, double a2, double a1, double a0, double x) { return ((a3 * x + a2) * x + a1) * x + a0; }

double polish(double a3, double a2, double a1, double a0, double x) {
  for (int it = 0; it < 8; ++it) {
    const double f = eval_cubic(a3, a2, a1, a0, x);
    const double df = (3.0 * a3 * x + 2.0 * a2) * x + a1;
    if (f == 0.0 || df == 0.0) break;
    const double next = x - f / df;
    // Accept only improving steps; near a double root Newton may wander.
    if (std::abs(eval_cubic(a3, a2, a1, a0, next)) >= std::abs(f)) break;
    x = next;
  }
  return x;
}

std::vector<double> quadratic_roots(double a, double b, double c) {
  if (a == 0.0) {
    if (b == 0.0) return {};
    return {-c / b};
  }
  const double disc = b * b - 4.0 * a * c;
  if (disc < 0.0) return {};
  const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
  std::vector<double> r;
  if (q != 0.0) r.push_back(c / q);
  r.push_back(q / a);
  if (q == 0.0) r.push_back(0.0);
  return r;
}

}  // namespace

std::vector<double> real_cubic_roots(double a3, double a2, double a1, double a0) {
  const double scale = std::max({std::abs(a2), std::abs(a1), std::abs(a0)});
  std::vector<double> roots;
  if (std::abs(a3) <= 1e-15 * scale) {
    roots = quadratic_roots(a2, a1, a0);
  } else {
    const double b = a2 / a3, c = a1 / a3, d = a0 / a3;
    const double p = c - b * b / 3.0;
    const double q = 2.0 * b * b * b / 27.0 - b * c / 3.0 + d;
    const double shift = -b / 3.0;
    const double disc = q * q / 4.0 + p * p * p / 27.0;
    const double mag = std::max({1.0, std::abs(p) * std::abs(p) * std::abs(p), q * q});
    if (p == 0.0 && q == 0.0) {
      roots = {shift};
    } else if (disc > 1e-14 * mag) {
      const double sq = std::sqrt(disc);
      const double u = std::cbrt(-q / 2.0 + sq);
      const double v = std::cbrt(-q / 2.0 - sq);
      roots = {u + v + shift};
    } else if (p < 0.0) {
      const double m = 2.0 * std::sqrt(-p / 3.0);
      const double arg = std::clamp(3.0 * q / (p * m), -1.0, 1.0);
      const double theta = std::acos(arg) / 3.0;
      for (int k = 0; k < 3; ++k) roots.push_back(m * std::cos(theta - 2.0 * std::numbers::pi * k / 3.0) + shift);
    } else {
      roots = {std::cbrt(-q) + shift};
    }
  }
  for (double& r : roots) r = polish(a3, a2, a1, a0, r);
  std::sort(roots.begin(), roots.end());
  std::vector<double> unique;
  for (const double r : roots)
    if (unique.empty() || std::abs(r - unique.back()) > 1e-9 * std::max(1.0, std::abs(r))) unique.push_back(r);
  return unique;
}

}  // namespace solvable::gen
