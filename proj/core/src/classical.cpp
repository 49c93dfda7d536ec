#include "solvable/classical.hpp"

#include <cmath>
#include <stdexcept>

namespace solvable::classical {

double hermite(int n, double x) {
  if (n < 0) throw std::invalid_argument("hermite: negative degree");
  double h0 = 1.0;
  if (n == 0) return h0;
  double h1 = 2.0 * x;
  for (int k = 1; k < n; ++k) {
    const double h2 = 2.0 * x * h1 - 2.0 * k * h0;
    h0 = h1;
    h1 = h2;
  }
  return h1;
}

double laguerre(int n, double p, double x) {
  if (n < 0) throw std::invalid_argument("laguerre: negative degree");
  double l0 = 1.0;
  if (n == 0) return l0;
  double l1 = 1.0 + p - x;
  for (int k = 1; k < n; ++k) {
    const double l2 = ((2.0 * k + 1.0 + p - x) * l1 - (k + p) * l0) / (k + 1.0);
    l0 = l1;
    l1 = l2;
  }
  return l1;
}

namespace {

// Generalized binomial C(a, k) for real a.
double binom(double a, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= (a - i) / (i + 1.0);
  return r;
}

double jacobi_sum(int n, double p, double q, double x) {
  double acc = 0.0;
  for (int k = 0; k <= n; ++k)
    acc += binom(n + p, n - k) * binom(n + q, k) * std::pow((x - 1.0) / 2.0, k) * std::pow((x + 1.0) / 2.0, n - k);
  return acc;
}

}  // namespace

double jacobi(int n, double p, double q, double x) {
  if (n < 0) throw std::invalid_argument("jacobi: negative degree");
  double j0 = 1.0;
  if (n == 0) return j0;
  double j1 = (p + 1.0) + (p + q + 2.0) * (x - 1.0) / 2.0;
  for (int k = 2; k <= n; ++k) {
    const double s = 2.0 * k + p + q;
    const double den = 2.0 * k * (k + p + q) * (s - 2.0);
    if (den == 0.0) return jacobi_sum(n, p, q, x);
    const double j2 =
        ((s - 1.0) * (s * (s - 2.0) * x + p * p - q * q) * j1 - 2.0 * (k + p - 1.0) * (k + q - 1.0) * s * j0) / den;
    j0 = j1;
    j1 = j2;
  }
  return j1;
}

Poly hermite_poly(int n) {
  if (n < 0) throw std::invalid_argument("hermite_poly: negative degree");
  Poly h0({1.0});
  if (n == 0) return h0;
  Poly h1({0.0, 2.0});
  const Poly two_x({0.0, 2.0});
  for (int k = 1; k < n; ++k) {
    Poly h2 = two_x * h1 - (2.0 * k) * h0;
    h0 = std::move(h1);
    h1 = std::move(h2);
  }
  return h1;
}

}  // namespace solvable::classical
