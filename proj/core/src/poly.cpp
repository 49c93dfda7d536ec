#include "solvable/poly.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "solvable/classical.hpp"
#include "solvable/error.hpp"

namespace solvable {

Poly::Poly(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(int degree, double c) {
  std::vector<double> v(static_cast<std::size_t>(degree) + 1, 0.0);
  v.back() = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
}

double Poly::coeff(int j) const noexcept {
  return j >= 0 && j < static_cast<int>(coeffs_.size()) ? coeffs_[static_cast<std::size_t>(j)] : 0.0;
}

double Poly::max_abs_coeff() const noexcept {
  double m = 0.0;
  for (const double c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

double Poly::operator()(double s) const noexcept {
  double acc = 0.0;
  for (std::size_t j = coeffs_.size(); j-- > 0;) acc = acc * s + coeffs_[j];
  return acc;
}

Poly Poly::derivative(int order) const {
  std::vector<double> c = coeffs_;
  for (int k = 0; k < order && !c.empty(); ++k) {
    std::vector<double> d;
    for (std::size_t j = 1; j < c.size(); ++j) d.push_back(static_cast<double>(j) * c[j]);
    c = std::move(d);
  }
  return Poly(std::move(c));
}

ir::Expr Poly::to_expr(const ir::Expr& arg) const { return ir::simplify(ir::Expr::polynomial(coeffs_, arg)); }

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<double> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0.0);
  for (std::size_t j = 0; j < a.coeffs_.size(); ++j) c[j] += a.coeffs_[j];
  for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[j] += b.coeffs_[j];
  return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-1.0) * b; }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<double> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Poly(std::move(c));
}

Poly operator*(double k, const Poly& p) {
  std::vector<double> c = p.coeffs_;
  for (double& v : c) v *= k;
  return Poly(std::move(c));
}

// ---------------------------------------------------------------------------

Poly hypergeometric_polynomial(const SigmaCoefficients& sigma, double alpha, double beta, int ell) {
  if (ell < 0) throw DegreeBeyondCutoff("degree must be non-negative");
  const auto n = static_cast<std::size_t>(ell);
  std::vector<double> c(n + 2, 0.0);  // one spare slot for c_{l+1} = 0
  c[n] = 1.0;
  const double a = sigma.a, b = sigma.b, cc = sigma.c, l = ell;
  for (int j = ell - 1; j >= 0; --j) {
    const double jj = j;
    const double d = a * (jj * (jj - 1.0) - l * (l - 1.0)) + alpha * (jj - l);
    if (d == 0.0 || std::abs(d) < 1e-14 * (std::abs(a) * l * l + std::abs(alpha) * l))
      throw DegenerateRecursion("recursion denominator vanishes at j=" + std::to_string(j) + " for degree " +
                                std::to_string(ell));
    const auto ju = static_cast<std::size_t>(j);
    const double next2 = ju + 2 <= n ? c[ju + 2] : 0.0;
    c[ju] = -((b * jj * (jj + 1.0) + beta * (jj + 1.0)) * c[ju + 1] + cc * (jj + 2.0) * (jj + 1.0) * next2) / d;
  }
  c.pop_back();
  return Poly(std::move(c));
}

Poly phi(const FamilySpec& family, int ell) {
  require_below_cutoff(family, ell);
  return hypergeometric_polynomial(family.sigma_coeffs(), family.alpha(), family.beta(), ell);
}

ir::Expr rodrigues_expr(const FamilySpec& family, int ell) {
  require_below_cutoff(family, ell);
  ir::Expr e = ir::expand(ir::pow(family.sigma_factored_expr(), ir::Rational(ell)) * weight(family));
  for (int k = 0; k < ell; ++k) e = ir::expand(ir::differentiate(e));
  return ir::expand(e * family.weight_power(-1.0));
}

namespace {

// Chebyshev points of the sampling window.
std::vector<double> interior_points(const FamilySpec& family, int count) {
  const Interval w = sample_window(family.interval());
  std::vector<double> pts;
  pts.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const double t = std::cos(std::numbers::pi * (i + 0.5) / count);
    pts.push_back(0.5 * (w.lo + w.hi) + 0.5 * (w.hi - w.lo) * t);
  }
  return pts;
}

// Newton divided differences, then expansion into the power basis.
Poly interpolate(const std::vector<double>& xs, std::vector<double> ys) {
  const std::size_t n = xs.size();
  for (std::size_t k = 1; k < n; ++k)
    for (std::size_t i = n - 1; i >= k; --i) ys[i] = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - k]);
  Poly p({ys[n - 1]});
  for (std::size_t i = n - 1; i-- > 0;) p = p * Poly({-xs[i], 1.0}) + Poly({ys[i]});
  return p;
}

}  // namespace

Poly phi_rodrigues(const FamilySpec& family, int ell) {
  const ir::Expr e = rodrigues_expr(family, ell);
  const auto xs = interior_points(family, ell + 1);
  std::vector<double> ys;
  ys.reserve(xs.size());
  for (const double x : xs) ys.push_back(ir::evaluate(e, x));
  return interpolate(xs, std::move(ys));
}

RodriguesSample rodrigues_sample(const FamilySpec& family, int ell) {
  const Poly r = phi_rodrigues(family, ell);
  return {family, ell, r.coeff(ell)};
}

// ---------------------------------------------------------------------------

double classical_value(const FamilySpec& family, int ell, double s) {
  const double a = family.alpha(), b = family.beta();
  switch (family.sigma_case()) {
    case SigmaCase::One:
      return classical::hermite(ell, std::sqrt(-a / 2.0) * s - b / std::sqrt(-2.0 * a));
    case SigmaCase::S: return classical::laguerre(ell, b - 1.0, -a * s);
    case SigmaCase::OneMinusS2: return classical::jacobi(ell, -(a + b) / 2.0 - 1.0, (-a + b) / 2.0 - 1.0, s);
    case SigmaCase::S2Minus1: return classical::jacobi(ell, (a - b) / 2.0 - 1.0, (a + b) / 2.0 - 1.0, -s);
    case SigmaCase::S2:
      return std::pow(s / b, ell) * classical::laguerre(ell, 1.0 - a - 2.0 * ell, b / s);
    case SigmaCase::S2Plus1:
      break;
  }
  throw UnsupportedCorrespondence("sigma(s)=s^2+1 corresponds to Jacobi polynomials with complex parameters");
}

ClassicalMatch classical_match(const FamilySpec& family, int ell) {
  if (family.sigma_case() == SigmaCase::S2Plus1)
    throw UnsupportedCorrespondence("sigma(s)=s^2+1 corresponds to Jacobi polynomials with complex parameters");
  const Poly p = phi(family, ell);
  const auto xs = interior_points(family, 50);
  std::vector<double> lhs, rhs;
  for (const double s : xs) {
    rhs.push_back(classical_value(family, ell, s));
    lhs.push_back(p(s));
  }
  double num = 0.0, den = 0.0, scale = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    num += rhs[i] * lhs[i];
    den += lhs[i] * lhs[i];
    scale = std::max(scale, std::abs(rhs[i]));
  }
  const double k = num / den;
  double dev = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) dev = std::max(dev, std::abs(rhs[i] - k * lhs[i]));
  return {k, scale > 0.0 ? dev / scale : dev};
}

}  // namespace solvable
