#pragma once

#include <span>
#include <vector>

#include "solvable/expr.hpp"
#include "solvable/family.hpp"

namespace solvable {

/// Dense power-basis polynomial; coeffs()[j] multiplies s^j. Trailing zeros are
/// trimmed, so the zero polynomial has no coefficients and degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<double> coeffs);

  static Poly monomial(int degree, double c = 1.0);

  std::span<const double> coeffs() const noexcept { return coeffs_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  double coeff(int j) const noexcept;
  double leading() const noexcept { return coeffs_.empty() ? 0.0 : coeffs_.back(); }
  double max_abs_coeff() const noexcept;

  double operator()(double s) const noexcept;
  Poly derivative(int order = 1) const;

  /// Expression node sum c_j arg^j.
  ir::Expr to_expr(const ir::Expr& arg = ir::Expr::var()) const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(double c, const Poly& p);

 private:
  void trim();
  std::vector<double> coeffs_;
};

/// Monic degree-l solution of (a s^2 + b s + c) y'' + (alpha s + beta) y' + lambda_l y = 0
/// by downward coefficient recursion. No cutoff check; throws DegenerateRecursion
/// when a recursion denominator vanishes.
Poly hypergeometric_polynomial(const SigmaCoefficients& sigma, double alpha, double beta, int ell);

/// Monic Phi_l of the family. Throws DegreeBeyondCutoff or DegenerateRecursion.
Poly phi(const FamilySpec& family, int ell);

/// (1/rho) d^l/ds^l [sigma^l rho], built and differentiated symbolically.
ir::Expr rodrigues_expr(const FamilySpec& family, int ell);

/// Unnormalized Rodrigues polynomial (B_l = 1): rodrigues_expr sampled at l+1
/// interior points and interpolated back to the power basis.
Poly phi_rodrigues(const FamilySpec& family, int ell);

struct RodriguesSample {
  FamilySpec family;
  int ell;
  /// Rodrigues output = b_ell * phi(family, ell).
  double b_ell;
};

RodriguesSample rodrigues_sample(const FamilySpec& family, int ell);

struct ClassicalMatch {
  /// classical(s) ~= constant * phi(s)
  double constant;
  /// max_i |classical(s_i) - constant * phi(s_i)| / max_i |classical(s_i)| over 50 points.
  double max_rel_dev;
};

/// Compares phi with the classical Hermite / Laguerre / Jacobi expression for
/// the family. Throws UnsupportedCorrespondence for sigma = s^2 + 1.
ClassicalMatch classical_match(const FamilySpec& family, int ell);

/// Evaluates the classical right-hand side for the family at s.
double classical_value(const FamilySpec& family, int ell, double s);

}  // namespace solvable
