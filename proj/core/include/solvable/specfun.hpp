#pragma once

#include <functional>

#include "solvable/expr.hpp"
#include "solvable/family.hpp"
#include "solvable/poly.hpp"
#include "solvable/quadrature.hpp"

namespace solvable {

/// A real function of s with analytic first and second derivatives.
struct SmoothFunction {
  std::function<double(double)> f;
  std::function<double(double)> d1;
  std::function<double(double)> d2;
};

/// Phi_{l,m}(s) = kappa(s)^m * poly_part(s), kappa = sqrt(sigma).
class SpecialFunction {
 public:
  SpecialFunction(FamilySpec family, int ell, int m, Poly poly_part);

  const FamilySpec& family() const noexcept { return family_; }
  int ell() const noexcept { return ell_; }
  int m() const noexcept { return m_; }
  const Poly& poly_part() const noexcept { return poly_; }

  double value(double s) const;
  /// Product rule on sigma^(m/2) * p; no finite differences.
  double d1(double s) const;
  double d2(double s) const;

  SmoothFunction as_function() const;
  /// kappa^m * poly_part as an expression in s.
  ir::Expr to_expr() const;

 private:
  FamilySpec family_;
  int ell_;
  int m_;
  Poly poly_;
  Poly dpoly_;
  Poly ddpoly_;
};

/// Throws DegreeBeyondCutoff, OrderExceedsDegree (m > l) or DegenerateRecursion.
SpecialFunction special_function(const FamilySpec& family, int ell, int m);

/// H_m = -sigma d^2/ds^2 - tau d/ds + [m(m-2)/4 sigma'^2/sigma + m tau sigma'/(2 sigma)
///       - m(m-2) sigma''/2 - m tau'].
class HmOperator {
 public:
  HmOperator(FamilySpec family, int m);

  const FamilySpec& family() const noexcept { return family_; }
  int m() const noexcept { return m_; }

  const ir::Expr& second_coeff() const noexcept { return second_; }  ///< -sigma
  const ir::Expr& first_coeff() const noexcept { return first_; }    ///< -tau
  const ir::Expr& multiplier() const noexcept { return mult_; }

  /// The multiplication part evaluated directly from sigma, tau. Throws
  /// SingularPoint where sigma vanishes.
  double multiplier_at(double s) const;

 private:
  FamilySpec family_;
  int m_;
  ir::Expr second_;
  ir::Expr first_;
  ir::Expr mult_;
};

/// (H_m f)(s). Throws SingularPoint if sigma(s) = 0.
double apply_hm(const HmOperator& op, const SmoothFunction& f, double s);

/// <f, g> = integral of f g rho over the family interval.
/// Throws QuadratureNoConverge if the error estimate exceeds 1e-8.
oracle::QuadratureResult scalar_product(const FamilySpec& family, const std::function<double(double)>& f,
                                        const std::function<double(double)>& g, double tol = 1e-12);

}  // namespace solvable
