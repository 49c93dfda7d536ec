#pragma once

#include <span>
#include <vector>

#include "solvable/expr.hpp"
#include "solvable/family.hpp"
#include "solvable/specfun.hpp"

namespace solvable {

/// Closed-form change of variable with dx/ds = +1/kappa(s).
///   One: x = s             S2Minus1: s = cosh x
///   S: x = 2 sqrt(s)       S2: s = e^x
///   OneMinusS2: x = asin s S2Plus1: s = sinh x
class VariableMap {
 public:
  explicit VariableMap(const FamilySpec& family);

  SigmaCase sigma_case() const noexcept { return case_; }
  const ir::Expr& forward() const noexcept { return forward_; }  ///< x(s)
  const ir::Expr& inverse() const noexcept { return inverse_; }  ///< s(x)
  const Interval& image() const noexcept { return image_; }

  double to_x(double s) const;
  double to_s(double x) const;

 private:
  SigmaCase case_;
  ir::Expr forward_;
  ir::Expr inverse_;
  Interval image_;
};

VariableMap variable_map(const FamilySpec& family);

struct Eigenpair {
  int ell = -1;  ///< -1 when the pair was adjoined by hand
  int m = -1;
  double lambda = 0.0;
  ir::Expr psi;
  ir::Expr psi_dd;  ///< symbolic second derivative, cached
};

/// -d^2/dx^2 + V(x) on an open interval, with known eigenpairs.
class SchrodingerSystem {
 public:
  SchrodingerSystem(ir::Expr potential, Interval interval);

  const ir::Expr& potential() const noexcept { return potential_; }
  const Interval& interval() const noexcept { return interval_; }
  const std::vector<Eigenpair>& eigenpairs() const noexcept { return pairs_; }

  /// Differentiates psi twice and stores the pair; returns its index.
  std::size_t add_eigenpair(double lambda, ir::Expr psi, int ell = -1, int m = -1);

  /// V(x); throws SingularPoint at a pole.
  double potential_at(double x) const;

 private:
  ir::Expr potential_;
  Interval interval_;
  std::vector<Eigenpair> pairs_;
};

/// V_m(x) from sigma, tau and eta = 1/sqrt(kappa rho), composed through the
/// variable map. Attaches (lambda_l, Psi_{l,m}) for each l in `ells`.
/// Throws DegreeBeyondCutoff if m or any l is not below Lambda, and
/// OrderExceedsDegree if some l < m.
SchrodingerSystem potential(const FamilySpec& family, int m, std::span<const int> ells = {});

/// Psi_{l,m}(x) = sqrt(kappa rho) Phi_{l,m} at s = s(x), monic Phi_l.
ir::Expr wavefunction(const FamilySpec& family, int ell, int m);

/// Same function evaluated numerically in log space (no expression tree);
/// returns 0 where s(x) rounds onto an interval endpoint.
double wavefunction_value(const FamilySpec& family, const SpecialFunction& phi_lm, double x);

/// -psi'' + V psi - lambda psi at x. Throws SingularPoint if V has a pole there.
double schrodinger_residual(const SchrodingerSystem& system, std::size_t pair_index, double x);

/// max over xs of |residual| / (1 + |lambda psi|).
double residual_norm(const SchrodingerSystem& system, std::size_t pair_index, std::span<const double> xs);

/// alpha^2/4 x^2 + alpha beta/2 x + beta^2/4 + alpha/2 - alpha m.
ir::Expr oscillator_potential(double alpha, double beta, int m);

/// A finite plotting window inside the image interval, clamped by
/// eps = 1e-6 * (span or 1) at finite ends.
Interval plot_window(const Interval& image);

}  // namespace solvable
