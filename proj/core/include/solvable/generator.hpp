#pragma once

#include <array>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "solvable/expr.hpp"
#include "solvable/family.hpp"

namespace solvable::gen {

/// [A(r) d^2/dr^2 + B(r) d/dr + C(r)] psi = 0.
struct SecondOrderODE {
  ir::Expr a;
  ir::Expr b;
  ir::Expr c;
  Interval interval{0.0, std::numeric_limits<double>::infinity()};
};

struct NormalForm {
  ir::Expr gauge;      ///< h = exp(integral of B/(2A))
  ir::Expr potential;  ///< Q = (4AC - 2AB' + 2BA' - B^2)/(4A^2); [d^2/dr^2 + Q](h psi) = 0
};

/// Removes the first-derivative term. The antiderivative of B/(2A) is found
/// for polynomials in r plus c/r; otherwise pass it in, or NonIntegrableGauge
/// is thrown.
NormalForm eliminate_first_derivative(const SecondOrderODE& ode,
                                      const std::optional<ir::Expr>& antiderivative = std::nullopt);

/// Potential-minus-eigenvalue written as C1 I1(x) + C_{-1} I_{-1}(x) + C0(l).
struct TermDecomposition {
  ir::Expr i_plus;   ///< I_1
  ir::Expr i_minus;  ///< I_{-1}
  double c_plus = 0.0;
  double c_minus = 0.0;
  std::function<double(int)> c_zero;  ///< C0 as a function of l
};

/// Only the oscillator (sigma = 1) is decomposed: I1 = x^2, I_{-1} = x,
/// C1 = alpha^2/4, C_{-1} = alpha beta/2, C0 = beta^2/4 + alpha/2 - alpha m + alpha l.
/// Other families throw Unimplemented.
TermDecomposition decompose(const FamilySpec& family, int m);

/// A decomposition with literal coefficients, as in the translated oscillator
/// -phi'' + (theta^2 x^2 + rho x + lambda) phi = 0.
TermDecomposition literal_decomposition(ir::Expr i_plus, ir::Expr i_minus, double c_plus, double c_minus,
                                        double c_zero);

/// x(r) with x'(r) = 1/sqrt(I_k(x(r))).
struct SubstitutionMap {
  int k = 1;
  ir::Expr x_of_r;
  Interval source{0.0, std::numeric_limits<double>::infinity()};
  Interval target{0.0, std::numeric_limits<double>::infinity()};
};

/// Solves x' = I^(-1/2) in closed form when I = c x^p (c > 0, p != -2):
/// x(r) = ((p/2 + 1) r / sqrt(c))^(1/(p/2 + 1)). Throws MapNotClosedForm otherwise.
ir::Expr solve_map(const ir::Expr& i_k);

/// -5/16 I'^2/I^3 + 1/4 I''/I^2 as an expression in x.
ir::Expr correction_term(const ir::Expr& i_k);

struct Provenance {
  std::string source;  ///< e.g. "sigma=1 alpha=-2 beta=0" or "translated oscillator"
  int ell = -1;
  int m = -1;
  int k = 0;
  int branch = 0;
};

/// -psi'' + V(r) psi = E psi on (0, inf).
struct GeneratedSystem {
  ir::Expr potential;
  double energy = 0.0;
  ir::Expr gauge;  ///< I_k(x(r))^(1/4)
  SubstitutionMap map;
  Provenance provenance;
};

/// Equation obtained from dec at degree l by the change of variable for k:
/// V = C_{-k} I_{-k}/I_k + C0/I_k + correction, all at x(r); E = -C_k.
/// k = +1 uses I_1 = x^2 and x = sqrt(2r); k = -1 uses I_{-1} = x and
/// x = (3r/2)^(2/3). A caller-supplied x(r) bypasses solve_map.
GeneratedSystem substitute(const TermDecomposition& dec, int k, int ell,
                           const std::optional<ir::Expr>& x_of_r = std::nullopt);

/// gauge(r) * psi(x(r)) for a solution psi(x) of the source equation.
ir::Expr transform_solution(const GeneratedSystem& system, const ir::Expr& psi_x);

/// -psi'' + V psi - E psi at r, psi'' symbolic. Pass psi_dd to reuse a cached derivative.
double generated_residual(const GeneratedSystem& system, const ir::Expr& psi, double r,
                          const std::optional<ir::Expr>& psi_dd = std::nullopt);

/// max over rs of |residual| / (1 + |E psi|).
double generated_residual_norm(const GeneratedSystem& system, const ir::Expr& psi, std::span<const double> rs);

// ---------------------------------------------------------------------------
// Closed-form eigenpairs

struct ClosedFormEigenpair {
  int n = 0;
  int branch = +1;  ///< sign of beta, and of E for the cube-root system
  double c1 = 0.0;
  double c2 = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  double energy = 0.0;
  ir::Expr psi;  ///< expression in r
  bool admissible = true;
  bool degenerate = false;  ///< c1 = 0 in the inverse-square-root system
};

/// c1 (3r/2)^(2/3) + c2 (2/(3r))^(2/3) - 5/(36 r^2).
ir::Expr quantsys_potential(double c1, double c2);

/// c1/sqrt(2r) + c2/(2r) - 3/(16 r^2).
ir::Expr inverse_sqrt_potential(double c1, double c2);

/// alpha = -2 sqrt(c1), beta = branch * 2 sqrt(c2 + sqrt(c1)(1 + 2n)),
/// E = branch * 2 sqrt(c1 c2 + c1 sqrt(c1)(1 + 2n)),
/// psi = r^(1/6) exp(-(3/4)(3/2)^(1/3) sqrt(c1) r^(4/3) + branch (9/4)^(1/3) sqrt(rad) r^(2/3))
///       * H_n(c1^(1/4) x - branch c1^(-1/4) sqrt(rad)), x = (9/4)^(1/3) r^(2/3).
/// Throws Inadmissible if c1 <= 0 or the radicand is negative.
ClosedFormEigenpair solve_params_quantsys(double c1, double c2, int n, int branch);

/// Real roots alpha < 0 of (n + 1/2) alpha^3 - c2 alpha^2 + c1^2 = 0, with
/// beta = 2 c1/alpha and E = -alpha^2/4. Throws NoAdmissibleRoot if none.
std::vector<ClosedFormEigenpair> solve_params_inverse_sqrt(double c1, double c2, int n);

/// All real roots of the cubic (each flagged), admissible or not.
std::vector<ClosedFormEigenpair> inverse_sqrt_candidates(double c1, double c2, int n);

/// (c1, c2) of the inverse-square-root system for given oscillator parameters.
std::array<double, 2> inverse_sqrt_forward(double alpha, double beta, int m, int ell);

/// Real roots of a3 x^3 + a2 x^2 + a1 x + a0 (Cardano / trigonometric form,
/// each root polished by Newton steps), ascending, repeated roots once.
std::vector<double> real_cubic_roots(double a3, double a2, double a1, double a0);

// ---------------------------------------------------------------------------
// Translated oscillator

struct CoefficientPattern {
  std::array<std::string, 4> basis;
  std::array<double, 4> coeffs{};
  double max_fit_residual = 0.0;
};

/// -phi'' + (theta^2 x^2 + rho x + lambda) phi = 0 carried through the generic
/// pipeline. which = 1: x = sqrt(2r) (k = +1, E = -theta^2); which = 2:
/// x = (3r/2)^(2/3) (k = -1, E = -rho).
GeneratedSystem reproduce_dw(double theta, double rho, double lambda, int which);

/// Least-squares fit of V(r) - E onto the basis of the chosen substitution:
/// which = 1: {r^(-1/2), r^(-1), r^(-2), 1};
/// which = 2: {(3r/2)^(2/3), (2/(3r))^(2/3), r^(-2), 1}.
CoefficientPattern coefficient_pattern(const GeneratedSystem& system, int which);

}  // namespace solvable::gen
