#include "solvable/schrodinger.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "solvable/error.hpp"

namespace solvable {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

VariableMap::VariableMap(const FamilySpec& family) : case_(family.sigma_case()) {
  const ir::Expr v = ir::Expr::var();
  switch (case_) {
    case SigmaCase::One:
      forward_ = v;
      inverse_ = v;
      image_ = {-kInf, kInf};
      break;
    case SigmaCase::S:
      forward_ = ir::simplify(2.0 * ir::sqrt(v));
      inverse_ = ir::simplify(ir::pow(v, 2) / 4.0);
      image_ = {0.0, kInf};
      break;
    case SigmaCase::OneMinusS2:
      forward_ = ir::asin(v);
      inverse_ = ir::sin(v);
      image_ = {-std::numbers::pi / 2.0, std::numbers::pi / 2.0};
      break;
    case SigmaCase::S2Minus1:
      forward_ = ir::acosh(v);
      inverse_ = ir::cosh(v);
      image_ = {0.0, kInf};
      break;
    case SigmaCase::S2:
      forward_ = ir::log(v);
      inverse_ = ir::exp(v);
      image_ = {-kInf, kInf};
      break;
    case SigmaCase::S2Plus1:
      forward_ = ir::asinh(v);
      inverse_ = ir::sinh(v);
      image_ = {-kInf, kInf};
      break;
  }
}

double VariableMap::to_x(double s) const {
  switch (case_) {
    case SigmaCase::One: return s;
    case SigmaCase::S: return 2.0 * std::sqrt(s);
    case SigmaCase::OneMinusS2: return std::asin(s);
    case SigmaCase::S2Minus1: return std::acosh(s);
    case SigmaCase::S2: return std::log(s);
    case SigmaCase::S2Plus1: return std::asinh(s);
  }
  return s;
}

double VariableMap::to_s(double x) const {
  switch (case_) {
    case SigmaCase::One: return x;
    case SigmaCase::S: return x * x / 4.0;
    case SigmaCase::OneMinusS2: return std::sin(x);
    case SigmaCase::S2Minus1: return std::cosh(x);
    case SigmaCase::S2: return std::exp(x);
    case SigmaCase::S2Plus1: return std::sinh(x);
  }
  return x;
}

VariableMap variable_map(const FamilySpec& family) { return VariableMap(family); }

// ---------------------------------------------------------------------------

SchrodingerSystem::SchrodingerSystem(ir::Expr potential, Interval interval)
    : potential_(std::move(potential)), interval_(interval) {}

std::size_t SchrodingerSystem::add_eigenpair(double lambda, ir::Expr psi, int ell, int m) {
  ir::Expr dd = ir::derivative(psi, 2);
  pairs_.push_back({ell, m, lambda, std::move(psi), std::move(dd)});
  return pairs_.size() - 1;
}

double SchrodingerSystem::potential_at(double x) const {
  try {
    return ir::evaluate(potential_, x);
  } catch (const DomainError& e) {
    throw SingularPoint(std::string("potential is singular: ") + e.what());
  }
}

ir::Expr oscillator_potential(double alpha, double beta, int m) {
  const ir::Expr x = ir::Expr::var();
  return ir::simplify(alpha * alpha / 4.0 * ir::pow(x, 2) + alpha * beta / 2.0 * x +
                      ir::Expr::constant(beta * beta / 4.0 + alpha / 2.0 - alpha * m));
}

ir::Expr wavefunction(const FamilySpec& family, int ell, int m) {
  const SpecialFunction sf = special_function(family, ell, m);
  const ir::Expr amp = ir::pow_real(family.sigma_expr(), 0.25 + 0.5 * m) * family.weight_power(0.5);
  const ir::Expr in_s = ir::simplify(amp * sf.poly_part().to_expr());
  return ir::compose(in_s, VariableMap(family).inverse());
}

double wavefunction_value(const FamilySpec& family, const SpecialFunction& phi_lm, double x) {
  const VariableMap map(family);
  const double s = map.to_s(x);
  if (!family.interval().contains(s)) return 0.0;
  const double p = phi_lm.poly_part()(s);
  if (p == 0.0) return 0.0;
  const double sg = family.sigma(s);
  const double log_mag = (0.25 + 0.5 * phi_lm.m()) * std::log(sg) + 0.5 * family.log_rho(s) + std::log(std::abs(p));
  return std::copysign(std::exp(log_mag), p);
}

SchrodingerSystem potential(const FamilySpec& family, int m, std::span<const int> ells) {
  require_below_cutoff(family, m);
  const HmOperator hm(family, m);
  const ir::Expr sigma = family.sigma_expr();
  const ir::Expr tau = family.tau_expr();
  // log eta = -1/4 log sigma - 1/2 log rho; eta'/eta = L', eta''/eta = L'' + L'^2.
  const ir::Expr log_eta = ir::simplify(-0.25 * ir::log(sigma) - 0.5 * family.log_weight());
  const ir::Expr l1 = ir::differentiate(log_eta);
  const ir::Expr l2 = ir::differentiate(l1);
  const ir::Expr v_s = ir::expand(hm.multiplier() - sigma * (l2 + l1 * l1) - tau * l1);
  const VariableMap map(family);
  SchrodingerSystem sys(ir::compose(v_s, map.inverse()), map.image());
  for (const int ell : ells) sys.add_eigenpair(eigenvalue(family, ell), wavefunction(family, ell, m), ell, m);
  return sys;
}

double schrodinger_residual(const SchrodingerSystem& system, std::size_t pair_index, double x) {
  const Eigenpair& p = system.eigenpairs().at(pair_index);
  const double v = system.potential_at(x);
  const double psi = ir::evaluate(p.psi, x);
  const double dd = ir::evaluate(p.psi_dd, x);
  return -dd + v * psi - p.lambda * psi;
}

double residual_norm(const SchrodingerSystem& system, std::size_t pair_index, std::span<const double> xs) {
  const Eigenpair& p = system.eigenpairs().at(pair_index);
  double worst = 0.0;
  for (const double x : xs) {
    const double r = schrodinger_residual(system, pair_index, x);
    const double scale = 1.0 + std::abs(p.lambda * ir::evaluate(p.psi, x));
    worst = std::max(worst, std::abs(r) / scale);
  }
  return worst;
}

Interval plot_window(const Interval& image) {
  const double span = image.lo_finite() && image.hi_finite() ? image.hi - image.lo : 1.0;
  const double eps = 1e-6 * span;
  return {image.lo_finite() ? image.lo + eps : -10.0, image.hi_finite() ? image.hi - eps : 10.0};
}

}  // namespace solvable
