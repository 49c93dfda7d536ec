#include "solvable/family.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "solvable/error.hpp"

namespace solvable {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

SigmaCoefficients sigma_coefficients(SigmaCase c) {
  switch (c) {
    case SigmaCase::One: return {0.0, 0.0, 1.0};
    case SigmaCase::S: return {0.0, 1.0, 0.0};
    case SigmaCase::OneMinusS2: return {-1.0, 0.0, 1.0};
    case SigmaCase::S2Minus1: return {1.0, 0.0, -1.0};
    case SigmaCase::S2: return {1.0, 0.0, 0.0};
    case SigmaCase::S2Plus1: return {1.0, 0.0, 1.0};
  }
  return {};
}

std::string_view sigma_label(SigmaCase c) {
  switch (c) {
    case SigmaCase::One: return "1";
    case SigmaCase::S: return "s";
    case SigmaCase::OneMinusS2: return "1-s^2";
    case SigmaCase::S2Minus1: return "s^2-1";
    case SigmaCase::S2: return "s^2";
    case SigmaCase::S2Plus1: return "s^2+1";
  }
  return "?";
}

std::string_view sigma_cli_name(SigmaCase c) {
  switch (c) {
    case SigmaCase::One: return "one";
    case SigmaCase::S: return "s";
    case SigmaCase::OneMinusS2: return "one-minus-s2";
    case SigmaCase::S2Minus1: return "s2-minus-1";
    case SigmaCase::S2: return "s2";
    case SigmaCase::S2Plus1: return "s2-plus-1";
  }
  return "?";
}

std::optional<SigmaCase> parse_sigma_case(std::string_view name) {
  for (const SigmaCase c : kAllSigmaCases)
    if (name == sigma_label(c) || name == sigma_cli_name(c)) return c;
  return std::nullopt;
}

std::string_view sigma_constraint(SigmaCase c) {
  switch (c) {
    case SigmaCase::One: return "alpha<0";
    case SigmaCase::S: return "alpha<0, beta>0";
    case SigmaCase::OneMinusS2: return "alpha<beta<-alpha";
    case SigmaCase::S2Minus1: return "-beta<alpha<0";
    case SigmaCase::S2: return "alpha<0, beta>0";
    case SigmaCase::S2Plus1: return "alpha<0";
  }
  return "?";
}

bool Interval::lo_finite() const noexcept { return std::isfinite(lo); }
bool Interval::hi_finite() const noexcept { return std::isfinite(hi); }

FamilySpec::FamilySpec(SigmaCase sigma_case, double alpha, double beta)
    : case_(sigma_case), alpha_(alpha), beta_(beta), sigma_(sigma_coefficients(sigma_case)) {
  if (!std::isfinite(alpha) || !std::isfinite(beta))
    throw InadmissibleParameters("alpha and beta must be finite");
  bool ok = false;
  switch (case_) {
    case SigmaCase::One:
      ok = alpha < 0;
      interval_ = {-kInf, kInf};
      break;
    case SigmaCase::S:
      ok = alpha < 0 && beta > 0;
      interval_ = {0.0, kInf};
      break;
    case SigmaCase::OneMinusS2:
      ok = alpha < beta && beta < -alpha;
      interval_ = {-1.0, 1.0};
      break;
    case SigmaCase::S2Minus1:
      ok = -beta < alpha && alpha < 0;
      interval_ = {1.0, kInf};
      break;
    case SigmaCase::S2:
      ok = alpha < 0 && beta > 0;
      interval_ = {0.0, kInf};
      break;
    case SigmaCase::S2Plus1:
      ok = alpha < 0;
      interval_ = {-kInf, kInf};
      break;
  }
  if (!ok) {
    throw InadmissibleParameters("sigma(s)=" + std::string(sigma_label(case_)) + " requires " +
                                 std::string(sigma_constraint(case_)) + " (got alpha=" + std::to_string(alpha) +
                                 ", beta=" + std::to_string(beta) + ")");
  }
}

double FamilySpec::rho(double s) const {
  const double a = alpha_, b = beta_;
  switch (case_) {
    case SigmaCase::One: return std::exp(a * s * s / 2.0 + b * s);
    case SigmaCase::S: return std::pow(s, b - 1.0) * std::exp(a * s);
    case SigmaCase::OneMinusS2:
      return std::pow(1.0 + s, -(a - b) / 2.0 - 1.0) * std::pow(1.0 - s, -(a + b) / 2.0 - 1.0);
    case SigmaCase::S2Minus1:
      return std::pow(s + 1.0, (a - b) / 2.0 - 1.0) * std::pow(s - 1.0, (a + b) / 2.0 - 1.0);
    case SigmaCase::S2: return std::exp((a - 2.0) * std::log(s) - b / s);
    case SigmaCase::S2Plus1: return std::pow(1.0 + s * s, a / 2.0 - 1.0) * std::exp(b * std::atan(s));
  }
  return 0.0;
}

double FamilySpec::log_rho(double s) const {
  const double a = alpha_, b = beta_;
  switch (case_) {
    case SigmaCase::One: return a * s * s / 2.0 + b * s;
    case SigmaCase::S: return (b - 1.0) * std::log(s) + a * s;
    case SigmaCase::OneMinusS2:
      return (-(a - b) / 2.0 - 1.0) * std::log1p(s) + (-(a + b) / 2.0 - 1.0) * std::log1p(-s);
    case SigmaCase::S2Minus1:
      return ((a - b) / 2.0 - 1.0) * std::log(s + 1.0) + ((a + b) / 2.0 - 1.0) * std::log(s - 1.0);
    case SigmaCase::S2: return (a - 2.0) * std::log(s) - b / s;
    case SigmaCase::S2Plus1: return (a / 2.0 - 1.0) * std::log1p(s * s) + b * std::atan(s);
  }
  return 0.0;
}

ir::Expr FamilySpec::sigma_expr() const {
  const auto s = ir::Expr::var();
  return ir::simplify(sigma_.a * ir::pow(s, 2) + sigma_.b * s + ir::Expr::constant(sigma_.c));
}

ir::Expr FamilySpec::sigma_factored_expr() const {
  const auto s = ir::Expr::var();
  switch (case_) {
    case SigmaCase::OneMinusS2: return ir::simplify((1.0 + s) * (1.0 - s));
    case SigmaCase::S2Minus1: return ir::simplify((s + 1.0) * (s - 1.0));
    case SigmaCase::S2: return ir::simplify(s * s);
    default: return sigma_expr();
  }
}

ir::Expr FamilySpec::tau_expr() const {
  return ir::simplify(alpha_ * ir::Expr::var() + ir::Expr::constant(beta_));
}

ir::Expr FamilySpec::kappa_expr() const { return ir::simplify(ir::sqrt(sigma_expr())); }

ir::Expr FamilySpec::weight_power(double t) const {
  using ir::pow_real;
  const auto s = ir::Expr::var();
  const double a = alpha_, b = beta_;
  ir::Expr e;
  switch (case_) {
    case SigmaCase::One: e = ir::exp(t * (a / 2.0 * ir::pow(s, 2) + b * s)); break;
    case SigmaCase::S: e = pow_real(s, t * (b - 1.0)) * ir::exp(t * a * s); break;
    case SigmaCase::OneMinusS2:
      e = pow_real(1.0 + s, t * (-(a - b) / 2.0 - 1.0)) * pow_real(1.0 - s, t * (-(a + b) / 2.0 - 1.0));
      break;
    case SigmaCase::S2Minus1:
      e = pow_real(s + 1.0, t * ((a - b) / 2.0 - 1.0)) * pow_real(s - 1.0, t * ((a + b) / 2.0 - 1.0));
      break;
    case SigmaCase::S2: e = pow_real(s, t * (a - 2.0)) * ir::exp(-t * b / s); break;
    case SigmaCase::S2Plus1:
      e = pow_real(1.0 + ir::pow(s, 2), t * (a / 2.0 - 1.0)) * ir::exp(t * b * ir::atan(s));
      break;
  }
  return ir::simplify(e);
}

ir::Expr FamilySpec::log_weight() const {
  const auto s = ir::Expr::var();
  const double a = alpha_, b = beta_;
  ir::Expr e;
  switch (case_) {
    case SigmaCase::One: e = a / 2.0 * ir::pow(s, 2) + b * s; break;
    case SigmaCase::S: e = (b - 1.0) * ir::log(s) + a * s; break;
    case SigmaCase::OneMinusS2:
      e = (-(a - b) / 2.0 - 1.0) * ir::log(1.0 + s) + (-(a + b) / 2.0 - 1.0) * ir::log(1.0 - s);
      break;
    case SigmaCase::S2Minus1:
      e = ((a - b) / 2.0 - 1.0) * ir::log(s + 1.0) + ((a + b) / 2.0 - 1.0) * ir::log(s - 1.0);
      break;
    case SigmaCase::S2: e = (a - 2.0) * ir::log(s) - b / s; break;
    case SigmaCase::S2Plus1: e = (a / 2.0 - 1.0) * ir::log(1.0 + ir::pow(s, 2)) + b * ir::atan(s); break;
  }
  return ir::simplify(e);
}

ir::Expr weight(const FamilySpec& family) { return family.weight_power(1.0); }

FamilyCutoff cutoff(const FamilySpec& family) {
  switch (family.sigma_case()) {
    case SigmaCase::One:
    case SigmaCase::S:
    case SigmaCase::OneMinusS2:
      return {};
    default: break;
  }
  const double cap = (1.0 - family.alpha()) / 2.0;
  // Largest integer strictly below cap.
  const int max_degree = static_cast<int>(std::ceil(cap)) - 1;
  return {cap, max_degree};
}

void require_below_cutoff(const FamilySpec& family, int ell) {
  if (ell < 0) throw DegreeBeyondCutoff("degree must be non-negative");
  const FamilyCutoff cut = cutoff(family);
  if (!cut.admits(ell)) {
    throw DegreeBeyondCutoff("degree " + std::to_string(ell) + " is not below Lambda=" +
                             std::to_string(*cut.lambda_cap) + " for sigma(s)=" +
                             std::string(sigma_label(family.sigma_case())));
  }
}

double eigenvalue(const FamilySpec& family, int ell) {
  require_below_cutoff(family, ell);
  const double l = ell;
  return -family.sigma_coeffs().a * l * (l - 1.0) - family.alpha() * l;
}

Interval sample_window(const Interval& iv) {
  if (iv.lo_finite() && iv.hi_finite()) {
    const double w = iv.hi - iv.lo;
    return {iv.lo + 0.02 * w, iv.hi - 0.02 * w};
  }
  if (iv.lo_finite()) return {iv.lo + 0.05, iv.lo + 8.0};
  if (iv.hi_finite()) return {iv.hi - 8.0, iv.hi - 0.05};
  return {-4.0, 4.0};
}

}  // namespace solvable
