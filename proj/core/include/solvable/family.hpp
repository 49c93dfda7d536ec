#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "solvable/expr.hpp"

namespace solvable {

/// The six canonical choices of sigma(s) = a s^2 + b s + c.
enum class SigmaCase { One, S, OneMinusS2, S2Minus1, S2, S2Plus1 };

inline constexpr std::array<SigmaCase, 6> kAllSigmaCases = {
    SigmaCase::One, SigmaCase::S, SigmaCase::OneMinusS2, SigmaCase::S2Minus1, SigmaCase::S2, SigmaCase::S2Plus1};

struct SigmaCoefficients {
  double a = 0.0;  ///< s^2
  double b = 0.0;  ///< s
  double c = 0.0;  ///< 1
};

SigmaCoefficients sigma_coefficients(SigmaCase c);

/// Display form used in JSON output: "1", "s", "1-s^2", "s^2-1", "s^2", "s^2+1".
std::string_view sigma_label(SigmaCase c);
/// Command-line name: "one", "s", "one-minus-s2", "s2-minus-1", "s2", "s2-plus-1".
std::string_view sigma_cli_name(SigmaCase c);
/// Accepts either spelling above.
std::optional<SigmaCase> parse_sigma_case(std::string_view name);
/// Human readable parameter constraint, e.g. "alpha<0, beta>0".
std::string_view sigma_constraint(SigmaCase c);

/// Open interval; endpoints may be +-infinity.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  bool contains(double x) const noexcept { return lo < x && x < hi; }
  bool lo_finite() const noexcept;
  bool hi_finite() const noexcept;
};

/// One admissible hypergeometric family: sigma from the case, tau(s) = alpha s + beta,
/// and the weight rho with (sigma rho)' = tau rho on the case's interval.
class FamilySpec {
 public:
  /// Throws InadmissibleParameters naming the violated constraint.
  FamilySpec(SigmaCase sigma_case, double alpha, double beta);

  SigmaCase sigma_case() const noexcept { return case_; }
  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }
  const Interval& interval() const noexcept { return interval_; }
  const SigmaCoefficients& sigma_coeffs() const noexcept { return sigma_; }

  double sigma(double s) const noexcept { return (sigma_.a * s + sigma_.b) * s + sigma_.c; }
  double sigma_prime(double s) const noexcept { return 2.0 * sigma_.a * s + sigma_.b; }
  double sigma_second() const noexcept { return 2.0 * sigma_.a; }
  double tau(double s) const noexcept { return alpha_ * s + beta_; }
  double tau_prime() const noexcept { return alpha_; }
  double rho(double s) const;
  /// log rho(s), finite wherever rho is representable or underflows.
  double log_rho(double s) const;

  ir::Expr sigma_expr() const;
  /// sigma written as a product of its real linear factors where it has them;
  /// the Rodrigues oracle differentiates sigma^l rho in this form.
  ir::Expr sigma_factored_expr() const;
  ir::Expr tau_expr() const;
  ir::Expr kappa_expr() const;
  /// rho^t as a product of powers of the case's factors (t = 1 gives rho).
  ir::Expr weight_power(double t) const;
  /// log(rho) as a closed-form expression.
  ir::Expr log_weight() const;

 private:
  SigmaCase case_;
  double alpha_;
  double beta_;
  Interval interval_;
  SigmaCoefficients sigma_;
};

/// rho as an expression in s.
ir::Expr weight(const FamilySpec& family);

struct FamilyCutoff {
  /// (1 - alpha)/2 for the finite families; nullopt means unbounded.
  std::optional<double> lambda_cap;
  /// max{l in N | l < (1 - alpha)/2} for the finite families.
  std::optional<int> max_degree;

  bool bounded() const noexcept { return lambda_cap.has_value(); }
  bool admits(int ell) const noexcept { return ell >= 0 && (!max_degree || ell <= *max_degree); }
};

FamilyCutoff cutoff(const FamilySpec& family);

/// Throws DegreeBeyondCutoff unless 0 <= ell < Lambda.
void require_below_cutoff(const FamilySpec& family, int ell);

/// lambda_l = -(sigma''/2) l (l - 1) - alpha l.
double eigenvalue(const FamilySpec& family, int ell);

/// A finite window inside the interval holding most of the interesting
/// structure; used for sampling and plots.
Interval sample_window(const Interval& interval);

}  // namespace solvable
