#pragma once

// Minimal single-variable expression IR: constants, the variable, sums,
// products, rational powers, exp, a handful of named elementary functions
// used by the closed-form variable maps, and dense polynomials applied to a
// sub-expression. Trees are immutable and shared; every operation returns a
// new tree.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace solvable::ir {

/// Exact rational with 64-bit parts, always reduced with a positive denominator.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  /// Recovers p/q from a double when |p/q - v| <= 1e-14 * max(1, |v|) for some
  /// q <= max_den; nullopt otherwise.
  static std::optional<Rational> from_double(double v, std::int64_t max_den = 100000);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  bool is_integer() const noexcept { return den_ == 1; }
  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

  friend Rational operator+(Rational a, Rational b);
  friend Rational operator-(Rational a, Rational b);
  friend Rational operator*(Rational a, Rational b);
  friend Rational operator/(Rational a, Rational b);
  Rational operator-() const { return Rational(-num_, den_); }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  std::string to_string() const;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Named elementary functions. Only the variable maps of the six families need
/// these; the substitution algorithm itself runs on powers and exp.
enum class Fn { Log, Sin, Cos, Sinh, Cosh, Arctan, Arcsin, Arccosh, Arcsinh };

std::string_view fn_name(Fn fn);

class Expr {
 public:
  enum class Kind { Const, Var, Add, Mul, Pow, Exp, Func, Poly };

  /// The constant 0.
  Expr();

  static Expr constant(double c);
  static Expr var();
  static Expr sum(std::vector<Expr> terms);
  static Expr product(std::vector<Expr> factors);
  static Expr pow(Expr base, Rational exponent);
  static Expr exp(Expr arg);
  static Expr func(Fn fn, Expr arg);
  /// sum_j coeffs[j] * arg^j, evaluated by Horner's rule.
  static Expr polynomial(std::vector<double> coeffs, Expr arg);

  Kind kind() const noexcept;
  double value() const;                  ///< Const only
  const Rational& exponent() const;      ///< Pow only
  Fn fn() const;                         ///< Func only
  std::span<const double> coeffs() const;  ///< Poly only
  std::span<const Expr> args() const noexcept;
  const Expr& arg(std::size_t i = 0) const;

  bool is_const() const noexcept { return kind() == Kind::Const; }
  bool is_const(double c) const noexcept;

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

Expr operator+(const Expr& a, const Expr& b);
Expr operator-(const Expr& a, const Expr& b);
Expr operator*(const Expr& a, const Expr& b);
Expr operator/(const Expr& a, const Expr& b);
Expr operator-(const Expr& a);
Expr operator+(const Expr& a, double b);
Expr operator+(double a, const Expr& b);
Expr operator-(const Expr& a, double b);
Expr operator-(double a, const Expr& b);
Expr operator*(double a, const Expr& b);
Expr operator*(const Expr& a, double b);
Expr operator/(const Expr& a, double b);
Expr operator/(double a, const Expr& b);

Expr pow(const Expr& base, Rational exponent);
/// base^p for real p: a Pow node when p is (numerically) rational, otherwise
/// exp(p * log(base)).
Expr pow_real(const Expr& base, double p);
Expr sqrt(const Expr& e);
Expr exp(const Expr& e);
Expr log(const Expr& e);
Expr sin(const Expr& e);
Expr cos(const Expr& e);
Expr sinh(const Expr& e);
Expr cosh(const Expr& e);
Expr atan(const Expr& e);
Expr asin(const Expr& e);
Expr acosh(const Expr& e);
Expr asinh(const Expr& e);

/// Total order used for canonical operand sorting; 0 means structurally equal.
int compare(const Expr& a, const Expr& b);
inline bool structurally_equal(const Expr& a, const Expr& b) { return compare(a, b) == 0; }

Expr differentiate(const Expr& e);
Expr derivative(const Expr& e, int order);

/// Pointwise value. Throws DomainError for poles, even roots of negative
/// numbers, logs of non-positive numbers and non-finite results.
double evaluate(const Expr& e, double x);

/// Substitutes `inner` for the variable of `outer` and simplifies.
Expr compose(const Expr& outer, const Expr& inner);

/// Conservative value-preserving normalization (flatten, fold constants,
/// collect like terms and like bases, collapse safe power-of-power, merge
/// exponentials). Runs to a fixpoint, so simplify(simplify(e)) == simplify(e).
Expr simplify(const Expr& e);

/// simplify() plus distribution of products over sums and small positive
/// integer powers of sums.
Expr expand(const Expr& e);

/// Parses `x`, `r` or `s` as the variable, numbers, `+ - * / ^`, parentheses,
/// `exp sqrt log sin cos sinh cosh atan asin acosh asinh`. The right operand of
/// `^` must be a rational literal such as `2`, `-1`, `(2/3)` or `(-1.5)`.
Expr parse(std::string_view text);

/// Parseable rendering; constants are printed with 17 significant digits.
std::string to_string(const Expr& e, std::string_view var = "x");

std::size_t node_count(const Expr& e);

}  // namespace solvable::ir
