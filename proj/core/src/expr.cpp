#include "solvable/expr.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "solvable/error.hpp"

namespace solvable::ir {

// ---------------------------------------------------------------------------
// Rational

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("rational overflow");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("rational overflow");
  return r;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = g ? num / g : 0;
  den_ = g ? den / g : 1;
}

std::optional<Rational> Rational::from_double(double v, std::int64_t max_den) {
  if (!std::isfinite(v) || std::abs(v) > 1e15) return std::nullopt;
  const double tol = 1e-14 * std::max(1.0, std::abs(v));
  // Continued-fraction convergents h/k.
  double x = v;
  std::int64_t h0 = 1, h1 = 0, k0 = 0, k1 = 1;
  for (int it = 0; it < 64; ++it) {
    const double a_d = std::floor(x);
    if (std::abs(a_d) > 1e15) break;
    const auto a = static_cast<std::int64_t>(a_d);
    const std::int64_t h2 = a * h0 + h1;
    const std::int64_t k2 = a * k0 + k1;
    if (k2 > max_den) break;
    h1 = h0;
    h0 = h2;
    k1 = k0;
    k0 = k2;
    if (std::abs(static_cast<double>(h0) / static_cast<double>(k0) - v) <= tol) return Rational(h0, k0);
    const double frac = x - a_d;
    if (frac == 0.0) break;
    x = 1.0 / frac;
  }
  return std::nullopt;
}

Rational operator+(Rational a, Rational b) {
  return Rational(checked_add(checked_mul(a.num_, b.den_), checked_mul(b.num_, a.den_)),
                  checked_mul(a.den_, b.den_));
}
Rational operator-(Rational a, Rational b) { return a + (-b); }
Rational operator*(Rational a, Rational b) {
  return Rational(checked_mul(a.num_, b.num_), checked_mul(a.den_, b.den_));
}
Rational operator/(Rational a, Rational b) {
  if (b.num_ == 0) throw std::invalid_argument("rational division by zero");
  return Rational(checked_mul(a.num_, b.den_), checked_mul(a.den_, b.num_));
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  // Denominators are positive, so cross multiplication preserves order.
  __extension__ typedef __int128 wide;
  const wide l = static_cast<wide>(a.num_) * b.den_;
  const wide r = static_cast<wide>(b.num_) * a.den_;
  if (l < r) return std::strong_ordering::less;
  if (l > r) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

// ---------------------------------------------------------------------------
// Nodes

std::string_view fn_name(Fn fn) {
  switch (fn) {
    case Fn::Log: return "log";
    case Fn::Sin: return "sin";
    case Fn::Cos: return "cos";
    case Fn::Sinh: return "sinh";
    case Fn::Cosh: return "cosh";
    case Fn::Arctan: return "atan";
    case Fn::Arcsin: return "asin";
    case Fn::Arccosh: return "acosh";
    case Fn::Arcsinh: return "asinh";
  }
  return "?";
}

struct Expr::Node {
  Kind kind = Kind::Const;
  double value = 0.0;
  Rational exponent;
  Fn fn = Fn::Log;
  std::vector<double> coeffs;
  std::vector<Expr> args;
};

namespace {

const Expr& zero_singleton() {
  static const Expr z = Expr::constant(0.0);
  return z;
}

}  // namespace

Expr::Expr() : Expr(zero_singleton()) {}

Expr Expr::constant(double c) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Const;
  n->value = c == 0.0 ? 0.0 : c;  // no negative zero
  return Expr(std::move(n));
}

Expr Expr::var() {
  static const Expr v = [] {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Var;
    return Expr(std::move(n));
  }();
  return v;
}

Expr Expr::sum(std::vector<Expr> terms) {
  if (terms.empty()) return constant(0.0);
  if (terms.size() == 1) return terms.front();
  auto n = std::make_shared<Node>();
  n->kind = Kind::Add;
  n->args = std::move(terms);
  return Expr(std::move(n));
}

Expr Expr::product(std::vector<Expr> factors) {
  if (factors.empty()) return constant(1.0);
  if (factors.size() == 1) return factors.front();
  auto n = std::make_shared<Node>();
  n->kind = Kind::Mul;
  n->args = std::move(factors);
  return Expr(std::move(n));
}

Expr Expr::pow(Expr base, Rational exponent) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Pow;
  n->exponent = exponent;
  n->args = {std::move(base)};
  return Expr(std::move(n));
}

Expr Expr::exp(Expr arg) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Exp;
  n->args = {std::move(arg)};
  return Expr(std::move(n));
}

Expr Expr::func(Fn fn, Expr arg) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Func;
  n->fn = fn;
  n->args = {std::move(arg)};
  return Expr(std::move(n));
}

Expr Expr::polynomial(std::vector<double> coeffs, Expr arg) {
  while (!coeffs.empty() && coeffs.back() == 0.0) coeffs.pop_back();
  if (coeffs.empty()) return constant(0.0);
  if (coeffs.size() == 1) return constant(coeffs.front());
  auto n = std::make_shared<Node>();
  n->kind = Kind::Poly;
  n->coeffs = std::move(coeffs);
  n->args = {std::move(arg)};
  return Expr(std::move(n));
}

Expr::Kind Expr::kind() const noexcept { return node_->kind; }

double Expr::value() const {
  if (node_->kind != Kind::Const) throw std::logic_error("Expr::value on non-constant");
  return node_->value;
}

const Rational& Expr::exponent() const {
  if (node_->kind != Kind::Pow) throw std::logic_error("Expr::exponent on non-power");
  return node_->exponent;
}

Fn Expr::fn() const {
  if (node_->kind != Kind::Func) throw std::logic_error("Expr::fn on non-function");
  return node_->fn;
}

std::span<const double> Expr::coeffs() const {
  if (node_->kind != Kind::Poly) throw std::logic_error("Expr::coeffs on non-polynomial");
  return node_->coeffs;
}

std::span<const Expr> Expr::args() const noexcept { return node_->args; }

const Expr& Expr::arg(std::size_t i) const { return node_->args.at(i); }

bool Expr::is_const(double c) const noexcept { return node_->kind == Kind::Const && node_->value == c; }

// ---------------------------------------------------------------------------
// Builders

Expr operator+(const Expr& a, const Expr& b) { return Expr::sum({a, b}); }
Expr operator-(const Expr& a, const Expr& b) { return Expr::sum({a, -b}); }
Expr operator*(const Expr& a, const Expr& b) { return Expr::product({a, b}); }
Expr operator/(const Expr& a, const Expr& b) { return Expr::product({a, Expr::pow(b, Rational(-1))}); }
Expr operator-(const Expr& a) {
  if (a.is_const()) return Expr::constant(-a.value());
  return Expr::product({Expr::constant(-1.0), a});
}
Expr operator+(const Expr& a, double b) { return a + Expr::constant(b); }
Expr operator+(double a, const Expr& b) { return Expr::constant(a) + b; }
Expr operator-(const Expr& a, double b) { return a - Expr::constant(b); }
Expr operator-(double a, const Expr& b) { return Expr::constant(a) - b; }
Expr operator*(double a, const Expr& b) { return Expr::constant(a) * b; }
Expr operator*(const Expr& a, double b) { return a * Expr::constant(b); }
Expr operator/(const Expr& a, double b) { return a * Expr::constant(1.0 / b); }
Expr operator/(double a, const Expr& b) { return Expr::constant(a) / b; }

Expr pow(const Expr& base, Rational exponent) { return Expr::pow(base, exponent); }

Expr pow_real(const Expr& base, double p) {
  if (p == 0.0) return Expr::constant(1.0);
  if (auto q = Rational::from_double(p)) return Expr::pow(base, *q);
  return Expr::exp(Expr::constant(p) * log(base));
}

Expr sqrt(const Expr& e) { return Expr::pow(e, Rational(1, 2)); }
Expr exp(const Expr& e) { return Expr::exp(e); }
Expr log(const Expr& e) { return Expr::func(Fn::Log, e); }
Expr sin(const Expr& e) { return Expr::func(Fn::Sin, e); }
Expr cos(const Expr& e) { return Expr::func(Fn::Cos, e); }
Expr sinh(const Expr& e) { return Expr::func(Fn::Sinh, e); }
Expr cosh(const Expr& e) { return Expr::func(Fn::Cosh, e); }
Expr atan(const Expr& e) { return Expr::func(Fn::Arctan, e); }
Expr asin(const Expr& e) { return Expr::func(Fn::Arcsin, e); }
Expr acosh(const Expr& e) { return Expr::func(Fn::Arccosh, e); }
Expr asinh(const Expr& e) { return Expr::func(Fn::Arcsinh, e); }

// ---------------------------------------------------------------------------
// Ordering

int compare(const Expr& a, const Expr& b) {
  if (a.kind() != b.kind()) return static_cast<int>(a.kind()) < static_cast<int>(b.kind()) ? -1 : 1;
  switch (a.kind()) {
    case Expr::Kind::Const:
      if (a.value() == b.value()) return 0;
      return a.value() < b.value() ? -1 : 1;
    case Expr::Kind::Var:
      return 0;
    case Expr::Kind::Pow: {
      const int c = compare(a.arg(), b.arg());
      if (c != 0) return c;
      const auto o = a.exponent() <=> b.exponent();
      return o < 0 ? -1 : (o > 0 ? 1 : 0);
    }
    case Expr::Kind::Func:
      if (a.fn() != b.fn()) return static_cast<int>(a.fn()) < static_cast<int>(b.fn()) ? -1 : 1;
      return compare(a.arg(), b.arg());
    case Expr::Kind::Poly: {
      const auto ca = a.coeffs();
      const auto cb = b.coeffs();
      if (ca.size() != cb.size()) return ca.size() < cb.size() ? -1 : 1;
      for (std::size_t i = 0; i < ca.size(); ++i)
        if (ca[i] != cb[i]) return ca[i] < cb[i] ? -1 : 1;
      return compare(a.arg(), b.arg());
    }
    case Expr::Kind::Exp:
    case Expr::Kind::Add:
    case Expr::Kind::Mul: {
      const auto xa = a.args();
      const auto xb = b.args();
      const std::size_t n = std::min(xa.size(), xb.size());
      for (std::size_t i = 0; i < n; ++i)
        if (const int c = compare(xa[i], xb[i]); c != 0) return c;
      if (xa.size() != xb.size()) return xa.size() < xb.size() ? -1 : 1;
      return 0;
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Differentiation

namespace {

Expr diff_raw(const Expr& e) {
  using K = Expr::Kind;
  switch (e.kind()) {
    case K::Const:
      return Expr::constant(0.0);
    case K::Var:
      return Expr::constant(1.0);
    case K::Add: {
      std::vector<Expr> terms;
      terms.reserve(e.args().size());
      for (const auto& t : e.args()) terms.push_back(diff_raw(t));
      return Expr::sum(std::move(terms));
    }
    case K::Mul: {
      const auto f = e.args();
      std::vector<Expr> terms;
      for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i].is_const()) continue;
        std::vector<Expr> factors(f.begin(), f.end());
        factors[i] = diff_raw(f[i]);
        terms.push_back(Expr::product(std::move(factors)));
      }
      return Expr::sum(std::move(terms));
    }
    case K::Pow: {
      const Rational q = e.exponent();
      return Expr::product({Expr::constant(q.to_double()), Expr::pow(e.arg(), q - Rational(1)), diff_raw(e.arg())});
    }
    case K::Exp:
      return Expr::product({e, diff_raw(e.arg())});
    case K::Func: {
      const Expr& u = e.arg();
      const Expr du = diff_raw(u);
      const Expr u2 = Expr::pow(u, Rational(2));
      switch (e.fn()) {
        case Fn::Log: return Expr::product({du, Expr::pow(u, Rational(-1))});
        case Fn::Sin: return Expr::product({cos(u), du});
        case Fn::Cos: return Expr::product({Expr::constant(-1.0), sin(u), du});
        case Fn::Sinh: return Expr::product({cosh(u), du});
        case Fn::Cosh: return Expr::product({sinh(u), du});
        case Fn::Arctan:
          return Expr::product({du, Expr::pow(Expr::sum({Expr::constant(1.0), u2}), Rational(-1))});
        case Fn::Arcsin:
          return Expr::product(
              {du, Expr::pow(Expr::sum({Expr::constant(1.0), Expr::product({Expr::constant(-1.0), u2})}),
                             Rational(-1, 2))});
        case Fn::Arccosh:
          return Expr::product({du, Expr::pow(Expr::sum({Expr::constant(-1.0), u2}), Rational(-1, 2))});
        case Fn::Arcsinh:
          return Expr::product({du, Expr::pow(Expr::sum({Expr::constant(1.0), u2}), Rational(-1, 2))});
      }
      break;
    }
    case K::Poly: {
      const auto c = e.coeffs();
      std::vector<double> dc;
      for (std::size_t j = 1; j < c.size(); ++j) dc.push_back(static_cast<double>(j) * c[j]);
      return Expr::product({Expr::polynomial(std::move(dc), e.arg()), diff_raw(e.arg())});
    }
  }
  throw std::logic_error("differentiate: unknown node");
}

}  // namespace

Expr differentiate(const Expr& e) { return simplify(diff_raw(e)); }

Expr derivative(const Expr& e, int order) {
  Expr d = e;
  for (int i = 0; i < order; ++i) d = differentiate(d);
  return d;
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

double pow_rational(double b, const Rational& q) {
  if (q.is_integer()) {
    if (b == 0.0 && q.num() < 0) throw DomainError("pole: zero raised to a negative power");
    return std::pow(b, static_cast<double>(q.num()));
  }
  if (b > 0.0) {
    if (q.num() == 1 && q.den() == 2) return std::sqrt(b);
    return std::pow(b, q.to_double());
  }
  if (b == 0.0) {
    if (q.num() > 0) return 0.0;
    throw DomainError("pole: zero raised to a negative power");
  }
  if (q.den() % 2 == 0) throw DomainError("even root of a negative number");
  const double r = std::pow(-b, q.to_double());
  return (q.num() % 2 != 0) ? -r : r;
}

double eval_rec(const Expr& e, double x) {
  using K = Expr::Kind;
  switch (e.kind()) {
    case K::Const: return e.value();
    case K::Var: return x;
    case K::Add: {
      double s = 0.0;
      for (const auto& t : e.args()) s += eval_rec(t, x);
      return s;
    }
    case K::Mul: {
      double p = 1.0;
      for (const auto& f : e.args()) p *= eval_rec(f, x);
      return p;
    }
    case K::Pow: return pow_rational(eval_rec(e.arg(), x), e.exponent());
    case K::Exp: return std::exp(eval_rec(e.arg(), x));
    case K::Func: {
      const double u = eval_rec(e.arg(), x);
      switch (e.fn()) {
        case Fn::Log:
          if (u <= 0.0) throw DomainError("log of a non-positive number");
          return std::log(u);
        case Fn::Sin: return std::sin(u);
        case Fn::Cos: return std::cos(u);
        case Fn::Sinh: return std::sinh(u);
        case Fn::Cosh: return std::cosh(u);
        case Fn::Arctan: return std::atan(u);
        case Fn::Arcsin:
          if (u < -1.0 || u > 1.0) throw DomainError("asin outside [-1, 1]");
          return std::asin(u);
        case Fn::Arccosh:
          if (u < 1.0) throw DomainError("acosh below 1");
          return std::acosh(u);
        case Fn::Arcsinh: return std::asinh(u);
      }
      break;
    }
    case K::Poly: {
      const double u = eval_rec(e.arg(), x);
      const auto c = e.coeffs();
      double acc = 0.0;
      for (std::size_t j = c.size(); j-- > 0;) acc = acc * u + c[j];
      return acc;
    }
  }
  throw std::logic_error("evaluate: unknown node");
}

}  // namespace

double evaluate(const Expr& e, double x) {
  const double v = eval_rec(e, x);
  if (!std::isfinite(v)) throw DomainError("non-finite value");
  return v;
}

// ---------------------------------------------------------------------------
// Composition

namespace {

Expr substitute(const Expr& e, const Expr& inner) {
  using K = Expr::Kind;
  switch (e.kind()) {
    case K::Const: return e;
    case K::Var: return inner;
    case K::Add:
    case K::Mul: {
      std::vector<Expr> a;
      a.reserve(e.args().size());
      for (const auto& t : e.args()) a.push_back(substitute(t, inner));
      return e.kind() == K::Add ? Expr::sum(std::move(a)) : Expr::product(std::move(a));
    }
    case K::Pow: return Expr::pow(substitute(e.arg(), inner), e.exponent());
    case K::Exp: return Expr::exp(substitute(e.arg(), inner));
    case K::Func: return Expr::func(e.fn(), substitute(e.arg(), inner));
    case K::Poly:
      return Expr::polynomial(std::vector<double>(e.coeffs().begin(), e.coeffs().end()),
                              substitute(e.arg(), inner));
  }
  throw std::logic_error("compose: unknown node");
}

}  // namespace

Expr compose(const Expr& outer, const Expr& inner) { return simplify(substitute(outer, inner)); }

// ---------------------------------------------------------------------------
// Printing

namespace {

std::string fmt_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Precedence: 1 sum, 2 product, 3 power/atom.
std::string render(const Expr& e, std::string_view var, int parent);

std::string render_factor(const Expr& f, std::string_view var) { return render(f, var, 2); }

std::string render(const Expr& e, std::string_view var, int parent) {
  using K = Expr::Kind;
  switch (e.kind()) {
    case K::Const: {
      const double v = e.value();
      std::string s = fmt_number(v);
      if (v < 0.0 && parent > 0) return "(" + s + ")";
      return s;
    }
    case K::Var: return std::string(var);
    case K::Add: {
      std::string s;
      bool first = true;
      for (const auto& t : e.args()) {
        // Render "a - b" for terms carrying a leading negative constant.
        if (!first) {
          if (t.is_const() && t.value() < 0.0) {
            s += " - " + fmt_number(-t.value());
            continue;
          }
          if (t.kind() == K::Mul && t.arg(0).is_const() && t.arg(0).value() < 0.0) {
            std::vector<Expr> rest(t.args().begin() + 1, t.args().end());
            const double c = -t.arg(0).value();
            if (c != 1.0) rest.insert(rest.begin(), Expr::constant(c));
            s += " - " + render(Expr::product(std::move(rest)), var, 2);
            continue;
          }
          s += " + ";
        }
        s += render(t, var, 1);
        first = false;
      }
      return parent > 1 ? "(" + s + ")" : s;
    }
    case K::Mul: {
      std::string s;
      auto f = e.args();
      std::size_t start = 0;
      if (f.size() > 1 && f[0].is_const(-1.0)) {
        s = "-";
        start = 1;
      }
      for (std::size_t i = start; i < f.size(); ++i) {
        if (i > start) s += "*";
        s += render_factor(f[i], var);
      }
      return parent > 2 || (start == 1 && parent > 0) ? "(" + s + ")" : s;
    }
    case K::Pow: {
      const Rational q = e.exponent();
      std::string base = render(e.arg(), var, 3);
      if (e.arg().kind() != K::Var && base.front() != '(') base = "(" + base + ")";
      std::string ex = q.is_integer() && q.num() >= 0 ? q.to_string() : "(" + q.to_string() + ")";
      return base + "^" + ex;
    }
    case K::Exp: return "exp(" + render(e.arg(), var, 0) + ")";
    case K::Func: return std::string(fn_name(e.fn())) + "(" + render(e.arg(), var, 0) + ")";
    case K::Poly: {
      const std::string u = "(" + render(e.arg(), var, 0) + ")";
      const auto c = e.coeffs();
      std::string s = "(" + fmt_number(c[0]);
      for (std::size_t j = 1; j < c.size(); ++j) {
        if (c[j] == 0.0) continue;
        s += c[j] < 0.0 ? " - " + fmt_number(-c[j]) : " + " + fmt_number(c[j]);
        s += "*" + u;
        if (j > 1) s += "^" + std::to_string(j);
      }
      return s + ")";
    }
  }
  return "?";
}

}  // namespace

std::string to_string(const Expr& e, std::string_view var) { return render(e, var, 0); }

std::size_t node_count(const Expr& e) {
  std::size_t n = 1;
  for (const auto& a : e.args()) n += node_count(a);
  return n;
}

}  // namespace solvable::ir
