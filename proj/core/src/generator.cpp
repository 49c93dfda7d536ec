#include "solvable/generator.hpp"

#include <algorithm>
#include <cmath>

#include "solvable/classical.hpp"
#include "solvable/error.hpp"

namespace solvable::gen {

using ir::Expr;
using ir::Rational;
using K = Expr::Kind;

namespace {

struct Monomial {
  double coeff;
  Rational power;
};

// c * var^p, or nullopt for anything else.
std::optional<Monomial> as_monomial(const Expr& e) {
  switch (e.kind()) {
    case K::Const: return Monomial{e.value(), Rational(0)};
    case K::Var: return Monomial{1.0, Rational(1)};
    case K::Pow:
      if (e.arg().kind() == K::Var) return Monomial{1.0, e.exponent()};
      return std::nullopt;
    case K::Mul: {
      double c = 1.0;
      std::optional<Rational> p;
      for (const Expr& f : e.args()) {
        if (f.is_const()) {
          c *= f.value();
          continue;
        }
        const auto m = as_monomial(f);
        if (!m || p) return std::nullopt;
        c *= m->coeff;
        p = m->power;
      }
      return Monomial{c, p.value_or(Rational(0))};
    }
    default: return std::nullopt;
  }
}

// Terms of an expanded sum as monomials; Poly nodes in the bare variable are unpacked.
std::optional<std::vector<Monomial>> as_laurent(const Expr& e) {
  std::vector<Monomial> out;
  auto push = [&](const Expr& t) {
    if (t.kind() == K::Poly && t.arg().kind() == K::Var) {
      const auto c = t.coeffs();
      for (std::size_t j = 0; j < c.size(); ++j) out.push_back({c[j], Rational(static_cast<std::int64_t>(j))});
      return true;
    }
    const auto m = as_monomial(t);
    if (!m) return false;
    out.push_back(*m);
    return true;
  };
  if (e.kind() == K::Add) {
    for (const Expr& t : e.args())
      if (!push(t)) return std::nullopt;
  } else if (!push(e)) {
    return std::nullopt;
  }
  return out;
}

}  // namespace

NormalForm eliminate_first_derivative(const SecondOrderODE& ode, const std::optional<Expr>& antiderivative) {
  const Expr& a = ode.a;
  const Expr& b = ode.b;
  const Expr& c = ode.c;
  Expr gauge;
  if (antiderivative) {
    gauge = ir::simplify(ir::exp(*antiderivative));
  } else {
    const Expr ratio = ir::expand(b / (2.0 * a));
    const auto terms = as_laurent(ratio);
    if (!terms) throw NonIntegrableGauge("no closed-form antiderivative for B/(2A) = " + ir::to_string(ratio, "r"));
    const Expr r = Expr::var();
    Expr poly_part = Expr::constant(0.0);
    double log_coeff = 0.0;
    for (const Monomial& t : *terms) {
      if (t.power == Rational(-1)) {
        log_coeff += t.coeff;
      } else if (t.power.is_integer() && t.power.num() >= 0) {
        const auto q = t.power + Rational(1);
        poly_part = poly_part + (t.coeff / q.to_double()) * ir::pow(r, q);
      } else {
        throw NonIntegrableGauge("no closed-form antiderivative for B/(2A) = " + ir::to_string(ratio, "r"));
      }
    }
    gauge = ir::exp(poly_part);
    if (log_coeff != 0.0) gauge = gauge * ir::pow_real(r, log_coeff);
    gauge = ir::simplify(gauge);
  }
  const Expr da = ir::differentiate(a), db = ir::differentiate(b);
  const Expr q = ir::simplify((4.0 * a * c - 2.0 * a * db + 2.0 * b * da - b * b) / (4.0 * a * a));
  return {gauge, ir::expand(q)};
}

TermDecomposition decompose(const FamilySpec& family, int m) {
  if (family.sigma_case() != SigmaCase::One)
    throw Unimplemented("term decomposition is only available for sigma(s)=1");
  if (m < 0) throw OrderExceedsDegree("order m must be non-negative");
  const double a = family.alpha(), b = family.beta();
  const Expr x = Expr::var();
  TermDecomposition d;
  d.i_plus = ir::pow(x, 2);
  d.i_minus = x;
  d.c_plus = a * a / 4.0;
  d.c_minus = a * b / 2.0;
  d.c_zero = [a, b, m](int ell) { return b * b / 4.0 + a / 2.0 - a * m + a * ell; };
  return d;
}

TermDecomposition literal_decomposition(Expr i_plus, Expr i_minus, double c_plus, double c_minus, double c_zero) {
  TermDecomposition d;
  d.i_plus = ir::simplify(i_plus);
  d.i_minus = ir::simplify(i_minus);
  d.c_plus = c_plus;
  d.c_minus = c_minus;
  d.c_zero = [c_zero](int) { return c_zero; };
  return d;
}

Expr solve_map(const Expr& i_k) {
  const auto mono = as_monomial(ir::simplify(i_k));
  if (!mono || mono->coeff <= 0.0)
    throw MapNotClosedForm("x' = 1/sqrt(I) has no closed form for I = " + ir::to_string(i_k));
  if (mono->power == Rational(-2)) throw MapNotClosedForm("x' = 1/sqrt(I) integrates to a logarithm for I = c/x^2");
  const Rational q = mono->power / Rational(2) + Rational(1);
  const Expr r = Expr::var();
  return ir::simplify(ir::pow((q.to_double() / std::sqrt(mono->coeff)) * r, Rational(1) / q));
}

Expr correction_term(const Expr& i_k) {
  const Expr d1 = ir::differentiate(i_k);
  const Expr d2 = ir::differentiate(d1);
  return ir::simplify(-5.0 / 16.0 * d1 * d1 / ir::pow(i_k, 3) + 0.25 * d2 / ir::pow(i_k, 2));
}

GeneratedSystem substitute(const TermDecomposition& dec, int k, int ell, const std::optional<Expr>& x_of_r) {
  if (k != 1 && k != -1) throw std::invalid_argument("k must be +1 or -1");
  const Expr& ik = k == 1 ? dec.i_plus : dec.i_minus;
  const Expr& imk = k == 1 ? dec.i_minus : dec.i_plus;
  const double ck = k == 1 ? dec.c_plus : dec.c_minus;
  const double cmk = k == 1 ? dec.c_minus : dec.c_plus;
  const double c0 = dec.c_zero ? dec.c_zero(ell) : 0.0;

  GeneratedSystem sys;
  sys.map.k = k;
  sys.map.x_of_r = x_of_r ? ir::simplify(*x_of_r) : solve_map(ik);
  const Expr v_x = cmk * imk / ik + c0 / ik + correction_term(ik);
  sys.potential = ir::expand(ir::compose(v_x, sys.map.x_of_r));
  sys.energy = -ck;
  sys.gauge = ir::compose(ir::pow(ik, Rational(1, 4)), sys.map.x_of_r);
  sys.provenance.k = k;
  sys.provenance.ell = ell;
  return sys;
}

Expr transform_solution(const GeneratedSystem& system, const Expr& psi_x) {
  return ir::simplify(system.gauge * ir::compose(psi_x, system.map.x_of_r));
}

double generated_residual(const GeneratedSystem& system, const Expr& psi, double r, const std::optional<Expr>& psi_dd) {
  r = std::max(r, 1e-8);
  const Expr dd = psi_dd ? *psi_dd : ir::derivative(psi, 2);
  double v = 0.0;
  try {
    v = ir::evaluate(system.potential, r);
  } catch (const DomainError& e) {
    throw SingularPoint(std::string("generated potential is singular: ") + e.what());
  }
  const double p = ir::evaluate(psi, r);
  return -ir::evaluate(dd, r) + v * p - system.energy * p;
}

double generated_residual_norm(const GeneratedSystem& system, const Expr& psi, std::span<const double> rs) {
  const Expr dd = ir::derivative(psi, 2);
  double worst = 0.0;
  for (const double r : rs) {
    const double res = generated_residual(system, psi, r, dd);
    const double scale = 1.0 + std::abs(system.energy * ir::evaluate(psi, std::max(r, 1e-8)));
    worst = std::max(worst, std::abs(res) / scale);
  }
  return worst;
}

// ---------------------------------------------------------------------------

Expr quantsys_potential(double c1, double c2) {
  const Expr r = Expr::var();
  return ir::simplify(c1 * ir::pow(1.5 * r, Rational(2, 3)) + c2 * ir::pow((2.0 / 3.0) / r, Rational(2, 3)) -
                      (5.0 / 36.0) * ir::pow(r, -2));
}

Expr inverse_sqrt_potential(double c1, double c2) {
  const Expr r = Expr::var();
  return ir::simplify(c1 * ir::pow(2.0 * r, Rational(-1, 2)) + c2 / (2.0 * r) - (3.0 / 16.0) * ir::pow(r, -2));
}

namespace {

Expr hermite_of(int n, const Expr& arg) {
  const Poly h = classical::hermite_poly(n);
  return Expr::polynomial(std::vector<double>(h.coeffs().begin(), h.coeffs().end()), arg);
}

}  // namespace

ClosedFormEigenpair solve_params_quantsys(double c1, double c2, int n, int branch) {
  if (n < 0) throw Inadmissible("n must be a non-negative integer");
  if (branch != 1 && branch != -1) throw std::invalid_argument("branch must be +1 or -1");
  if (!(c1 > 0.0)) throw Inadmissible("c1 > 0 is required (got c1=" + std::to_string(c1) + ")");
  const double sc1 = std::sqrt(c1);
  const double rad = c2 + sc1 * (1.0 + 2.0 * n);
  if (rad < 0.0)
    throw Inadmissible("c2 + sqrt(c1)(1+2n) >= 0 is violated: " + std::to_string(c2) + " + " + std::to_string(sc1) +
                       "*(1+2*" + std::to_string(n) + ") < 0");
  ClosedFormEigenpair out;
  out.n = n;
  out.branch = branch;
  out.c1 = c1;
  out.c2 = c2;
  out.alpha = -2.0 * sc1;
  out.beta = branch * 2.0 * std::sqrt(rad);
  out.energy = branch * 2.0 * std::sqrt(c1 * rad);

  const Expr r = Expr::var();
  const double cbrt94 = std::cbrt(9.0 / 4.0);
  const Expr x = cbrt94 * ir::pow(r, Rational(2, 3));
  const Expr expo = -0.75 * std::cbrt(1.5) * sc1 * ir::pow(r, Rational(4, 3)) +
                    branch * cbrt94 * std::sqrt(rad) * ir::pow(r, Rational(2, 3));
  const double q = std::sqrt(sc1);  // c1^(1/4)
  const Expr arg = q * x - branch * std::sqrt(rad) / q;
  out.psi = ir::simplify(ir::pow(r, Rational(1, 6)) * ir::exp(expo) * hermite_of(n, arg));
  return out;
}

std::array<double, 2> inverse_sqrt_forward(double alpha, double beta, int m, int ell) {
  return {alpha * beta / 2.0, beta * beta / 4.0 + alpha / 2.0 - alpha * m + alpha * ell};
}

std::vector<ClosedFormEigenpair> inverse_sqrt_candidates(double c1, double c2, int n) {
  if (n < 0) throw Inadmissible("n must be a non-negative integer");
  const bool degenerate = c1 == 0.0;
  std::vector<ClosedFormEigenpair> out;
  // With c1 = 0 the cubic factors as alpha^2 ((n + 1/2) alpha - c2); alpha = 0
  // is an artifact of eliminating beta, not a solution.
  const std::vector<double> roots =
      degenerate ? std::vector<double>{c2 / (n + 0.5)} : real_cubic_roots(n + 0.5, -c2, 0.0, c1 * c1);
  for (const double alpha : roots) {
    ClosedFormEigenpair p;
    p.n = n;
    p.c1 = c1;
    p.c2 = c2;
    p.alpha = alpha;
    p.degenerate = degenerate;
    p.admissible = alpha < 0.0;
    if (p.admissible) {
      p.beta = degenerate ? 0.0 : 2.0 * c1 / alpha;
      p.branch = p.beta < 0.0 ? -1 : 1;
      p.energy = -alpha * alpha / 4.0;
      const Expr r = Expr::var();
      const Expr x = ir::pow(2.0 * r, Rational(1, 2));
      const Expr arg = std::sqrt(-alpha / 2.0) * x - p.beta / std::sqrt(-2.0 * alpha);
      p.psi = ir::simplify(ir::pow(r, Rational(1, 4)) * ir::exp(alpha / 2.0 * r + p.beta / 2.0 * x) *
                           hermite_of(n, arg));
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<ClosedFormEigenpair> solve_params_inverse_sqrt(double c1, double c2, int n) {
  std::vector<ClosedFormEigenpair> out;
  for (auto& p : inverse_sqrt_candidates(c1, c2, n))
    if (p.admissible) out.push_back(std::move(p));
  if (out.empty())
    throw NoAdmissibleRoot("no real root alpha<0 of (n+1/2)alpha^3 - c2 alpha^2 + c1^2 = 0 for c1=" +
                           std::to_string(c1) + ", c2=" + std::to_string(c2) + ", n=" + std::to_string(n));
  return out;
}

// ---------------------------------------------------------------------------

GeneratedSystem reproduce_dw(double theta, double rho, double lambda, int which) {
  if (which != 1 && which != 2) throw std::invalid_argument("which must be 1 or 2");
  const Expr x = Expr::var();
  const TermDecomposition dec = literal_decomposition(ir::pow(x, 2), x, theta * theta, rho, lambda);
  GeneratedSystem sys = substitute(dec, which == 1 ? 1 : -1, 0);
  sys.provenance.source = "translated oscillator";
  return sys;
}

CoefficientPattern coefficient_pattern(const GeneratedSystem& system, int which) {
  if (which != 1 && which != 2) throw std::invalid_argument("which must be 1 or 2");
  CoefficientPattern out;
  std::array<std::function<double(double)>, 4> basis;
  if (which == 1) {
    out.basis = {"r^(-1/2)", "r^(-1)", "r^(-2)", "1"};
    basis = {[](double r) { return 1.0 / std::sqrt(r); }, [](double r) { return 1.0 / r; },
             [](double r) { return 1.0 / (r * r); }, [](double) { return 1.0; }};
  } else {
    out.basis = {"(3r/2)^(2/3)", "(2/(3r))^(2/3)", "r^(-2)", "1"};
    basis = {[](double r) { return std::cbrt(1.5 * r * 1.5 * r); },
             [](double r) { return std::cbrt((2.0 / (3.0 * r)) * (2.0 / (3.0 * r))); },
             [](double r) { return 1.0 / (r * r); }, [](double) { return 1.0; }};
  }
  // Householder QR on a log-spaced sample of (0.05, 20).
  constexpr int rows = 64;
  std::vector<std::array<double, 5>> a(rows);
  for (int i = 0; i < rows; ++i) {
    const double r = 0.05 * std::pow(400.0, i / (rows - 1.0));
    for (std::size_t j = 0; j < 4; ++j) a[static_cast<std::size_t>(i)][j] = basis[j](r);
    a[static_cast<std::size_t>(i)][4] = ir::evaluate(system.potential, r) - system.energy;
  }
  const auto sample = a;
  for (std::size_t j = 0; j < 4; ++j) {
    double norm = 0.0;
    for (std::size_t i = j; i < rows; ++i) norm += a[i][j] * a[i][j];
    norm = std::sqrt(norm);
    const double alpha = a[j][j] > 0 ? -norm : norm;
    std::vector<double> v(rows, 0.0);
    for (std::size_t i = j; i < rows; ++i) v[i] = a[i][j];
    v[j] -= alpha;
    double vv = 0.0;
    for (std::size_t i = j; i < rows; ++i) vv += v[i] * v[i];
    if (vv == 0.0) continue;
    for (std::size_t col = j; col < 5; ++col) {
      double dot = 0.0;
      for (std::size_t i = j; i < rows; ++i) dot += v[i] * a[i][col];
      const double f = 2.0 * dot / vv;
      for (std::size_t i = j; i < rows; ++i) a[i][col] -= f * v[i];
    }
  }
  for (std::size_t j = 4; j-- > 0;) {
    double s = a[j][4];
    for (std::size_t k = j + 1; k < 4; ++k) s -= a[j][k] * out.coeffs[k];
    out.coeffs[j] = s / a[j][j];
  }
  for (const auto& row : sample) {
    double fit = 0.0;
    for (std::size_t j = 0; j < 4; ++j) fit += out.coeffs[j] * row[j];
    out.max_fit_residual = std::max(out.max_fit_residual, std::abs(fit - row[4]));
  }
  return out;
}

}  // namespace solvable::gen
