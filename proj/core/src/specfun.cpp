#include "solvable/specfun.hpp"

#include <cmath>

#include "solvable/error.hpp"

namespace solvable {

SpecialFunction::SpecialFunction(FamilySpec family, int ell, int m, Poly poly_part)
    : family_(std::move(family)),
      ell_(ell),
      m_(m),
      poly_(std::move(poly_part)),
      dpoly_(poly_.derivative()),
      ddpoly_(poly_.derivative(2)) {}

namespace {

// g = sigma^(m/2) and its first two derivatives.
struct Gauge {
  double g, g1, g2;
};

Gauge kappa_power(const FamilySpec& fam, int m, double s) {
  if (m == 0) return {1.0, 0.0, 0.0};
  const double sg = fam.sigma(s), sp = fam.sigma_prime(s), spp = fam.sigma_second();
  const double h = 0.5 * m;
  if (m % 2 == 0) {
    // Integer power; stays finite where sigma vanishes.
    const int k = m / 2;
    const double p0 = std::pow(sg, k);
    const double p1 = k >= 1 ? k * std::pow(sg, k - 1) : 0.0;
    const double p2 = k >= 2 ? k * (k - 1) * std::pow(sg, k - 2) : 0.0;
    return {p0, p1 * sp, p2 * sp * sp + p1 * spp};
  }
  const double g = std::pow(sg, h);
  const double g1 = h * std::pow(sg, h - 1.0) * sp;
  const double g2 = h * ((h - 1.0) * std::pow(sg, h - 2.0) * sp * sp + std::pow(sg, h - 1.0) * spp);
  return {g, g1, g2};
}

}  // namespace

double SpecialFunction::value(double s) const { return kappa_power(family_, m_, s).g * poly_(s); }

double SpecialFunction::d1(double s) const {
  const Gauge k = kappa_power(family_, m_, s);
  return k.g1 * poly_(s) + k.g * dpoly_(s);
}

double SpecialFunction::d2(double s) const {
  const Gauge k = kappa_power(family_, m_, s);
  return k.g2 * poly_(s) + 2.0 * k.g1 * dpoly_(s) + k.g * ddpoly_(s);
}

SmoothFunction SpecialFunction::as_function() const {
  auto self = std::make_shared<const SpecialFunction>(*this);
  return {[self](double s) { return self->value(s); }, [self](double s) { return self->d1(s); },
          [self](double s) { return self->d2(s); }};
}

ir::Expr SpecialFunction::to_expr() const {
  const ir::Expr p = poly_.to_expr();
  if (m_ == 0) return p;
  return ir::simplify(ir::pow(family_.sigma_expr(), ir::Rational(m_, 2)) * p);
}

SpecialFunction special_function(const FamilySpec& family, int ell, int m) {
  require_below_cutoff(family, ell);
  if (m < 0) throw OrderExceedsDegree("derivative order must be non-negative");
  if (m > ell)
    throw OrderExceedsDegree("order m=" + std::to_string(m) + " exceeds degree l=" + std::to_string(ell));
  return SpecialFunction(family, ell, m, phi(family, ell).derivative(m));
}

// ---------------------------------------------------------------------------

HmOperator::HmOperator(FamilySpec family, int m) : family_(std::move(family)), m_(m) {
  const ir::Expr sigma = family_.sigma_expr();
  const ir::Expr tau = family_.tau_expr();
  const ir::Expr sp = ir::differentiate(sigma);
  const double mm = m, spp = family_.sigma_second(), tp = family_.tau_prime();
  second_ = ir::simplify(-sigma);
  first_ = ir::simplify(-tau);
  if (m == 0) {
    mult_ = ir::Expr::constant(0.0);
  } else {
    mult_ = ir::simplify(mm * (mm - 2.0) / 4.0 * sp * sp / sigma + mm * tau * sp / (2.0 * sigma) -
                         ir::Expr::constant(mm * (mm - 2.0) * spp / 2.0 + mm * tp));
  }
}

double HmOperator::multiplier_at(double s) const {
  if (m_ == 0) return 0.0;
  const double sg = family_.sigma(s);
  if (sg == 0.0) throw SingularPoint("sigma vanishes at s=" + std::to_string(s));
  const double sp = family_.sigma_prime(s), spp = family_.sigma_second();
  const double m = m_;
  return m * (m - 2.0) / 4.0 * sp * sp / sg + m * family_.tau(s) * sp / (2.0 * sg) - m * (m - 2.0) * spp / 2.0 -
         m * family_.tau_prime();
}

double apply_hm(const HmOperator& op, const SmoothFunction& f, double s) {
  const FamilySpec& fam = op.family();
  if (fam.sigma(s) == 0.0) throw SingularPoint("sigma vanishes at s=" + std::to_string(s));
  return -fam.sigma(s) * f.d2(s) - fam.tau(s) * f.d1(s) + op.multiplier_at(s) * f.f(s);
}

oracle::QuadratureResult scalar_product(const FamilySpec& family, const std::function<double(double)>& f,
                                        const std::function<double(double)>& g, double tol) {
  const Interval iv = family.interval();
  auto integrand = [&](double s) {
    const double r = family.rho(s);
    if (r == 0.0) return 0.0;
    return f(s) * g(s) * r;
  };
  try {
    return oracle::integrate(integrand, iv, tol);
  } catch (const QuadratureNoConverge&) {
    if (tol >= 1e-8) throw;
  }
  return oracle::integrate(integrand, iv, 1e-8);
}

}  // namespace solvable
