#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "solvable/error.hpp"
#include "solvable/specfun.hpp"
#include "test_util.hpp"

namespace solvable {
namespace {

std::vector<FamilySpec> corpus() {
  return {FamilySpec(SigmaCase::One, -2.0, 1.0),        FamilySpec(SigmaCase::S, -1.0, 2.0),
          FamilySpec(SigmaCase::OneMinusS2, -5.0, 1.0), FamilySpec(SigmaCase::S2Minus1, -3.0, 5.0),
          FamilySpec(SigmaCase::S2, -7.0, 1.0),         FamilySpec(SigmaCase::S2Plus1, -5.0, 1.0)};
}

int top_degree(const FamilySpec& f, int cap) {
  const FamilyCutoff c = cutoff(f);
  return c.bounded() ? std::min(*c.max_degree, cap) : cap;
}

TEST(SpecialFunction, Examples) {
  const FamilySpec osc(SigmaCase::One, -2.0, 0.0);
  const SpecialFunction f20 = special_function(osc, 2, 0);
  EXPECT_EQ(f20.poly_part().degree(), 2);
  EXPECT_DOUBLE_EQ(f20.poly_part().coeff(0), -0.5);
  EXPECT_DOUBLE_EQ(f20.poly_part().coeff(2), 1.0);

  const SpecialFunction f21 = special_function(osc, 2, 1);
  EXPECT_EQ(f21.poly_part().degree(), 1);
  EXPECT_DOUBLE_EQ(f21.poly_part().coeff(1), 2.0);
  for (const double s : {-1.3, 0.0, 0.8}) EXPECT_DOUBLE_EQ(f21.value(s), 2 * s);

  const SpecialFunction l11 = special_function(FamilySpec(SigmaCase::S, -1.0, 1.0), 1, 1);
  EXPECT_EQ(l11.poly_part().degree(), 0);
  for (const double s : {0.25, 1.0, 4.0}) EXPECT_NEAR(l11.value(s), std::sqrt(s), 1e-15);
}

TEST(SpecialFunction, Errors) {
  const FamilySpec osc(SigmaCase::One, -2.0, 0.0);
  EXPECT_THROW(special_function(osc, 1, 2), OrderExceedsDegree);
  EXPECT_THROW(special_function(FamilySpec(SigmaCase::S2, -7.0, 1.0), 4, 0), DegreeBeyondCutoff);
}

TEST(SpecialFunction, DegreeOfPolyPart) {
  for (const FamilySpec& f : corpus())
    for (int ell = 0; ell <= top_degree(f, 6); ++ell)
      for (int m = 0; m <= ell; ++m) EXPECT_EQ(special_function(f, ell, m).poly_part().degree(), ell - m);
}

TEST(SpecialFunction, AnalyticDerivativesMatchExpression) {
  for (const FamilySpec& f : corpus()) {
    const Interval w = sample_window(f.interval());
    for (int ell = 0; ell <= top_degree(f, 4); ++ell)
      for (int m = 0; m <= ell; ++m) {
        const SpecialFunction sf = special_function(f, ell, m);
        const ir::Expr e = sf.to_expr();
        const ir::Expr d1 = ir::differentiate(e), d2 = ir::differentiate(d1);
        for (const double s : test::interior(w.lo, w.hi, 15)) {
          EXPECT_NEAR(sf.value(s), ir::evaluate(e, s), 1e-10 * (1 + std::abs(sf.value(s))));
          EXPECT_NEAR(sf.d1(s), ir::evaluate(d1, s), 1e-9 * (1 + std::abs(sf.d1(s))));
          EXPECT_NEAR(sf.d2(s), ir::evaluate(d2, s), 1e-9 * (1 + std::abs(sf.d2(s))));
        }
      }
  }
}

TEST(HmOperator, MultiplierVanishesAtMZero) {
  for (const FamilySpec& f : corpus()) {
    const HmOperator op(f, 0);
    const Interval w = sample_window(f.interval());
    for (const double s : test::interior(w.lo, w.hi, 20)) {
      EXPECT_EQ(op.multiplier_at(s), 0.0);
      EXPECT_EQ(ir::evaluate(op.multiplier(), s), 0.0);
    }
  }
}

TEST(HmOperator, ApplyExamples) {
  const FamilySpec osc(SigmaCase::One, -2.0, 0.0);
  EXPECT_NEAR(apply_hm(HmOperator(osc, 0), special_function(osc, 2, 0).as_function(), 0.7), -0.04, 1e-14);
  EXPECT_NEAR(apply_hm(HmOperator(osc, 1), special_function(osc, 2, 1).as_function(), 1.0), 8.0, 1e-13);
  const SmoothFunction zero{[](double) { return 0.0; }, [](double) { return 0.0; }, [](double) { return 0.0; }};
  for (const int m : {0, 1, 3}) EXPECT_EQ(apply_hm(HmOperator(osc, m), zero, 0.4), 0.0);
}

TEST(HmOperator, SingularPoint) {
  const FamilySpec lag(SigmaCase::S, -1.0, 1.0);
  EXPECT_THROW(apply_hm(HmOperator(lag, 1), special_function(lag, 2, 1).as_function(), 0.0), SingularPoint);
}

TEST(HmOperator, ZeroOrderIsSturmLiouvilleOperator) {
  for (const FamilySpec& f : corpus()) {
    const HmOperator op(f, 0);
    const Interval w = sample_window(f.interval());
    const SmoothFunction g{[](double s) { return std::sin(s) + s * s; }, [](double s) { return std::cos(s) + 2 * s; },
                           [](double s) { return 2 - std::sin(s); }};
    for (const double s : test::interior(w.lo, w.hi, 20)) {
      const double want = -f.sigma(s) * g.d2(s) - f.tau(s) * g.d1(s);
      EXPECT_LE(std::abs(apply_hm(op, g, s) - want), 1e-12 * std::max(1.0, std::abs(want)));
    }
  }
}

TEST(HmOperator, Eigenrelation) {
  for (const FamilySpec& f : corpus()) {
    const Interval w = sample_window(f.interval());
    const auto xs = test::interior(w.lo, w.hi, 100);
    for (int ell = 0; ell <= top_degree(f, 8); ++ell)
      for (int m = 0; m <= ell; ++m) {
        const HmOperator op(f, m);
        const SpecialFunction sf = special_function(f, ell, m);
        const SmoothFunction fn = sf.as_function();
        const double lam = eigenvalue(f, ell);
        for (const double s : xs) {
          const double want = lam * sf.value(s);
          ASSERT_LE(std::abs(apply_hm(op, fn, s) - want), 1e-8 * (1 + std::abs(want)))
              << sigma_label(f.sigma_case()) << " l=" << ell << " m=" << m << " s=" << s;
        }
      }
  }
}

TEST(ScalarProduct, Examples) {
  const FamilySpec osc(SigmaCase::One, -2.0, 0.0);
  auto one = [](double) { return 1.0; };
  // rho = exp(-s^2) here, so <1, 1> is the Gaussian integral.
  EXPECT_NEAR(scalar_product(osc, one, one).value, std::sqrt(std::numbers::pi), 1e-9);
  EXPECT_NEAR(scalar_product(osc, phi(osc, 1), phi(osc, 2)).value, 0.0, 1e-10);
  const FamilySpec lag(SigmaCase::S, -1.0, 1.0);
  EXPECT_NEAR(scalar_product(lag, phi(lag, 0), phi(lag, 1)).value, 0.0, 1e-9);
}

TEST(ScalarProduct, AssociatedFunctionsOrthogonal) {
  for (const FamilySpec& f : corpus()) {
    const int top = top_degree(f, 6);
    for (int m = 0; m <= std::min(top, 3); ++m)
      for (int ell = m; ell <= top; ++ell)
        for (int k = ell + 1; k <= top; ++k) {
          const SpecialFunction a = special_function(f, ell, m), b = special_function(f, k, m);
          auto fa = [&](double s) { return a.value(s); };
          auto fb = [&](double s) { return b.value(s); };
          const double ab = scalar_product(f, fa, fb).value;
          const double na = std::sqrt(scalar_product(f, fa, fa).value);
          const double nb = std::sqrt(scalar_product(f, fb, fb).value);
          EXPECT_LE(std::abs(ab), 1e-8 * na * nb)
              << sigma_label(f.sigma_case()) << " m=" << m << " " << ell << "," << k;
        }
  }
}

}  // namespace
}  // namespace solvable
