#include <gtest/gtest.h>

#include <cmath>

#include "solvable/classical.hpp"
#include "solvable/error.hpp"
#include "solvable/poly.hpp"
#include "solvable/specfun.hpp"
#include "test_util.hpp"

namespace solvable {
namespace {

std::vector<FamilySpec> corpus() {
  return {FamilySpec(SigmaCase::One, -2.0, 1.0),        FamilySpec(SigmaCase::S, -1.0, 2.0),
          FamilySpec(SigmaCase::OneMinusS2, -5.0, 1.0), FamilySpec(SigmaCase::S2Minus1, -3.0, 5.0),
          FamilySpec(SigmaCase::S2, -7.0, 1.0),         FamilySpec(SigmaCase::S2Plus1, -5.0, 1.0),
          FamilySpec(SigmaCase::S2, -12.0, 3.0)};
}

int top_degree(const FamilySpec& f, int cap) {
  const FamilyCutoff c = cutoff(f);
  return c.bounded() ? std::min(*c.max_degree, cap) : cap;
}

void expect_coeffs(const Poly& p, std::vector<double> want, double tol = 1e-14) {
  ASSERT_EQ(p.degree(), static_cast<int>(want.size()) - 1);
  for (std::size_t j = 0; j < want.size(); ++j) EXPECT_NEAR(p.coeff(static_cast<int>(j)), want[j], tol) << "j=" << j;
}

TEST(Poly, Arithmetic) {
  const Poly p({1.0, -2.0, 3.0});
  const Poly q({0.0, 1.0});
  expect_coeffs(p + q, {1.0, -1.0, 3.0});
  expect_coeffs(p * q, {0.0, 1.0, -2.0, 3.0});
  expect_coeffs(p - p, {});
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ((p - p).degree(), -1);
  EXPECT_DOUBLE_EQ(p(2.0), 1 - 4 + 12);
  expect_coeffs(p.derivative(), {-2.0, 6.0});
  expect_coeffs(p.derivative(2), {6.0});
  EXPECT_TRUE(p.derivative(3).is_zero());
  expect_coeffs(2.0 * q, {0.0, 2.0});
  EXPECT_EQ(Poly::monomial(4, 2.5).degree(), 4);
}

TEST(Poly, DerivativeLowersDegreeByOne) {
  for (int d = 1; d <= 9; ++d) EXPECT_EQ(Poly::monomial(d, 1.5).derivative().degree(), d - 1);
}

TEST(Phi, Examples) {
  const FamilySpec osc(SigmaCase::One, -2.0, 0.0);
  expect_coeffs(phi(osc, 0), {1.0});
  expect_coeffs(phi(osc, 2), {-0.5, 0.0, 1.0});
  expect_coeffs(phi(FamilySpec(SigmaCase::S, -1.0, 1.0), 1), {-1.0, 1.0});
}

TEST(Phi, BeyondCutoffThrows) {
  EXPECT_THROW(phi(FamilySpec(SigmaCase::S2, -7.0, 1.0), 4), DegreeBeyondCutoff);
  EXPECT_THROW(phi(FamilySpec(SigmaCase::S2Plus1, -1.0, 0.0), 1), DegreeBeyondCutoff);
}

TEST(Phi, DegenerateRecursionIsReported) {
  // D_j = (j - l)(a (j + l - 1) + alpha) vanishes at j = 0, l = 2 when a = 1, alpha = -1.
  EXPECT_THROW(hypergeometric_polynomial({1.0, 0.0, 0.0}, -1.0, 1.0, 2), DegenerateRecursion);
}

TEST(Phi, OdeResidualCoefficients) {
  for (const FamilySpec& f : corpus()) {
    const Poly sigma({f.sigma_coeffs().c, f.sigma_coeffs().b, f.sigma_coeffs().a});
    const Poly tau({f.beta(), f.alpha()});
    for (int ell = 0; ell <= top_degree(f, 8); ++ell) {
      const Poly p = phi(f, ell);
      EXPECT_EQ(p.degree(), ell);
      EXPECT_DOUBLE_EQ(p.leading(), 1.0);
      const Poly r = sigma * p.derivative(2) + tau * p.derivative() + eigenvalue(f, ell) * p;
      for (const double c : r.coeffs())
        EXPECT_LE(std::abs(c), 1e-10 * (1 + p.max_abs_coeff())) << sigma_label(f.sigma_case()) << " l=" << ell;
    }
  }
}

TEST(PhiRodrigues, Examples) {
  expect_coeffs(phi_rodrigues(FamilySpec(SigmaCase::One, -2.0, 0.0), 1), {0.0, -2.0}, 1e-12);
  expect_coeffs(phi_rodrigues(FamilySpec(SigmaCase::S, -1.0, 2.0), 1), {2.0, -1.0}, 1e-12);
  for (const FamilySpec& f : corpus()) expect_coeffs(phi_rodrigues(f, 0), {1.0}, 1e-12);
}

TEST(PhiRodrigues, ConstantsAgainstMonic) {
  EXPECT_NEAR(rodrigues_sample(FamilySpec(SigmaCase::One, -2.0, 0.0), 1).b_ell, -2.0, 1e-12);
  EXPECT_NEAR(rodrigues_sample(FamilySpec(SigmaCase::S, -1.0, 2.0), 1).b_ell, -1.0, 1e-12);
}

// The symbolic Rodrigues expression, sampled directly, is a constant multiple of phi.
TEST(PhiRodrigues, Equivalence) {
  for (const FamilySpec& f : corpus()) {
    const Interval w = sample_window(f.interval());
    const auto xs = test::interior(w.lo, w.hi, 50);
    for (int ell = 0; ell <= top_degree(f, 5); ++ell) {
      const ir::Expr r = rodrigues_expr(f, ell);
      const Poly p = phi(f, ell);
      double num = 0, den = 0, scale = 0;
      std::vector<double> rv;
      for (const double s : xs) {
        rv.push_back(ir::evaluate(r, s));
        num += rv.back() * p(s);
        den += p(s) * p(s);
        scale = std::max(scale, std::abs(rv.back()));
      }
      const double c = num / den;
      EXPECT_NE(c, 0.0);
      double dev = 0;
      for (std::size_t i = 0; i < xs.size(); ++i) dev = std::max(dev, std::abs(rv[i] - c * p(xs[i])));
      EXPECT_LE(dev / scale, 1e-9) << sigma_label(f.sigma_case()) << " l=" << ell;
    }
  }
}

TEST(ClassicalMatch, Examples) {
  const ClassicalMatch h = classical_match(FamilySpec(SigmaCase::One, -2.0, 0.0), 2);
  EXPECT_NEAR(h.constant, 4.0, 1e-12);
  EXPECT_LT(h.max_rel_dev, 1e-12);
  const ClassicalMatch l = classical_match(FamilySpec(SigmaCase::S, -1.0, 1.0), 1);
  EXPECT_NEAR(l.constant, -1.0, 1e-12);
  EXPECT_LT(l.max_rel_dev, 1e-12);
  const ClassicalMatch b = classical_match(FamilySpec(SigmaCase::S2, -7.0, 2.0), 1);
  EXPECT_TRUE(std::isfinite(b.constant));
  EXPECT_NE(b.constant, 0.0);
  EXPECT_LT(b.max_rel_dev, 1e-10);
}

TEST(ClassicalMatch, AllSupportedFamilies) {
  for (const FamilySpec& f : corpus()) {
    if (f.sigma_case() == SigmaCase::S2Plus1) continue;
    for (int ell = 0; ell <= top_degree(f, 6); ++ell) {
      const ClassicalMatch m = classical_match(f, ell);
      EXPECT_LT(m.max_rel_dev, 1e-9) << sigma_label(f.sigma_case()) << " l=" << ell;
    }
  }
}

TEST(ClassicalMatch, S2Plus1Unsupported) {
  EXPECT_THROW(classical_match(FamilySpec(SigmaCase::S2Plus1, -5.0, 1.0), 1), UnsupportedCorrespondence);
}

TEST(Classical, Recurrences) {
  EXPECT_DOUBLE_EQ(classical::hermite(2, 1.5), 4 * 2.25 - 2);
  EXPECT_DOUBLE_EQ(classical::hermite(3, 0.5), 8 * 0.125 - 12 * 0.5);
  EXPECT_DOUBLE_EQ(classical::laguerre(1, 0.0, 0.3), 1 - 0.3);
  EXPECT_NEAR(classical::laguerre(2, 1.0, 2.0), 0.5 * (4 - 6 * 2 + 6), 1e-14);
  EXPECT_DOUBLE_EQ(classical::jacobi(1, 0.0, 0.0, 0.4), 0.4);
  EXPECT_NEAR(classical::jacobi(2, 0.0, 0.0, 0.4), 0.5 * (3 * 0.16 - 1), 1e-15);
  const Poly h4 = classical::hermite_poly(4);
  EXPECT_NEAR(h4(0.7), classical::hermite(4, 0.7), 1e-12);
}

TEST(Phi, OrthogonalUnderWeight) {
  for (const FamilySpec& f : corpus()) {
    const int top = top_degree(f, 6);
    for (int ell = 0; ell <= top; ++ell)
      for (int k = ell + 1; k <= top; ++k) {
        const Poly a = phi(f, ell), b = phi(f, k);
        const double ab = scalar_product(f, a, b).value;
        const double aa = scalar_product(f, a, a).value;
        const double bb = scalar_product(f, b, b).value;
        EXPECT_LE(std::abs(ab), 1e-8 * std::sqrt(aa * bb)) << sigma_label(f.sigma_case()) << " " << ell << "," << k;
      }
  }
}

}  // namespace
}  // namespace solvable
