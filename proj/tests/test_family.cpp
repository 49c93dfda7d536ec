#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "solvable/error.hpp"
#include "solvable/expr.hpp"
#include "solvable/family.hpp"
#include "test_util.hpp"

namespace solvable {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<FamilySpec> admissible_corpus() {
  return {FamilySpec(SigmaCase::One, -2.0, 1.0),      FamilySpec(SigmaCase::One, -0.5, -3.0),
          FamilySpec(SigmaCase::S, -1.0, 2.0),        FamilySpec(SigmaCase::S, -2.5, 0.7),
          FamilySpec(SigmaCase::OneMinusS2, -5.0, 1.0), FamilySpec(SigmaCase::OneMinusS2, -2.0, -0.5),
          FamilySpec(SigmaCase::S2Minus1, -3.0, 5.0), FamilySpec(SigmaCase::S2Minus1, -1.5, 4.0),
          FamilySpec(SigmaCase::S2, -7.0, 1.0),       FamilySpec(SigmaCase::S2, -3.0, 2.0),
          FamilySpec(SigmaCase::S2Plus1, -5.0, 1.0),  FamilySpec(SigmaCase::S2Plus1, -3.0, 0.0)};
}

TEST(FamilyCatalog, EigenvalueExamples) {
  EXPECT_EQ(eigenvalue(FamilySpec(SigmaCase::One, -2.0, 0.0), 0), 0.0);
  EXPECT_EQ(eigenvalue(FamilySpec(SigmaCase::One, -2.0, 0.0), 3), 6.0);
  EXPECT_EQ(eigenvalue(FamilySpec(SigmaCase::S2, -7.0, 1.0), 2), 12.0);
}

TEST(FamilyCatalog, EigenvalueBeyondCutoffThrows) {
  EXPECT_THROW(eigenvalue(FamilySpec(SigmaCase::S2, -7.0, 1.0), 4), DegreeBeyondCutoff);
  EXPECT_NO_THROW(eigenvalue(FamilySpec(SigmaCase::S2, -7.0, 1.0), 3));
}

TEST(FamilyCatalog, WeightOscillator) {
  const FamilySpec f(SigmaCase::One, -1.5, 0.4);
  const ir::Expr w = weight(f);
  for (const double s : test::linspace(-3.0, 3.0, 13))
    EXPECT_NEAR(ir::evaluate(w, s), std::exp(-1.5 * s * s / 2 + 0.4 * s), 1e-14);
}

TEST(FamilyCatalog, WeightLaguerreReducesToExponential) {
  const FamilySpec f(SigmaCase::S, -1.0, 1.0);
  const ir::Expr w = weight(f);
  for (const double s : {0.1, 0.5, 1.0, 3.0, 10.0}) EXPECT_NEAR(ir::evaluate(w, s), std::exp(-s), 1e-15);
}

TEST(FamilyCatalog, WeightS2Plus1WithZeroBeta) {
  const FamilySpec f(SigmaCase::S2Plus1, -3.0, 0.0);
  const ir::Expr w = weight(f);
  for (const double s : {-4.0, -1.0, 0.0, 0.3, 2.0})
    EXPECT_NEAR(ir::evaluate(w, s), std::pow(1 + s * s, -2.5), 1e-15);
}

TEST(FamilyCatalog, CutoffExamples) {
  EXPECT_FALSE(cutoff(FamilySpec(SigmaCase::One, -0.1, 0.0)).bounded());
  EXPECT_FALSE(cutoff(FamilySpec(SigmaCase::One, -9.0, 3.0)).bounded());
  const FamilyCutoff s2 = cutoff(FamilySpec(SigmaCase::S2, -7.0, 1.0));
  ASSERT_TRUE(s2.bounded());
  EXPECT_EQ(*s2.lambda_cap, 4.0);
  EXPECT_EQ(*s2.max_degree, 3);
  const FamilyCutoff sp = cutoff(FamilySpec(SigmaCase::S2Plus1, -1.0, 0.0));
  ASSERT_TRUE(sp.bounded());
  EXPECT_EQ(*sp.lambda_cap, 1.0);
  EXPECT_EQ(*sp.max_degree, 0);
}

TEST(FamilyCatalog, CutoffBoundedExactlyForQuadraticSigma) {
  for (const FamilySpec& f : admissible_corpus()) {
    const bool quadratic = f.sigma_case() == SigmaCase::S2Minus1 || f.sigma_case() == SigmaCase::S2 ||
                           f.sigma_case() == SigmaCase::S2Plus1;
    EXPECT_EQ(cutoff(f).bounded(), quadratic) << sigma_label(f.sigma_case());
  }
}

TEST(FamilyCatalog, MaxDegreeIsLargestIntegerBelowLambda) {
  for (const double alpha : {-0.5, -1.0, -2.0, -6.0, -6.5, -7.0}) {
    const FamilyCutoff c = cutoff(FamilySpec(SigmaCase::S2, alpha, 1.0));
    const double cap = (1 - alpha) / 2;
    EXPECT_LT(*c.max_degree, cap);
    EXPECT_GE(*c.max_degree + 1, cap);
  }
}

TEST(FamilyCatalog, ConstraintViolationsNameTheConstraint) {
  try {
    FamilySpec(SigmaCase::One, 1.0, 0.0);
    FAIL() << "expected InadmissibleParameters";
  } catch (const InadmissibleParameters& e) {
    EXPECT_NE(std::string(e.what()).find("alpha<0"), std::string::npos);
  }
  EXPECT_THROW(FamilySpec(SigmaCase::S, -1.0, 0.0), InadmissibleParameters);
  EXPECT_THROW(FamilySpec(SigmaCase::S2Minus1, -3.0, 1.0), InadmissibleParameters);
  EXPECT_THROW(FamilySpec(SigmaCase::S2, -1.0, 0.0), InadmissibleParameters);
  EXPECT_THROW(FamilySpec(SigmaCase::OneMinusS2, -1.0, 2.0), InadmissibleParameters);
}

TEST(FamilyCatalog, NamesRoundTrip) {
  for (const SigmaCase c : kAllSigmaCases) {
    EXPECT_EQ(parse_sigma_case(sigma_cli_name(c)), c);
    EXPECT_EQ(parse_sigma_case(sigma_label(c)), c);
  }
  EXPECT_FALSE(parse_sigma_case("cubic").has_value());
}

TEST(FamilyCatalog, PearsonIdentityAndPositivity) {
  for (const FamilySpec& f : admissible_corpus()) {
    const Interval w = sample_window(f.interval());
    const ir::Expr lhs = ir::differentiate(f.sigma_expr() * weight(f));
    const ir::Expr rhs = f.tau_expr() * weight(f);
    for (const double s : test::interior(w.lo, w.hi, 200)) {
      ASSERT_GT(f.sigma(s), 0.0);
      ASSERT_GT(f.rho(s), 0.0);
      const double tr = ir::evaluate(rhs, s);
      EXPECT_LE(std::abs(ir::evaluate(lhs, s) - tr), 1e-10 * (1 + std::abs(tr)))
          << sigma_label(f.sigma_case()) << " s=" << s;
    }
  }
}

TEST(FamilyCatalog, LogRhoMatchesRho) {
  for (const FamilySpec& f : admissible_corpus()) {
    const Interval w = sample_window(f.interval());
    for (const double s : test::interior(w.lo, w.hi, 25))
      EXPECT_NEAR(f.log_rho(s), std::log(f.rho(s)), 1e-12 * (1 + std::abs(f.log_rho(s))));
  }
}

// sigma*rho decays monotonically toward every endpoint along s_k = end -+ 2^-k
// (finite end) or s_k = +-2^k (infinite end).
TEST(FamilyCatalog, BoundaryDecay) {
  for (const FamilySpec& f : admissible_corpus()) {
    const Interval iv = f.interval();
    auto sr = [&](double s) { return std::exp(std::log(f.sigma(s)) + f.log_rho(s)); };
    for (const int side : {-1, 1}) {
      const double end = side < 0 ? iv.lo : iv.hi;
      std::vector<double> seq;
      for (int k = 1; k <= 40; ++k) {
        double s;
        if (std::isinf(end)) {
          s = side * std::ldexp(1.0, k);
        } else {
          s = end - side * std::ldexp(1.0, -k);
        }
        if (!iv.contains(s)) continue;
        seq.push_back(sr(s));
      }
      ASSERT_GE(seq.size(), 10u);
      // Skip the hump: decay is asserted from the largest sampled value onward.
      const auto peak = std::max_element(seq.begin(), seq.end());
      for (auto it = peak; it + 1 != seq.end(); ++it)
        EXPECT_LE(*(it + 1), *it) << sigma_label(f.sigma_case()) << " side " << side;
      EXPECT_LT(seq.back(), 1e-6 * *peak) << sigma_label(f.sigma_case()) << " side " << side;
    }
  }
}

TEST(FamilyCatalog, EigenvaluesStrictlyIncrease) {
  for (const FamilySpec& f : admissible_corpus()) {
    const FamilyCutoff c = cutoff(f);
    const int top = c.bounded() ? *c.max_degree : 20;
    for (int ell = 1; ell <= top; ++ell) EXPECT_GT(eigenvalue(f, ell), eigenvalue(f, ell - 1));
  }
}

TEST(FamilyCatalog, Intervals) {
  EXPECT_EQ(FamilySpec(SigmaCase::One, -1, 0).interval().lo, -kInf);
  EXPECT_EQ(FamilySpec(SigmaCase::S, -1, 1).interval().lo, 0.0);
  EXPECT_EQ(FamilySpec(SigmaCase::OneMinusS2, -2, 0).interval().hi, 1.0);
  EXPECT_EQ(FamilySpec(SigmaCase::S2Minus1, -1, 2).interval().lo, 1.0);
  EXPECT_EQ(FamilySpec(SigmaCase::S2, -3, 1).interval().hi, kInf);
  EXPECT_EQ(FamilySpec(SigmaCase::S2Plus1, -3, 1).interval().lo, -kInf);
}

}  // namespace
}  // namespace solvable
