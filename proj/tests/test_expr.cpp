#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "solvable/error.hpp"
#include "solvable/expr.hpp"
#include "test_util.hpp"

namespace solvable::ir {
namespace {

struct Sample {
  const char* text;
  double lo;
  double hi;
};

// Every node kind, each with a domain free of singularities.
const std::vector<Sample>& corpus() {
  static const std::vector<Sample> c = {
      {"x^2", -3, 3},
      {"x^3 - 2*x + 1", -2, 2},
      {"(3*r/2)^(2/3)", 0.1, 5},
      {"(2/(3*r))^(2/3)", 0.1, 5},
      {"r^(-2)", 0.2, 4},
      {"x^(-1/2) + x^(1/4)", 0.1, 4},
      {"exp(-x^2/2)", -3, 3},
      {"x*exp(-x^2/2)", -3, 3},
      {"exp(x)*exp(-x)", -2, 2},
      {"sqrt(1 + x^2)", -3, 3},
      {"(1 + x^2)^(-5/2)", -3, 3},
      {"log(x)", 0.1, 5},
      {"log(1 + x^2)*x", -2, 2},
      {"sin(x)*cos(2*x)", -3, 3},
      {"sinh(x)/cosh(x)", -2, 2},
      {"atan(x)^2", -3, 3},
      {"asin(x/2)", -1.5, 1.5},
      {"acosh(1 + x^2)", 0.2, 3},
      {"asinh(x)*x^2", -2, 2},
      {"exp(sin(x))", -3, 3},
      {"(x - 1)^2*(x + 1)^(-1)", 0, 3},
      {"r^(1/6)*exp(-1.5*r^(4/3) + 2*r^(2/3))", 0.1, 3},
      {"r^(1/4)*exp(-r)", 0.05, 5},
      {"1/sqrt(2*r) - 1/(2*r) - 3/(16*r^2)", 0.1, 5},
      {"(1 - x^2)^(3/2)", -0.9, 0.9},
      {"exp(-x)*x^(5/2)", 0.1, 6},
      {"(x^2 + 1)^2 - x^4", -2, 2},
      {"cosh(x)^(1/2)", -2, 2},
      {"exp(2*atan(x))*(1 + x^2)^(-3)", -3, 3},
      {"-x + 2*x^2 - 0.5*x^3 + 7", -2, 2},
  };
  return c;
}

TEST(Parse, PowerOfVariable) {
  const Expr e = parse("x^2");
  ASSERT_EQ(e.kind(), Expr::Kind::Pow);
  EXPECT_EQ(e.arg().kind(), Expr::Kind::Var);
  EXPECT_EQ(e.exponent(), Rational(2));
}

TEST(Parse, RationalPowerOfScaledVariable) {
  const Expr e = parse("(3*r/2)^(2/3)");
  ASSERT_EQ(e.kind(), Expr::Kind::Pow);
  EXPECT_EQ(e.exponent(), Rational(2, 3));
  const Expr& base = e.arg();
  ASSERT_EQ(base.kind(), Expr::Kind::Mul);
  ASSERT_EQ(base.args().size(), 2u);
  EXPECT_TRUE(base.args()[0].is_const(1.5));
  EXPECT_EQ(base.args()[1].kind(), Expr::Kind::Var);
}

TEST(Parse, Gaussian) {
  const Expr e = parse("exp(-x^2/2)");
  ASSERT_EQ(e.kind(), Expr::Kind::Exp);
  const Expr& arg = e.arg();
  ASSERT_EQ(arg.kind(), Expr::Kind::Mul);
  ASSERT_EQ(arg.args().size(), 2u);
  EXPECT_TRUE(arg.args()[0].is_const(-0.5));
  ASSERT_EQ(arg.args()[1].kind(), Expr::Kind::Pow);
  EXPECT_EQ(arg.args()[1].exponent(), Rational(2));
}

TEST(Parse, Errors) {
  try {
    parse("x + * 2");
    FAIL() << "expected SyntaxError";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
  EXPECT_THROW(parse("(x + 1"), SyntaxError);
  EXPECT_THROW(parse("y^2"), SyntaxError);
  EXPECT_THROW(parse("x^x"), NonRationalExponent);
  EXPECT_THROW(parse("x^(1+x)"), NonRationalExponent);
}

TEST(Differentiate, Examples) {
  const Expr d1 = differentiate(parse("x^2"));
  const Expr d2 = differentiate(parse("(3*r/2)^(2/3)"));
  const Expr d3 = differentiate(parse("exp(-x^2/2)"));
  for (const double x : {0.3, 1.0, 2.5}) {
    EXPECT_NEAR(evaluate(d1, x), 2 * x, 1e-15);
    EXPECT_NEAR(evaluate(d2, x), std::pow(1.5 * x, -1.0 / 3.0), 1e-15);
    EXPECT_NEAR(evaluate(d3, x), -x * std::exp(-x * x / 2), 1e-15);
  }
  EXPECT_TRUE(structurally_equal(simplify(d1), simplify(parse("2*x"))));
}

TEST(Differentiate, AgreesWithCentralDifferences) {
  auto rng = test::rng();
  for (const Sample& s : corpus()) {
    const Expr e = parse(s.text);
    const Expr d = differentiate(e);
    std::uniform_real_distribution<double> u(s.lo, s.hi);
    for (int i = 0; i < 10; ++i) {
      const double x = u(rng);
      const double h = 1e-5 * std::max(1.0, std::abs(x));
      const double fd = (evaluate(e, x + h) - evaluate(e, x - h)) / (2 * h);
      const double sym = evaluate(d, x);
      EXPECT_LE(std::abs(sym - fd), 1e-6 * std::max(1.0, std::abs(sym))) << s.text << " at " << x;
    }
  }
}

TEST(Evaluate, Examples) {
  EXPECT_EQ(evaluate(parse("x^2"), 3.0), 9.0);
  EXPECT_NEAR(evaluate(parse("(3*r/2)^(2/3)"), 2.0 / 3.0), 1.0, 1e-15);
  EXPECT_EQ(evaluate(parse("exp(-x^2/2)"), 0.0), 1.0);
}

TEST(Evaluate, DomainErrors) {
  EXPECT_THROW(evaluate(parse("x^(1/2)"), -1.0), DomainError);
  EXPECT_THROW(evaluate(parse("1/x"), 0.0), DomainError);
  EXPECT_THROW(evaluate(parse("log(x)"), 0.0), DomainError);
  EXPECT_NO_THROW(evaluate(parse("x^(1/3)"), -8.0));
  EXPECT_NEAR(evaluate(parse("x^(1/3)"), -8.0), -2.0, 1e-15);
}

TEST(Compose, Examples) {
  const Expr a = compose(parse("x^2"), parse("sqrt(2*r)"));
  for (const double r : {0.1, 1.0, 7.0}) EXPECT_NEAR(evaluate(a, r), 2 * r, 1e-14);
  EXPECT_TRUE(structurally_equal(a, simplify(parse("2*r"))));
  const Expr v = parse("x^2 - 1");
  EXPECT_TRUE(structurally_equal(compose(v, Expr::var()), simplify(v)));
  const Expr inner = parse("(3*r/2)^(2/3)");
  EXPECT_TRUE(structurally_equal(compose(Expr::var(), inner), simplify(inner)));
}

TEST(Simplify, PreservesValueAndIsIdempotent) {
  auto rng = test::rng();
  for (const Sample& s : corpus()) {
    const Expr e = parse(s.text);
    const Expr once = simplify(e);
    const Expr twice = simplify(once);
    EXPECT_TRUE(structurally_equal(once, twice)) << s.text;
    const Expr ex = expand(e);
    std::uniform_real_distribution<double> u(s.lo, s.hi);
    for (int i = 0; i < 10; ++i) {
      const double x = u(rng);
      const double v = evaluate(e, x);
      EXPECT_LE(std::abs(evaluate(once, x) - v), 1e-12 * std::max(1.0, std::abs(v))) << s.text;
      EXPECT_LE(std::abs(evaluate(ex, x) - v), 1e-12 * std::max(1.0, std::abs(v))) << s.text;
    }
  }
}

TEST(Simplify, CancelsExponentials) {
  EXPECT_TRUE(simplify(parse("exp(x)*exp(-x)")).is_const(1.0));
  EXPECT_EQ(simplify(parse("(x^(1/3))^3")).kind(), Expr::Kind::Var);
  // (x^(2/3))^(3/2) is |x|, so it must not collapse to x.
  EXPECT_NEAR(evaluate(simplify(parse("(x^(2/3))^(3/2)")), -2.0), 2.0, 1e-14);
}

TEST(Print, RoundTrip) {
  auto rng = test::rng();
  for (const Sample& s : corpus()) {
    const Expr e = parse(s.text);
    for (const char* var : {"x", "r"}) {
      const Expr back = parse(to_string(e, var));
      std::uniform_real_distribution<double> u(s.lo, s.hi);
      for (int i = 0; i < 10; ++i) {
        const double x = u(rng);
        const double v = evaluate(e, x);
        EXPECT_LE(std::abs(evaluate(back, x) - v), 1e-12 * std::max(1.0, std::abs(v))) << s.text;
      }
    }
  }
}

TEST(Rational, Arithmetic) {
  EXPECT_EQ(Rational(2, 4), Rational(1, 2));
  EXPECT_EQ(Rational(1, -3), Rational(-1, 3));
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  EXPECT_EQ(Rational(1, 2) * Rational(2, 3), Rational(1, 3));
  EXPECT_EQ(Rational(1, 2) / Rational(1, 4), Rational(2));
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_EQ(Rational::from_double(0.6666666666666666), Rational(2, 3));
  EXPECT_FALSE(Rational::from_double(std::sqrt(2.0)).has_value());
}

}  // namespace
}  // namespace solvable::ir
