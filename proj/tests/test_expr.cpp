#include "hcx/errors.hpp"
#include "hcx/expr.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace hcx;

namespace {

const Point kP{0.3, -0.2, 0.5, 1.1};

double eval(const std::string& text, const Point& p = kP) { return Expr::parse(text).eval(p); }

} // namespace

TEST(Expr, NumbersAndCoordinates) {
  EXPECT_EQ(eval("2.5"), 2.5);
  EXPECT_EQ(eval("1e-3"), 1e-3);
  EXPECT_EQ(eval("u1"), 0.3);
  EXPECT_EQ(eval("u4"), 1.1);
  EXPECT_DOUBLE_EQ(eval("pi"), std::numbers::pi);
}

TEST(Expr, PrecedenceAndAssociativity) {
  EXPECT_EQ(eval("1 + 2*3"), 7.0);
  EXPECT_EQ(eval("(1 + 2)*3"), 9.0);
  EXPECT_EQ(eval("8/4/2"), 1.0);
  EXPECT_EQ(eval("10 - 4 - 3"), 3.0);
  EXPECT_EQ(eval("2*3^2"), 18.0);
}

TEST(Expr, UnaryMinusBindsLooserThanPower) {
  EXPECT_EQ(eval("-2^2"), -4.0);
  EXPECT_EQ(eval("(-2)^2"), 4.0);
  EXPECT_EQ(eval("--3"), 3.0);
  EXPECT_DOUBLE_EQ(eval("-u1^2 - u3^2"), -(0.09 + 0.25));
}

TEST(Expr, IntegerExponents) {
  EXPECT_DOUBLE_EQ(eval("u4^3"), 1.1 * 1.1 * 1.1);
  EXPECT_DOUBLE_EQ(eval("u1^(-2)"), 1 / 0.09);
  EXPECT_EQ(eval("u2^0"), 1.0);
  EXPECT_THROW(Expr::parse("u1^1.5"), ParseError);
  EXPECT_THROW(Expr::parse("u1^u2"), ParseError);
}

TEST(Expr, Functions) {
  EXPECT_DOUBLE_EQ(eval("sin(u1)"), std::sin(0.3));
  EXPECT_DOUBLE_EQ(eval("cosh(u4)*cos(u2)"), std::cosh(1.1) * std::cos(-0.2));
  EXPECT_DOUBLE_EQ(eval("coth(u4)"), 1 / std::tanh(1.1));
  EXPECT_DOUBLE_EQ(eval("sqrt(2)"), std::sqrt(2.0));
  EXPECT_DOUBLE_EQ(eval("exp(u3) - tanh(u3) + sinh(u3)"), std::exp(0.5) - std::tanh(0.5) + std::sinh(0.5));
  EXPECT_THROW(Expr::parse("log(u1)"), ParseError);
  EXPECT_THROW(eval("sqrt(u2)"), DomainError);
}

TEST(Expr, LetBindings) {
  Expr::Bindings lets;
  lets.emplace("r", Expr::parse("u1^2 + u3^2"));
  const Expr lam = Expr::parse("u1/r", lets);
  EXPECT_DOUBLE_EQ(lam.eval(kP), 0.3 / 0.34);
  EXPECT_THROW(Expr::parse("u1/q", lets), ParseError);
  lets.emplace("two", Expr::parse("1 + 1"));
  EXPECT_TRUE(Expr::parse("two*pi", lets).is_constant());
}

TEST(Expr, ParseErrorsCarryColumn) {
  try {
    Expr::parse("u1 + * u2");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("column 6"), std::string::npos) << e.what();
  }
  EXPECT_THROW(Expr::parse(""), ParseError);
  EXPECT_THROW(Expr::parse("(u1"), ParseError);
  EXPECT_THROW(Expr::parse("u1)"), ParseError);
  EXPECT_THROW(Expr::parse("u5"), ParseError);
  EXPECT_THROW(Expr::parse("sin u1"), ParseError);
}

TEST(Expr, DivisionByZero) {
  EXPECT_THROW(eval("1/u1", {0, 0, 0, 0}), DivisionByZero);
  EXPECT_THROW(Expr::parse("u1^(-1)").eval_jet({0, 1, 1, 1}), DivisionByZero);
}

TEST(Expr, JetAgreesWithDoubles) {
  const Expr e = Expr::parse("cos(u1)*cosh(u3)/(cos(u1)^2 + sinh(u3)^2) + u2*u4^2");
  const Jet2 j = e.eval_jet(kP);
  EXPECT_DOUBLE_EQ(j.value, e.eval(kP));
  const double h = 1e-6;
  for (int k = 0; k < kDim; ++k) {
    Point a = kP, b = kP;
    a[k] += h;
    b[k] -= h;
    EXPECT_NEAR(j.grad[k], (e.eval(a) - e.eval(b)) / (2 * h), 1e-8);
  }
  EXPECT_EQ(j.hess[1][3], 2 * 1.1);
}

TEST(Expr, ConstantsAndTrees) {
  EXPECT_TRUE(Expr::parse("3/4 + sqrt(2)").is_constant());
  EXPECT_FALSE(Expr::parse("0*u1").is_constant());
  EXPECT_TRUE(Expr::parse("u1 + 2*u3").same_tree(Expr::parse("u1+2 * u3")));
  EXPECT_FALSE(Expr::parse("u1 + 2*u3").same_tree(Expr::parse("2*u3 + u1")));
  EXPECT_EQ(Expr::parse("u1 +  u2").source(), "u1 +  u2");
  EXPECT_EQ(Expr::constant(0.25).eval(kP), 0.25);
  EXPECT_TRUE(Expr::constant(0.25).is_constant());
  EXPECT_EQ(Expr().eval(kP), 0.0);
}
