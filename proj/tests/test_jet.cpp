#include "hcx/errors.hpp"
#include "hcx/jet.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <random>

using namespace hcx;

namespace {

// Central-difference oracle for a scalar function of four variables.
using Scalar = std::function<double(const Point&)>;

double fd_grad(const Scalar& f, Point p, int k, double h = 1e-4) {
  Point q = p;
  q[k] += h;
  const double fp = f(q);
  q[k] -= 2 * h;
  return (fp - f(q)) / (2 * h);
}

double fd_hess(const Scalar& f, Point p, int k, int l, double h = 1e-3) {
  auto at = [&](double dk, double dl) {
    Point q = p;
    q[k] += dk;
    q[l] += dl;
    return f(q);
  };
  if (k == l) return (at(h, 0) - 2 * f(p) + at(-h, 0)) / (h * h);
  return (at(h, h) - at(h, -h) - at(-h, h) + at(-h, -h)) / (4 * h * h);
}

template <class F>
void expect_matches_fd(F&& f, const Point& p, double tol_grad, double tol_hess) {
  const auto u = seed(p);
  const Jet2 j = f(u);
  const Scalar plain = [&](const Point& q) {
    auto v = seed(q);
    return f(v).value;
  };
  EXPECT_NEAR(j.value, plain(p), 1e-14);
  for (int k = 0; k < kDim; ++k) {
    EXPECT_NEAR(j.grad[k], fd_grad(plain, p, k), tol_grad * std::max(1.0, std::abs(j.grad[k]))) << "k=" << k;
    for (int l = 0; l < kDim; ++l) {
      EXPECT_NEAR(j.hess[k][l], fd_hess(plain, p, k, l), tol_hess * std::max(1.0, std::abs(j.hess[k][l])))
          << "k=" << k << " l=" << l;
      EXPECT_EQ(j.hess[k][l], j.hess[l][k]);
    }
  }
}

} // namespace

TEST(Jet, SeedGivesCoordinateVariables) {
  const auto u = seed({1, 2, 3, 4});
  EXPECT_EQ(u[0].value, 1.0);
  EXPECT_EQ(u[0].grad, (Vec4{1, 0, 0, 0}));
  EXPECT_EQ(u[0].hess, Mat4{});
  const auto z = seed({0, 0, 0, 0});
  EXPECT_EQ(z[3].grad, (Vec4{0, 0, 0, 1}));
}

TEST(Jet, BilinearProduct) {
  const auto u = seed({2, 3, 0, 0});
  const Jet2 p = u[0] * u[1];
  EXPECT_EQ(p.value, 6.0);
  EXPECT_EQ(p.grad[0], 3.0);
  EXPECT_EQ(p.grad[1], 2.0);
  EXPECT_EQ(p.hess[0][1], 1.0);
  EXPECT_EQ(p.hess[1][0], 1.0);
  EXPECT_EQ(p.hess[0][0], 0.0);
}

TEST(Jet, SquareAndReciprocal) {
  const Jet2 x = Jet2::variable(3.0, 0);
  const Jet2 sq = arith(ArithOp::Mul, x, x);
  EXPECT_EQ(sq.value, 9.0);
  EXPECT_EQ(sq.grad[0], 6.0);
  EXPECT_EQ(sq.hess[0][0], 2.0);

  const Jet2 y = Jet2::variable(2.0, 0);
  const Jet2 r = arith(ArithOp::Div, Jet2(1.0), y);
  EXPECT_DOUBLE_EQ(r.value, 0.5);
  EXPECT_DOUBLE_EQ(r.grad[0], -0.25);
  EXPECT_DOUBLE_EQ(r.hess[0][0], 0.25);
}

TEST(Jet, DivisionByZeroThrows) {
  const Jet2 x = Jet2::variable(0.0, 1);
  EXPECT_THROW(arith(ArithOp::Div, Jet2(1.0), x), DivisionByZero);
  EXPECT_THROW(Jet2(2.0) / Jet2(0.0), DivisionByZero);
}

TEST(Jet, NegationAndSubtraction) {
  const auto u = seed({1.5, -2, 0.5, 4});
  const Jet2 n = arith(ArithOp::Neg, u[0] * u[1], Jet2{});
  EXPECT_EQ(n.value, 3.0);
  EXPECT_EQ(n.grad[0], 2.0);
  EXPECT_EQ(n.hess[0][1], -1.0);
  const Jet2 d = arith(ArithOp::Sub, u[2], u[3]);
  EXPECT_EQ(d.grad, (Vec4{0, 0, 1, -1}));
}

TEST(Jet, SumGradientMatchesFiniteDifferences) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    const Point p{dist(rng), dist(rng), dist(rng), dist(rng)};
    const auto f = [](const std::array<Jet2, kDim>& u) { return sin(u[0] * u[1]) + exp(u[2]) * u[3]; };
    const auto u = seed(p);
    const Jet2 j = f(u);
    const Scalar plain = [&](const Point& q) { return f(seed(q)).value; };
    for (int k = 0; k < kDim; ++k)
      EXPECT_NEAR(j.grad[k], fd_grad(plain, p, k), 1e-6 * std::max(1.0, std::abs(j.grad[k])));
  }
}

TEST(Jet, TanhFirstDerivative) {
  const Jet2 t = tanh(Jet2::variable(1.0, 0));
  EXPECT_DOUBLE_EQ(t.value, std::tanh(1.0));
  EXPECT_NEAR(t.grad[0], 1.0 - std::tanh(1.0) * std::tanh(1.0), 1e-15);
  const double h = 1e-5;
  EXPECT_NEAR(t.grad[0], (std::tanh(1 + h) - std::tanh(1 - h)) / (2 * h), 1e-9);
}

TEST(Jet, SinAtZero) {
  const Jet2 s = sin(Jet2::variable(0.0, 2));
  EXPECT_EQ(s.value, 0.0);
  EXPECT_EQ(s.grad[2], 1.0);
  EXPECT_EQ(s.hess[2][2], 0.0);
}

TEST(Jet, HyperbolicIdentityIsConstant) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  for (int trial = 0; trial < 20; ++trial) {
    const auto u = seed({dist(rng), dist(rng), dist(rng), dist(rng)});
    const Jet2 arg = u[0] * u[3] - u[1];
    const Jet2 one = pow(cosh(arg), 2) - pow(sinh(arg), 2);
    EXPECT_NEAR(one.value, 1.0, 1e-11);
    for (int k = 0; k < kDim; ++k) {
      EXPECT_NEAR(one.grad[k], 0.0, 1e-10);
      for (int l = 0; l < kDim; ++l) EXPECT_NEAR(one.hess[k][l], 0.0, 1e-9);
    }
  }
}

TEST(Jet, ElementaryFunctionsMatchFiniteDifferences) {
  const Point p{0.4, -0.3, 0.9, 0.7};
  for (Func f : {Func::Sin, Func::Cos, Func::Sinh, Func::Cosh, Func::Tanh, Func::Coth, Func::Exp, Func::Sqrt}) {
    SCOPED_TRACE(std::string(func_name(f)));
    expect_matches_fd([f](const std::array<Jet2, kDim>& u) { return elementary(f, u[0] * u[2] + u[3] * u[3]); }, p,
                      1e-7, 1e-5);
  }
}

TEST(Jet, ComposedQuotientMatchesFiniteDifferences) {
  expect_matches_fd(
      [](const std::array<Jet2, kDim>& u) {
        return cos(u[0]) * cosh(u[2]) / (pow(cos(u[0]), 2) + pow(sinh(u[2]), 2)) + pow(u[1], -2) * u[3];
      },
      {0.3, 1.2, 0.8, -0.4}, 1e-7, 1e-5);
}

TEST(Jet, DomainGuards) {
  EXPECT_THROW(sqrt(Jet2::variable(0.0, 0)), DomainError);
  EXPECT_THROW(sqrt(Jet2::variable(-1.0, 0)), DomainError);
  EXPECT_THROW(coth(Jet2::variable(0.0, 3)), DomainError);
  EXPECT_THROW(elementary(Func::Coth, 0.0), DomainError);
  EXPECT_NO_THROW(coth(Jet2::variable(0.5, 3)));
}

TEST(Jet, ConstantArithmeticStaysConstant) {
  const Jet2 a(2.5), b(-1.25);
  for (const Jet2& r : {a + b, a - b, a * b, a / b, -a, pow(a, 3), sin(a), sqrt(a)}) {
    EXPECT_TRUE(r.is_constant());
    EXPECT_EQ(r.grad, Vec4{});
    EXPECT_EQ(r.hess, Mat4{});
  }
}

TEST(Jet, IntegerPowers) {
  const Jet2 x = Jet2::variable(1.5, 1);
  const Jet2 c = pow(x, 3);
  EXPECT_DOUBLE_EQ(c.value, 3.375);
  EXPECT_DOUBLE_EQ(c.grad[1], 3 * 2.25);
  EXPECT_DOUBLE_EQ(c.hess[1][1], 6 * 1.5);
  const Jet2 inv = pow(x, -2);
  EXPECT_DOUBLE_EQ(inv.value, 1 / 2.25);
  EXPECT_DOUBLE_EQ(inv.grad[1], -2 / 3.375);
  EXPECT_EQ(pow(x, 0).value, 1.0);
  EXPECT_THROW(pow(Jet2(0.0), -1), DivisionByZero);
  EXPECT_EQ(pow(2.0, 10), 1024.0);
}

TEST(Jet, FunctionNamesRoundTrip) {
  for (Func f : {Func::Sin, Func::Cos, Func::Sinh, Func::Cosh, Func::Tanh, Func::Coth, Func::Exp, Func::Sqrt})
    EXPECT_EQ(func_from_name(func_name(f)), f);
  EXPECT_FALSE(func_from_name("log").has_value());
}
