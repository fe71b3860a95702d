#include "hcx/jet.hpp"

#include "hcx/errors.hpp"

#include <cmath>
#include <string>

namespace hcx {

namespace {

// value f0, first derivative f1, second derivative f2 of a univariate
// function at a.value, pushed through a's gradient and Hessian.
Jet2 chain(const Jet2& a, double f0, double f1, double f2) {
  Jet2 r(f0);
  for (int i = 0; i < kDim; ++i) r.grad[i] = f1 * a.grad[i];
  for (int i = 0; i < kDim; ++i) {
    for (int j = i; j < kDim; ++j) {
      const double h = f1 * a.hess[i][j] + f2 * a.grad[i] * a.grad[j];
      r.hess[i][j] = h;
      r.hess[j][i] = h;
    }
  }
  return r;
}

Jet2 reciprocal(const Jet2& b) {
  if (b.value == 0.0) throw DivisionByZero("division by a jet with zero value");
  const double inv = 1.0 / b.value;
  return chain(b, inv, -inv * inv, 2.0 * inv * inv * inv);
}

} // namespace

bool Jet2::is_constant() const noexcept {
  for (int i = 0; i < kDim; ++i) {
    if (grad[i] != 0.0) return false;
    for (int j = 0; j < kDim; ++j)
      if (hess[i][j] != 0.0) return false;
  }
  return true;
}

Jet2& Jet2::operator+=(const Jet2& b) {
  value += b.value;
  for (int i = 0; i < kDim; ++i) {
    grad[i] += b.grad[i];
    for (int j = 0; j < kDim; ++j) hess[i][j] += b.hess[i][j];
  }
  return *this;
}

Jet2& Jet2::operator-=(const Jet2& b) {
  value -= b.value;
  for (int i = 0; i < kDim; ++i) {
    grad[i] -= b.grad[i];
    for (int j = 0; j < kDim; ++j) hess[i][j] -= b.hess[i][j];
  }
  return *this;
}

Jet2& Jet2::operator*=(const Jet2& b) {
  Jet2 r(value * b.value);
  for (int i = 0; i < kDim; ++i) r.grad[i] = value * b.grad[i] + b.value * grad[i];
  for (int i = 0; i < kDim; ++i) {
    for (int j = i; j < kDim; ++j) {
      const double h = value * b.hess[i][j] + b.value * hess[i][j] + grad[i] * b.grad[j] +
                       grad[j] * b.grad[i];
      r.hess[i][j] = h;
      r.hess[j][i] = h;
    }
  }
  *this = r;
  return *this;
}

Jet2& Jet2::operator/=(const Jet2& b) { return *this *= reciprocal(b); }

std::array<Jet2, kDim> seed(const Point& coords) {
  std::array<Jet2, kDim> vars;
  for (int k = 0; k < kDim; ++k) vars[k] = Jet2::variable(coords[k], k);
  return vars;
}

Jet2 operator+(const Jet2& a, const Jet2& b) {
  Jet2 r = a;
  return r += b;
}

Jet2 operator-(const Jet2& a, const Jet2& b) {
  Jet2 r = a;
  return r -= b;
}

Jet2 operator*(const Jet2& a, const Jet2& b) {
  Jet2 r = a;
  return r *= b;
}

Jet2 operator/(const Jet2& a, const Jet2& b) {
  Jet2 r = a;
  return r /= b;
}

Jet2 operator-(const Jet2& a) {
  Jet2 r;
  r.value = -a.value;
  for (int i = 0; i < kDim; ++i) {
    r.grad[i] = -a.grad[i];
    for (int j = 0; j < kDim; ++j) r.hess[i][j] = -a.hess[i][j];
  }
  return r;
}

Jet2 pow(const Jet2& a, int n) {
  if (n < 0) return Jet2(1.0) / pow(a, -n);
  Jet2 r(1.0);
  for (int k = 0; k < n; ++k) r *= a;
  return r;
}

double pow(double a, int n) {
  if (n < 0) {
    if (a == 0.0) throw DivisionByZero("negative power of zero");
    return 1.0 / pow(a, -n);
  }
  double r = 1.0;
  for (int k = 0; k < n; ++k) r *= a;
  return r;
}

Jet2 arith(ArithOp op, const Jet2& a, const Jet2& b) {
  switch (op) {
  case ArithOp::Add: return a + b;
  case ArithOp::Sub: return a - b;
  case ArithOp::Mul: return a * b;
  case ArithOp::Div: return a / b;
  case ArithOp::Neg: return -a;
  }
  return a;
}

std::optional<Func> func_from_name(std::string_view name) {
  if (name == "sin") return Func::Sin;
  if (name == "cos") return Func::Cos;
  if (name == "sinh") return Func::Sinh;
  if (name == "cosh") return Func::Cosh;
  if (name == "tanh") return Func::Tanh;
  if (name == "coth") return Func::Coth;
  if (name == "exp") return Func::Exp;
  if (name == "sqrt") return Func::Sqrt;
  return std::nullopt;
}

std::string_view func_name(Func f) {
  switch (f) {
  case Func::Sin: return "sin";
  case Func::Cos: return "cos";
  case Func::Sinh: return "sinh";
  case Func::Cosh: return "cosh";
  case Func::Tanh: return "tanh";
  case Func::Coth: return "coth";
  case Func::Exp: return "exp";
  case Func::Sqrt: return "sqrt";
  }
  return "?";
}

Jet2 elementary(Func f, const Jet2& a) {
  const double x = a.value;
  switch (f) {
  case Func::Sin: return chain(a, std::sin(x), std::cos(x), -std::sin(x));
  case Func::Cos: return chain(a, std::cos(x), -std::sin(x), -std::cos(x));
  case Func::Sinh: return chain(a, std::sinh(x), std::cosh(x), std::sinh(x));
  case Func::Cosh: return chain(a, std::cosh(x), std::sinh(x), std::cosh(x));
  case Func::Tanh: {
    const double t = std::tanh(x);
    const double d = 1.0 - t * t;
    return chain(a, t, d, -2.0 * t * d);
  }
  case Func::Coth:
    if (x == 0.0) throw DomainError("coth is undefined at 0");
    return cosh(a) / sinh(a);
  case Func::Exp: {
    const double e = std::exp(x);
    return chain(a, e, e, e);
  }
  case Func::Sqrt: {
    if (!(x > 0.0)) throw DomainError("sqrt requires a positive argument, got " + std::to_string(x));
    const double s = std::sqrt(x);
    return chain(a, s, 0.5 / s, -0.25 / (s * x));
  }
  }
  return a;
}

double elementary(Func f, double x) {
  switch (f) {
  case Func::Sin: return std::sin(x);
  case Func::Cos: return std::cos(x);
  case Func::Sinh: return std::sinh(x);
  case Func::Cosh: return std::cosh(x);
  case Func::Tanh: return std::tanh(x);
  case Func::Coth:
    if (x == 0.0) throw DomainError("coth is undefined at 0");
    return std::cosh(x) / std::sinh(x);
  case Func::Exp: return std::exp(x);
  case Func::Sqrt:
    if (!(x > 0.0)) throw DomainError("sqrt requires a positive argument, got " + std::to_string(x));
    return std::sqrt(x);
  }
  return x;
}

Jet2 sin(const Jet2& a) { return elementary(Func::Sin, a); }
Jet2 cos(const Jet2& a) { return elementary(Func::Cos, a); }
Jet2 sinh(const Jet2& a) { return elementary(Func::Sinh, a); }
Jet2 cosh(const Jet2& a) { return elementary(Func::Cosh, a); }
Jet2 tanh(const Jet2& a) { return elementary(Func::Tanh, a); }
Jet2 coth(const Jet2& a) { return elementary(Func::Coth, a); }
Jet2 exp(const Jet2& a) { return elementary(Func::Exp, a); }
Jet2 sqrt(const Jet2& a) { return elementary(Func::Sqrt, a); }

} // namespace hcx
