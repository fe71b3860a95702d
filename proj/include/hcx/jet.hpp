#pragma once

// Second-order forward-mode automatic differentiation in the four chart
// coordinates. A Jet2 carries a value together with its exact gradient and
// Hessian; arithmetic and the elementary functions propagate both through the
// product, quotient and chain rules.

#include <array>
#include <optional>
#include <string_view>

namespace hcx {

inline constexpr int kDim = 4;

using Vec4 = std::array<double, kDim>;
using Mat4 = std::array<Vec4, kDim>;
using Point = Vec4;

struct Jet2 {
  double value = 0.0;
  Vec4 grad{};
  Mat4 hess{};

  constexpr Jet2() = default;
  // Implicit on purpose: numeric literals mix freely with jets.
  constexpr Jet2(double v) : value(v) {}

  /// Coordinate variable u^k at the given value.
  static constexpr Jet2 variable(double v, int k) {
    Jet2 j(v);
    j.grad[k] = 1.0;
    return j;
  }

  bool is_constant() const noexcept;

  Jet2& operator+=(const Jet2& b);
  Jet2& operator-=(const Jet2& b);
  Jet2& operator*=(const Jet2& b);
  Jet2& operator/=(const Jet2& b);
};

/// The four coordinate functions at `coords`, jet k seeded along u^k.
std::array<Jet2, kDim> seed(const Point& coords);

Jet2 operator+(const Jet2& a, const Jet2& b);
Jet2 operator-(const Jet2& a, const Jet2& b);
Jet2 operator*(const Jet2& a, const Jet2& b);
/// Throws DivisionByZero when b.value == 0.
Jet2 operator/(const Jet2& a, const Jet2& b);
Jet2 operator-(const Jet2& a);

/// Integer power by repeated multiplication; negative exponents divide.
Jet2 pow(const Jet2& a, int n);
double pow(double a, int n);

enum class ArithOp { Add, Sub, Mul, Div, Neg };

/// Operator dispatch by tag; `b` is ignored for Neg.
Jet2 arith(ArithOp op, const Jet2& a, const Jet2& b);

enum class Func { Sin, Cos, Sinh, Cosh, Tanh, Coth, Exp, Sqrt };

std::optional<Func> func_from_name(std::string_view name);
std::string_view func_name(Func f);

/// Chain rule through the univariate (f, f', f''). Throws DomainError for
/// sqrt of a non-positive value and coth at 0.
Jet2 elementary(Func f, const Jet2& a);
/// Plain-double evaluation with the same domain guards.
double elementary(Func f, double a);

Jet2 sin(const Jet2& a);
Jet2 cos(const Jet2& a);
Jet2 sinh(const Jet2& a);
Jet2 cosh(const Jet2& a);
Jet2 tanh(const Jet2& a);
Jet2 coth(const Jet2& a);
Jet2 exp(const Jet2& a);
Jet2 sqrt(const Jet2& a);

} // namespace hcx
