#pragma once

#include "hcx/jet.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace hcx {

using Tensor3 = std::array<Mat4, kDim>;
using Tensor4 = std::array<Tensor3, kDim>;

/// Frame signs eps_a = g(e_a, e_a) of an orthonormal frame.
class Signature {
public:
  /// Throws ValidationError unless every entry is +1 or -1.
  explicit Signature(const Vec4& eps);
  /// Parses "++--" or "+ + - -".
  static Signature parse(std::string_view text);

  double operator[](int a) const { return eps_[a]; }
  const Vec4& values() const noexcept { return eps_; }
  Mat4 metric() const;
  std::string to_string() const;

  bool operator==(const Signature&) const = default;

private:
  Vec4 eps_;
};

Mat4 identity4();
Mat4 diag4(const Vec4& d);
Mat4 transpose(const Mat4& m);
Mat4 operator*(const Mat4& a, const Mat4& b);
Vec4 operator*(const Mat4& m, const Vec4& v);
Mat4 operator-(const Mat4& a);
Mat4 operator+(const Mat4& a, const Mat4& b);
Mat4 operator-(const Mat4& a, const Mat4& b);
Mat4 operator*(double s, const Mat4& m);

/// Gauss-Jordan with partial pivoting; empty when the pivot falls below
/// `rel_tol` times the largest entry.
std::optional<Mat4> inverse(const Mat4& m, double rel_tol = 1e-13);
double determinant(const Mat4& m);

double max_abs(const Vec4& v);
double max_abs(const Mat4& m);
double max_abs(const Tensor3& t);
double max_abs(const Tensor4& t);
double max_abs_diff(const Mat4& a, const Mat4& b);
double max_abs_diff(const Tensor3& a, const Tensor3& b);
double max_abs_diff(const Tensor4& a, const Tensor4& b);

/// Unit frame vector e_a as frame components.
Vec4 unit(int a);

/// g(x, y) for frame components under g = diag(eps).
double inner(const Signature& eps, const Vec4& x, const Vec4& y);

/// Multilinear evaluation T(x, y, z, w) of frame components.
double contract(const Tensor4& t, const Vec4& x, const Vec4& y, const Vec4& z, const Vec4& w);

} // namespace hcx
